"""Congruences modulo cyclotomic polynomials used by the q-family theorem."""
from comb.binomials import binom
from models.errors import DomainError
from models.schemas import CheckReport
from qcore.cyclotomic import cyclotomic, mod_phi_reduce
from qcore.qbinomials import q_binom, q_substitute_power
from ring.unipoly import UniPoly, poly_first_difference


def q_lucas_check(n: int, k: int, d: int) -> CheckReport:
    """[n,k]_q = C(n1,k1) [n0,k0]_q mod Phi_d(q) where n = n1 d + n0 and k = k1 d + k0."""
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")
    if n < 0 or k < 0:
        raise DomainError(f"need n, k >= 0, got n={n}, k={k}")
    n1, n0 = divmod(n, d)
    k1, k0 = divmod(k, d)
    lhs = mod_phi_reduce(q_binom(n, k), d)
    rhs = mod_phi_reduce(q_binom(n0, k0), d) * binom(n1, k1)
    return CheckReport.outcome(
        "q_lucas",
        {"n": n, "k": k, "d": d},
        lhs == rhs,
        witness=f"[n,k] = {lhs!r} but C(n1,k1)[n0,k0] = {rhs!r} mod Phi_{d}",
    )


def _q_chu_sides(m: int, n: int, k: int):
    if m < 0 or n < 0 or k < 0:
        raise DomainError(f"need m, n, k >= 0, got m={m}, n={n}, k={k}")
    rhs = UniPoly()
    for j in range(k + 1):
        term = q_binom(m, j) * q_binom(n, k - j)
        if term:
            rhs = rhs + term.shift((m - j) * (k - j))
    return q_binom(m + n, k), rhs


def q_chu_check(m: int, n: int, k: int) -> bool:
    """[m+n, k]_q = sum_j [m, j]_q [n, k-j]_q q^((m-j)(k-j))."""
    lhs, rhs = _q_chu_sides(m, n, k)
    return lhs == rhs


def q_chu_report(m: int, n: int, k: int) -> CheckReport:
    lhs, rhs = _q_chu_sides(m, n, k)
    diff = poly_first_difference(lhs, rhs)
    witness = None if diff is None else f"q^{diff[0]}: [m+n,k] has {diff[1]}, the convolution has {diff[2]}"
    return CheckReport.outcome("q_chu", {"m": m, "n": n, "k": k}, diff is None, witness=witness)


def inverse_power_congruence_check(d: int, k: int) -> CheckReport:
    """[d-1,k]_{q^2} q^(k(k+1)) = (-1)^k mod Phi_d(q).

    Asserted for odd d; even d is reported without being asserted.
    """
    if d < 2 or not 0 <= k <= d - 1:
        raise DomainError(f"need d >= 2 and 0 <= k <= d-1, got d={d}, k={k}")
    lhs = q_substitute_power(q_binom(d - 1, k), 2).shift(k * (k + 1))
    residue = mod_phi_reduce(lhs - (-1) ** k, d)
    return CheckReport.outcome(
        "inverse_power_congruence",
        {"d": d, "k": k},
        residue.is_zero,
        witness=f"residue {residue!r} mod Phi_{d}",
        conjecture=d % 2 == 0,
    )


def phi_square_divisibility_check(d: int) -> CheckReport:
    """Phi_d(q) divides Phi_d(q^2); asserted for odd d only."""
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    residue = mod_phi_reduce(q_substitute_power(cyclotomic(d), 2), d)
    return CheckReport.outcome(
        "phi_square_divisibility",
        {"d": d},
        residue.is_zero,
        witness=f"Phi_{d}(q^2) residue {residue!r} mod Phi_{d}",
        conjecture=d % 2 == 0,
    )


def vanishing_qbinom_check(d: int, delta: int) -> CheckReport:
    """[2d-2delta-3, d-1-delta]_{q^2} = 0 mod Phi_d(q) for odd d >= 3, 0 <= delta <= (d-3)/2."""
    if d < 3 or d % 2 == 0:
        raise DomainError(f"d must be odd and at least 3, got {d}")
    if not 0 <= delta <= (d - 3) // 2:
        raise DomainError(f"need 0 <= delta <= {(d - 3) // 2}, got {delta}")
    poly = q_substitute_power(q_binom(2 * d - 2 * delta - 3, d - 1 - delta), 2)
    residue = mod_phi_reduce(poly, d)
    return CheckReport.outcome(
        "vanishing_qbinom",
        {"d": d, "delta": delta},
        residue.is_zero,
        witness=f"residue {residue!r} mod Phi_{d}",
    )
