"""Suites over the S_n sequence."""
from typing import Dict, List

from families.polynomials import s_sequence
from models.schemas import ParamRange
from suites.base_suite import BaseSuite, Task
from loguru import logger


class _SSequenceSuite(BaseSuite):
    def prepare(self, ranges: Dict[str, ParamRange]):
        # Largest index touched is S_{4n+2}
        top = 4 * max(ranges["n"].stop, 1) + 2
        s_sequence.extend(top)
        logger.debug(f"{self.name}: S prefix ready up to {top}")


class RecurrenceSuite(_SSequenceSuite):
    def __init__(self):
        super().__init__("recurrence", "Order-three recurrence for S_n and its consequences")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = []
        for check in ("s_rec", "s_mod_rec10", "s_mod_rec11", "s_mod_rec1", "rewrite_identity", "multisum3"):
            tasks += [(check, {"n": n}) for n in self.values(ranges, "n")]
        return tasks


class ConjecturesSuite(_SSequenceSuite):
    def __init__(self):
        super().__init__("conjectures", "Unproven congruences, reported as findings when they fail")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = [("remark_mod2n2", {"n": n}) for n in self.values(ranges, "n")]
        primes = self.primes(ranges)
        tasks += [("remark_prime_mod_p3", {"p": p}) for p in primes]
        tasks += [("remark_prime_mod_p2", {"p": p}) for p in primes]
        tasks += [("conj61", {"n": n}) for n in self.values(ranges, "n")]
        tasks += [("conj61_prime", {"p": p}) for p in self.primes(ranges, odd=True)]
        tasks += [("rec1_cases", {"n": n}) for n in self.values(ranges, "n")]
        if "d" in ranges:
            # Even d is outside what the q-congruences assert
            even_d = [d for d in self.values(ranges, "d") if d >= 2 and d % 2 == 0]
            tasks += [
                ("inverse_power_congruence", {"d": d, "k": k})
                for d in even_d
                for k in self.secondary(ranges, "k", 0, d - 1)
            ]
            tasks += [("phi_square_divisibility", {"d": d}) for d in even_d]
        return tasks
