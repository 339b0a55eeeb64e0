"""Suites over q-binomials, cyclotomic congruences and the q-Sun polynomials."""
from typing import Dict, List

from config import settings
from models.schemas import ParamRange
from qcore import cyclotomic, qbinom_row
from suites.base_suite import BaseSuite, Task
from loguru import logger


class QAnalogSuite(BaseSuite):
    def __init__(self):
        super().__init__("qanalog", "q-analogue quotient, its ledger and non-negativity")

    def prepare(self, ranges: Dict[str, ParamRange]):
        # [2n, n]_q is the largest q-binomial; Phi_d is needed up to d = 2n
        top = max(ranges["n"].stop, ranges["m"].stop, 1)
        row = min(2 * top, settings.qbinom_cache_rows)
        qbinom_row(row)
        for d in range(1, 2 * top + 1):
            cyclotomic(d)
        logger.debug(f"{self.name}: q-Pascal rows to {row} and Phi_d to d={2 * top} ready")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        # rsw follows thm_q_analog at each point so both reuse one quotient
        return [
            (check, {"m": m, "n": n})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
            for check in ("thm_q_analog", "rsw")
        ]


class QLemmasSuite(BaseSuite):
    def __init__(self):
        super().__init__("qlemmas", "q-Lucas, q-Chu-Vandermonde and congruences mod Phi_d")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        odd_d = [d for d in self.values(ranges, "d") if d >= 3 and d % 2]
        tasks = [
            ("q_lucas", {"n": n, "k": k, "d": d})
            for n in self.values(ranges, "n")
            for k in self.secondary(ranges, "k", 0, n)
            for d in self.values(ranges, "d")
        ]
        tasks += [
            ("q_chu", {"m": m, "n": n, "k": k})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
            for k in self.secondary(ranges, "k", 0, m + n)
        ]
        tasks += [
            ("inverse_power_congruence", {"d": d, "k": k})
            for d in odd_d
            for k in self.secondary(ranges, "k", 0, d - 1)
        ]
        tasks += [
            ("vanishing_qbinom", {"d": d, "delta": delta})
            for d in odd_d
            for delta in range((d - 3) // 2 + 1)
        ]
        tasks += [("phi_square_divisibility", {"d": d}) for d in odd_d]
        tasks += [
            ("lemma_product", {"m": m, "n": n, "k": k})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
            for k in self.secondary(ranges, "k", 0, min(m, n))
        ]
        return tasks


class Theorem5Suite(BaseSuite):
    def __init__(self):
        super().__init__("theorem5", "Cyclotomic congruences for q-Sun sums and their q = 1 limits")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = []
        for check in ("thm5_oddcong", "thm5_evencong1", "thm5_evencong2"):
            tasks += [(check, {"n": n}) for n in self.values(ranges, "n")]
        q1_range = "q1_n" if "q1_n" in ranges else "n"
        tasks += [("q1_specialization", {"n": n}) for n in self.values(ranges, q1_range)]
        return tasks
