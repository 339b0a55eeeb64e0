"""Suites over integer binomial sums and the Sun family."""
from typing import Dict, List

from models.schemas import ParamRange
from suites.base_suite import BaseSuite, Task


class Theorem1Suite(BaseSuite):
    def __init__(self):
        super().__init__("theorem1", "Both weighted-sum congruences for g_k(x)")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = []
        for check in ("thm1_first", "thm1_second"):
            tasks += [(check, {"n": n}) for n in self.values(ranges, "n")]
        return tasks


class Theorem2Suite(BaseSuite):
    def __init__(self):
        super().__init__("theorem2", "(m+n) divides C(m+n-2,m-1) C(n,m) C(2n,n)")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        return [
            ("theorem2", {"m": m, "n": n})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
        ]


class IdentitiesSuite(BaseSuite):
    def __init__(self):
        super().__init__("identities", "Binomial-transform identities and quoted results on g_k")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = []
        for check in ("identity_sum2_7", "identity_sum2_11", "identity_sun_norm"):
            tasks += [(check, {"n": n}) for n in self.values(ranges, "n")]
        tasks += [("identity_sun_kgk", {"p": p}) for p in self.primes(ranges, odd=True)]
        tasks += [
            ("gessel", {"m": m, "n": n})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
        ]
        return tasks


class LemmasSuite(BaseSuite):
    def __init__(self):
        super().__init__("lemmas", "Binomial lemmas behind the main congruences")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = [("lemma_one", {"n": n}) for n in self.values(ranges, "n")]
        tasks += [
            ("lemma_two", {"n": n, "k": k})
            for n in self.values(ranges, "n")
            if n >= 1
            for k in self.secondary(ranges, "k", 0, n)
        ]
        tasks += [
            ("lemma_three", {"m": m, "n": n})
            for m in self.values(ranges, "m")
            for n in self.values(ranges, "n")
            if (m, n) != (0, 0)
        ]
        tasks += [("catalan", {"n": n}) for n in self.values(ranges, "n")]
        return tasks


class CertificatesSuite(BaseSuite):
    def __init__(self):
        super().__init__("certificates", "Single-sum and telescoping certificates")

    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        tasks = []
        for check in ("single_sum", "single_sum_rewrite"):
            tasks += [
                (check, {"n": n, "k": k})
                for n in self.values(ranges, "n")
                for k in self.secondary(ranges, "k", 0, n - 1)
            ]
        for check in ("mao_telescope", "mao_split_congruence", "mao_split_identity"):
            tasks += [
                (check, {"n": n, "j": j})
                for n in self.values(ranges, "n")
                for j in self.secondary(ranges, "k", 0, n - 1)
            ]
        tasks += [("multi_sum_identity", {"n": n}) for n in self.values(ranges, "n")]
        return tasks
