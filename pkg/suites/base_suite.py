"""Base suite interface."""
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Tuple

from sympy import isprime

from models.schemas import ParamRange

Task = Tuple[str, Dict[str, int]]


class BaseSuite(ABC):
    """Base class for all verification suites."""

    def __init__(self, name: str, description: str):
        """Initialize suite."""
        self.name = name
        self.description = description

    @abstractmethod
    def tasks(self, ranges: Dict[str, ParamRange]) -> List[Task]:
        """Every (check, params) pair of the suite, in report order."""
        pass

    def prepare(self, ranges: Dict[str, ParamRange]):
        """Precompute shared read-only state before the grid is dispatched."""
        pass

    @staticmethod
    def values(ranges: Dict[str, ParamRange], name: str) -> range:
        return ranges[name].values()

    @staticmethod
    def secondary(ranges: Dict[str, ParamRange], name: str, lo: int, hi: int) -> Iterable[int]:
        """lo..hi, narrowed to the user's range for this index when one is given."""
        if name in ranges:
            lo, hi = max(lo, ranges[name].start), min(hi, ranges[name].stop)
        return range(lo, hi + 1)

    @staticmethod
    def primes(ranges: Dict[str, ParamRange], odd: bool = False) -> List[int]:
        return [p for p in ranges["n"].values() if isprime(p) and not (odd and p == 2)]
