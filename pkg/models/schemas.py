"""Pydantic schemas for verification reports and suite requests."""
import json
from pydantic import BaseModel, Field, model_validator
from typing import List, Optional, Dict, Any
from enum import Enum


SUITE_NAMES = [
    "theorem1",
    "theorem2",
    "identities",
    "lemmas",
    "certificates",
    "qanalog",
    "qlemmas",
    "theorem5",
    "recurrence",
    "conjectures",
    "all",
]


class FamilyId(str, Enum):
    """Polynomial families built from squared binomials."""
    SUN = "Sun"
    FRANEL = "Franel"
    APERY = "Apery"


class ModulusClass(str, Enum):
    """Divisor classes of the cyclotomic moduli in the q-congruences."""
    ODD_GT1 = "OddGT1"
    EVEN = "Even"
    EVEN_GT2 = "EvenGT2"


class CheckStatus(str, Enum):
    """Outcome of one check."""
    PASS = "pass"
    FAIL = "fail"
    FINDING = "finding"
    ERROR = "error"


class OutputFormat(str, Enum):
    """Report output formats."""
    TEXT = "text"
    JSONL = "jsonl"


class ParamRange(BaseModel):
    """Inclusive integer range for one grid parameter."""
    start: int
    stop: int

    @model_validator(mode="after")
    def _non_empty(self) -> "ParamRange":
        if self.start > self.stop:
            raise ValueError(f"empty range {self.start}..{self.stop}")
        return self

    def values(self) -> range:
        return range(self.start, self.stop + 1)

    def __str__(self) -> str:
        return f"{self.start}..{self.stop}"


class SuiteSpec(BaseModel):
    """A request to run one verification suite over a parameter grid."""
    suite: str
    ranges: Dict[str, ParamRange] = {}
    jobs: int = Field(default=1, ge=1)
    format: OutputFormat = OutputFormat.TEXT

    @model_validator(mode="after")
    def _known_suite(self) -> "SuiteSpec":
        if self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite: {self.suite}")
        return self


class CheckReport(BaseModel):
    """Structured outcome of one verification."""
    check_id: str = Field(serialization_alias="check")
    params: Dict[str, int] = {}
    status: CheckStatus
    witness: Optional[str] = None
    elapsed_ms: int = 0
    # Exact values for library callers; never serialized
    detail: Dict[str, Any] = Field(default_factory=dict, exclude=True)

    @model_validator(mode="after")
    def _witness_present(self) -> "CheckReport":
        if self.status in (CheckStatus.FAIL, CheckStatus.FINDING) and not self.witness:
            raise ValueError(f"{self.status.value} report for {self.check_id} needs a witness")
        return self

    @classmethod
    def outcome(
        cls,
        check_id: str,
        params: Dict[str, int],
        passed: bool,
        witness: Optional[str] = None,
        conjecture: bool = False,
        detail: Optional[Dict[str, Any]] = None,
    ) -> "CheckReport":
        """Build a report; an unproven claim that fails is a finding, not a failure."""
        if passed:
            status = CheckStatus.PASS
        else:
            status = CheckStatus.FINDING if conjecture else CheckStatus.FAIL
        return cls(
            check_id=check_id,
            params=params,
            status=status,
            witness=None if passed else (witness or "check failed"),
            detail=detail or {},
        )

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_json_line(self) -> str:
        """Serialize as one jsonl record."""
        data = self.model_dump(mode="json", by_alias=True)
        return json.dumps({
            "check": data["check"],
            "params": data["params"],
            "status": data["status"],
            "witness": data["witness"],
            "elapsed_ms": data["elapsed_ms"],
        })

    def to_text_line(self) -> str:
        """Human-readable single line."""
        params = " ".join(f"{name}={value}" for name, value in self.params.items())
        line = f"{self.status.value.upper()} {self.check_id} {params}".rstrip()
        if self.witness:
            line += f" : {self.witness}"
        return line


class ShapeFlags(BaseModel):
    """Coefficient-shape predicates of a polynomial."""
    reciprocal: bool
    unimodal: bool
    nonnegative: bool

    @property
    def all(self) -> bool:
        return self.reciprocal and self.unimodal and self.nonnegative


class PhiExponentLedger(BaseModel):
    """Exponent e_d of each cyclotomic factor of the q-analogue quotient."""
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    exponents: Dict[int, int] = {}

    @property
    def nonnegative(self) -> bool:
        return all(e >= 0 for e in self.exponents.values())

    def negative_indices(self) -> List[int]:
        return [d for d, e in sorted(self.exponents.items()) if e < 0]
