"""Input validation for the command line."""
import re
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from models.schemas import SUITE_NAMES, ParamRange, SuiteSpec
from loguru import logger

RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")

# entity -> (minimum arg count, maximum arg count)
COMPUTE_ENTITIES: Dict[str, tuple] = {
    "g": (1, 2),
    "f": (1, 2),
    "A": (1, 2),
    "gq": (1, 1),
    "S": (1, 1),
    "T": (1, 1),
    "qbinom": (2, 2),
    "cyclotomic": (1, 1),
    "qanalog": (2, 2),
    "ledger": (2, 2),
}


def parse_range(text: str) -> ParamRange:
    """'A..B' or 'A' as an inclusive range; raises ValueError when malformed or empty."""
    match = RANGE_PATTERN.match(text or "")
    if not match:
        raise ValueError(f"malformed range: {text!r}")
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) is not None else start
    return ParamRange(start=start, stop=stop)


def validate_verify(
    suite: str,
    ranges: Dict[str, Optional[str]],
    jobs: int,
    output_format: str,
) -> Dict[str, Any]:
    """Validate a verify request and build its SuiteSpec."""
    if suite not in SUITE_NAMES:
        return {"valid": False, "error": f"Invalid suite: {suite} (choose from {', '.join(SUITE_NAMES)})"}
    parsed: Dict[str, ParamRange] = {}
    for name, text in ranges.items():
        if text is None:
            continue
        try:
            parsed[name] = parse_range(text)
        except ValueError as e:
            return {"valid": False, "error": f"--{name.replace('_', '-')}: {e}"}
    try:
        spec = SuiteSpec(suite=suite, ranges=parsed, jobs=jobs, format=output_format)
    except ValidationError as e:
        logger.debug(f"SuiteSpec rejected: {e}")
        return {"valid": False, "error": "; ".join(err["msg"] for err in e.errors())}
    return {"valid": True, "spec": spec}


def validate_compute(entity: str, args: List[str]) -> Dict[str, Any]:
    """Validate a compute request; arguments must be integers."""
    if entity not in COMPUTE_ENTITIES:
        return {"valid": False, "error": f"Invalid entity: {entity} (choose from {', '.join(COMPUTE_ENTITIES)})"}
    low, high = COMPUTE_ENTITIES[entity]
    if not low <= len(args) <= high:
        return {"valid": False, "error": f"{entity} takes {low}..{high} integer arguments, got {len(args)}"}
    try:
        values = [int(a) for a in args]
    except ValueError:
        return {"valid": False, "error": f"arguments must be integers: {args}"}
    return {"valid": True, "args": values}
