"""Command-line entry point: `verify` runs suites, `compute` prints exact values."""
import argparse
import sys
from collections import Counter
from typing import List, Optional

from config import settings
from families.polynomials import family_poly, family_value, s_value
from models.errors import VerificationError
from models.schemas import SUITE_NAMES, CheckReport, CheckStatus, FamilyId, OutputFormat
from qcore import cyclotomic, phi_exponent_ledger, q_analog_quotient, q_binom
from qfamilies import g_q
from recurrence import t_value
from suites.orchestrator import EXIT_OK, EXIT_USAGE, Orchestrator
from cli.formatting import format_poly, format_value, format_xq
from cli.guardrails import validate_compute, validate_verify
from loguru import logger

FAMILY_ENTITIES = {"g": FamilyId.SUN, "f": FamilyId.FRANEL, "A": FamilyId.APERY}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunpoly",
        description=f"{settings.app_title} {settings.app_version}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run a verification suite over parameter ranges.")
    verify.add_argument("--suite", required=True, help=f"One of: {', '.join(SUITE_NAMES)}.")
    verify.add_argument("--n", default=settings.default_n_range, help="Range A..B for n (and primes p).")
    verify.add_argument("--m", default=settings.default_m_range, help="Range A..B for m.")
    verify.add_argument("--k", default=None, help="Restrict the secondary index k (or j) to A..B.")
    verify.add_argument("--d", default=settings.default_d_range, help="Range A..B for cyclotomic indices d.")
    verify.add_argument("--q1-n", dest="q1_n", default=None,
                        help="Range A..B for q1_specialization in theorem5 (default: the --n range).")
    verify.add_argument("--jobs", type=int, default=settings.default_jobs, help="Worker processes (default: 1).")
    verify.add_argument("--format", default=settings.default_format,
                        choices=[f.value for f in OutputFormat], help="Report format.")
    verify.add_argument("--out", default=None, help="Write reports to this file instead of stdout.")

    compute = sub.add_parser("compute", help="Print an exact value.")
    compute.add_argument("entity", help="g|f|A n [x0], gq n, S n, T n, qbinom n k, cyclotomic d, qanalog m n, ledger m n")
    compute.add_argument("args", nargs="*", help="Integer arguments.")
    return parser


def configure_logging():
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)


def run_verify(args: argparse.Namespace) -> int:
    validation = validate_verify(
        args.suite,
        {"n": args.n, "m": args.m, "k": args.k, "d": args.d, "q1_n": args.q1_n},
        args.jobs,
        args.format,
    )
    if not validation["valid"]:
        print(f"usage error: {validation['error']}", file=sys.stderr)
        return EXIT_USAGE
    spec = validation["spec"]
    counts: Counter = Counter()
    try:
        out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    except OSError as e:
        logger.error(f"Cannot open --out {args.out}: {e}")
        print(f"usage error: --out {args.out}: {e.strerror or e}", file=sys.stderr)
        return EXIT_USAGE

    def emit(report: CheckReport):
        counts[report.status] += 1
        line = report.to_json_line() if spec.format == OutputFormat.JSONL else report.to_text_line()
        out.write(line + "\n")
        out.flush()

    try:
        code = Orchestrator().run_suite(spec, emit)
    finally:
        if out is not sys.stdout:
            out.close()
    summary = " ".join(f"{status.value}={counts.get(status, 0)}" for status in CheckStatus)
    print(f"{spec.suite}: {summary} exit={code}", file=sys.stderr)
    return code


def compute_value(entity: str, values: List[int]) -> str:
    """Exact value of a compute entity in canonical text form."""
    if entity in FAMILY_ENTITIES:
        family = FAMILY_ENTITIES[entity]
        if len(values) == 2:
            return str(family_value(family, values[0], values[1]))
        return format_poly(family_poly(family, values[0]), "x")
    if entity == "gq":
        return format_xq(g_q(values[0]))
    if entity == "S":
        return str(s_value(values[0]))
    if entity == "T":
        return str(t_value(values[0]))
    if entity == "qbinom":
        return format_poly(q_binom(values[0], values[1]), "q")
    if entity == "cyclotomic":
        return format_poly(cyclotomic(values[0]), "q")
    if entity == "qanalog":
        return format_value(q_analog_quotient(values[0], values[1]), "q")
    if entity == "ledger":
        ledger = phi_exponent_ledger(values[0], values[1])
        return " ".join(f"e_{d}={e}" for d, e in sorted(ledger.exponents.items()))
    raise VerificationError(f"unknown entity {entity}")


def run_compute(args: argparse.Namespace) -> int:
    validation = validate_compute(args.entity, args.args)
    if not validation["valid"]:
        print(f"usage error: {validation['error']}", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(compute_value(args.entity, validation["args"]))
    except (VerificationError, ValueError) as e:
        logger.error(f"compute {args.entity} {args.args}: {e}")
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging()
    if args.command == "verify":
        return run_verify(args)
    return run_compute(args)


if __name__ == "__main__":
    sys.exit(main())
