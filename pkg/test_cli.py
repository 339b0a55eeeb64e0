"""Tests for the check router, the orchestrator and the command line."""
import json
from fractions import Fraction

import pytest

from cli.formatting import format_poly, format_xq, parse_poly
from cli.guardrails import parse_range, validate_compute, validate_verify
from cli.main import main
from memory.memo_cache import memo_cache
from models.schemas import CheckReport, CheckStatus, ParamRange, SuiteSpec
from qfamilies import g_q
from ring import UniPoly
from suites import Orchestrator, check_router, exit_code, run_task


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, [line for line in captured.out.splitlines() if line]


def test_router_unknown_check():
    report = check_router.execute_check("no_such_check", {"n": 1})
    assert report.status == CheckStatus.ERROR
    assert "not found" in report.witness


def test_router_turns_exceptions_into_errors():
    report = check_router.execute_check("theorem2", {"m": 0, "n": 1})
    assert report.status == CheckStatus.ERROR
    assert report.witness.startswith("DomainError")


def test_run_task_drops_detail():
    report = run_task(("thm1_first", {"n": 4}))
    assert report.passed
    assert report.detail == {}
    assert report.elapsed_ms >= 0


def test_plan_order_is_lexicographic():
    spec = SuiteSpec(suite="theorem2", ranges={"m": ParamRange(start=1, stop=2), "n": ParamRange(start=1, stop=2)})
    params = [p for _, p in Orchestrator().plan(spec)]
    assert params == [{"m": 1, "n": 1}, {"m": 1, "n": 2}, {"m": 2, "n": 1}, {"m": 2, "n": 2}]


def test_plan_respects_k_restriction():
    ranges = {"n": ParamRange(start=3, stop=3), "m": ParamRange(start=1, stop=1), "k": ParamRange(start=1, stop=1)}
    tasks = Orchestrator().plan(SuiteSpec(suite="certificates", ranges=ranges))
    assert ("single_sum", {"n": 3, "k": 1}) in tasks
    assert ("single_sum", {"n": 3, "k": 0}) not in tasks
    assert ("mao_telescope", {"n": 3, "j": 1}) in tasks


def test_conjecture_primes_come_from_n_range():
    ranges = {"n": ParamRange(start=1, stop=10), "m": ParamRange(start=1, stop=1)}
    tasks = Orchestrator().plan(SuiteSpec(suite="conjectures", ranges=ranges))
    assert [p["p"] for name, p in tasks if name == "conj61_prime"] == [3, 5, 7]
    assert [p["p"] for name, p in tasks if name == "remark_prime_mod_p2"] == [2, 3, 5, 7]


@pytest.mark.parametrize("counts,expected", [
    ({}, 0),
    ({CheckStatus.PASS: 4}, 0),
    ({CheckStatus.PASS: 4, CheckStatus.FINDING: 1}, 3),
    ({CheckStatus.FINDING: 1, CheckStatus.FAIL: 1}, 1),
    ({CheckStatus.ERROR: 1}, 1),
])
def test_exit_code(counts, expected):
    assert exit_code(counts) == expected


def test_report_serialization():
    report = CheckReport.outcome("theorem2", {"m": 1, "n": 2}, False, witness="residue 1", detail={"x": 1})
    data = json.loads(report.to_json_line())
    assert list(data) == ["check", "params", "status", "witness", "elapsed_ms"]
    assert data["status"] == "fail"
    assert report.to_text_line() == "FAIL theorem2 m=1 n=2 : residue 1"


def test_finding_needs_witness():
    with pytest.raises(ValueError):
        CheckReport(check_id="conj61", params={"n": 1}, status=CheckStatus.FINDING)


@pytest.mark.parametrize("text,start,stop", [("1..20", 1, 20), ("7", 7, 7), (" 2 .. 5 ", 2, 5)])
def test_parse_range(text, start, stop):
    assert parse_range(text) == ParamRange(start=start, stop=stop)


@pytest.mark.parametrize("text", ["1..0", "a..b", "1...3", ""])
def test_parse_range_rejects(text):
    with pytest.raises(ValueError):
        parse_range(text)


def test_validate_verify():
    assert validate_verify("theorem2", {"n": "1..3", "k": None}, 1, "text")["valid"]
    assert not validate_verify("theorem9", {"n": "1..3"}, 1, "text")["valid"]
    assert not validate_verify("theorem2", {"n": "1..3"}, 0, "text")["valid"]
    assert not validate_verify("theorem2", {"n": "1..3"}, 1, "xml")["valid"]


def test_validate_compute():
    assert validate_compute("qbinom", ["4", "2"])["args"] == [4, 2]
    assert not validate_compute("qbinom", ["4"])["valid"]
    assert not validate_compute("g", ["x"])["valid"]
    assert not validate_compute("zeta", ["3"])["valid"]


def test_format_poly():
    assert format_poly(UniPoly([1, 8, 6])) == "1 + 8*x + 6*x^2"
    assert format_poly(UniPoly([1, -1, 1]), "q") == "1 - q + q^2"
    assert format_poly(UniPoly([0, -1])) == "-x"
    assert format_poly(UniPoly([0, 0, Fraction(1, 2)])) == "1/2*x^2"
    assert format_poly(UniPoly()) == "0"


def test_parse_poly_inverts_format():
    for p in (UniPoly([1, 8, 6]), UniPoly([0, -1, 0, 3]), UniPoly([-2, 0, Fraction(-1, 2)]), UniPoly()):
        assert parse_poly(format_poly(p)) == p


def test_format_xq():
    assert format_xq(g_q(1)) == "(1 + x) + (x)*q"


def test_verify_theorem2_grid(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "theorem2", "--m", "1..10", "--n", "1..10"])
    assert code == 0
    assert len(lines) == 100
    assert all(line.startswith("PASS theorem2") for line in lines)


def test_verify_theorem1_jsonl(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "theorem1", "--n", "1..50", "--format", "jsonl"])
    assert code == 0
    assert len(lines) == 100
    records = [json.loads(line) for line in lines]
    assert [r["check"] for r in records[:2]] == ["thm1_first", "thm1_first"]
    assert records[50]["check"] == "thm1_second"
    assert all(r["status"] == "pass" and r["witness"] is None for r in records)


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "conjectures", "--n", "1..0"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "theorem1", "--jobs", "0"],
    ["verify", "--suite", "theorem1", "--n", "a..b"],
    ["verify"],
    ["compute", "S", "-1"],
    ["compute", "zeta", "3"],
    ["compute", "qanalog", "0", "1"],
])
def test_usage_errors(capsys, argv):
    code, _ = _run(capsys, argv)
    assert code == 2


def test_errors_exit_one(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "theorem2", "--m", "0", "--n", "1"])
    assert code == 1
    assert lines[0].startswith("ERROR theorem2 m=0 n=1 : DomainError")


def test_lemmas_leave_out_excluded_points(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "lemmas", "--m", "0..3", "--n", "0..3"])
    assert code == 0
    assert all(line.startswith("PASS") for line in lines)
    assert "PASS lemma_three m=0 n=1" in lines
    assert not any(line.startswith(("PASS lemma_two n=0", "PASS lemma_three m=0 n=0")) for line in lines)


def test_findings_exit_three(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "conjectures", "--n", "1..2", "--d", "2"])
    assert code == 3
    assert "FINDING phi_square_divisibility d=2 : Phi_2(q^2) residue UniPoly([2]) mod Phi_2" in lines
    assert not any(line.startswith(("FAIL", "ERROR")) for line in lines)


def test_parallel_output_matches_serial(capsys):
    argv = ["verify", "--suite", "recurrence", "--n", "1..12", "--format", "jsonl"]

    def strip(lines):
        records = [json.loads(line) for line in lines]
        for r in records:
            r.pop("elapsed_ms")
        return records

    serial_code, serial = _run(capsys, argv + ["--jobs", "1"])
    parallel_code, parallel = _run(capsys, argv + ["--jobs", "3"])
    assert serial_code == parallel_code == 0
    assert strip(serial) == strip(parallel)


def test_out_file(capsys, tmp_path):
    target = tmp_path / "reports.jsonl"
    code, lines = _run(capsys, ["verify", "--suite", "theorem2", "--m", "1..2", "--n", "1..3",
                                "--format", "jsonl", "--out", str(target)])
    assert code == 0
    assert lines == []
    assert len(target.read_text().splitlines()) == 6


@pytest.mark.parametrize("argv,expected", [
    (["compute", "g", "2"], "1 + 8*x + 6*x^2"),
    (["compute", "g", "2", "1"], "15"),
    (["compute", "f", "2"], "4*x + 6*x^2"),
    (["compute", "qbinom", "4", "2"], "1 + q + 2*q^2 + q^3 + q^4"),
    (["compute", "S", "4"], "-2"),
    (["compute", "T", "3"], "6"),
    (["compute", "cyclotomic", "6"], "1 - q + q^2"),
    (["compute", "gq", "1"], "(1 + x) + (x)*q"),
    (["compute", "qanalog", "1", "2"], "1 + q + q^2 + q^3"),
    (["compute", "ledger", "1", "2"], "e_2=1 e_3=0 e_4=1"),
])
def test_compute(capsys, argv, expected):
    code, lines = _run(capsys, argv)
    assert code == 0
    assert lines == [expected]


def test_out_file_that_cannot_be_opened(capsys, tmp_path):
    target = tmp_path / "missing" / "reports.jsonl"
    code = main(["verify", "--suite", "theorem2", "--m", "1", "--n", "1", "--out", str(target)])
    captured = capsys.readouterr()
    assert code == 2
    assert "usage error: --out" in captured.err
    assert not target.exists()


def test_q1_specialization_has_its_own_range():
    ranges = {"n": ParamRange(start=1, stop=3), "m": ParamRange(start=1, stop=1),
              "q1_n": ParamRange(start=5, stop=9)}
    tasks = Orchestrator().plan(SuiteSpec(suite="theorem5", ranges=ranges))
    assert [p["n"] for name, p in tasks if name == "q1_specialization"] == [5, 6, 7, 8, 9]
    assert [p["n"] for name, p in tasks if name == "thm5_oddcong"] == [1, 2, 3]
    del ranges["q1_n"]
    tasks = Orchestrator().plan(SuiteSpec(suite="theorem5", ranges=ranges))
    assert [p["n"] for name, p in tasks if name == "q1_specialization"] == [1, 2, 3]


def test_q1_flag_reaches_the_plan(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "theorem5", "--n", "1..2", "--q1-n", "3..4"])
    assert code == 0
    assert [line for line in lines if "q1_specialization" in line] == [
        "PASS q1_specialization n=3",
        "PASS q1_specialization n=4",
    ]


def test_bad_q1_range_is_a_usage_error(capsys):
    code = main(["verify", "--suite", "theorem5", "--q1-n", "4..1"])
    assert code == 2
    assert "--q1-n" in capsys.readouterr().err


def test_qlemmas_assert_only_odd_d(capsys):
    code, lines = _run(capsys, ["verify", "--suite", "qlemmas", "--n", "1..3", "--m", "1..3", "--d", "2..6"])
    assert code == 0
    assert not any(line.startswith("FINDING") for line in lines)
    assert "PASS phi_square_divisibility d=5" in lines
    assert not any("phi_square_divisibility d=4" in line for line in lines)


def test_even_d_cases_move_to_conjectures():
    ranges = {"n": ParamRange(start=1, stop=1), "m": ParamRange(start=1, stop=1), "d": ParamRange(start=2, stop=5)}
    tasks = Orchestrator().plan(SuiteSpec(suite="conjectures", ranges=ranges))
    assert ("phi_square_divisibility", {"d": 2}) in tasks
    assert ("phi_square_divisibility", {"d": 4}) in tasks
    assert ("phi_square_divisibility", {"d": 3}) not in tasks
    assert ("inverse_power_congruence", {"d": 4, "k": 3}) in tasks
    assert ("rec1_cases", {"n": 1}) in tasks


def test_qanalog_plan_pairs_checks_per_point():
    ranges = {"m": ParamRange(start=1, stop=2), "n": ParamRange(start=1, stop=2)}
    tasks = Orchestrator().plan(SuiteSpec(suite="qanalog", ranges=ranges))
    assert [name for name, _ in tasks[:4]] == ["thm_q_analog", "rsw", "thm_q_analog", "rsw"]
    assert tasks[0][1] == tasks[1][1] == {"m": 1, "n": 1}
    assert len(tasks) == 8


def test_qanalog_prepare_fills_caches():
    memo_cache.clear("qbinom_row")
    suite = Orchestrator().suites["qanalog"]
    suite.prepare({"m": ParamRange(start=1, stop=3), "n": ParamRange(start=1, stop=5)})
    assert memo_cache.get("qbinom_row", 10) is not None
    assert memo_cache.get("cyclotomic", 10) is not None


def test_router_rsw_matches_direct_check():
    report = check_router.execute_check("rsw", {"m": 3, "n": 5})
    assert report.passed
    assert report.params == {"m": 3, "n": 5}


@pytest.mark.parametrize("name,params", [
    ("lemma_one", {"n": 3}),
    ("lemma_two", {"n": 5, "k": 2}),
    ("q_chu", {"m": 2, "n": 3, "k": 2}),
    ("lemma_product", {"m": 3, "n": 4, "k": 2}),
    ("mao_split_congruence", {"n": 5, "j": 2}),
    ("mao_split_identity", {"n": 5, "j": 2}),
    ("rec1_cases", {"n": 4}),
])
def test_router_reports_keep_check_ids(name, params):
    report = check_router.execute_check(name, params)
    assert report.status == CheckStatus.PASS, report.witness
    assert (report.check_id, report.params) == (name, params)
