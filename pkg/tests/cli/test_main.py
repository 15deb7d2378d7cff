from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from relsig.cli.main import main
from relsig.conversions.vectors import SignatureVector

BRIDGE_DOC = {"n": 5, "pathsets": [[1, 4], [2, 5], [1, 3, 5], [2, 3, 4]]}
BRIDGE_S = ["0", "1/5", "3/5", "1/5", "0"]
BRIDGE_D = ["0", "0", "2", "2", "-5", "2"]


@pytest.fixture
def write_doc(tmp_path: Path):
    def _write(name: str, payload: dict | str) -> str:
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, dict | None, str]:
    code = main(argv)
    captured = capsys.readouterr()
    return code, json.loads(captured.out) if captured.out.strip() else None, captured.err


def _error(stderr: str) -> dict:
    return json.loads(stderr.strip().splitlines()[-1])


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_bridge(write_doc, capsys):
    code, report, _ = _run(["analyze", write_doc("bridge.json", BRIDGE_DOC)], capsys)
    assert code == 0
    assert report["signature"] == BRIDGE_S
    assert report["tail"] == ["1", "1", "4/5", "1/5", "0", "0"]
    assert report["domination"] == BRIDGE_D
    assert report["polynomial"] == BRIDGE_D
    assert report["dual_domination"] == BRIDGE_D
    assert report["phi"] == ["0", "0", "2", "8", "5", "1"]
    assert report["pathcount_gf"] == report["phi"]
    assert report["full_degree"] is True
    assert sorted(report["minimal_pathsets"]) == [[1, 3, 5], [1, 4], [2, 3, 4], [2, 5]]
    assert report["reliability"] is None


def test_analyze_reports_reliability_at_a_point(write_doc, capsys):
    code, report, _ = _run(["analyze", write_doc("bridge.json", BRIDGE_DOC), "--at", "9/10"], capsys)
    assert code == 0
    assert report["at"] == "9/10"
    assert report["reliability"] == "12231/12500"


def test_analyze_rejects_a_bad_point(write_doc, capsys):
    code, _, err = _run(["analyze", write_doc("bridge.json", BRIDGE_DOC), "--at", "3/2"], capsys)
    assert code == 3
    assert _error(err)["error"] == "PreconditionError"


def test_analyze_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"n": 2, "table": "0111"})))
    code, report, _ = _run(["analyze", "-"], capsys)
    assert code == 0
    assert report["signature"] == ["0", "1"]
    assert report["domination"] == ["0", "2", "-1"]


def test_analyze_output_is_byte_stable(write_doc, tmp_path, capsys):
    system = write_doc("bridge.json", BRIDGE_DOC)
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["analyze", system, "--output", str(first)]) == 0
    assert main(["analyze", system, "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert capsys.readouterr().out == ""


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("route", ["table", "closed"])
def test_convert_signature_to_domination(write_doc, capsys, route):
    vector = write_doc("s.json", {"n": 5, "values": BRIDGE_S})
    argv = ["convert", "--from", "signature", "--to", "domination", vector, "--route", route]
    code, doc, _ = _run(argv, capsys)
    assert code == 0
    assert doc == {"representation": "domination", "n": 5, "values": BRIDGE_D}


def test_convert_polynomial_to_signature_by_integration(write_doc, capsys):
    vector = write_doc("h.json", {"representation": "polynomial", "n": 3, "values": ["0", "0", "2", "-1"]})
    argv = ["convert", "--from", "polynomial", "--to", "signature", vector, "--route", "integral"]
    code, doc, _ = _run(argv, capsys)
    assert code == 0
    assert doc["values"] == ["1/3", "2/3", "0"]


def test_convert_rejects_corrupted_domination(write_doc, capsys):
    vector = write_doc("d.json", {"n": 2, "values": ["1", "0", "0"]})
    code, out, err = _run(["convert", "--from", "domination", "--to", "tail", vector], capsys)
    assert code == 3
    assert out is None
    error = _error(err)
    assert error["exit_code"] == 3
    assert "d_0" in error["message"]


def test_convert_rejects_a_mislabelled_document(write_doc, capsys):
    vector = write_doc("s.json", {"representation": "tail", "n": 5, "values": BRIDGE_S})
    code, _, err = _run(["convert", "--from", "signature", "--to", "tail", vector], capsys)
    assert code == 3
    assert _error(err)["details"] == {"expected": "signature", "got": "tail"}


# ---------------------------------------------------------------------------
# dependent
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("route", ["table", "integral"])
def test_dependent_first_and_either(write_doc, capsys, route):
    system = write_doc("system.json", {"n": 3, "pathsets": [[1, 2], [1, 3]]})
    quality = write_doc(
        "quality.json",
        {"n": 3, "q": {"1": "1/3", "2": "1/3", "3": "1/3", "1,2": "1/2", "1,3": "1/4", "2,3": "1/4"}},
    )
    code, report, _ = _run(["dependent", system, quality, "--route", route], capsys)
    assert code == 0
    assert report["p"] == ["1/4", "3/4", "0"]
    assert report["tail"] == ["1", "3/4", "0", "0"]
    assert report["g"] == ["0", "0", "9/4", "-5/4"]
    assert report["binomial_gf"] == ["0", "3/4", "9/4", "0"]
    assert set(report) == {"n", "psi_levels", "tail", "p", "g", "binomial_gf"}


def test_dependent_from_failure_orders(write_doc, capsys):
    system = write_doc("bridge.json", BRIDGE_DOC)
    orders = [{"perm": [1, 2, 3, 4, 5], "prob": "1/2"}, {"perm": [5, 4, 3, 2, 1], "prob": "1/2"}]
    quality = write_doc("quality.json", {"n": 5, "orders": orders})
    code, report, _ = _run(["dependent", system, quality], capsys)
    assert code == 0
    # both orders break the bridge at the second failure
    assert report["p"] == ["0", "1", "0", "0", "0"]


def test_dependent_checks_component_counts(write_doc, capsys):
    system = write_doc("bridge.json", BRIDGE_DOC)
    quality = write_doc("quality.json", {"n": 2, "orders": [{"perm": [1, 2], "prob": "1"}]})
    code, _, err = _run(["dependent", system, quality], capsys)
    assert code == 3
    assert _error(err)["error"] == "DimensionMismatchError"


def test_dependent_rejects_an_oversized_quality_document(write_doc, capsys):
    system = write_doc("system.json", {"n": 3, "pathsets": [[1, 2], [1, 3]]})
    quality = write_doc("quality.json", {"n": 64, "q": {"1": "1"}})
    code, out, err = _run(["dependent", system, quality], capsys)
    assert code == 3
    assert out is None
    assert _error(err)["details"] == {"phi_n": 3, "q_n": 64}


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_bridge(write_doc, capsys):
    code, report, err = _run(["verify", write_doc("bridge.json", BRIDGE_DOC), "--summary"], capsys)
    assert code == 0
    assert report["passed"] is True
    assert report["counterexample"] is None
    names = {check["name"] for check in report["checks"]}
    assert {"subset-sum oracle", "failure-order oracle", "signature by reflection"} <= names
    assert "✓  subset-sum oracle" in err
    assert "✗" not in err


def test_verify_skips_oracles_above_the_cap(write_doc, capsys):
    code, report, _ = _run(["verify", write_doc("bridge.json", BRIDGE_DOC), "--verify-caps", "4"], capsys)
    assert code == 0
    assert "subset-sum oracle" not in {check["name"] for check in report["checks"]}


def test_verify_signature_document(write_doc, capsys):
    vector = write_doc("s.json", {"representation": "signature", "n": 5, "values": BRIDGE_S})
    code, report, _ = _run(["verify", vector], capsys)
    assert code == 0
    assert report["source"] == "signature"
    assert report["checks"][0]["name"] == "valid signature vector"
    assert all(check["passed"] for check in report["checks"])


def test_verify_rejects_corrupted_domination_but_writes_the_report(write_doc, capsys):
    vector = write_doc("d.json", {"representation": "domination", "n": 2, "values": ["1", "0", "0"]})
    code, report, err = _run(["verify", vector], capsys)
    assert code == 3
    assert report["passed"] is False
    assert "d_0" in report["checks"][0]["detail"]
    assert _error(err)["error"] == "PreconditionError"


def test_verify_reports_a_counterexample_on_mismatch(write_doc, capsys, mocker):
    mocker.patch(
        "relsig.cli.verification.boland_signature",
        return_value=SignatureVector((1, 0, 0, 0, 0)),
    )
    code, report, err = _run(["verify", write_doc("bridge.json", BRIDGE_DOC)], capsys)
    assert code == 1
    assert report["passed"] is False
    assert report["counterexample"] == {
        "check": ["subset-sum oracle"],
        "left": ["1", "0", "0", "0", "0"],
        "right": BRIDGE_S,
    }
    assert _error(err)["details"]["failed"] == ["subset-sum oracle"]


def test_verify_needs_a_named_representation(write_doc, capsys):
    code, _, err = _run(["verify", write_doc("v.json", {"n": 5, "values": BRIDGE_S})], capsys)
    assert code == 2
    assert _error(err)["error"] == "DocumentError"


# ---------------------------------------------------------------------------
# Error mapping
# ---------------------------------------------------------------------------


def test_missing_file_is_exit_2(tmp_path, capsys):
    code, _, err = _run(["analyze", str(tmp_path / "missing.json")], capsys)
    assert code == 2
    assert _error(err)["error"] == "DocumentError"


def test_malformed_json_reports_position(write_doc, capsys):
    code, _, err = _run(["analyze", write_doc("bad.json", '{"n": 2,\n  "pathsets": [[1]')], capsys)
    assert code == 2
    error = _error(err)
    assert error["error"] == "DocumentSyntaxError"
    assert error["details"]["line"] == 2


def test_non_monotone_system_is_exit_3(write_doc, capsys):
    code, _, err = _run(["analyze", write_doc("bad.json", {"n": 2, "table": "0110"})], capsys)
    assert code == 3
    assert _error(err)["error"] == "TopNotOneError"


def test_truth_table_cap_is_exit_4(write_doc, capsys):
    code, _, err = _run(["analyze", write_doc("big.json", {"n": 27, "pathsets": [[1]]})], capsys)
    assert code == 4
    assert _error(err)["details"] == {"n": 27, "cap": 26}


def test_no_command_prints_help(capsys):
    assert main([]) == 0
    assert "usage: relsig" in capsys.readouterr().out
