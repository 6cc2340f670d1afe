import json
import subprocess
import sys
from pathlib import Path

import pytest

from softtopo.cli import main
from softtopo.documents import parse
from softtopo.lab import fixture

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json", "--no-timing")
    return code, json.loads(out)


def test_check_soft_t1_prints_witness(capsys):
    code, out, _ = run(capsys, "check", "--axiom", "soft-t1", FIXTURES / "example-5.2.json")
    assert code == 0
    assert out.startswith("soft t1: true")
    assert "{(e1,{x1}), (e2,X)}" in out and "{(e1,X), (e2,{x2})}" in out


def test_check_false_exits_one_with_witness(capsys):
    code, data = report(capsys, "check", "--axiom", "normal", "--flavor", "soft", FIXTURES / "example-5.7.json")
    assert code == 1
    assert data["verdict"] is False
    assert data["witness"]["failed"] == "normal"
    assert len(data["witness"]["witness"]["sets"]) == 2


def test_check_system_checks_every_slice(capsys):
    code, data = report(capsys, "check", "--axiom", "normal", FIXTURES / "example-5.7--system.json")
    assert code == 1
    assert data["witness"]["e1"]["verdict"] is True
    assert data["witness"]["e2"]["witness"]["sets"] == [["x2"], ["x3"]]


def test_check_crisp_flavor_on_soft_topology(capsys):
    code, data = report(capsys, "check", "--axiom", "crisp-normal", "--parameter", "e1", FIXTURES / "example-5.5.json")
    assert code == 1 and data["verdict"] is False


def test_generate_formula1_from_sigma(capsys, tmp_path):
    out_file = tmp_path / "t.json"
    code, _, _ = run(capsys, "generate", "--formula", "1", FIXTURES / "example-3.1.json", "-o", out_file)
    assert code == 0
    assert parse(out_file).to_object() == fixture("example-3.1").items["formula1"]
    code, data = report(capsys, "generate", "--formula", "1", FIXTURES / "example-3.1--system.json")
    assert len(data["output"]["opens"]) == 12


def test_generate_other_modes(capsys):
    items = fixture("example-3.1").items
    code, data = report(capsys, "generate", "--formula", "2", "--parameter", "e1", FIXTURES / "example-3.1--system.json")
    assert code == 0 and len(data["output"]["opens"]) == 4
    code, data = report(capsys, "generate", "--union-single-set", FIXTURES / "example-3.1--system.json")
    assert len(data["output"]["opens"]) == len(items["union"])
    code, data = report(capsys, "generate", "--extended", FIXTURES / "example-4.1--sigma-prime.json")
    assert len(data["output"]["opens"]) == 12
    code, data = report(capsys, "generate", "--closure", FIXTURES / "example-5.1-corrected--original-listing.json")
    assert code == 0 and len(data["output"]["opens"]) > 17


def test_extract(capsys):
    code, data = report(capsys, "extract", FIXTURES / "example-3.1.json")
    assert data["output"]["topologies"]["e2"] == [[], ["x3"], ["x1", "x2", "x3"]]
    code, data = report(capsys, "extract", "--parameter", "e1", FIXTURES / "example-3.1.json")
    assert data["output"]["kind"] == "crisp-topology"


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", FIXTURES / "example-3.1.json", FIXTURES / "example-3.1--formula1.json")
    assert code == 0 and out == "strictly-coarser\n"


def test_validate(capsys):
    assert run(capsys, "validate", FIXTURES / "example-5.5.json")[0] == 0
    code, data = report(capsys, "validate", "--as-topology", FIXTURES / "example-5.1-corrected--original-listing.json")
    assert code == 1 and "union" in data["witness"]["violation"]


def test_verify_theorem_report(capsys):
    code, data = report(capsys, "verify-theorem", "T5.3", "--max-points", "3", "--params", "2")
    assert code == 0
    assert data == {
        "command": "verify-theorem",
        "inputs": ["theorem=T5.3", "max_points=3", "params=2"],
        "verdict": "proven-at-scale",
        "witness": None,
        "cases_checked": 841,
        "duration_ms": None,
    }


def test_search_report(capsys):
    code, data = report(capsys, "search", "CONV-T5.4")
    assert code == 0
    assert data["verdict"] == "counterexample"
    assert data["witness"]["kind"] == "crisp-system"
    code, _, _ = run(capsys, "search", "CONV-T5.1", "--max-points", "2")
    assert code == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "3")
    assert out == "29 topologies on 3 points\n"
    code, data = report(capsys, "enumerate", "--points", "2", "--parameters", "2")
    assert data["cases_checked"] == 355


def test_fixtures_command(capsys, tmp_path):
    code, data = report(capsys, "fixtures", "--name", "example-5.1-corrected")
    assert code == 0
    assert data["output"]["expected"]["formula1_size"] == 16
    assert len(data["output"]["items"]["original-listing"]["sets"]) == 17
    run(capsys, "fixtures", "--write-dir", tmp_path)
    written = {p.name: p.read_text(encoding="utf-8") for p in tmp_path.iterdir()}
    committed = {p.name: p.read_text(encoding="utf-8") for p in FIXTURES.glob("*.json")}
    assert written == committed


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--axiom", "t9", "fixtures/example-5.5.json"],
        ["check", "--axiom", "t1", "missing.json"],
        ["verify-theorem", "T9.9"],
        ["enumerate", "--points", "5"],
        ["search", "T5.1"],
        ["generate", "--formula", "1"],
        ["fixtures", "--name", "nope"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_bad_json_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"context": ', encoding="utf-8")
    code, _, err = run(capsys, "validate", path)
    assert code == 2 and "line 1" in err


def test_output_is_deterministic_across_runs_and_workers(capsys):
    argv = ["verify-theorem", "CONV-T5.1", "--json", "--no-timing"]
    outputs = set()
    for workers in ("1", "1", "2", "4"):
        main(argv + ["--workers", workers])
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "softtopo", "check", "--axiom", "soft-t1", str(FIXTURES / "example-5.2.json")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout.startswith("soft t1: true")
