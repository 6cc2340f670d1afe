"""The eleven acceptance criteria, each with its time bound.

Worked examples are driven through the command line (in process) from the
committed files under ``fixtures/``.  A PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import contextlib
import io
import json
import time
from pathlib import Path

import pytest
from laws import closure_properties, pairwise_laws, triple_laws

from softtopo import (
    Axiom,
    Context,
    SoftSet,
    check_crisp,
    check_soft,
    formula1,
    from_product_subset,
    to_product_subset,
)
from softtopo.cli import main
from softtopo.documents import parse, parse_text
from softtopo.lab import enumerate_crisp_topologies, enumerate_soft_topologies, verify_theorem
from softtopo.lab import search_converse_counterexample
from softtopo.lab.theorems import PROVEN, with_bounds
from softtopo.separation import failures, replay

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cli(*argv):
    """Run the command line in process; returns (exit code, JSON report)."""
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main([str(a) for a in argv] + ["--json", "--no-timing"])
    return code, json.loads(buffer.getvalue())


def fx(name):
    return FIXTURES / f"{name}.json"


def opens_of(report):
    return parse_text(json.dumps(report["output"])).to_object()


def file_object(name):
    return parse(fx(name)).to_object()


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "Example 3.1 replication")
def test_criterion_01_example_3_1_generation():
    with Timer() as t:
        code, rep = cli("generate", "--formula", "1", fx("example-3.1"))
        assert code == 0
        produced = opens_of(rep)
        assert len(produced) == 12
        assert produced == file_object("example-3.1--formula1")

        for e, size in (("e1", 4), ("e2", 3)):
            code, rep = cli("generate", "--formula", "2", "--parameter", e, fx("example-3.1--system"))
            single = opens_of(rep)
            assert code == 0 and len(single) == size
            assert single == file_object(f"example-3.1--single-{e}")

        code, rep = cli("generate", "--union-single-set", fx("example-3.1--system"))
        union = opens_of(rep)
        assert union == file_object("example-3.1--union")
        assert len(union) == 6
    assert t.elapsed < 1.0


@pytest.mark.criterion(2, "Example 3.1 relations between the three constructions")
def test_criterion_02_construction_relations():
    with Timer() as t:
        pairs = [
            ("example-3.1", "example-3.1--formula1", "strictly-coarser"),
            ("example-3.1", "example-3.1--union", "incomparable"),
            ("example-3.1--union", "example-3.1--formula1", "incomparable"),
        ]
        for first, second, expected in pairs:
            code, rep = cli("compare", fx(first), fx(second))
            assert code == 0 and rep["verdict"] == expected
    assert t.elapsed < 1.0


@pytest.mark.criterion(3, "Example 4.1 non-uniqueness")
def test_criterion_03_example_4_1():
    names = ["example-4.1--sigma", "example-4.1--sigma-prime", "example-4.1"]
    with Timer() as t:
        for name in names:
            code, rep = cli("validate", fx(name))
            assert code == 0 and rep["verdict"] is True
        assert cli("compare", fx(names[0]), fx(names[1]))[1]["verdict"] == "incomparable"
        assert cli("compare", fx(names[2]), fx(names[0]))[1]["verdict"] == "strictly-finer"
        assert cli("compare", fx(names[2]), fx(names[1]))[1]["verdict"] == "strictly-finer"
        systems = [cli("extract", fx(n))[1]["output"] for n in names]
        assert systems[0] == systems[1] == systems[2]
        associated = [cli("generate", "--associated", fx(n))[1]["output"] for n in names]
        assert associated[0] == associated[1] == associated[2]
    assert t.elapsed < 1.0


@pytest.mark.criterion(4, "Example 5.1 corrected: 16 sets, soft T0, slices not T0")
def test_criterion_04_example_5_1():
    with Timer() as t:
        code, rep = cli("generate", "--formula", "1", fx("example-5.1-corrected--system"))
        produced = opens_of(rep)
        assert len(produced) == 16
        assert produced == file_object("example-5.1-corrected")
        listing = file_object("example-5.1-corrected--original-listing")
        (impossible,) = file_object("example-5.1-corrected--impossible")
        assert len(listing) == 17
        assert set(listing) - set(produced.opens) == {impossible}

        code, rep = cli("check", "--axiom", "soft-t0", fx("example-5.1-corrected"))
        assert code == 0 and rep["verdict"] is True
        code, rep = cli("check", "--axiom", "crisp-t0", fx("example-5.1-corrected--system"))
        assert code == 1
        assert rep["witness"]["e1"]["verdict"] is False
        assert rep["witness"]["e2"]["verdict"] is False

        meta = json.loads(fx("example-5.1-corrected").read_text(encoding="utf-8"))["meta"]
        assert meta["expected"]["original_listing_size"] == 17
        assert any("16" in note and "17" in note for note in meta["notes"])
    assert t.elapsed < 1.0


@pytest.mark.criterion(5, "Example 5.2: soft T1 with witness pair, slices not T1")
def test_criterion_05_example_5_2():
    with Timer() as t:
        code, rep = cli("generate", "--formula", "1", fx("example-5.2--system"))
        produced = opens_of(rep)
        assert len(produced) == 9 and produced == file_object("example-5.2")

        code, rep = cli("check", "--axiom", "soft-t1", fx("example-5.2"))
        assert code == 0 and rep["verdict"] is True
        witness_opens = rep["witness"]["witness"]["opens"]
        expected = [s.as_dict() for s in file_object("example-5.2--t1-witness")]
        assert sorted(map(json.dumps, witness_opens)) == sorted(map(json.dumps, expected))

        code, rep = cli("check", "--axiom", "crisp-t1", fx("example-5.2--system"))
        assert code == 1
        assert rep["witness"]["e1"]["verdict"] is False
        assert rep["witness"]["e2"]["verdict"] is False
    assert t.elapsed < 1.0


@pytest.mark.criterion(6, "Examples 5.5 to 5.7: regularity and normality")
def test_criterion_06_examples_5_5_to_5_7():
    with Timer() as t:
        # 5.5: soft normal, slice at e1 not normal
        assert cli("validate", fx("example-5.5"))[0] == 0
        assert len(file_object("example-5.5")) == 11
        code, rep = cli("check", "--axiom", "soft-normal", fx("example-5.5"))
        assert code == 0 and rep["verdict"] is True
        code, rep = cli("check", "--axiom", "crisp-normal", "--parameter", "e1", fx("example-5.5"))
        assert code == 1 and rep["verdict"] is False

        # 5.6: regular slices, Formula 1 not soft regular
        assert len(file_object("example-5.6")) == 4
        code, rep = cli("check", "--axiom", "soft-regular", fx("example-5.6"))
        assert code == 1 and rep["verdict"] is False
        code, rep = cli("check", "--axiom", "crisp-regular", fx("example-5.6--system"))
        assert code == 0
        assert rep["witness"]["e1"]["verdict"] and rep["witness"]["e2"]["verdict"]

        # 5.7: not soft normal; the listed closed pair is a failing instance
        t57 = file_object("example-5.7")
        assert len(t57) == 10
        code, rep = cli("check", "--axiom", "soft-normal", fx("example-5.7"))
        assert code == 1 and rep["verdict"] is False
        pair = set(file_object("example-5.7--normal-witness"))
        hits = [w for _, w in failures(t57, Axiom.NORMAL) if set(w.sets) == pair]
        assert hits and replay(t57, Axiom.NORMAL, hits[0])
        code, rep = cli("check", "--axiom", "crisp-normal", fx("example-5.7--system"))
        assert rep["witness"]["e1"]["verdict"] is True
        assert rep["witness"]["e2"]["verdict"] is False
        assert rep["witness"]["e2"]["witness"]["sets"] == [["x2"], ["x3"]]
    assert t.elapsed < 1.0


@pytest.mark.criterion(7, "Enumeration counts 1, 4, 29, 355 and the 2x2 soft census")
def test_criterion_07_enumeration():
    with Timer() as t:
        counts = [len(list(enumerate_crisp_topologies(n))) for n in range(1, 5)]
        assert counts == [1, 4, 29, 355]
        assert len(list(enumerate_soft_topologies(2, 2))) == 355
        code, rep = cli("enumerate", "--points", "2", "--parameters", "2")
        assert code == 0 and rep["cases_checked"] == 355
    assert t.elapsed < 10.0


@pytest.mark.criterion(8, "System sweeps T5.1 T5.2 T5.3 T5.5 L3.4 L3.6 over 841 pairs")
def test_criterion_08_system_sweeps():
    with Timer() as t:
        for theorem_id in ("T5.1", "T5.2", "T5.3", "T5.5", "L3.4", "L3.6"):
            outcome = verify_theorem(theorem_id, with_bounds(theorem_id, max_points=3, max_parameters=2))
            assert outcome.status == PROVEN, theorem_id
            assert outcome.cases_checked == 841
            # the smaller universes as well, so the sweep covers every n <= 3
            small = verify_theorem(theorem_id, with_bounds(theorem_id, max_points=2, min_points=1))
            assert small.status == PROVEN and small.cases_checked == 1 + 16
        code, rep = cli("verify-theorem", "T5.3", "--max-points", "3", "--params", "2")
        assert code == 0 and rep["cases_checked"] == 841
    assert t.elapsed < 60.0


@pytest.mark.criterion(9, "Census sweeps L3.3 L2.7 C5.1 C5.2 R-T3 and Formula 2 transfer")
def test_criterion_09_census_sweeps():
    with Timer() as t:
        for theorem_id in ("L3.3", "L2.7", "C5.1", "C5.2", "R-T3"):
            outcome = verify_theorem(theorem_id)
            assert outcome.status == PROVEN, theorem_id
            assert outcome.cases_checked == 355
        transfer = verify_theorem("F2-TRANSFER")
        assert transfer.status == PROVEN and transfer.cases_checked == 1 + 4 + 29
    assert t.elapsed < 60.0


def _replay_converse(theorem_id, system):
    """Re-derive the failure with the checkers directly."""
    soft = formula1(system)
    slices = list(system)
    if theorem_id == "CONV-T5.1":
        return check_soft(soft, Axiom.T0).verdict and not any(check_crisp(s, Axiom.T0).verdict for s in slices)
    if theorem_id == "CONV-T5.2":
        return check_soft(soft, Axiom.T1).verdict and not any(check_crisp(s, Axiom.T1).verdict for s in slices)
    return all(check_crisp(s, Axiom.REGULAR).verdict for s in slices) and not check_soft(soft, Axiom.REGULAR).verdict


@pytest.mark.criterion(10, "Converse searches find counterexamples that replay")
def test_criterion_10_converse_searches():
    with Timer() as t:
        for theorem_id in ("CONV-T5.1", "CONV-T5.2", "CONV-T5.4"):
            outcome = search_converse_counterexample(theorem_id)
            assert outcome.status == "counterexample"
            system = parse_text(json.dumps(outcome.counterexample)).to_object()
            assert _replay_converse(theorem_id, system), theorem_id
            code, rep = cli("search", theorem_id)
            assert code == 0 and rep["witness"] == outcome.counterexample
    assert t.elapsed < 30.0


@pytest.mark.criterion(11, "Property suite: lattice laws, closure properties, product round trip")
def test_criterion_11_property_suite():
    shapes = [(n, m) for n in range(1, 10) for m in range(1, 10) if n * m <= 7]
    shapes += [(2, 4), (4, 2), (3, 3)]
    for n, m in shapes:
        pairwise_laws(n, m)
        triple_laws(n, m)

    ctx = Context.standard(2, 2)
    for seed in range(1000):
        closure_properties(ctx, seed)

    for code in range(1 << ctx.bits):
        soft = SoftSet(ctx, code)
        assert from_product_subset(ctx, to_product_subset(soft)) == soft
