"""Command-line front end.

Exit status: 0 when the verdict is true or the command succeeded, 1 when a
verdict is false (a witness is printed), 2 on bad arguments or unusable
input.  ``--json`` replaces the human-readable text with a report object
``{command, inputs, verdict, witness, cases_checked, duration_ms}``; commands
that produce a document add it under ``output``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import documents
from .errors import NotFound, SoftTopoError
from .generators import (
    CrispSystem,
    associated,
    extract_crisp,
    extract_system,
    formula1,
    formula2,
    union_single_set,
)
from .lab import enumeration, theorems
from .lab.fixtures import fixtures as all_fixtures
from .separation import CRISP, SOFT, AxiomReport, check, parse_axiom
from .topology import (
    CrispTopology,
    SoftTopology,
    compare,
    generate_soft,
    is_crisp_topology,
    is_soft_topology,
)

AXIOM_CHOICES = ("t0", "t1", "t2", "regular", "normal", "t3", "t4")


class UsageError(SoftTopoError):
    pass


class Report:
    """Collects what a command did; rendered as text or JSON at the end."""

    def __init__(self, command: str, inputs: list[str]):
        self.command = command
        self.inputs = inputs
        self.verdict = None
        self.witness = None
        self.cases_checked = None
        self.output = None
        self.lines: list[str] = []

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def to_json(self, duration_ms) -> dict:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witness": self.witness,
            "cases_checked": self.cases_checked,
            "duration_ms": duration_ms,
        }
        if self.output is not None:
            data["output"] = self.output
        return data


def _load(path: str) -> documents.Document:
    return documents.parse(path)


def _as_object(doc: documents.Document):
    return doc.to_object()


def _doc_json(obj, meta=None) -> dict:
    return json.loads(documents.serialize(documents.to_document(obj, meta=meta)))


def _emit_document(report: Report, args, obj) -> None:
    doc = documents.to_document(obj)
    text = documents.serialize(doc)
    report.output = json.loads(text)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        report.say(f"wrote {args.output}")
    else:
        report.lines.append(text.rstrip("\n"))


# -- commands --------------------------------------------------------------


def cmd_validate(args, report: Report) -> int:
    doc = _load(args.file)
    ctx = doc.context
    if args.as_topology and doc.kind == documents.SOFT_SET_LIST:
        doc = documents.Document(documents.SOFT_TOPOLOGY, ctx, doc.payload, doc.meta)
    if doc.kind == documents.SOFT_TOPOLOGY:
        verdict = is_soft_topology(ctx, doc.payload)
        what = "soft topology"
    elif doc.kind == documents.CRISP_TOPOLOGY:
        verdict = is_crisp_topology(ctx, doc.payload)
        what = "crisp topology"
    elif doc.kind == documents.CRISP_SYSTEM:
        what = "crisp system"
        verdict = None
        for e in ctx.parameters:
            v = is_crisp_topology(ctx, doc.payload[e])
            if not v:
                verdict = v
                report.witness = {"parameter": e, "violation": str(v.violation)}
                break
        if verdict is None:
            report.verdict = True
            report.say(f"valid {what}")
            return 0
    else:
        report.verdict = True
        report.say(f"valid soft-set list ({len(doc.payload)} sets)")
        return 0
    report.verdict = bool(verdict)
    if verdict:
        report.say(f"valid {what}")
        return 0
    if report.witness is None:
        report.witness = {"violation": str(verdict.violation)}
    report.say(f"not a {what}: {report.witness['violation']}")
    return 1


def cmd_generate(args, report: Report) -> int:
    doc = _load(args.file)
    obj = _as_object(doc)
    if args.closure:
        family = obj.opens if isinstance(obj, SoftTopology) else obj
        if isinstance(family, (CrispSystem, CrispTopology)):
            raise UsageError("--closure expects a soft-set list or soft topology")
        result = generate_soft(doc.context, family, allow_large=args.allow_large)
    elif args.associated:
        if not isinstance(obj, SoftTopology):
            raise UsageError("--associated expects a soft topology")
        result = associated(obj, allow_large=args.allow_large)
    elif args.union_single_set:
        result = union_single_set(_system_of(obj), allow_large=args.allow_large)
    elif args.formula == 1:
        result = formula1(_system_of(obj), allow_large=args.allow_large)
    else:
        if isinstance(obj, CrispTopology):
            sigma = obj
        elif isinstance(obj, CrispSystem):
            if not args.parameter:
                raise UsageError("--formula 2 on a system needs --parameter")
            sigma = obj[args.parameter]
        else:
            raise UsageError("--formula 2 expects a crisp topology or a system")
        result = formula2(sigma)
    report.verdict = True
    report.cases_checked = None
    _emit_document(report, args, result)
    return 0


def _system_of(obj) -> CrispSystem:
    if isinstance(obj, CrispSystem):
        return obj
    if isinstance(obj, SoftTopology):
        return extract_system(obj)
    if isinstance(obj, CrispTopology):
        return CrispSystem.constant(obj.context, obj)
    raise UsageError("expected a crisp system")


def cmd_extract(args, report: Report) -> int:
    obj = _as_object(_load(args.file))
    if not isinstance(obj, SoftTopology):
        raise UsageError("extract expects a soft topology")
    result = extract_crisp(obj, args.parameter) if args.parameter else extract_system(obj)
    report.verdict = True
    _emit_document(report, args, result)
    return 0


def _describe(report_obj: AxiomReport) -> list[str]:
    w = report_obj.witness
    if w is None:
        return []
    parts = []
    if w.points:
        parts.append("points " + ", ".join(w.points))
    if w.sets:
        parts.append("sets " + ", ".join(map(repr, w.sets)))
    if w.opens:
        parts.append("opens " + ", ".join(map(repr, w.opens)))
    label = "witness" if report_obj.verdict else f"counter-witness ({report_obj.failed})"
    return [f"  {label}: " + "; ".join(parts)]


def cmd_check(args, report: Report) -> int:
    axiom, flavor = parse_axiom(args.axiom)
    if args.flavor:
        if flavor and flavor != args.flavor:
            raise UsageError(f"--axiom {args.axiom} conflicts with --flavor {args.flavor}")
        flavor = args.flavor
    obj = _as_object(_load(args.file))

    if isinstance(obj, SoftTopology) and args.parameter:
        obj = extract_crisp(obj, args.parameter)
    if isinstance(obj, SoftTopology):
        flavor = flavor or SOFT
        targets = [(None, obj)] if flavor == SOFT else list(extract_system(obj).items())
    elif isinstance(obj, CrispTopology):
        flavor = flavor or CRISP
        if flavor == SOFT:
            raise UsageError("a crisp topology has no soft axioms; generate a soft topology first")
        targets = [(None, obj)]
    elif isinstance(obj, CrispSystem):
        flavor = flavor or CRISP
        if flavor == SOFT:
            raise UsageError("soft axioms need a soft topology; run generate --formula 1 first")
        targets = list(obj.items()) if not args.parameter else [(args.parameter, obj[args.parameter])]
    else:
        raise UsageError("check expects a topology or a system")

    verdict = True
    witnesses = {}
    for e, target in targets:
        result = check(target, axiom, explain=True)
        name = f"{flavor} {axiom}" + (f" at {e}" if e else "")
        report.say(f"{name}: {'true' if result.verdict else 'false'}")
        report.lines.extend(_describe(result))
        data = result.to_json()
        witnesses[e or "_"] = {
            "verdict": result.verdict,
            "failed": data["failed"],
            "witness": data["witness"],
        }
        verdict = verdict and result.verdict
    report.verdict = verdict
    report.witness = witnesses["_"] if list(witnesses) == ["_"] else witnesses
    return 0 if verdict else 1


def cmd_compare(args, report: Report) -> int:
    first = _as_object(_load(args.first))
    second = _as_object(_load(args.second))
    result = compare(first, second)
    report.verdict = result.value
    report.say(str(result))
    return 0


def _bounds(args, theorem_id: str) -> theorems.SweepBounds:
    mode = theorems.RANDOM if args.samples is not None or args.mode == "random" else None
    return theorems.with_bounds(
        theorem_id,
        max_points=args.max_points,
        max_parameters=args.params,
        min_points=args.min_points,
        seed=args.seed,
        samples=args.samples,
        mode=mode,
    )


def _report_outcome(report: Report, outcome) -> None:
    report.cases_checked = outcome.cases_checked
    report.witness = outcome.counterexample
    b = outcome.bounds
    scope = f"n={b.min_points}..{b.max_points}, m={b.max_parameters}, {b.mode}"
    report.say(f"{outcome.theorem}: {outcome.status} ({outcome.cases_checked} cases; {scope})")
    if outcome.counterexample is not None:
        doc = documents.parse_text(json.dumps(outcome.counterexample))
        report.lines.append(documents.serialize(doc).rstrip("\n"))


def cmd_verify(args, report: Report) -> int:
    theorem = theorems.get_theorem(args.theorem)
    outcome = theorems.verify_theorem(theorem.id, _bounds(args, theorem.id), workers=args.workers)
    report.verdict = outcome.status
    _report_outcome(report, outcome)
    return 0 if outcome.status == theorems.PROVEN else 1


def cmd_search(args, report: Report) -> int:
    theorem = theorems.get_theorem(args.theorem)
    try:
        outcome = theorems.search_converse_counterexample(
            theorem.id, _bounds(args, theorem.id), workers=args.workers
        )
    except NotFound as exc:
        report.verdict = "not-found"
        report.say(str(exc))
        return 1
    report.verdict = outcome.status
    _report_outcome(report, outcome)
    return 0


def cmd_enumerate(args, report: Report) -> int:
    if args.parameters is None:
        found = list(enumeration.enumerate_crisp_topologies(args.points))
        label = f"{args.points} points"
    else:
        found = list(enumeration.enumerate_soft_topologies(args.points, args.parameters))
        label = f"{args.points} points, {args.parameters} parameters"
    report.verdict = True
    report.cases_checked = len(found)
    report.say(f"{len(found)} topologies on {label}")
    if args.list:
        report.output = [_doc_json(t) for t in found]
        for t in found:
            report.say(repr(t))
    return 0


def fixture_bundle(fx) -> dict:
    return {
        "name": fx.name,
        "description": fx.description,
        "primary": fx.primary,
        "expected": fx.expected,
        "notes": list(fx.notes),
        "items": {
            item: json.loads(documents.serialize(documents.to_document(obj, fx.context)))
            for item, obj in fx.items.items()
        },
    }


def fixture_files(fx) -> dict[str, str]:
    """File name -> serialized document for every item of a fixture."""
    files = {}
    for item, obj in fx.items.items():
        if item == fx.primary:
            name = f"{fx.name}.json"
            meta = {
                "fixture": fx.name,
                "item": item,
                "description": fx.description,
                "expected": fx.expected,
                "notes": list(fx.notes),
            }
        else:
            name = f"{fx.name}--{item}.json"
            meta = {"fixture": fx.name, "item": item}
        files[name] = documents.serialize(documents.to_document(obj, fx.context, meta))
    return files


def cmd_fixtures(args, report: Report) -> int:
    available = all_fixtures()
    if args.name:
        if args.name not in available:
            raise UsageError(f"unknown fixture {args.name!r}; known: {', '.join(available)}")
        selected = [available[args.name]]
    else:
        selected = list(available.values())
    report.verdict = True
    if args.write_dir:
        out = Path(args.write_dir)
        out.mkdir(parents=True, exist_ok=True)
        for fx in selected:
            for name, text in fixture_files(fx).items():
                (out / name).write_text(text, encoding="utf-8")
                report.say(f"wrote {out / name}")
        return 0
    if args.name:
        bundle = fixture_bundle(selected[0])
        report.output = bundle
        report.lines.append(json.dumps(bundle, ensure_ascii=False, indent=2))
    else:
        report.output = [fx.name for fx in selected]
        for fx in selected:
            report.say(f"{fx.name}: {fx.description}")
    return 0


# -- parser ----------------------------------------------------------------


def _add_bounds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-points", type=int)
    p.add_argument("--min-points", type=int)
    p.add_argument("--params", type=int, help="number of parameters")
    p.add_argument("--mode", choices=("exhaustive", "random"))
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, help="sample count; implies --mode random")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument(
        "--no-timing", action="store_true", help="report duration_ms as null"
    )
    common.add_argument("--allow-large", action="store_true", help="lift the size guard")

    parser = argparse.ArgumentParser(prog="softtopo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a document's axioms")
    p.add_argument("file")
    p.add_argument(
        "--as-topology", action="store_true", help="read a soft-set list as a soft topology"
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("generate", parents=[common], help="build a soft topology")
    p.add_argument("file")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--formula", type=int, choices=(1, 2))
    how.add_argument("--closure", action="store_true", help="generated soft topology")
    how.add_argument(
        "--associated", "--extended", action="store_true", help="associated soft topology"
    )
    how.add_argument("--union-single-set", action="store_true")
    p.add_argument("--parameter")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("extract", parents=[common], help="slice a soft topology")
    p.add_argument("file")
    p.add_argument("--parameter")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("check", parents=[common], help="check a separation axiom")
    p.add_argument("file")
    p.add_argument(
        "--axiom",
        required=True,
        help="one of " + ", ".join(AXIOM_CHOICES) + "; a soft- or crisp- prefix sets the flavor",
    )
    p.add_argument("--flavor", choices=(CRISP, SOFT))
    p.add_argument("--parameter")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[common], help="compare two topologies")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify-theorem", parents=[common], help="sweep a claim")
    p.add_argument("theorem")
    _add_bounds(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="search a converse counterexample")
    p.add_argument("theorem")
    _add_bounds(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", parents=[common], help="count small topologies")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--parameters", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fixtures", parents=[common], help="worked-example fixtures")
    p.add_argument("--name")
    p.add_argument("--write-dir")
    p.set_defaults(func=cmd_fixtures)
    return parser


def _inputs(args) -> list[str]:
    # worker count is left out so reports match across parallelism settings
    skip = {"func", "json", "no_timing", "command", "workers"}
    inputs = []
    for key, value in vars(args).items():
        if key in skip or value is None or value is False:
            continue
        inputs.append(f"{key}={value}")
    return inputs


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("verify-theorem", "search") and args.mode == "exhaustive" and args.samples:
        parser.error("--samples needs random mode")
    report = Report(args.command, _inputs(args))
    started = time.perf_counter()
    try:
        code = args.func(args, report)
    except (SoftTopoError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"softtopo {args.command}: error: {message}", file=sys.stderr)
        return 2
    elapsed = None if args.no_timing else round((time.perf_counter() - started) * 1000, 3)
    if args.json:
        print(json.dumps(report.to_json(elapsed), ensure_ascii=False, indent=2))
    else:
        for line in report.lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
