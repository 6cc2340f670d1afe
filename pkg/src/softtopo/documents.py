"""JSON documents: the on-disk format read and written by the command line.

A document names its context and carries one payload::

    {
      "schema_version": "1.0",
      "kind": "soft-topology",
      "context": {"universe": ["x1", "x2"], "parameters": ["e1", "e2"]},
      "opens": [{"e1": [], "e2": []}, ...]
    }

Kinds and their payload field: ``soft-topology`` and ``crisp-topology`` use
``opens`` (soft sets as ``{parameter: [points]}``, crisp sets as
``[points]``), ``crisp-system`` uses ``topologies`` (``{parameter: [[points],
...]}``) and ``soft-set-list`` uses ``sets``.  ``kind`` may be omitted when
the payload makes it unambiguous.  An optional free-form ``meta`` object is
carried through unchanged.  Unknown fields are rejected.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, SchemaError, ValidationError
from .generators import CrispSystem
from .softset import Context, PointSet, SoftSet, make_soft_set
from .topology import CrispTopology, SoftTopology

__all__ = [
    "SCHEMA_VERSION",
    "KINDS",
    "Document",
    "parse",
    "parse_text",
    "serialize",
    "to_document",
]

SCHEMA_VERSION = "1.0"
SOFT_TOPOLOGY = "soft-topology"
CRISP_TOPOLOGY = "crisp-topology"
CRISP_SYSTEM = "crisp-system"
SOFT_SET_LIST = "soft-set-list"
KINDS = (SOFT_TOPOLOGY, CRISP_TOPOLOGY, CRISP_SYSTEM, SOFT_SET_LIST)

_PAYLOAD_FIELD = {
    SOFT_TOPOLOGY: "opens",
    CRISP_TOPOLOGY: "opens",
    CRISP_SYSTEM: "topologies",
    SOFT_SET_LIST: "sets",
}
_TOP_FIELDS = {"schema_version", "kind", "context", "opens", "topologies", "sets", "meta"}


@dataclass(frozen=True)
class Document:
    """A parsed document.

    ``payload`` is a tuple of :class:`SoftSet` or :class:`PointSet` for the
    list kinds and a ``{parameter: tuple of PointSet}`` dict for systems.
    Payloads are not required to be topologies; :meth:`to_object` validates.
    """

    kind: str
    context: Context
    payload: object
    meta: dict | None = None
    schema_version: str = SCHEMA_VERSION

    def to_object(self):
        """The library value: a topology, a system, or a tuple of soft sets.

        Raises :class:`~softtopo.errors.NotATopology` when the payload
        fails the topology axioms.
        """
        ctx = self.context
        if self.kind == SOFT_TOPOLOGY:
            return SoftTopology(ctx, tuple(s.code for s in self.payload))
        if self.kind == CRISP_TOPOLOGY:
            return CrispTopology(ctx, tuple(s.mask for s in self.payload))
        if self.kind == CRISP_SYSTEM:
            return CrispSystem.from_mapping(ctx, self.payload)
        return tuple(self.payload)


def to_document(obj, context: Context | None = None, meta: dict | None = None) -> Document:
    """Wrap a library value in a document."""
    if isinstance(obj, SoftTopology):
        return Document(SOFT_TOPOLOGY, obj.context, obj.opens, meta)
    if isinstance(obj, CrispTopology):
        return Document(CRISP_TOPOLOGY, obj.context, obj.opens, meta)
    if isinstance(obj, CrispSystem):
        payload = {e: t.opens for e, t in obj.items()}
        return Document(CRISP_SYSTEM, obj.context, payload, meta)
    sets = tuple(obj)
    if context is None:
        if not sets:
            raise ValidationError("an empty soft-set list needs an explicit context")
        context = sets[0].context
    return Document(SOFT_SET_LIST, context, tuple(sorted(sets, key=lambda s: s.code)), meta)


# -- parsing ---------------------------------------------------------------


def parse(source) -> Document:
    """Parse a document from a path or an open text stream."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        text = source.read()
    else:
        raise TypeError(f"cannot parse from {type(source).__name__}")
    return parse_text(text)


def parse_text(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return _from_json(data)


def _expect(cond: bool, field: str, message: str) -> None:
    if not cond:
        raise SchemaError(f"{field}: {message}", field)


def _from_json(data) -> Document:
    _expect(isinstance(data, dict), "<root>", "expected a JSON object")
    unknown = sorted(set(data) - _TOP_FIELDS)
    _expect(not unknown, unknown[0] if unknown else "", "unknown field")

    version = data.get("schema_version", SCHEMA_VERSION)
    _expect(version == SCHEMA_VERSION, "schema_version", f"unsupported version {version!r}")

    _expect("context" in data, "context", "missing")
    ctx = _parse_context(data["context"])

    payload_fields = [f for f in ("opens", "topologies", "sets") if f in data]
    _expect(len(payload_fields) == 1, "<root>", "exactly one of opens, topologies, sets is required")
    field = payload_fields[0]
    raw = data[field]

    kind = data.get("kind")
    if kind is None:
        kind = _infer_kind(field, raw)
    _expect(kind in KINDS, "kind", f"unknown kind {kind!r}")
    _expect(_PAYLOAD_FIELD[kind] == field, field, f"not the payload field of kind {kind!r}")

    if kind == CRISP_SYSTEM:
        payload = _parse_system(ctx, raw)
    elif kind == CRISP_TOPOLOGY:
        _expect(isinstance(raw, list), field, "expected a list")
        payload = tuple(
            _parse_point_set(ctx, item, f"{field}[{i}]") for i, item in enumerate(raw)
        )
    else:
        _expect(isinstance(raw, list), field, "expected a list")
        payload = tuple(
            _parse_soft_set(ctx, item, f"{field}[{i}]") for i, item in enumerate(raw)
        )

    meta = data.get("meta")
    _expect(meta is None or isinstance(meta, dict), "meta", "expected an object")
    return Document(kind, ctx, payload, meta, version)


def _infer_kind(field: str, raw) -> str:
    if field == "topologies":
        return CRISP_SYSTEM
    if field == "sets":
        return SOFT_SET_LIST
    if isinstance(raw, list) and raw and all(isinstance(x, list) for x in raw):
        return CRISP_TOPOLOGY
    return SOFT_TOPOLOGY


def _parse_context(raw) -> Context:
    _expect(isinstance(raw, dict), "context", "expected an object")
    unknown = sorted(set(raw) - {"universe", "parameters"})
    _expect(not unknown, f"context.{unknown[0]}" if unknown else "", "unknown field")
    for key in ("universe", "parameters"):
        _expect(key in raw, f"context.{key}", "missing")
        value = raw[key]
        _expect(isinstance(value, list), f"context.{key}", "expected a list")
        _expect(len(value) > 0, f"context.{key}", "must be nonempty")
        _expect(all(isinstance(v, str) for v in value), f"context.{key}", "labels must be strings")
        _expect(len(set(value)) == len(value), f"context.{key}", "duplicate label")
    return Context(tuple(raw["universe"]), tuple(raw["parameters"]))


def _parse_point_set(ctx: Context, raw, field: str) -> PointSet:
    _expect(isinstance(raw, list), field, "expected a list of points")
    _expect(all(isinstance(x, str) for x in raw), field, "points must be strings")
    return PointSet(ctx, ctx.mask(raw))


def _parse_soft_set(ctx: Context, raw, field: str) -> SoftSet:
    _expect(isinstance(raw, dict), field, "expected an object mapping parameters to points")
    pairs = []
    for e, points in raw.items():
        _expect(isinstance(points, list), f"{field}.{e}", "expected a list of points")
        _expect(all(isinstance(x, str) for x in points), f"{field}.{e}", "points must be strings")
        pairs.append((e, points))
    return make_soft_set(ctx, pairs)


def _parse_system(ctx: Context, raw) -> dict:
    _expect(isinstance(raw, dict), "topologies", "expected an object")
    payload = {}
    for e in raw:
        ctx.parameter_index(e)
    for e in ctx.parameters:
        _expect(e in raw, f"topologies.{e}", "missing")
        family = raw[e]
        _expect(isinstance(family, list), f"topologies.{e}", "expected a list")
        payload[e] = tuple(
            _parse_point_set(ctx, item, f"topologies.{e}[{i}]")
            for i, item in enumerate(family)
        )
    return payload


# -- serialization ---------------------------------------------------------


def _dumps(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def _block(items: list[str], indent: str) -> str:
    if not items:
        return "[]"
    inner = (",\n" + indent + "  ").join(items)
    return "[\n" + indent + "  " + inner + "\n" + indent + "]"


def serialize(doc: Document) -> str:
    """Render a document as UTF-8 JSON text, one set per line."""
    ctx = doc.context
    lines = [
        f'  "schema_version": {_dumps(doc.schema_version)}',
        f'  "kind": {_dumps(doc.kind)}',
        '  "context": '
        + _dumps({"universe": list(ctx.universe), "parameters": list(ctx.parameters)}),
    ]
    field = _PAYLOAD_FIELD[doc.kind]
    if doc.kind == CRISP_SYSTEM:
        rows = [
            f"{_dumps(e)}: " + _dumps([list(s.labels) for s in doc.payload[e]])
            for e in ctx.parameters
        ]
        body = "{\n    " + ",\n    ".join(rows) + "\n  }"
    elif doc.kind == CRISP_TOPOLOGY:
        body = _block([_dumps(list(s.labels)) for s in doc.payload], "  ")
    else:
        body = _block([_dumps(s.as_dict()) for s in doc.payload], "  ")
    lines.append(f'  "{field}": {body}')
    if doc.meta is not None:
        meta = json.dumps(doc.meta, ensure_ascii=False, indent=2).replace("\n", "\n  ")
        lines.append(f'  "meta": {meta}')
    return "{\n" + ",\n".join(lines) + "\n}\n"
