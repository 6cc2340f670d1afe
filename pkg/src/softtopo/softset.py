"""Soft sets over a finite universe and their algebra.

A soft set ``(F, E)`` assigns a subset ``F(e)`` of the universe ``X`` to
every parameter ``e``.  Everything here is encoded in plain integers:

* a point set is a bit mask with bit ``i`` standing for ``universe[i]``;
* a soft set is the concatenation of its components, component ``j``
  occupying bits ``j*n .. j*n + n - 1`` (``n = len(universe)``).

Bit ``j*n + i`` therefore stands for the pair ``(universe[i], parameters[j])``,
which is exactly the correspondence between soft sets and subsets of
``X x E`` used by the enumeration code.  Canonical order of soft sets is the
integer order of their codes.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ContextMismatch,
    DuplicateParameter,
    MissingParameter,
    UnknownParameter,
    UnknownPoint,
    ValidationError,
)

__all__ = [
    "Context",
    "PointSet",
    "SoftSet",
    "make_soft_set",
    "soft_union",
    "soft_intersection",
    "soft_complement",
    "soft_subset",
    "point_in",
    "soft_point",
    "null_soft_set",
    "absolute_soft_set",
    "upper_cylinder",
    "lower_cylinder",
    "to_product_subset",
    "from_product_subset",
]


def _check_labels(labels: Iterable[str], what: str) -> tuple[str, ...]:
    labels = tuple(labels)
    if not labels:
        raise ValidationError(f"{what} must be nonempty")
    seen = set()
    for label in labels:
        if not isinstance(label, str):
            raise ValidationError(f"{what} labels must be strings, got {label!r}")
        if label in seen:
            raise ValidationError(f"duplicate label {label!r} in {what}", label)
        seen.add(label)
    return labels


@dataclass(frozen=True)
class Context:
    """The universe ``X`` and the parameter set ``E``, both in fixed order."""

    universe: tuple[str, ...]
    parameters: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "universe", _check_labels(self.universe, "universe"))
        object.__setattr__(
            self, "parameters", _check_labels(self.parameters, "parameters")
        )

    @classmethod
    def standard(cls, n: int, m: int = 1) -> Context:
        """Context with points ``x1..xn`` and parameters ``e1..em``."""
        return cls(
            tuple(f"x{i}" for i in range(1, n + 1)),
            tuple(f"e{j}" for j in range(1, m + 1)),
        )

    @property
    def n(self) -> int:
        return len(self.universe)

    @property
    def m(self) -> int:
        return len(self.parameters)

    @property
    def bits(self) -> int:
        """Width of a soft-set code, ``n * m``."""
        return self.n * self.m

    @property
    def full(self) -> int:
        """Mask of the whole universe."""
        return (1 << self.n) - 1

    @property
    def top(self) -> int:
        """Code of the absolute soft set."""
        return (1 << self.bits) - 1

    @cached_property
    def _point_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.universe)}

    @cached_property
    def _parameter_index(self) -> dict[str, int]:
        return {e: j for j, e in enumerate(self.parameters)}

    def point_index(self, x: str) -> int:
        try:
            return self._point_index[x]
        except (KeyError, TypeError):
            raise UnknownPoint(f"unknown point {x!r}", x) from None

    def parameter_index(self, e: str) -> int:
        try:
            return self._parameter_index[e]
        except (KeyError, TypeError):
            raise UnknownParameter(f"unknown parameter {e!r}", e) from None

    # -- encoding helpers -------------------------------------------------

    def mask(self, points: Iterable[str]) -> int:
        if isinstance(points, str):
            raise ValidationError(
                f"expected a collection of points, got the string {points!r}"
            )
        result = 0
        for x in points:
            result |= 1 << self.point_index(x)
        return result

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.universe) if mask >> i & 1)

    def component(self, code: int, j: int) -> int:
        return (code >> (j * self.n)) & self.full

    def components(self, code: int) -> tuple[int, ...]:
        n, full = self.n, self.full
        return tuple((code >> (j * n)) & full for j in range(self.m))

    def assemble(self, masks: Iterable[int]) -> int:
        code = 0
        for j, mask in enumerate(masks):
            code |= mask << (j * self.n)
        return code

    def constant(self, mask: int) -> int:
        """Code of the soft set taking the value ``mask`` at every parameter."""
        return self.assemble([mask] * self.m)

    def point_set(self, points: Iterable[str] = ()) -> PointSet:
        return PointSet(self, self.mask(points))

    def soft_set(self, assignment: Mapping[str, Iterable[str]]) -> SoftSet:
        return make_soft_set(self, list(assignment.items()))


@dataclass(frozen=True)
class PointSet:
    """A subset of the universe of ``context``."""

    context: Context
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.context.full:
            raise ValidationError(f"mask {self.mask} out of range for the universe")

    def __iter__(self) -> Iterator[str]:
        return iter(self.context.labels(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: str) -> bool:
        return bool(self.mask >> self.context.point_index(x) & 1)

    def __or__(self, other: PointSet) -> PointSet:
        _same_universe(self, other)
        return PointSet(self.context, self.mask | other.mask)

    def __and__(self, other: PointSet) -> PointSet:
        _same_universe(self, other)
        return PointSet(self.context, self.mask & other.mask)

    def __sub__(self, other: PointSet) -> PointSet:
        _same_universe(self, other)
        return PointSet(self.context, self.mask & ~other.mask)

    def __le__(self, other: PointSet) -> bool:
        _same_universe(self, other)
        return self.mask & ~other.mask == 0

    def complement(self) -> PointSet:
        return PointSet(self.context, self.context.full & ~self.mask)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.context.labels(self.mask)

    def __repr__(self) -> str:
        return _show_mask(self.context, self.mask)


@dataclass(frozen=True)
class SoftSet:
    """A soft set ``(F, E)``; total over the parameters of ``context``."""

    context: Context
    code: int

    def __post_init__(self):
        if self.code < 0 or self.code > self.context.top:
            raise ValidationError(f"code {self.code} out of range for the context")

    def __getitem__(self, e: str) -> PointSet:
        j = self.context.parameter_index(e)
        return PointSet(self.context, self.context.component(self.code, j))

    def items(self) -> Iterator[tuple[str, PointSet]]:
        for e in self.context.parameters:
            yield e, self[e]

    def as_dict(self) -> dict[str, list[str]]:
        ctx = self.context
        return {
            e: list(ctx.labels(mask))
            for e, mask in zip(ctx.parameters, ctx.components(self.code))
        }

    def __or__(self, other: SoftSet) -> SoftSet:
        return soft_union(self, other)

    def __and__(self, other: SoftSet) -> SoftSet:
        return soft_intersection(self, other)

    def __invert__(self) -> SoftSet:
        return soft_complement(self)

    def __le__(self, other: SoftSet) -> bool:
        return soft_subset(self, other)

    def __repr__(self) -> str:
        ctx = self.context
        parts = (
            f"({e},{_show_mask(ctx, mask)})"
            for e, mask in zip(ctx.parameters, ctx.components(self.code))
        )
        return "{" + ", ".join(parts) + "}"


def _show_mask(ctx: Context, mask: int) -> str:
    if not mask:
        return "∅"
    if mask == ctx.full and ctx.n > 1:
        return "X"
    return "{" + ",".join(ctx.labels(mask)) + "}"


def _same_universe(a: PointSet, b: PointSet) -> None:
    if a.context is not b.context and a.context.universe != b.context.universe:
        raise ContextMismatch("point sets live in different universes")


def _same_context(a: SoftSet, b: SoftSet) -> Context:
    if a.context is not b.context and a.context != b.context:
        raise ContextMismatch("soft sets live in different contexts")
    return a.context


def _point_mask(ctx: Context, value) -> int:
    if isinstance(value, PointSet):
        if value.context.universe != ctx.universe:
            raise ContextMismatch("point set belongs to another universe")
        return value.mask
    return ctx.mask(value)


def make_soft_set(ctx: Context, pairs) -> SoftSet:
    """Build a soft set from ``(parameter, points)`` pairs.

    ``points`` may be a :class:`PointSet` or any iterable of point labels.
    Every parameter of ``ctx`` must occur exactly once.
    """
    if isinstance(pairs, Mapping):
        pairs = list(pairs.items())
    masks: dict[int, int] = {}
    for e, points in pairs:
        j = ctx.parameter_index(e)
        if j in masks:
            raise DuplicateParameter(f"parameter {e!r} assigned twice", e)
        masks[j] = _point_mask(ctx, points)
    for j, e in enumerate(ctx.parameters):
        if j not in masks:
            raise MissingParameter(f"no value given for parameter {e!r}", e)
    return SoftSet(ctx, ctx.assemble(masks[j] for j in range(ctx.m)))


def soft_union(a: SoftSet, b: SoftSet) -> SoftSet:
    return SoftSet(_same_context(a, b), a.code | b.code)


def soft_intersection(a: SoftSet, b: SoftSet) -> SoftSet:
    return SoftSet(_same_context(a, b), a.code & b.code)


def soft_complement(a: SoftSet) -> SoftSet:
    return SoftSet(a.context, a.context.top & ~a.code)


def soft_subset(a: SoftSet, b: SoftSet) -> bool:
    _same_context(a, b)
    return a.code & ~b.code == 0


def point_in(x: str, a: SoftSet) -> bool:
    """``x in (F, E)``: ``x`` belongs to ``F(e)`` for every parameter.

    The relation ``x not in (F, E)`` (``x`` misses ``F(e)`` for some ``e``)
    is exactly ``not point_in(x, a)``.
    """
    pt = a.context.constant(1 << a.context.point_index(x))
    return a.code & pt == pt


def soft_point(ctx: Context, x: str) -> SoftSet:
    """The soft point ``({x}, E)``."""
    return SoftSet(ctx, ctx.constant(1 << ctx.point_index(x)))


def null_soft_set(ctx: Context) -> SoftSet:
    return SoftSet(ctx, 0)


def absolute_soft_set(ctx: Context) -> SoftSet:
    return SoftSet(ctx, ctx.top)


def upper_cylinder(ctx: Context, points, e: str) -> SoftSet:
    """Soft set equal to ``points`` at ``e`` and to ``X`` elsewhere."""
    j = ctx.parameter_index(e)
    masks = [ctx.full] * ctx.m
    masks[j] = _point_mask(ctx, points)
    return SoftSet(ctx, ctx.assemble(masks))


def lower_cylinder(ctx: Context, points, e: str) -> SoftSet:
    """Soft set equal to ``points`` at ``e`` and empty elsewhere."""
    j = ctx.parameter_index(e)
    return SoftSet(ctx, _point_mask(ctx, points) << (j * ctx.n))


def to_product_subset(a: SoftSet) -> frozenset[tuple[str, str]]:
    """The subset ``{(x, e) : x in F(e)}`` of ``X x E``."""
    ctx = a.context
    return frozenset(
        (x, e)
        for j, e in enumerate(ctx.parameters)
        for i, x in enumerate(ctx.universe)
        if a.code >> (j * ctx.n + i) & 1
    )


def from_product_subset(ctx: Context, pairs: Iterable[tuple[str, str]]) -> SoftSet:
    code = 0
    for x, e in pairs:
        code |= 1 << (ctx.parameter_index(e) * ctx.n + ctx.point_index(x))
    return SoftSet(ctx, code)
