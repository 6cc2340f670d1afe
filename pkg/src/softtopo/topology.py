"""Crisp and soft topologies on a finite context.

Both kinds of topology are families of integer codes (see
:mod:`softtopo.softset`), so the validation and closure code below is
shared: a crisp topology is a family of ``n``-bit masks with top ``X``, a
soft topology a family of ``n*m``-bit codes with top ``X~``.  On a finite
set arbitrary unions reduce to pairwise ones, so every check and closure
works pairwise up to a fixed point.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import ContextMismatch, NotASubfamily, NotATopology, SizeGuardExceeded
from .softset import Context, PointSet, SoftSet, make_soft_set

__all__ = [
    "MAX_BITS",
    "DEFAULT_CAP",
    "Violation",
    "Verdict",
    "CrispTopology",
    "SoftTopology",
    "Comparison",
    "is_crisp_topology",
    "is_soft_topology",
    "generate_soft",
    "generate_crisp",
    "is_soft_base",
    "compare",
    "soft_closed_family",
    "is_soft_closed_in_single_set_topology",
    "minimal_base",
    "closure_codes",
    "hull",
]

MAX_BITS = 20
DEFAULT_CAP = 1 << 20


def check_size(bits: int, allow_large: bool = False) -> None:
    if bits > MAX_BITS and not allow_large:
        raise SizeGuardExceeded(
            f"{bits}-bit context exceeds the {MAX_BITS}-bit guard; pass allow_large"
        )


@dataclass(frozen=True)
class Violation:
    """Why a family fails to be a topology.

    ``kind`` is ``"missing-empty"``, ``"missing-whole"``, ``"union"`` or
    ``"intersection"``; for the last two ``members`` is the offending pair
    and ``missing`` the absent union or intersection.
    """

    kind: str
    members: tuple = ()
    missing: object = None

    def __str__(self) -> str:
        if self.kind in ("missing-empty", "missing-whole"):
            return f"{self.kind}: {self.missing!r} is not in the family"
        a, b = self.members
        op = "∪" if self.kind == "union" else "∩"
        return f"{self.kind}: {a!r} {op} {b!r} = {self.missing!r} is not in the family"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def _find_violation(codes: Iterable[int], top: int):
    """First closure failure in canonical order, as ``(kind, a, b, c)``."""
    family = set(codes)
    if 0 not in family:
        return "missing-empty", None, None, 0
    if top not in family:
        return "missing-whole", None, None, top
    ordered = sorted(family)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a | b not in family:
                return "union", a, b, a | b
            if a & b not in family:
                return "intersection", a, b, a & b
    return None


def closure_codes(
    codes: Iterable[int], top: int, cap: int = DEFAULT_CAP
) -> tuple[int, ...]:
    """Smallest family containing ``codes``, ``0`` and ``top`` that is closed
    under ``&`` and ``|``; returned sorted.

    Intersections are closed first.  The union closure of an
    intersection-closed family stays intersection-closed by distributivity,
    so one pass of each suffices.
    """
    family = {0, top}
    family.update(codes)
    for op in (int.__and__, int.__or__):
        items = sorted(family)
        i = 0
        while i < len(items):
            a = items[i]
            for b in items[:i]:
                c = op(a, b)
                if c not in family:
                    family.add(c)
                    items.append(c)
                    if len(family) > cap:
                        raise SizeGuardExceeded(
                            f"closure exceeded the cap of {cap} members"
                        )
            i += 1
    return tuple(sorted(family))


def hull(codes: Iterable[int], target: int, top: int) -> int:
    """Smallest member of an intersection-closed family containing ``target``."""
    result = top
    for c in codes:
        if target & ~c == 0:
            result &= c
    return result


def _trusted(cls, context: Context, codes: tuple[int, ...]):
    obj = object.__new__(cls)
    object.__setattr__(obj, "context", context)
    object.__setattr__(obj, cls._codes_field, codes)
    return obj


@dataclass(frozen=True)
class CrispTopology:
    """A topology on the universe of ``context``, stored as sorted masks.

    Only the universe of the context matters; the parameters ride along so
    that the topology can be fed straight into the soft constructions.
    """

    context: Context
    masks: tuple[int, ...]

    _codes_field = "masks"

    def __post_init__(self):
        masks = tuple(sorted(set(self.masks)))
        object.__setattr__(self, "masks", masks)
        found = _find_violation(masks, self.context.full)
        if found is not None:
            violation = _crisp_violation(self.context, found)
            raise NotATopology(f"not a crisp topology: {violation}", violation)

    @classmethod
    def from_sets(cls, ctx: Context, family: Iterable) -> CrispTopology:
        return cls(ctx, tuple(_crisp_masks(ctx, family)))

    @classmethod
    def discrete(cls, ctx: Context) -> CrispTopology:
        return _trusted(cls, ctx, tuple(range(ctx.full + 1)))

    @classmethod
    def indiscrete(cls, ctx: Context) -> CrispTopology:
        return _trusted(cls, ctx, (0, ctx.full))

    @property
    def opens(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.context, m) for m in self.masks)

    @property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.context.full
        return tuple(sorted(full & ~m for m in self.masks))

    @property
    def closed(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.context, m) for m in self.closed_masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.opens)

    def __contains__(self, item) -> bool:
        return _crisp_mask(self.context, item) in set(self.masks)

    def __repr__(self) -> str:
        return "CrispTopology[" + ", ".join(map(repr, self.opens)) + "]"


@dataclass(frozen=True)
class SoftTopology:
    """A soft topology on ``context``, stored as sorted soft-set codes."""

    context: Context
    codes: tuple[int, ...]

    _codes_field = "codes"

    def __post_init__(self):
        codes = tuple(sorted(set(self.codes)))
        object.__setattr__(self, "codes", codes)
        found = _find_violation(codes, self.context.top)
        if found is not None:
            violation = _soft_violation(self.context, found)
            raise NotATopology(f"not a soft topology: {violation}", violation)

    @classmethod
    def from_sets(cls, ctx: Context, family: Iterable) -> SoftTopology:
        return cls(ctx, tuple(_soft_codes(ctx, family)))

    @classmethod
    def indiscrete(cls, ctx: Context) -> SoftTopology:
        return _trusted(cls, ctx, (0, ctx.top))

    @property
    def opens(self) -> tuple[SoftSet, ...]:
        return tuple(SoftSet(self.context, c) for c in self.codes)

    @property
    def closed_codes(self) -> tuple[int, ...]:
        top = self.context.top
        return tuple(sorted(top & ~c for c in self.codes))

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[SoftSet]:
        return iter(self.opens)

    def __contains__(self, item) -> bool:
        if isinstance(item, SoftSet):
            if item.context != self.context:
                return False
            return item.code in set(self.codes)
        return make_soft_set(self.context, item).code in set(self.codes)

    def __repr__(self) -> str:
        return "SoftTopology[" + ", ".join(map(repr, self.opens)) + "]"


def _crisp_mask(ctx: Context, item) -> int:
    if isinstance(item, PointSet):
        if item.context.universe != ctx.universe:
            raise ContextMismatch("point set belongs to another universe")
        return item.mask
    return ctx.mask(item)


def _crisp_masks(ctx: Context, family: Iterable) -> list[int]:
    return [_crisp_mask(ctx, item) for item in family]


def _soft_codes(ctx: Context, family: Iterable) -> list[int]:
    codes = []
    for item in family:
        if isinstance(item, SoftSet):
            if item.context is not ctx and item.context != ctx:
                raise ContextMismatch("soft set belongs to another context")
            codes.append(item.code)
        else:
            codes.append(make_soft_set(ctx, item).code)
    return codes


def _crisp_violation(ctx: Context, found) -> Violation:
    kind, a, b, c = found
    members = () if a is None else (PointSet(ctx, a), PointSet(ctx, b))
    return Violation(kind, members, PointSet(ctx, c))


def _soft_violation(ctx: Context, found) -> Violation:
    kind, a, b, c = found
    members = () if a is None else (SoftSet(ctx, a), SoftSet(ctx, b))
    return Violation(kind, members, SoftSet(ctx, c))


def is_crisp_topology(ctx: Context, family: Iterable) -> Verdict:
    found = _find_violation(_crisp_masks(ctx, family), ctx.full)
    if found is None:
        return Verdict(True)
    return Verdict(False, _crisp_violation(ctx, found))


def is_soft_topology(ctx: Context, family: Iterable) -> Verdict:
    found = _find_violation(_soft_codes(ctx, family), ctx.top)
    if found is None:
        return Verdict(True)
    return Verdict(False, _soft_violation(ctx, found))


def generate_soft(
    ctx: Context,
    subbasis: Iterable = (),
    *,
    allow_large: bool = False,
    cap: int = DEFAULT_CAP,
) -> SoftTopology:
    """The soft topology generated by ``subbasis``: the smallest one containing it."""
    check_size(ctx.bits, allow_large)
    codes = closure_codes(_soft_codes(ctx, subbasis), ctx.top, cap)
    return _trusted(SoftTopology, ctx, codes)


def generate_crisp(
    ctx: Context,
    subbasis: Iterable = (),
    *,
    allow_large: bool = False,
    cap: int = DEFAULT_CAP,
) -> CrispTopology:
    check_size(ctx.n, allow_large)
    masks = closure_codes(_crisp_masks(ctx, subbasis), ctx.full, cap)
    return _trusted(CrispTopology, ctx, masks)


def is_soft_base(base: Iterable, topology: SoftTopology) -> bool:
    """True iff every open set of ``topology`` is a union of members of ``base``."""
    codes = set(_soft_codes(topology.context, base))
    opens = set(topology.codes)
    stray = codes - opens
    if stray:
        raise NotASubfamily(
            f"{SoftSet(topology.context, min(stray))!r} is not open in the topology"
        )
    for u in topology.codes:
        covered = 0
        for b in codes:
            if b & ~u == 0:
                covered |= b
        if covered != u:
            return False
    return True


class Comparison(enum.Enum):
    """How the first topology relates to the second under family inclusion."""

    EQUAL = "equal"
    FINER = "strictly-finer"
    COARSER = "strictly-coarser"
    INCOMPARABLE = "incomparable"

    def __str__(self) -> str:
        return self.value


def _family(t) -> frozenset[int]:
    return frozenset(t.codes if isinstance(t, SoftTopology) else t.masks)


def compare(first, second) -> Comparison:
    if type(first) is not type(second):
        raise ContextMismatch("cannot compare a crisp topology with a soft one")
    if isinstance(first, SoftTopology):
        same = first.context == second.context
    else:
        same = first.context.universe == second.context.universe
    if not same:
        raise ContextMismatch("topologies live in different contexts")
    a, b = _family(first), _family(second)
    if a == b:
        return Comparison.EQUAL
    if a <= b:
        return Comparison.COARSER
    if b <= a:
        return Comparison.FINER
    return Comparison.INCOMPARABLE


def soft_closed_family(topology: SoftTopology) -> tuple[SoftSet, ...]:
    ctx = topology.context
    return tuple(SoftSet(ctx, c) for c in topology.closed_codes)


def is_soft_closed_in_single_set_topology(
    soft: SoftSet, sigma: CrispTopology
) -> bool:
    """Is ``soft`` closed in the Formula-1 topology of the constant system ``sigma``?

    That is the case exactly when every component is closed in ``sigma``.
    """
    ctx = soft.context
    if ctx.universe != sigma.context.universe:
        raise ContextMismatch("soft set and topology live on different universes")
    opens = set(sigma.masks)
    return all(ctx.full & ~mask in opens for mask in ctx.components(soft.code))


def minimal_base(topology: CrispTopology) -> tuple[PointSet, ...]:
    """The smallest base: the minimal open neighbourhood of each point."""
    ctx = topology.context
    masks = {hull(topology.masks, 1 << i, ctx.full) for i in range(ctx.n)}
    return tuple(PointSet(ctx, m) for m in sorted(masks))
