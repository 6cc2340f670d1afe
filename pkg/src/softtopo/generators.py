"""Moving between soft topologies and systems of crisp topologies.

A system assigns one crisp topology to each parameter.  Formula 1 builds the
soft topology of all soft sets whose every slice is open in the matching
crisp topology; Formula 2 builds the single set soft topology of constant
soft sets over one crisp topology; extraction slices a soft topology back
into a system.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import ContextMismatch, MissingParameter, NotABase, SizeGuardExceeded
from .softset import Context, SoftSet
from .topology import (
    DEFAULT_CAP,
    CrispTopology,
    SoftTopology,
    _crisp_masks,
    _trusted,
    check_size,
    generate_soft,
)

__all__ = [
    "CrispSystem",
    "extract_crisp",
    "extract_system",
    "formula1",
    "formula2",
    "associated",
    "extended",
    "union_single_set",
    "product_base",
]


@dataclass(frozen=True)
class CrispSystem:
    """One crisp topology per parameter, in parameter order."""

    context: Context
    topologies: tuple[CrispTopology, ...]

    def __post_init__(self):
        topologies = tuple(self.topologies)
        object.__setattr__(self, "topologies", topologies)
        if len(topologies) != self.context.m:
            raise MissingParameter(
                f"expected {self.context.m} topologies, got {len(topologies)}"
            )
        for t in topologies:
            if t.context.universe != self.context.universe:
                raise ContextMismatch("system member lives on another universe")

    @classmethod
    def from_mapping(cls, ctx: Context, topologies: Mapping) -> CrispSystem:
        """Build from ``{parameter: topology or family of point sets}``."""
        for e in topologies:
            ctx.parameter_index(e)
        members = []
        for e in ctx.parameters:
            if e not in topologies:
                raise MissingParameter(f"no topology for parameter {e!r}", e)
            t = topologies[e]
            if not isinstance(t, CrispTopology):
                t = CrispTopology(ctx, tuple(_crisp_masks(ctx, t)))
            members.append(t)
        return cls(ctx, tuple(members))

    @classmethod
    def constant(cls, ctx: Context, sigma: CrispTopology) -> CrispSystem:
        return cls(ctx, (sigma,) * ctx.m)

    def __getitem__(self, e: str) -> CrispTopology:
        return self.topologies[self.context.parameter_index(e)]

    def __iter__(self) -> Iterator[CrispTopology]:
        return iter(self.topologies)

    def items(self) -> Iterator[tuple[str, CrispTopology]]:
        return zip(self.context.parameters, self.topologies)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical sort key."""
        return tuple(t.masks for t in self.topologies)


def extract_crisp(topology: SoftTopology, e: str) -> CrispTopology:
    """The crisp topology ``{F(e) : F open}`` of the slice at ``e``."""
    ctx = topology.context
    j = ctx.parameter_index(e)
    masks = sorted({ctx.component(c, j) for c in topology.codes})
    return _trusted(CrispTopology, ctx, tuple(masks))


def extract_system(topology: SoftTopology) -> CrispSystem:
    ctx = topology.context
    return CrispSystem(ctx, tuple(extract_crisp(topology, e) for e in ctx.parameters))


def formula1(system: CrispSystem, *, allow_large: bool = False) -> SoftTopology:
    """All soft sets whose slice at each ``e`` is open in the ``e``-th topology.

    The result has exactly ``prod(len(t) for t in system)`` members.
    """
    ctx = system.context
    check_size(ctx.bits, allow_large)
    n = ctx.n
    size = 1
    for t in system.topologies:
        size *= len(t)
    if size > DEFAULT_CAP and not allow_large:
        raise SizeGuardExceeded(f"Formula 1 would produce {size} soft sets")
    shifted = [[m << (j * n) for m in t.masks] for j, t in enumerate(system.topologies)]
    codes = sorted(sum(combo) for combo in itertools.product(*shifted))
    return _trusted(SoftTopology, ctx, tuple(codes))


def formula2(
    sigma: CrispTopology, parameters: Iterable[str] | None = None
) -> SoftTopology:
    """The single set soft topology: constant soft sets with value open in ``sigma``."""
    ctx = sigma.context
    if parameters is not None:
        ctx = Context(ctx.universe, tuple(parameters))
    codes = sorted(ctx.constant(m) for m in sigma.masks)
    return _trusted(SoftTopology, ctx, tuple(codes))


def associated(topology: SoftTopology, *, allow_large: bool = False) -> SoftTopology:
    """Formula 1 applied to the slices of ``topology``; always contains it."""
    return formula1(extract_system(topology), allow_large=allow_large)


extended = associated


def union_single_set(system: CrispSystem, *, allow_large: bool = False) -> SoftTopology:
    """Soft topology generated by the union of the single set topologies of ``system``."""
    ctx = system.context
    subbasis = {c for t in system.topologies for c in formula2(t, ctx.parameters).codes}
    return generate_soft(
        ctx, [SoftSet(ctx, c) for c in sorted(subbasis)], allow_large=allow_large
    )


def _check_base(ctx: Context, e: str, masks: list[int]) -> None:
    covered = 0
    for b in masks:
        covered |= b
    if covered != ctx.full:
        raise NotABase(f"base for {e!r} does not cover the universe", e)
    for a, b in itertools.combinations(masks, 2):
        meet = a & b
        inner = 0
        for c in masks:
            if c & ~meet == 0:
                inner |= c
        if inner != meet:
            raise NotABase(
                f"base for {e!r}: the intersection {ctx.labels(meet)} of two members "
                "is not a union of members",
                e,
            )


def product_base(ctx: Context, bases: Mapping) -> tuple[SoftSet, ...]:
    """Soft sets whose slice at each ``e`` is a member of ``bases[e]`` or empty.

    ``bases`` maps every parameter to a base of some crisp topology; the
    soft topology generated by the result is Formula 1 of the topologies
    those bases generate.
    """
    for e in bases:
        ctx.parameter_index(e)
    choices = []
    for j, e in enumerate(ctx.parameters):
        if e not in bases:
            raise MissingParameter(f"no base for parameter {e!r}", e)
        masks = sorted(set(_crisp_masks(ctx, bases[e])))
        _check_base(ctx, e, masks)
        choices.append(sorted({m << (j * ctx.n) for m in masks} | {0}))
    check_size(ctx.bits)
    codes = sorted(sum(combo) for combo in itertools.product(*choices))
    return tuple(SoftSet(ctx, c) for c in codes)

