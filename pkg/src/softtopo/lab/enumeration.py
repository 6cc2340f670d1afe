"""Exhaustive enumeration of small topologies and seeded random ones."""

from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache

from ..errors import BoundExceeded
from ..softset import Context, SoftSet
from ..topology import (
    DEFAULT_CAP,
    CrispTopology,
    SoftTopology,
    _trusted,
    closure_codes,
    generate_crisp,
    generate_soft,
)

__all__ = [
    "MAX_ENUMERATION_POINTS",
    "topology_families",
    "enumerate_crisp_topologies",
    "enumerate_soft_topologies",
    "random_soft_topology",
    "random_crisp_topology",
]

MAX_ENUMERATION_POINTS = 4


@lru_cache(maxsize=None)
def topology_families(k: int) -> tuple[tuple[int, ...], ...]:
    """Every topology on ``k`` points as a sorted tuple of masks, sorted.

    Breadth-first search from the indiscrete topology: each step adjoins
    one more subset and closes.  Any finite topology is reached by
    adjoining its open sets one at a time, so the search is complete, and
    the ``seen`` set deduplicates.
    """
    if not 1 <= k <= MAX_ENUMERATION_POINTS:
        raise BoundExceeded(
            f"exhaustive enumeration needs 1 <= points <= {MAX_ENUMERATION_POINTS}, got {k}"
        )
    full = (1 << k) - 1
    start = (0, full)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for family in frontier:
            present = set(family)
            for s in range(1, full):
                if s in present:
                    continue
                t = closure_codes(family + (s,), full)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return tuple(sorted(seen))


def enumerate_crisp_topologies(n: int, context: Context | None = None) -> Iterator[CrispTopology]:
    """All topologies on an ``n``-point universe, each once, in canonical order."""
    families = topology_families(n)
    ctx = context or Context.standard(n, 1)
    if ctx.n != n:
        raise BoundExceeded(f"context has {ctx.n} points, asked for {n}")
    for masks in families:
        yield _trusted(CrispTopology, ctx, masks)


def enumerate_soft_topologies(n: int, m: int, context: Context | None = None) -> Iterator[SoftTopology]:
    """All soft topologies on ``n`` points and ``m`` parameters.

    Soft sets correspond to subsets of ``X x E`` (bit ``j*n + i`` in both
    encodings), so these are exactly the topologies on ``n*m`` points read
    back as soft sets.
    """
    if n < 1 or m < 1 or n * m > MAX_ENUMERATION_POINTS:
        raise BoundExceeded(
            f"exhaustive soft enumeration needs n*m <= {MAX_ENUMERATION_POINTS}, got {n}*{m}"
        )
    ctx = context or Context.standard(n, m)
    if (ctx.n, ctx.m) != (n, m):
        raise BoundExceeded(f"context is {ctx.n}x{ctx.m}, asked for {n}x{m}")
    for codes in topology_families(n * m):
        yield _trusted(SoftTopology, ctx, codes)


def random_soft_topology(
    ctx: Context,
    seed: int,
    subbasis_size: int,
    *,
    allow_large: bool = False,
    cap: int = DEFAULT_CAP,
) -> SoftTopology:
    """Soft topology generated by ``subbasis_size`` soft sets drawn from ``seed``."""
    rng = random.Random(seed)
    subbasis = [SoftSet(ctx, rng.getrandbits(ctx.bits)) for _ in range(subbasis_size)]
    return generate_soft(ctx, subbasis, allow_large=allow_large, cap=cap)


def random_crisp_topology(ctx: Context, seed: int, subbasis_size: int) -> CrispTopology:
    rng = random.Random(seed)
    subbasis = [rng.getrandbits(ctx.n) for _ in range(subbasis_size)]
    return generate_crisp(ctx, [ctx.labels(m) for m in subbasis])
