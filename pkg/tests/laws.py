"""Exhaustive lattice-law checks shared by the unit and acceptance suites."""

import random

from softtopo import (
    Context,
    SoftSet,
    absolute_soft_set,
    generate_soft,
    is_soft_topology,
    null_soft_set,
    soft_complement,
    soft_intersection,
    soft_subset,
    soft_union,
)


def every_soft_set(ctx):
    return [SoftSet(ctx, code) for code in range(1 << ctx.bits)]


def pairwise_laws(n, m):
    """Unary and binary laws over every soft set and every ordered pair.

    Besides the textbook laws this checks that union, intersection and
    complement act on codes as OR, AND and NOT.  Returns the pair count.
    """
    ctx = Context.standard(n, m)
    bottom, top = null_soft_set(ctx), absolute_soft_set(ctx)
    everything = every_soft_set(ctx)
    for a in everything:
        assert soft_union(a, a) == a and soft_intersection(a, a) == a
        assert soft_union(a, bottom) == a and soft_intersection(a, top) == a
        assert soft_union(a, top) == top and soft_intersection(a, bottom) == bottom
        assert soft_subset(bottom, a) and soft_subset(a, top)
        assert soft_complement(soft_complement(a)) == a
        assert soft_complement(a).code == ctx.top & ~a.code
    for a in everything:
        ca = soft_complement(a)
        for b in everything:
            u, i = soft_union(a, b), soft_intersection(a, b)
            assert u.code == a.code | b.code and i.code == a.code & b.code
            assert u == soft_union(b, a) and i == soft_intersection(b, a)
            assert soft_union(a, i) == a and soft_intersection(a, u) == a
            cb = soft_complement(b)
            assert soft_complement(u) == soft_intersection(ca, cb)
            assert soft_complement(i) == soft_union(ca, cb)
            assert (soft_subset(a, b) and soft_subset(b, a)) == (a == b)
    return len(everything) ** 2


def operation_tables(ctx):
    """Union and intersection of every ordered pair, computed by the library."""
    everything = every_soft_set(ctx)
    union = [[soft_union(a, b).code for b in everything] for a in everything]
    meet = [[soft_intersection(a, b).code for b in everything] for a in everything]
    return union, meet


def triple_laws(n, m):
    """Associativity and both distributive laws over every ordered triple.

    The operations are tabulated once over all pairs through the public
    API; each law is then compared over all ``c`` at once for each
    ``(a, b)``, which keeps 2**27 triples tractable.  Returns the count.
    """
    ctx = Context.standard(n, m)
    union, meet = operation_tables(ctx)
    size = len(union)
    for a in range(size):
        ua, ma = union[a], meet[a]
        for b in range(size):
            ub, mb = union[b], meet[b]
            # (a u b) u c == a u (b u c)
            assert union[ua[b]] == list(map(ua.__getitem__, ub))
            # (a n b) n c == a n (b n c)
            assert meet[ma[b]] == list(map(ma.__getitem__, mb))
            # a n (b u c) == (a n b) u (a n c)
            assert list(map(ma.__getitem__, ub)) == list(map(union[ma[b]].__getitem__, ma))
            # a u (b n c) == (a u b) n (a u c)
            assert list(map(ua.__getitem__, mb)) == list(map(meet[ua[b]].__getitem__, ua))
    return size**3


def closure_properties(ctx, seed):
    """Extensive, idempotent and monotone on one seeded pair of subbases."""
    rng = random.Random(seed)
    small = [SoftSet(ctx, rng.getrandbits(ctx.bits)) for _ in range(rng.randint(0, 4))]
    large = small + [SoftSet(ctx, rng.getrandbits(ctx.bits)) for _ in range(rng.randint(0, 3))]
    t_small = generate_soft(ctx, small)
    t_large = generate_soft(ctx, large)
    assert is_soft_topology(ctx, t_small.opens)
    assert set(s.code for s in small) <= set(t_small.codes)
    assert generate_soft(ctx, t_small.opens) == t_small
    assert set(t_small.codes) <= set(t_large.codes)
