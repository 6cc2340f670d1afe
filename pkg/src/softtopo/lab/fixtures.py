"""The worked examples, transcribed literally as data.

Every listing below is copied set-for-set rather than computed, so tests
can compare what the library produces against the values as listed.  Each
fixture names one ``primary`` item (the object the example is about) and
records its expected properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..generators import CrispSystem
from ..softset import Context, SoftSet, make_soft_set
from ..topology import SoftTopology

__all__ = ["Fixture", "fixtures", "fixture"]

X3 = ("x1", "x2", "x3")
E2 = ("e1", "e2")


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    context: Context
    primary: str
    items: dict = field(repr=False)
    expected: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()


def _soft(ctx: Context, first, second) -> SoftSet:
    """Two-parameter soft set; ``"X"`` stands for the whole universe."""

    def points(v):
        return ctx.universe if v == "X" else v

    return make_soft_set(ctx, [("e1", points(first)), ("e2", points(second))])


def _family(ctx: Context, rows) -> tuple[SoftSet, ...]:
    null = SoftSet(ctx, 0)
    absolute = SoftSet(ctx, ctx.top)
    return (null, *(_soft(ctx, a, b) for a, b in rows), absolute)


def _topology(ctx: Context, rows) -> SoftTopology:
    return SoftTopology.from_sets(ctx, _family(ctx, rows))


def _system(ctx: Context, first, second) -> CrispSystem:
    return CrispSystem.from_mapping(ctx, {"e1": first, "e2": second})


def _example_3_1() -> Fixture:
    ctx = Context(X3, E2)
    sigma_rows = [
        (["x1"], []),  # F1
        (["x1", "x2"], "X"),  # F2
        ([], ["x3"]),  # F3
        (["x1"], ["x3"]),  # F4
    ]
    h_rows = [
        ([], "X"),
        ([], ["x3"]),
        ("X", []),
        ("X", ["x3"]),
        (["x1"], []),
        (["x1"], "X"),
        (["x1"], ["x3"]),
        (["x1", "x2"], []),
        (["x1", "x2"], "X"),
        (["x1", "x2"], ["x3"]),
    ]
    g_rows = [
        (["x1"], ["x1"]),
        (["x3"], ["x3"]),
        (["x1", "x2"], ["x1", "x2"]),
        (["x1", "x3"], ["x1", "x3"]),
    ]
    sigma_e1 = [[], ["x1"], ["x1", "x2"], X3]
    sigma_e2 = [[], ["x3"], X3]
    items = {
        "sigma": _topology(ctx, sigma_rows),
        "system": _system(ctx, sigma_e1, sigma_e2),
        "single-e1": _topology(ctx, [(["x1"], ["x1"]), (["x1", "x2"], ["x1", "x2"])]),
        "single-e2": _topology(ctx, [(["x3"], ["x3"])]),
        "union": _topology(ctx, g_rows),
        "formula1": _topology(ctx, h_rows),
    }
    return Fixture(
        "example-3.1",
        "Formulas 1 and 2 applied to the slices of a six-member soft topology",
        ctx,
        "sigma",
        items,
        {
            "is_soft_topology": True,
            "formula1_size": 12,
            "single_sizes": {"e1": 4, "e2": 3},
            "union_size": 6,
            "compare": {
                "sigma/formula1": "strictly-coarser",
                "sigma/union": "incomparable",
                "union/formula1": "incomparable",
            },
            "minimal_bases": {"e1": [["x1"], ["x1", "x2"], list(X3)], "e2": [["x3"], list(X3)]},
        },
    )


def _example_4_1() -> Fixture:
    base = _example_3_1()
    ctx = base.context
    r_rows = [
        (["x1"], []),
        (["x1", "x2"], "X"),
        ("X", ["x3"]),
        (["x1", "x2"], ["x3"]),
    ]
    sigma = base.items["sigma"]
    sigma_prime = _topology(ctx, r_rows)
    hat = SoftTopology(ctx, tuple(set(sigma.codes) | set(sigma_prime.codes)))
    return Fixture(
        "example-4.1",
        "Two incomparable soft topologies with one associated soft topology",
        ctx,
        "sigma-hat",
        {
            "sigma": sigma,
            "sigma-prime": sigma_prime,
            "sigma-hat": hat,
            "system": base.items["system"],
            "formula1": base.items["formula1"],
        },
        {
            "is_soft_topology": {"sigma": True, "sigma-prime": True, "sigma-hat": True},
            "compare": {
                "sigma/sigma-prime": "incomparable",
                "sigma-hat/sigma": "strictly-finer",
                "sigma-hat/sigma-prime": "strictly-finer",
            },
            "same_system": True,
            "same_associated": True,
        },
        ("sigma-hat is the literal union of the two families; it is itself closed",),
    )


def _example_5_1() -> Fixture:
    ctx = Context(X3, E2)
    listing_rows = [
        ("X", []),
        (["x1"], []),
        (["x2", "x3"], []),
        ([], "X"),
        (["x1"], "X"),
        (["x2", "x3"], "X"),
        ([], ["x1", "x2"]),
        ("X", ["x1", "x2"]),
        (["x1"], ["x1", "x2"]),
        (["x1"], ["x2"]),  # H10: {x2} is not open at e2
        (["x2", "x3"], ["x1", "x2"]),
        ([], ["x3"]),
        ("X", ["x3"]),
        (["x1"], ["x3"]),
        (["x2", "x3"], ["x3"]),
    ]
    impossible = _soft(ctx, ["x1"], ["x2"])
    listing = _family(ctx, listing_rows)
    corrected = SoftTopology.from_sets(ctx, [s for s in listing if s != impossible])
    return Fixture(
        "example-5.1-corrected",
        "Formula 1 topology that is soft T0 although neither slice is T0",
        ctx,
        "formula1",
        {
            "system": _system(
                ctx,
                [[], ["x1"], ["x2", "x3"], X3],
                [[], ["x3"], ["x1", "x2"], X3],
            ),
            "original-listing": listing,
            "formula1": corrected,
            "impossible": (impossible,),
        },
        {
            "formula1_size": 16,
            "original_listing_size": 17,
            "soft_t0": True,
            "crisp_t0": {"e1": False, "e2": False},
        },
        (
            "the original listing has 17 members, but Formula 1 over two 4-member "
            "topologies has exactly 16",
            "the listed member {(e1,{x1}), (e2,{x2})} cannot belong: {x2} is not open "
            "in the e2 topology; it is dropped here as a typographical slip",
            "the conclusions (soft T0, neither slice T0) hold for the corrected topology",
        ),
    )


def _example_5_2() -> Fixture:
    ctx = Context(("x1", "x2"), E2)
    h_rows = [
        ([], "X"),  # H1
        ("X", []),  # H2
        ([], ["x2"]),  # H3
        ("X", ["x2"]),  # H4
        (["x1"], []),  # H5
        (["x1"], "X"),  # H6
        (["x1"], ["x2"]),  # H7
    ]
    return Fixture(
        "example-5.2",
        "Formula 1 topology that is soft T1 although neither slice is T1",
        ctx,
        "formula1",
        {
            "system": _system(ctx, [[], ["x1"], ["x1", "x2"]], [[], ["x2"], ["x1", "x2"]]),
            "formula1": _topology(ctx, h_rows),
            "t1-witness": (_soft(ctx, "X", ["x2"]), _soft(ctx, ["x1"], "X")),
        },
        {
            "formula1_size": 9,
            "soft_t1": True,
            "crisp_t1": {"e1": False, "e2": False},
        },
        ("t1-witness lists H4 and H6: x1 in H6, x2 not in H6, x2 in H4, x1 not in H4",),
    )


def _example_5_5() -> Fixture:
    ctx = Context(X3, E2)
    h_rows = [
        ([], ["x3"]),
        (["x3"], []),
        (["x2", "x3"], []),
        ("X", []),
        (["x1", "x3"], []),
        (["x3"], ["x3"]),
        (["x2", "x3"], ["x3"]),
        ("X", ["x3"]),
        (["x1", "x3"], ["x3"]),
    ]
    return Fixture(
        "example-5.5",
        "Soft normal topology whose e1 slice is not normal",
        ctx,
        "sigma",
        {"sigma": _topology(ctx, h_rows)},
        {
            "size": 11,
            "is_soft_topology": True,
            "soft_normal": True,
            "crisp_normal": {"e1": False},
        },
    )


def _example_5_6() -> Fixture:
    ctx = Context(("x",), E2)
    return Fixture(
        "example-5.6",
        "Regular slices whose Formula 1 topology is not soft regular",
        ctx,
        "formula1",
        {
            "system": _system(ctx, [[], ["x"]], [[], ["x"]]),
            "formula1": _topology(ctx, [([], "X"), ("X", [])]),
        },
        {
            "formula1_size": 4,
            "soft_regular": False,
            "crisp_regular": {"e1": True, "e2": True},
        },
    )


def _example_5_7() -> Fixture:
    ctx = Context(X3, E2)
    f_rows = [
        ([], ["x1"]),
        ([], ["x1", "x2"]),
        ([], ["x1", "x3"]),
        ([], "X"),
        ("X", []),
        ("X", ["x1"]),
        ("X", ["x1", "x2"]),
        ("X", ["x1", "x3"]),
    ]
    return Fixture(
        "example-5.7",
        "One non-normal slice makes the Formula 1 topology not soft normal",
        ctx,
        "formula1",
        {
            "system": _system(
                ctx, [[], X3], [[], ["x1"], ["x1", "x2"], ["x1", "x3"], X3]
            ),
            "formula1": _topology(ctx, f_rows),
            "normal-witness": (_soft(ctx, [], ["x3"]), _soft(ctx, "X", ["x2"])),
        },
        {
            "formula1_size": 10,
            "soft_normal": False,
            "crisp_normal": {"e1": True, "e2": False},
            "crisp_normal_witness": {"e2": [["x2"], ["x3"]]},
        },
    )


_BUILDERS = (
    _example_3_1,
    _example_4_1,
    _example_5_1,
    _example_5_2,
    _example_5_5,
    _example_5_6,
    _example_5_7,
)


def fixtures() -> dict[str, Fixture]:
    """Every worked example, keyed by name."""
    built = (build() for build in _BUILDERS)
    return {f.name: f for f in built}


def fixture(name: str) -> Fixture:
    found = fixtures()
    if name not in found:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(found)}")
    return found[name]
