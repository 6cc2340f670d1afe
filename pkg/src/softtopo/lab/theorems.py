"""Checkable claims about soft topologies and exhaustive sweeps over them.

Each claim is a predicate over one kind of instance:

* ``system``: a crisp system, one topology per parameter;
* ``census``: a soft topology;
* ``crisp``: a single crisp topology.

:func:`verify_theorem` sweeps a claim over every instance within the bounds
(or a seeded sample) and reports the first violation in canonical order.
:func:`search_converse_counterexample` runs the same machinery over the
``CONV-*`` claims, which are converses known to fail.
"""

from __future__ import annotations

import itertools
import json
import random
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache

from ..documents import parse_text, serialize, to_document
from ..errors import BoundExceeded, NotFound, UnknownTheorem
from ..generators import (
    CrispSystem,
    associated,
    extract_system,
    formula1,
    formula2,
    product_base,
    union_single_set,
)
from ..separation import Axiom, check_crisp, check_soft
from ..softset import Context
from ..topology import generate_crisp, generate_soft, is_soft_base, minimal_base
from .enumeration import (
    enumerate_crisp_topologies,
    enumerate_soft_topologies,
    random_crisp_topology,
    random_soft_topology,
)

__all__ = [
    "SweepBounds",
    "Theorem",
    "VerificationOutcome",
    "THEOREMS",
    "get_theorem",
    "verify_theorem",
    "search_converse_counterexample",
    "replay",
]

EXHAUSTIVE = "exhaustive"
RANDOM = "random"
PROVEN = "proven-at-scale"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class SweepBounds:
    """Instance bounds for a sweep.

    Universes range over ``min_points..max_points`` points (``min_points``
    defaults to ``max_points``); every instance uses ``max_parameters``
    parameters.  Random mode draws ``samples`` instances from ``seed``.
    """

    max_points: int = 3
    max_parameters: int = 2
    mode: str = EXHAUSTIVE
    seed: int = 0
    samples: int = 1000
    min_points: int | None = None

    def __post_init__(self):
        if self.min_points is None:
            object.__setattr__(self, "min_points", self.max_points)
        if self.mode not in (EXHAUSTIVE, RANDOM):
            raise BoundExceeded(f"unknown sweep mode {self.mode!r}")
        if self.max_points < 1 or self.max_parameters < 1:
            raise BoundExceeded("bounds must be positive")
        if not 1 <= self.min_points <= self.max_points:
            raise BoundExceeded("min_points must lie in 1..max_points")
        if self.mode == EXHAUSTIVE and (
            self.max_points > 4 or self.max_points * self.max_parameters > 20
        ):
            raise BoundExceeded(
                "exhaustive sweeps need max_points <= 4 and max_points*max_parameters <= 20"
            )

    def to_json(self) -> dict:
        return {
            "min_points": self.min_points,
            "max_points": self.max_points,
            "max_parameters": self.max_parameters,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
        }


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    domain: str
    holds: Callable[[object], bool] = field(repr=False)
    defaults: SweepBounds
    converse: bool = False


@dataclass(frozen=True)
class VerificationOutcome:
    theorem: str
    status: str
    cases_checked: int
    bounds: SweepBounds
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "cases_checked": self.cases_checked,
            "bounds": self.bounds.to_json(),
            "counterexample": self.counterexample,
        }


# -- predicates ------------------------------------------------------------


def _crisp_all(system: CrispSystem, axiom: Axiom) -> bool:
    return all(check_crisp(t, axiom).verdict for t in system)


def _crisp_any(system: CrispSystem, axiom: Axiom) -> bool:
    return any(check_crisp(t, axiom).verdict for t in system)


def _soft(system: CrispSystem, axiom: Axiom) -> bool:
    return check_soft(formula1(system), axiom).verdict


def _t0_transfer(system):
    return not _crisp_any(system, Axiom.T0) or _soft(system, Axiom.T0)


def _t1_transfer(system):
    return not _crisp_any(system, Axiom.T1) or _soft(system, Axiom.T1)


def _t2_iff(system):
    return _crisp_all(system, Axiom.T2) == _soft(system, Axiom.T2)


def _regular_extraction(system):
    return not _soft(system, Axiom.REGULAR) or _crisp_all(system, Axiom.REGULAR)


def _normal_iff(system):
    return _crisp_all(system, Axiom.NORMAL) == _soft(system, Axiom.NORMAL)


def _base_product(system):
    ctx = system.context
    target = formula1(system)
    for bases in (
        {e: minimal_base(t) for e, t in system.items()},
        {e: t.opens for e, t in system.items()},
    ):
        base = product_base(ctx, bases)
        if generate_soft(ctx, base) != target or not is_soft_base(base, target):
            return False
    return True


def _union_single_set(system):
    ctx = system.context
    union = [s for t in system for s in t.opens]
    return union_single_set(system) == formula2(generate_crisp(ctx, union))


def _contained_in_associated(topology):
    return set(topology.codes) <= set(associated(topology).codes)


def _extractions(topology):
    return extract_system(topology)


def _regular_equal_slices(topology):
    if not check_soft(topology, Axiom.REGULAR).verdict:
        return True
    return len(set(_extractions(topology).topologies)) == 1


def _soft_implies_slices(axiom: Axiom):
    def predicate(topology):
        if not check_soft(topology, axiom).verdict:
            return True
        return all(check_crisp(t, axiom).verdict for t in _extractions(topology))

    return predicate


_t2_slices = _soft_implies_slices(Axiom.T2)
_regular_slices = _soft_implies_slices(Axiom.REGULAR)
_t3_slices = _soft_implies_slices(Axiom.T3)


def _formula2_transfer(sigma):
    single = formula2(sigma)
    return all(
        check_crisp(sigma, a).verdict == check_soft(single, a).verdict for a in Axiom
    )


def _conv_t0(system):
    return not _soft(system, Axiom.T0) or _crisp_any(system, Axiom.T0)


def _conv_t1(system):
    return not _soft(system, Axiom.T1) or _crisp_any(system, Axiom.T1)


def _conv_regular(system):
    return not _crisp_all(system, Axiom.REGULAR) or _soft(system, Axiom.REGULAR)


_SYSTEMS = SweepBounds(3, 2)
_CENSUS = SweepBounds(2, 2)

THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("T5.1", "some slice T0 => Formula 1 soft T0", "system", _t0_transfer, _SYSTEMS),
        Theorem("T5.2", "some slice T1 => Formula 1 soft T1", "system", _t1_transfer, _SYSTEMS),
        Theorem("T5.3", "all slices T2 <=> Formula 1 soft T2", "system", _t2_iff, _SYSTEMS),
        Theorem(
            "T5.4",
            "Formula 1 soft regular => all slices regular",
            "system",
            _regular_extraction,
            _SYSTEMS,
        ),
        Theorem("T5.5", "all slices normal <=> Formula 1 soft normal", "system", _normal_iff, _SYSTEMS),
        Theorem(
            "L3.4",
            "product of slice bases is a soft base generating Formula 1",
            "system",
            _base_product,
            _SYSTEMS,
        ),
        Theorem(
            "L3.6",
            "union of single set topologies generates the single set topology of the union",
            "system",
            _union_single_set,
            _SYSTEMS,
        ),
        Theorem(
            "L3.3",
            "a soft topology is contained in its associated soft topology",
            "census",
            _contained_in_associated,
            _CENSUS,
        ),
        Theorem(
            "L2.7",
            "soft regular => all slices equal",
            "census",
            _regular_equal_slices,
            _CENSUS,
        ),
        Theorem("C5.1", "soft T2 => all slices T2", "census", _t2_slices, _CENSUS),
        Theorem("C5.2", "soft regular => all slices regular", "census", _regular_slices, _CENSUS),
        Theorem("R-T3", "soft T3 => all slices T3", "census", _t3_slices, _CENSUS),
        Theorem(
            "F2-TRANSFER",
            "a crisp topology and its single set soft topology satisfy the same axioms",
            "crisp",
            _formula2_transfer,
            SweepBounds(3, 2, min_points=1),
        ),
        Theorem(
            "CONV-T5.1",
            "Formula 1 soft T0 => some slice T0",
            "system",
            _conv_t0,
            SweepBounds(3, 2, min_points=1),
            converse=True,
        ),
        Theorem(
            "CONV-T5.2",
            "Formula 1 soft T1 => some slice T1",
            "system",
            _conv_t1,
            SweepBounds(2, 2, min_points=1),
            converse=True,
        ),
        Theorem(
            "CONV-T5.4",
            "all slices regular => Formula 1 soft regular",
            "system",
            _conv_regular,
            SweepBounds(1, 2, min_points=1),
            converse=True,
        ),
    ]
}


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id.upper()]
    except KeyError:
        known = ", ".join(THEOREMS)
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}; known: {known}") from None


# -- instances -------------------------------------------------------------


def _random_size(rng: random.Random, bits: int) -> int:
    return rng.randint(0, bits + 1)


def _instances(domain: str, bounds: SweepBounds) -> Iterator:
    m = bounds.max_parameters
    if bounds.mode == RANDOM:
        rng = random.Random(bounds.seed)
        for _ in range(bounds.samples):
            n = rng.randint(bounds.min_points, bounds.max_points)
            ctx = Context.standard(n, m)
            if domain == "census":
                yield random_soft_topology(
                    ctx, rng.getrandbits(32), _random_size(rng, ctx.bits)
                )
            elif domain == "system":
                yield CrispSystem(
                    ctx,
                    tuple(
                        random_crisp_topology(ctx, rng.getrandbits(32), _random_size(rng, n))
                        for _ in range(m)
                    ),
                )
            else:
                yield random_crisp_topology(ctx, rng.getrandbits(32), _random_size(rng, n))
        return
    for n in range(bounds.min_points, bounds.max_points + 1):
        ctx = Context.standard(n, m)
        if domain == "census":
            yield from enumerate_soft_topologies(n, m, ctx)
        elif domain == "system":
            members = list(enumerate_crisp_topologies(n, ctx))
            for combo in itertools.product(members, repeat=m):
                yield CrispSystem(ctx, combo)
        else:
            yield from enumerate_crisp_topologies(n, ctx)


@lru_cache(maxsize=8)
def _instance_list(domain: str, bounds: SweepBounds) -> tuple:
    return tuple(_instances(domain, bounds))


def _scan(theorem_id: str, bounds: SweepBounds, start: int, stop: int) -> int | None:
    """Index of the first failing instance in ``[start, stop)``, if any."""
    theorem = THEOREMS[theorem_id]
    instances = _instance_list(theorem.domain, bounds)
    for i in range(start, min(stop, len(instances))):
        if not theorem.holds(instances[i]):
            return i
    return None


def _first_failure(theorem: Theorem, bounds: SweepBounds, workers: int) -> tuple[int, int | None]:
    instances = _instance_list(theorem.domain, bounds)
    total = len(instances)
    if workers <= 1 or total < 2 * workers:
        return total, _scan(theorem.id, bounds, 0, total)
    step = -(-total // workers)
    chunks = [(i, min(i + step, total)) for i in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        found = pool.map(
            _scan,
            [theorem.id] * len(chunks),
            [bounds] * len(chunks),
            [a for a, _ in chunks],
            [b for _, b in chunks],
        )
        hits = [i for i in found if i is not None]
    return total, (min(hits) if hits else None)


def _outcome(theorem: Theorem, bounds: SweepBounds, workers: int) -> VerificationOutcome | None:
    total, failure = _first_failure(theorem, bounds, workers)
    if failure is None:
        return VerificationOutcome(theorem.id, PROVEN, total, bounds)
    instance = _instance_list(theorem.domain, bounds)[failure]
    doc = to_document(instance, meta={"theorem": theorem.id})
    return VerificationOutcome(
        theorem.id, COUNTEREXAMPLE, failure + 1, bounds, _json_of(doc)
    )


def _json_of(doc) -> dict:
    return json.loads(serialize(doc))


def verify_theorem(
    theorem_id: str, bounds: SweepBounds | None = None, *, workers: int = 1
) -> VerificationOutcome:
    """Sweep a claim over every instance within ``bounds``.

    The status is ``proven-at-scale`` when no instance violates the claim;
    otherwise the first violation in canonical order is returned as a
    serialized counterexample and ``cases_checked`` counts up to it.
    """
    theorem = get_theorem(theorem_id)
    return _outcome(theorem, bounds or theorem.defaults, workers)


def search_converse_counterexample(
    theorem_id: str, bounds: SweepBounds | None = None, *, workers: int = 1
) -> VerificationOutcome:
    """First counterexample to a ``CONV-*`` claim; raises :class:`NotFound` if none."""
    theorem = get_theorem(theorem_id)
    if not theorem.converse:
        raise UnknownTheorem(f"{theorem.id} is not a converse claim; use verify_theorem")
    bounds = bounds or theorem.defaults
    outcome = _outcome(theorem, bounds, workers)
    if outcome.status != COUNTEREXAMPLE:
        raise NotFound(
            f"no counterexample to {theorem.id} among {outcome.cases_checked} instances"
        )
    return outcome


def replay(outcome: VerificationOutcome) -> bool:
    """Re-evaluate a reported counterexample; True iff it still violates the claim."""
    if outcome.counterexample is None:
        return False
    theorem = get_theorem(outcome.theorem)
    instance = parse_text(json.dumps(outcome.counterexample)).to_object()
    return not theorem.holds(instance)


def with_bounds(theorem_id: str, **changes) -> SweepBounds:
    """The default bounds of a theorem with some fields replaced."""
    defaults = get_theorem(theorem_id).defaults
    changes = {k: v for k, v in changes.items() if v is not None}
    if "max_points" in changes and "min_points" not in changes:
        if defaults.min_points == defaults.max_points:
            changes["min_points"] = None
        else:
            changes["min_points"] = min(defaults.min_points, changes["max_points"])
    return replace(defaults, **changes)
