"""Separation axioms T0-T4, regularity and normality, crisp and soft.

Crisp and soft spaces are checked by the same code.  A point ``x`` is
represented by a code ``p(x)``: the bit of ``x`` for a crisp space, the soft
point ``({x}, E)`` for a soft space.  Then ``x in U`` is ``p(x) <= U`` in
both cases, which for soft sets is membership at every parameter, and
``x not in F`` is its negation (membership fails at some parameter).

Finite topologies are closed under all intersections, so every set ``S``
has a smallest open superset ``hull(S)``.  Two sets can be put inside
disjoint open sets iff their hulls are disjoint, and some open set
containing ``x`` misses ``y`` iff ``hull(p(x))`` misses ``y``.  All checks
below reduce to hull computations; :func:`replay` re-checks a witness by
scanning pairs of open sets directly.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass, field

from .softset import PointSet, SoftSet
from .topology import CrispTopology, SoftTopology

__all__ = [
    "Axiom",
    "Witness",
    "AxiomReport",
    "check",
    "check_crisp",
    "check_soft",
    "failures",
    "replay",
    "parse_axiom",
]


class Axiom(enum.Enum):
    T0 = "t0"
    T1 = "t1"
    T2 = "t2"
    REGULAR = "regular"
    NORMAL = "normal"
    T3 = "t3"
    T4 = "t4"

    def __str__(self) -> str:
        return self.value


CRISP = "crisp"
SOFT = "soft"


def parse_axiom(name: str) -> tuple[Axiom, str | None]:
    """Parse ``"t1"``, ``"soft-t1"`` or ``"crisp-normal"`` into ``(axiom, flavor)``."""
    name = name.strip().lower()
    flavor = None
    for prefix in (SOFT, CRISP):
        if name.startswith(prefix + "-"):
            flavor, name = prefix, name[len(prefix) + 1 :]
    return Axiom(name), flavor


@dataclass(frozen=True)
class Witness:
    """Evidence for one instance of an axiom.

    For a failure ``points`` and ``sets`` name what cannot be separated and
    ``opens`` is empty.  For a success ``opens`` holds the separating open
    sets.  Reading by axiom:

    * T0: success ``points=(a, b)``, ``opens=(U,)`` with ``a in U``, ``b not in U``;
      failure ``points=(x, y)``: no open set contains exactly one of them.
    * T1: success ``opens=(U, V)`` with ``x in U, y not in U`` and
      ``x not in V, y in V``; failure ``points=(a, b)``: every open set
      containing ``a`` contains ``b``.
    * T2: ``opens=(U, V)`` disjoint, ``x in U``, ``y in V``.
    * regular: ``points=(x,)``, ``sets=(F,)`` with ``F`` closed, ``x not in F``.
    * normal: ``sets=(F, D)`` disjoint closed sets.
    """

    points: tuple[str, ...] = ()
    sets: tuple = ()
    opens: tuple = ()

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "sets": [_set_json(s) for s in self.sets],
            "opens": [_set_json(s) for s in self.opens],
        }


def _set_json(s):
    if isinstance(s, SoftSet):
        return s.as_dict()
    return list(s.labels)


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    flavor: str
    verdict: bool
    witness: Witness | None = None
    failed: Axiom | None = None
    separations: tuple[Witness, ...] = field(default=(), repr=False)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom.value,
            "flavor": self.flavor,
            "verdict": self.verdict,
            "failed": self.failed.value if self.failed else None,
            "witness": self.witness.to_json() if self.witness else None,
            "separations": [w.to_json() for w in self.separations],
        }


class _Space:
    def __init__(self, topology):
        self.topology = topology
        ctx = topology.context
        if isinstance(topology, SoftTopology):
            self.flavor = SOFT
            self.opens = topology.codes
            self.top = ctx.top
            self.points = [ctx.constant(1 << i) for i in range(ctx.n)]
            self.wrap = lambda c: SoftSet(ctx, c)
        else:
            self.flavor = CRISP
            self.opens = topology.masks
            self.top = ctx.full
            self.points = [1 << i for i in range(ctx.n)]
            self.wrap = lambda c: PointSet(ctx, c)
        self.labels = ctx.universe
        self._hulls: dict[int, int] = {}

    @property
    def closed(self) -> list[int]:
        top = self.top
        return sorted(top & ~u for u in self.opens)

    def hull(self, target: int) -> int:
        h = self._hulls.get(target)
        if h is None:
            h = self.top
            for u in self.opens:
                if target & ~u == 0:
                    h &= u
            self._hulls[target] = h
        return h

    def pairs(self):
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j


# Each scanner yields ``(ok, witness)`` per instance, in canonical order.


def _scan_t0(s: _Space):
    for i, j in s.pairs():
        px, py = s.points[i], s.points[j]
        x, y = s.labels[i], s.labels[j]
        hx = s.hull(px)
        if py & ~hx:
            yield True, Witness((x, y), (), (s.wrap(hx),))
            continue
        hy = s.hull(py)
        if px & ~hy:
            yield True, Witness((y, x), (), (s.wrap(hy),))
        else:
            yield False, Witness((x, y))


def _scan_t1(s: _Space):
    for i, j in s.pairs():
        px, py = s.points[i], s.points[j]
        x, y = s.labels[i], s.labels[j]
        hx, hy = s.hull(px), s.hull(py)
        if py & ~hx == 0:
            yield False, Witness((x, y))
        elif px & ~hy == 0:
            yield False, Witness((y, x))
        else:
            yield True, Witness((x, y), (), (s.wrap(hx), s.wrap(hy)))


def _scan_t2(s: _Space):
    for i, j in s.pairs():
        hx, hy = s.hull(s.points[i]), s.hull(s.points[j])
        pts = (s.labels[i], s.labels[j])
        if hx & hy:
            yield False, Witness(pts)
        else:
            yield True, Witness(pts, (), (s.wrap(hx), s.wrap(hy)))


def _scan_regular(s: _Space):
    closed = s.closed
    for i, px in enumerate(s.points):
        hx = s.hull(px)
        for f in closed:
            if px & ~f == 0:
                continue
            hf = s.hull(f)
            w = ((s.labels[i],), (s.wrap(f),))
            if hx & hf:
                yield False, Witness(*w)
            else:
                yield True, Witness(*w, (s.wrap(hx), s.wrap(hf)))


def _scan_normal(s: _Space):
    closed = s.closed
    for a in range(len(closed)):
        f = closed[a]
        for b in range(a + 1, len(closed)):
            d = closed[b]
            if f & d:
                continue
            hf, hd = s.hull(f), s.hull(d)
            sets = (s.wrap(f), s.wrap(d))
            if hf & hd:
                yield False, Witness((), sets)
            else:
                yield True, Witness((), sets, (s.wrap(hf), s.wrap(hd)))


_SCANNERS = {
    Axiom.T0: _scan_t0,
    Axiom.T1: _scan_t1,
    Axiom.T2: _scan_t2,
    Axiom.REGULAR: _scan_regular,
    Axiom.NORMAL: _scan_normal,
}

_PARTS = {
    Axiom.T3: (Axiom.T1, Axiom.REGULAR),
    Axiom.T4: (Axiom.T1, Axiom.NORMAL),
}


def _coerce(axiom) -> Axiom:
    if isinstance(axiom, Axiom):
        return axiom
    return parse_axiom(axiom)[0]


def _run(topology, axiom, explain: bool) -> AxiomReport:
    axiom = _coerce(axiom)
    space = _Space(topology)
    separations = []
    for part in _PARTS.get(axiom, (axiom,)):
        for ok, witness in _SCANNERS[part](space):
            if not ok:
                return AxiomReport(
                    axiom, space.flavor, False, witness, part, tuple(separations)
                )
            if explain:
                separations.append(witness)
    first = separations[0] if separations else None
    return AxiomReport(axiom, space.flavor, True, first, None, tuple(separations))


def check_crisp(
    topology: CrispTopology, axiom, explain: bool = False
) -> AxiomReport:
    """Check a separation axiom on a crisp topology.

    With ``explain`` a successful report lists a separating witness for
    every instance in ``separations``.
    """
    if not isinstance(topology, CrispTopology):
        raise TypeError("check_crisp expects a CrispTopology")
    return _run(topology, axiom, explain)


def check_soft(topology: SoftTopology, axiom, explain: bool = False) -> AxiomReport:
    if not isinstance(topology, SoftTopology):
        raise TypeError("check_soft expects a SoftTopology")
    return _run(topology, axiom, explain)


def check(topology, axiom, explain: bool = False) -> AxiomReport:
    return _run(topology, axiom, explain)


def failures(topology, axiom) -> Iterator[tuple[Axiom, Witness]]:
    """Every failing instance in canonical order, tagged with the failing part."""
    axiom = _coerce(axiom)
    space = _Space(topology)
    for part in _PARTS.get(axiom, (axiom,)):
        for ok, witness in _SCANNERS[part](space):
            if not ok:
                yield part, witness


def replay(topology, axiom, witness: Witness) -> bool:
    """True iff ``witness`` really is a failure of ``axiom`` in ``topology``.

    The scan here runs over pairs of open sets straight from the definitions
    and does not use hulls.  For T3 and T4 the witness is accepted if it
    defeats either component.
    """
    axiom = _coerce(axiom)
    parts = _PARTS.get(axiom, (axiom,))
    return any(_replay_part(topology, part, witness) for part in parts)


def _replay_part(topology, axiom: Axiom, w: Witness) -> bool:
    space = _Space(topology)
    opens = space.opens
    index = {x: i for i, x in enumerate(space.labels)}

    def inside(a, b):
        return a & ~b == 0

    def code(s):
        return s.code if isinstance(s, SoftSet) else s.mask

    if axiom in (Axiom.T0, Axiom.T1, Axiom.T2):
        if len(w.points) != 2 or w.points[0] == w.points[1]:
            return False
        px, py = (space.points[index[p]] for p in w.points)
        if axiom is Axiom.T0:
            return not any(
                (inside(px, u) and not inside(py, u))
                or (inside(py, u) and not inside(px, u))
                for u in opens
            )
        if axiom is Axiom.T1:
            return not any(inside(px, u) and not inside(py, u) for u in opens)
        return not any(
            inside(px, u) and inside(py, v) and u & v == 0
            for u in opens
            for v in opens
        )
    closed = set(space.closed)
    if axiom is Axiom.REGULAR:
        if len(w.points) != 1 or len(w.sets) != 1:
            return False
        px = space.points[index[w.points[0]]]
        f = code(w.sets[0])
        if f not in closed or inside(px, f):
            return False
        return not any(
            inside(px, u) and inside(f, v) and u & v == 0
            for u in opens
            for v in opens
        )
    if len(w.sets) != 2:
        return False
    f, d = (code(s) for s in w.sets)
    if f not in closed or d not in closed or f & d:
        return False
    return not any(
        inside(f, u) and inside(d, v) and u & v == 0 for u in opens for v in opens
    )
