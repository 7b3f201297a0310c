"""Branched-surface skeletons for fibered fillings of torus-bundle pieces.

A branch complex records sectors and switch arcs only: each arc has a big
side (the side the cusp points into) and two small sides, with the switch
equation weight(big) = weight(a) + weight(b).  A sector adjacent to the arc
on both small sides appears twice; big may coincide with a small side when a
sector wraps onto itself.  Embedding data and triple points are not modeled;
the equation graph supports every computation performed here.

Two constructions are provided for a monodromy (a_0; a_1..a_k):

* the parallel-arc complex, defined for a_0 != 0: k vertical half-disc
  sectors D_i plus k|a_0| disc sectors per annulus, chained cyclically inside
  each annulus and once across each vertical arc;

* the coherent-arc complex, defined for either coherent orientation: the
  same k vertical sectors plus N = sum |a_i| sectors in the fiber, in a
  single cyclic chain ordered by the common cusp direction.

Both have no sink discs and carry exactly the fundamental-class ray.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .monodromy import coherent_orientations, is_coherent


class SectorKind(enum.Enum):
    DISC = "disc"
    HALF_DISC = "half_disc"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Sector:
    id: str
    kind: SectorKind
    meets_boundary: bool

    def __post_init__(self):
        if self.kind is SectorKind.HALF_DISC and not self.meets_boundary:
            raise ValueError(f"half-disc sector {self.id} must meet the "
                             "boundary")


@dataclass(frozen=True)
class BranchArc:
    """A switch arc: the cusp points into ``big``; the equation is
    weight(big) = weight(small_a) + weight(small_b)."""

    id: str
    big: str
    small_a: str
    small_b: str


@dataclass(frozen=True)
class BranchComplex:
    sectors: tuple
    arcs: tuple

    def __post_init__(self):
        ids = [s.id for s in self.sectors]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate sector ids")
        known = set(ids)
        arc_ids = set()
        for a in self.arcs:
            if a.id in arc_ids:
                raise ValueError(f"duplicate arc id {a.id}")
            arc_ids.add(a.id)
            for ref in (a.big, a.small_a, a.small_b):
                if ref not in known:
                    raise ValueError(f"arc {a.id} references unknown "
                                     f"sector {ref}")

    def sector_ids(self):
        return tuple(s.id for s in self.sectors)

    def sector(self, sector_id):
        for s in self.sectors:
            if s.id == sector_id:
                return s
        raise KeyError(sector_id)

    def to_json(self):
        doc = {
            "sectors": [
                {"id": s.id, "kind": s.kind.value,
                 "meets_boundary": s.meets_boundary}
                for s in self.sectors
            ],
            "arcs": [
                {"id": a.id, "big": a.big, "a": a.small_a, "b": a.small_b}
                for a in self.arcs
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        sectors = tuple(
            Sector(s["id"], SectorKind(s["kind"]), bool(s["meets_boundary"]))
            for s in doc["sectors"])
        arcs = tuple(
            BranchArc(a["id"], a["big"], a["a"], a["b"])
            for a in doc["arcs"])
        return cls(sectors, arcs)


def _vertical_sectors(k):
    return [Sector(f"D{i}", SectorKind.HALF_DISC, True)
            for i in range(1, k + 1)]


def build_parallel_arc_complex(m, d_sources=None):
    """Branch complex of the parallel-arc construction; needs a_0 != 0.

    Sector ids are D1..Dk for the vertical half discs and A{i}S{j} for the
    j-th disc of annulus i, j = 1..k|a_0|.  Inside annulus i the discs chain
    cyclically, the step from slot j to slot j+1 adding the weight of
    D_{l(j)} with l(j) = ((j-1) mod k) + 1 by default; ``d_sources`` may
    replace the per-annulus source lists with any assignment hitting every
    vertical sector.  One more arc per annulus crosses the vertical arc: its
    big side is the first disc of annulus i, its small sides the last disc
    of annulus i-1 (cyclically) and D_i.
    """
    if m.a0 == 0:
        raise ValueError("parallel-arc construction needs a nonzero a_0")
    k = m.k
    per = k * abs(m.a0)
    if d_sources is None:
        d_sources = [[((j - 1) % k) + 1 for j in range(1, per + 1)]
                     for _ in range(k)]
    else:
        d_sources = [list(src) for src in d_sources]
        if len(d_sources) != k:
            raise ValueError(f"need one source list per annulus ({k})")
        for src in d_sources:
            if len(src) != per:
                raise ValueError(f"each source list must have length {per}")
            if set(src) != set(range(1, k + 1)):
                raise ValueError("each annulus must use every vertical "
                                 "sector at least once")
    sectors = _vertical_sectors(k)
    for i in range(1, k + 1):
        for j in range(1, per + 1):
            sectors.append(Sector(f"A{i}S{j}", SectorKind.DISC, False))
    arcs = []
    for i in range(1, k + 1):
        for j in range(1, per + 1):
            nxt = (j % per) + 1
            arcs.append(BranchArc(f"A{i}E{j}",
                                  big=f"A{i}S{nxt}",
                                  small_a=f"A{i}S{j}",
                                  small_b=f"D{d_sources[i - 1][j - 1]}"))
    for i in range(1, k + 1):
        prev = ((i - 2) % k) + 1
        arcs.append(BranchArc(f"X{i}",
                              big=f"A{i}S1",
                              small_a=f"A{prev}S{per}",
                              small_b=f"D{i}"))
    return BranchComplex(tuple(sectors), tuple(arcs))


def build_coherent_arc_complex(m, o, sources=None):
    """Branch complex of the coherent-orientation construction.

    ``o`` must be one of the two coherent orientations of ``m``.  Sector ids
    are D1..Dk for the vertical half discs and S1..SN for the fiber sectors,
    N = sum |a_i|, chained in a single cycle along the common cusp direction.
    The default source order visits D_i in index blocks of length |a_i|;
    ``sources`` may replace it with any length-N order hitting every D_i.
    The second orientation reverses the chain.
    """
    if not is_coherent(m, o):
        raise ValueError("orientation is not a coherent orientation of the "
                         "given monodromy")
    k = m.k
    n = sum(abs(a) for a in m.twists)
    if sources is None:
        sources = []
        for i, a in enumerate(m.twists, start=1):
            sources.extend([i] * abs(a))
    else:
        sources = list(sources)
        if len(sources) != n:
            raise ValueError(f"source order must have length {n}")
        if set(sources) != set(range(1, k + 1)):
            raise ValueError("source order must use every vertical sector")
    sectors = _vertical_sectors(k)
    sectors.extend(Sector(f"S{l}", SectorKind.DISC, False)
                   for l in range(1, n + 1))
    forward = not o.directions[0]
    arcs = []
    for l in range(1, n + 1):
        nxt = (l % n) + 1
        if forward:
            big, small = f"S{nxt}", f"S{l}"
        else:
            big, small = f"S{l}", f"S{nxt}"
        arcs.append(BranchArc(f"C{l}", big=big, small_a=small,
                              small_b=f"D{sources[l - 1]}"))
    return BranchComplex(tuple(sectors), tuple(arcs))


def detect_sink_discs(c):
    """Ids of sink discs and half sink discs, in sector order.

    A sink disc is a disc sector away from the boundary that is never a
    small side of an incident arc (every cusp points into it); a half sink
    disc is a boundary sector with the same property.  Sectors with no
    incident arcs are not sinks; see ``isolated_sectors``.
    """
    small_side = set()
    incident = set()
    for a in c.arcs:
        small_side.add(a.small_a)
        small_side.add(a.small_b)
        incident.update((a.big, a.small_a, a.small_b))
    out = []
    for s in c.sectors:
        if s.id not in incident or s.id in small_side:
            continue
        if s.meets_boundary or s.kind is SectorKind.DISC:
            out.append(s.id)
    return tuple(out)


def isolated_sectors(c):
    """Ids of sectors with no incident arcs (degenerate, reported apart)."""
    incident = set()
    for a in c.arcs:
        incident.update((a.big, a.small_a, a.small_b))
    return tuple(s.id for s in c.sectors if s.id not in incident)


@dataclass(frozen=True)
class WeightSystem:
    """Nonnegative integer weights per sector id, satisfying the switches."""

    weights: tuple   # ((sector_id, weight), ...) in complex sector order

    def as_dict(self):
        return dict(self.weights)

    def __getitem__(self, sector_id):
        return self.as_dict()[sector_id]


def check_weights(c, weights):
    """Whether a sector-id -> weight mapping solves every switch equation
    with nonnegative values."""
    if set(weights) != set(c.sector_ids()):
        return False
    if any(w < 0 for w in weights.values()):
        return False
    return all(weights[a.big] == weights[a.small_a] + weights[a.small_b]
               for a in c.arcs)


def _propagate(c, values, bound):
    """Unit propagation over the switch equations.

    Returns False on contradiction.  ``values`` maps sector id to a weight
    or None.
    """
    changed = True
    while changed:
        changed = False
        for a in c.arcs:
            big, sa, sb = values[a.big], values[a.small_a], values[a.small_b]
            if a.small_a == a.small_b:
                # big = 2 * small
                if sa is not None:
                    want = 2 * sa
                    if big is None:
                        if want > bound:
                            return False
                        values[a.big] = want
                        changed = True
                    elif big != want:
                        return False
                elif big is not None:
                    if big % 2 != 0:
                        return False
                    values[a.small_a] = big // 2
                    changed = True
                continue
            known = (big is not None) + (sa is not None) + (sb is not None)
            if known < 2:
                continue
            if big is None:
                want = sa + sb
                if want > bound:
                    return False
                values[a.big] = want
                changed = True
            elif sa is None:
                want = big - sb
                if want < 0:
                    return False
                values[a.small_a] = want
                changed = True
            elif sb is None:
                want = big - sa
                if want < 0:
                    return False
                values[a.small_b] = want
                changed = True
            elif big != sa + sb:
                return False
    return True


def carried_weight_cone(c, bound):
    """All nonnegative integer weight systems with every weight <= bound.

    Backtracking search with unit propagation over the switch equations;
    results are sorted by their weight tuple in sector order.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    order = c.sector_ids()
    degree = {sid: 0 for sid in order}
    for a in c.arcs:
        for sid in (a.big, a.small_a, a.small_b):
            degree[sid] += 1
    solutions = []

    def search(values):
        state = dict(values)
        if not _propagate(c, state, bound):
            return
        unknown = [sid for sid in order if state[sid] is None]
        if not unknown:
            sol = {sid: state[sid] for sid in order}
            if check_weights(c, sol):
                solutions.append(tuple((sid, sol[sid]) for sid in order))
            return
        pivot = max(unknown, key=lambda sid: degree[sid])
        for value in range(bound + 1):
            state[pivot] = value
            search(state)
        state[pivot] = None

    search({sid: None for sid in order})
    unique = sorted(set(solutions), key=lambda ws: tuple(w for _, w in ws))
    return tuple(WeightSystem(ws) for ws in unique)


def fundamental_ray(c, bound):
    """The expected cone of the generated complexes: every fiber sector at
    weight t and every vertical sector at 0, for t = 0..bound."""
    out = []
    for t in range(bound + 1):
        ws = tuple((s.id, 0 if s.kind is SectorKind.HALF_DISC else t)
                   for s in c.sectors)
        out.append(WeightSystem(ws))
    return tuple(out)


def complexes_for(m, parallel_sources=None, coherent_sources=None):
    """Convenience: the parallel complex (when a_0 != 0) and both coherent
    complexes of a monodromy."""
    out = {}
    if m.a0 != 0:
        out["parallel"] = build_parallel_arc_complex(m, parallel_sources)
    o1, o2 = coherent_orientations(m)
    out["coherent"] = build_coherent_arc_complex(m, o1, coherent_sources)
    out["coherent_reversed"] = build_coherent_arc_complex(m, o2,
                                                          coherent_sources)
    return out
