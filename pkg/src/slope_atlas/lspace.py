"""L-space slope detection from torsion data.

For a knot exterior with H_1 = Z + Z_p the torsion support lives on classes
(n, t) with n the Z-grading and t mod p; above a threshold c every class is
in the support.  The positive difference set collects the gradings n > 0
realized as (outside support) - (inside support) along the Z x {0} line, and
its maximum drives the one-sided interval of L-space slopes.  For links with
two unknotted components and linking number zero the L-space region has a
closed-form box plus the two infinity lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .slopes import INF, CircularArc, ExtRational, Region


@dataclass(frozen=True)
class TorsionProfile:
    """Support table of a torsion series over Z + Z_p.

    ``support`` flags the classes (n, t) with 0 <= n <= threshold that lie in
    the support; every class with n > threshold is in the support, every
    class with n < 0 is not.  Some class with n = 0 must be flagged (the
    series is normalized with nonzero constant term).
    """

    torsion_order: int
    threshold: int
    support: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        p, c = self.torsion_order, self.threshold
        if p < 1:
            raise ValueError(f"torsion order must be >= 1, got {p}")
        if c < 0:
            raise ValueError(f"threshold must be >= 0, got {c}")
        object.__setattr__(self, "support", frozenset(self.support))
        for (n, t) in self.support:
            if not (0 <= n <= c and 0 <= t < p):
                raise ValueError(f"support class {(n, t)} outside the "
                                 f"table range (n in [0,{c}], t in [0,{p}))")
        if not any(n == 0 for (n, t) in self.support):
            raise ValueError("no class with n = 0 in the support")

    def in_support(self, n, t):
        if n < 0:
            return False
        if n > self.threshold:
            return True
        return (n, t % self.torsion_order) in self.support


def parse_profile(text):
    """Parse the torsion profile file format.

    First non-comment line is ``p c``; each following line is an in-support
    class ``n t`` with n <= c.  Lines starting with '#' are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"line {lineno}: expected two integers, "
                             f"got {raw!r}")
        try:
            rows.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, "
                             f"got {raw!r}") from None
    if not rows:
        raise ValueError("empty profile: missing 'p c' header line")
    (p, c), classes = rows[0], rows[1:]
    return TorsionProfile(p, c, frozenset(classes))


def format_profile(profile):
    lines = [f"{profile.torsion_order} {profile.threshold}"]
    for (n, t) in sorted(profile.support):
        lines.append(f"{n} {t}")
    return "\n".join(lines) + "\n"


def profile_from_alexander(coefficients):
    """Profile of Delta(t)/(1 - t) for a knot in a homology sphere (p = 1).

    ``coefficients`` lists Delta's coefficients from the constant term up.
    Requires the usual normalization: nonzero constant term and Delta(1) = 1
    (so the series coefficients become the constant 1 beyond deg Delta, which
    is taken as the threshold).
    """
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or coeffs[0] == 0:
        raise ValueError("polynomial must have a nonzero constant term")
    if sum(coeffs) != 1:
        raise ValueError("polynomial must evaluate to 1 at t = 1")
    c = len(coeffs) - 1
    support = set()
    partial = 0
    for n in range(c + 1):
        partial += coeffs[n]
        if partial != 0:
            support.add((n, 0))
    return TorsionProfile(1, c, frozenset(support))


def compute_d_positive(profile):
    """Positive Z-gradings of (non-support) - (support) differences.

    Returns the sorted tuple of n in (0, c] for which some class x outside
    the support and y inside it satisfy x - y = (n, 0) with the grading of x
    above the grading of y.  Outside-support classes have grading <= c, so
    the search is exhaustive over the table.
    """
    p, c = profile.torsion_order, profile.threshold
    out = set()
    for n in range(1, c + 1):
        found = False
        for nx in range(n, c + 1):
            for t in range(p):
                if not profile.in_support(nx, t) and \
                        profile.in_support(nx - n, t):
                    found = True
                    break
            if found:
                break
        if found:
            out.add(n)
    return tuple(sorted(out))


class AllButLongitude:
    """The slope set Q u {inf} minus the zero slope, as an interval form."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def contains(self, x):
        return not x.is_zero()

    def __repr__(self):
        return "AllButLongitude()"

    def __str__(self):
        return "all slopes except 0"


ALL_BUT_LONGITUDE = AllButLongitude()


@dataclass(frozen=True)
class IntervalCandidates:
    """The possible L-space interval forms for one boundary component.

    Either everything but the longitude (``n_h is None``), or the two
    one-sided closed intervals [n_h, inf] and [inf, -n_h]; which side is
    right requires one known L-space slope, see ``select_interval``.
    """

    n_h: int | None

    def __post_init__(self):
        if self.n_h is not None and self.n_h < 1:
            raise ValueError(f"interval bound must be >= 1, got {self.n_h}")

    def is_all_but_longitude(self):
        return self.n_h is None

    def right_arc(self):
        if self.n_h is None:
            raise ValueError("no one-sided candidates: form is all-but-longitude")
        return CircularArc(ExtRational(self.n_h), INF, True, True)

    def left_arc(self):
        if self.n_h is None:
            raise ValueError("no one-sided candidates: form is all-but-longitude")
        return CircularArc(INF, ExtRational(-self.n_h), True, True)


def interval_candidates(d_positive):
    """Interval forms from a positive difference set (sorted, in (0, c])."""
    d = tuple(d_positive)
    if not d:
        return IntervalCandidates(None)
    if any(n < 1 for n in d):
        raise ValueError(f"difference set must be positive, got {d}")
    return IntervalCandidates(max(d))


def select_interval(candidates, known):
    """Pick the unique candidate interval containing a known L-space slope.

    The infinity slope lies in both one-sided candidates (it is always an
    L-space slope), so it cannot discriminate; that and a slope in neither
    candidate raise ValueError.
    """
    if candidates.is_all_but_longitude():
        return ALL_BUT_LONGITUDE
    right, left = candidates.right_arc(), candidates.left_arc()
    in_right, in_left = right.contains(known), left.contains(known)
    if in_right and in_left:
        raise ValueError(f"known slope {known} lies in both candidate "
                         "intervals and cannot select a side")
    if in_right:
        return right
    if in_left:
        return left
    raise ValueError(f"known slope {known} lies in neither candidate "
                     "interval; inconsistent input data")


def propagate_region(components):
    """L-space box guaranteed by componentwise positive slopes.

    Each component slope r must be finite and positive; it contributes
    [floor(r), inf] when r >= 1 and (0, inf] when 0 < r < 1.
    """
    arcs = []
    one = ExtRational(1)
    zero = ExtRational(0)
    for r in components:
        if r.is_infinite() or not r > zero:
            raise ValueError(f"component slope must be finite and positive, "
                             f"got {r}")
        if r >= one:
            arcs.append(CircularArc(ExtRational(r.floor()), INF, True, True))
        else:
            arcs.append(CircularArc(zero, INF, False, True))
    return Region(len(arcs), (tuple(arcs),))


def two_component_region(b1, b2):
    """L-space region for a two-component link with unknotted components and
    linking number zero, from the two framing integers.

    The region is [2*b1+1, inf] x [2*b2+1, inf] together with both infinity
    lines; restricted to integer surgeries it is exactly d1 > 2*b1 and
    d2 > 2*b2.
    """
    box = (CircularArc(ExtRational(2 * b1 + 1), INF, True, True),
           CircularArc(ExtRational(2 * b2 + 1), INF, True, True))
    return Region(2, (box,), (0, 1))
