"""Exact slopes on the circle of boundary slopes.

A slope is an element of Q union {inf}, written p/q with gcd(p, q) = 1 and
q >= 0; the infinity slope is 1/0 and the zero slope is 0/1.  Slopes live on
a circle, so "intervals" are cyclic arcs rather than order intervals, and a
region of multislopes is a finite union of arc products plus infinity lines.
All arithmetic is exact over Python integers; no floating point is used.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ExtRational:
    """A slope p/q in lowest terms with q >= 0, where 1/0 is infinity.

    The constructor normalizes, so equal slopes have identical field values
    and structural equality is slope equality.  0/0 is rejected.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, int) or not isinstance(den, int):
            raise ValueError("slope components must be integers, got "
                             f"({num!r}, {den!r})")
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a slope")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        else:
            g = math.gcd(abs(num), den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_infinite(self):
        return self.den == 0

    def is_finite(self):
        return self.den != 0

    def is_zero(self):
        return self.num == 0

    def is_integer(self):
        return self.den == 1

    def floor(self):
        """Integer floor; finite slopes only."""
        self._require_finite("floor")
        return self.num // self.den

    def as_fraction(self):
        from fractions import Fraction
        self._require_finite("as_fraction")
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, f):
        return cls(f.numerator, f.denominator)

    def _require_finite(self, what):
        if self.den == 0:
            raise ValueError(f"{what} is undefined for the infinity slope")

    def _cmp_key(self, other):
        if not isinstance(other, ExtRational):
            raise TypeError(f"cannot compare slope with {type(other).__name__}")
        self._require_finite("order comparison")
        other._require_finite("order comparison")
        # q > 0 on both sides, so cross multiplication preserves order.
        return self.num * other.den, other.num * self.den

    def __lt__(self, other):
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_key(other)
        return a >= b

    def __neg__(self):
        return ExtRational(-self.num, self.den)

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"ExtRational({self})"


INF = ExtRational(1, 0)
ZERO = ExtRational(0)
ONE = ExtRational(1)
MINUS_ONE = ExtRational(-1)


def normalize(num, den):
    """Canonical slope for an integer pair; rejects (0, 0)."""
    return ExtRational(num, den)


def parse_slope(text):
    """Parse 'p', 'p/q' or 'inf' into a slope.

    Raises ValueError naming the offending token on anything else.
    """
    tok = text.strip()
    if tok == "inf":
        return INF
    parts = tok.split("/")
    if len(parts) not in (1, 2) or not tok:
        raise ValueError(f"invalid slope token {text!r}")
    try:
        num = int(parts[0])
        den = int(parts[1]) if len(parts) == 2 else 1
    except (ValueError, TypeError):
        raise ValueError(f"invalid slope token {text!r}") from None
    if num == 0 and den == 0:
        raise ValueError(f"invalid slope token {text!r} (0/0 is not a slope)")
    return ExtRational(num, den)


def format_slope(x):
    return str(x)


def parse_multislope(text, dim=None):
    """Parse '(s1, s2, ...)' (parentheses optional) into a slope tuple."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    toks = [t for t in body.split(",")]
    if toks == [""]:
        raise ValueError(f"invalid multislope {text!r}")
    slopes = tuple(parse_slope(t) for t in toks)
    if dim is not None and len(slopes) != dim:
        raise ValueError(f"expected {dim} slopes, got {len(slopes)} in {text!r}")
    return slopes


def format_multislope(slopes):
    return "(" + ", ".join(str(s) for s in slopes) + ")"


@dataclass(frozen=True)
class CircularArc:
    """An arc of the slope circle, given by endpoints and closure flags.

    The interior is read in the cyclic order of the circle:

      * finite start < end: the slopes strictly between them;
      * finite start > end: wraps through infinity, i.e. everything above
        start, infinity itself, and everything below end;
      * start = inf: the slopes below end;
      * end = inf: the slopes above start.

    A closed flag adds the corresponding endpoint.  Degenerate arcs with
    start == end mean the empty set when both flags are open and the single
    endpoint when both are closed; mixed flags are rejected.
    """

    start: ExtRational
    end: ExtRational
    start_closed: bool = False
    end_closed: bool = False

    def __post_init__(self):
        if self.start == self.end and self.start_closed != self.end_closed:
            raise ValueError("degenerate arc must have both flags open (empty)"
                             " or both closed (single point)")

    def is_empty(self):
        return self.start == self.end and not self.start_closed

    def is_degenerate(self):
        return self.start == self.end

    def contains(self, x):
        if not isinstance(x, ExtRational):
            raise TypeError("arc membership needs a slope")
        s, e = self.start, self.end
        if s == e:
            return self.start_closed and x == s
        if x == s:
            return self.start_closed
        if x == e:
            return self.end_closed
        # x is now distinct from both endpoints; test the open interior.
        if s.is_infinite():
            return x.is_finite() and x < e
        if e.is_infinite():
            return x.is_finite() and x > s
        if s < e:
            return x.is_finite() and s < x < e
        return x.is_infinite() or x > s or x < e

    def complement(self):
        """The complementary arc, by endpoint and flag swap.

        Defined for non-degenerate arcs only: the complement of a point or of
        the empty set is not a single arc in this encoding.
        """
        if self.is_degenerate():
            raise ValueError("complement of a degenerate arc is not an arc")
        return CircularArc(self.end, self.start,
                           not self.end_closed, not self.start_closed)

    def __str__(self):
        lb = "[" if self.start_closed else "("
        rb = "]" if self.end_closed else ")"
        return f"{lb}{self.start},{self.end}{rb}"


def arc(start, end, start_closed=False, end_closed=False):
    return CircularArc(start, end, start_closed, end_closed)


def arc_contains(a, x):
    return a.contains(x)


POINT_INF = CircularArc(INF, INF, True, True)
POSITIVE_ARC = CircularArc(ZERO, INF)     # finite slopes > 0
NEGATIVE_ARC = CircularArc(INF, ZERO)     # finite slopes < 0


def _linear_parts(a):
    """Decompose an arc into order intervals over finite slopes plus an
    infinity flag.

    Returns (parts, inf_in) where each part is (lo, lo_closed, hi, hi_closed)
    with None standing for an absent (unbounded) end.
    """
    s, e, sc, ec = a.start, a.end, a.start_closed, a.end_closed
    if s == e:
        if not sc:
            return [], False
        if s.is_infinite():
            return [], True
        return [(s, True, s, True)], False
    if s.is_infinite():
        return [(None, False, e, ec)], sc
    if e.is_infinite():
        return [(s, sc, None, False)], ec
    if s < e:
        return [(s, sc, e, ec)], False
    return [(s, sc, None, False), (None, False, e, ec)], True


def _part_intersect(p, q):
    (alo, alc, ahi, ahc) = p
    (blo, blc, bhi, bhc) = q
    if alo is None:
        lo, lc = blo, blc
    elif blo is None:
        lo, lc = alo, alc
    elif alo > blo:
        lo, lc = alo, alc
    elif blo > alo:
        lo, lc = blo, blc
    else:
        lo, lc = alo, alc and blc
    if ahi is None:
        hi, hc = bhi, bhc
    elif bhi is None:
        hi, hc = ahi, ahc
    elif ahi < bhi:
        hi, hc = ahi, ahc
    elif bhi < ahi:
        hi, hc = bhi, bhc
    else:
        hi, hc = ahi, ahc and bhc
    if lo is not None and hi is not None:
        if lo > hi:
            return None
        if lo == hi:
            if lc and hc:
                return (lo, True, hi, True)
            return None
    return (lo, lc, hi, hc)


def _reassemble(parts, inf_in):
    up = down = None
    arcs = []
    for (lo, lc, hi, hc) in parts:
        if lo is None:
            down = (lo, lc, hi, hc)
        elif hi is None:
            up = (lo, lc, hi, hc)
        else:
            arcs.append(CircularArc(lo, hi, lc, hc))
    if inf_in:
        if up and down:
            (lo, lc, _, _) = up
            (_, _, hi, hc) = down
            if hi < lo:
                arcs.append(CircularArc(lo, hi, lc, hc))
            else:
                # The wrap endpoints coincide; split around infinity so each
                # piece stays a valid arc.
                arcs.append(CircularArc(lo, INF, lc, True))
                arcs.append(CircularArc(INF, hi, False, hc))
        elif up:
            arcs.append(CircularArc(up[0], INF, up[1], True))
        elif down:
            arcs.append(CircularArc(INF, down[2], True, down[3]))
        else:
            arcs.append(POINT_INF)
    else:
        if up:
            arcs.append(CircularArc(up[0], INF, up[1], False))
        if down:
            arcs.append(CircularArc(INF, down[2], False, down[3]))
    return arcs


def arc_intersect(a, b):
    """Intersection of two arcs as a list of pairwise disjoint arcs.

    Two wrap arcs can meet in two pieces, so the result is a list (possibly
    empty).  Membership is exact; the decomposition is not canonical.
    """
    parts_a, inf_a = _linear_parts(a)
    parts_b, inf_b = _linear_parts(b)
    parts = []
    for p in parts_a:
        for q in parts_b:
            r = _part_intersect(p, q)
            if r is not None:
                parts.append(r)
    return _reassemble(parts, inf_a and inf_b)


@dataclass(frozen=True)
class Region:
    """A finite union of arc-product boxes and infinity lines in (Q u inf)^k.

    A box is a k-tuple of arcs (membership componentwise).  A line is a
    coordinate index i and denotes the multislopes whose i-th coordinate is
    infinity and whose other coordinates are finite and nonzero.  The
    representation is not minimal; only the membership predicate matters.
    """

    dim: int
    boxes: tuple = ()
    lines: tuple = ()

    def __post_init__(self):
        for box in self.boxes:
            if len(box) != self.dim:
                raise ValueError(f"box of arity {len(box)} in a "
                                 f"{self.dim}-dimensional region")
        for i in self.lines:
            if not (0 <= i < self.dim):
                raise ValueError(f"line index {i} out of range")

    def is_empty_representation(self):
        return not self.boxes and not self.lines

    def contains(self, multislope):
        if len(multislope) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, "
                             f"got {len(multislope)}")
        for box in self.boxes:
            if all(a.contains(x) for a, x in zip(box, multislope)):
                return True
        for i in self.lines:
            if multislope[i].is_infinite() and all(
                    x.is_finite() and not x.is_zero()
                    for j, x in enumerate(multislope) if j != i):
                return True
        return False

    def __str__(self):
        pieces = []
        for box in self.boxes:
            pieces.append(" x ".join(str(a) for a in box))
        for i in self.lines:
            coords = ["Q*"] * self.dim
            coords[i] = "{inf}"
            pieces.append(" x ".join(coords))
        if not pieces:
            return "(empty)"
        return "  u  ".join(pieces)


def empty_region(dim):
    return Region(dim)


def region_contains(region, multislope):
    return region.contains(multislope)


def region_union(a, b):
    """Set union; concatenates and deduplicates the two representations."""
    if a.dim != b.dim:
        raise ValueError("union of regions of different dimension")
    boxes = list(a.boxes)
    for box in b.boxes:
        if box not in boxes:
            boxes.append(box)
    lines = list(a.lines)
    for i in b.lines:
        if i not in lines:
            lines.append(i)
    return Region(a.dim, tuple(boxes), tuple(lines))


def _nonzero_finite_pieces(a):
    """Arcs covering the finite nonzero part of an arc."""
    return arc_intersect(a, POSITIVE_ARC) + arc_intersect(a, NEGATIVE_ARC)


def _line_box_intersection(i, box, dim):
    if not box[i].contains(INF):
        return []
    per_coord = []
    for j in range(dim):
        if j == i:
            per_coord.append([POINT_INF])
        else:
            pieces = _nonzero_finite_pieces(box[j])
            if not pieces:
                return []
            per_coord.append(pieces)
    return [tuple(combo) for combo in itertools.product(*per_coord)]


def region_intersect(a, b):
    """Set intersection, distributed over boxes and lines."""
    if a.dim != b.dim:
        raise ValueError("intersection of regions of different dimension")
    dim = a.dim
    boxes = []
    for box_a in a.boxes:
        for box_b in b.boxes:
            per_coord = [arc_intersect(x, y) for x, y in zip(box_a, box_b)]
            if any(not pieces for pieces in per_coord):
                continue
            boxes.extend(tuple(c) for c in itertools.product(*per_coord))
    lines = tuple(sorted(set(a.lines) & set(b.lines)))
    for src_lines, src_boxes in ((a.lines, b.boxes), (b.lines, a.boxes)):
        for i in src_lines:
            for box in src_boxes:
                boxes.extend(_line_box_intersection(i, box, dim))
    seen = []
    for box in boxes:
        if box not in seen:
            seen.append(box)
    return Region(dim, tuple(seen), lines)
