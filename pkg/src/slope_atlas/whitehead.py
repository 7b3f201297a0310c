"""Classifier for Dehn surgeries on the Whitehead link.

A surgery multislope (p1/q1, p2/q2) is classified along four axes: rational
homology sphere or not, L-space or taut-foliation side, vanishing of the
Euler class of the foliation constructed on the taut side, and left
orderability of the fundamental group.  Everything is decided by exact
comparisons and congruences; each verdict field carries rule tags naming the
decision rules that produced it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lspace import two_component_region
from .monodromy import Monodromy, foliation_region
from .slopes import (
    INF,
    MINUS_ONE,
    ONE,
    ZERO,
    CircularArc,
    Region,
    region_union,
)

# Monodromy of the fibered complement: one positive twist along the closed
# curve, opposite twists along the two arc-parallel curves.
WL_MONODROMY = Monodromy(1, (1, -1))

# Pairing of the relative Euler class with either once-punctured-torus fiber
# half; fixed by the construction, independent of the filling.
FIBER_PAIRING = -1


class Ternary(enum.Enum):
    YES = "yes"
    NO = "no"
    NOT_APPLICABLE = "na"

    def __str__(self):
        return self.value


class Orderable(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "na"

    def __str__(self):
        return self.value


class InconsistentVerdictError(RuntimeError):
    """Two independent rules produced contradictory verdict fields."""


@dataclass(frozen=True)
class EulerBoundary:
    """Euler-class data at one filled boundary: the two pairing constants
    and the filling slope p/q with p > 0, q != 0."""

    a: int
    b: int
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if self.q == 0:
            raise ValueError("q must be nonzero")


def euler_criterion(boundaries, e_tf_zero):
    """Whether the Euler class of the filled foliation vanishes: the
    unfilled class must vanish and a*q = b mod p must hold at every
    boundary."""
    if not e_tf_zero:
        return False
    return all((bd.a * bd.q - bd.b) % bd.p == 0 for bd in boundaries)


def _pq(slope):
    """(p, q) with p > 0 from a finite slope with nonzero numerator."""
    if slope.is_infinite():
        raise ValueError("slope must be finite")
    if slope.num == 0:
        raise ValueError("slope must have a nonzero numerator")
    p, q = slope.num, slope.den
    if p < 0:
        p, q = -p, -q
    return p, q


def wl_euler_data(s1, s2):
    """Euler boundary data for a Whitehead-link filling: a = -1 at both
    boundaries and b = +1 when q < 0, -1 when q > 0."""
    out = []
    for s in (s1, s2):
        p, q = _pq(s)
        out.append(EulerBoundary(a=FIBER_PAIRING, b=1 if q < 0 else -1,
                                 p=p, q=q))
    return tuple(out)


def wl_euler_vanishes(s1, s2):
    """Vanishing of the Euler class for a Whitehead-link filling, reduced
    form: |q| = 1 mod p at both boundaries (with p normalized positive)."""
    for s in (s1, s2):
        p, q = _pq(s)
        if (abs(q) - 1) % p != 0:
            return False
    return True


_WL_EXTRA_BOXES = (
    (CircularArc(ZERO, INF), CircularArc(MINUS_ONE, ONE)),
    (CircularArc(MINUS_ONE, ONE), CircularArc(ZERO, INF)),
)


def wl_foliation_region():
    """Multislopes whose Whitehead-link filling carries a taut foliation:
    the fibration region of the monodromy plus the two mixed boxes.  On
    finite slopes this is exactly min(s1, s2) < 1."""
    return region_union(foliation_region(WL_MONODROMY),
                        Region(2, _WL_EXTRA_BOXES))


def wl_lspace_region():
    """The L-space multislopes of the Whitehead link (framing zero on both
    components)."""
    return two_component_region(0, 0)


@dataclass(frozen=True)
class SurgeryVerdict:
    slope: tuple
    is_qhs: bool
    homology: tuple
    lspace: Ternary
    taut_foliation: Ternary
    euler_vanishing: Ternary
    left_orderable: Orderable
    citations: tuple

    def to_json_dict(self):
        return {
            "slope": [str(s) for s in self.slope],
            "qhs": self.is_qhs,
            "homology": list(self.homology),
            "lspace": self.lspace.value,
            "foliation": self.taut_foliation.value,
            "euler_zero": self.euler_vanishing.value,
            "left_orderable": self.left_orderable.value,
            "citations": list(self.citations),
        }


def classify(s1, s2):
    """Full verdict for the surgery multislope (s1, s2)."""
    homology = (abs(s1.num), abs(s2.num))
    if s1.num == 0 or s2.num == 0:
        return SurgeryVerdict(
            slope=(s1, s2), is_qhs=False, homology=homology,
            lspace=Ternary.NOT_APPLICABLE,
            taut_foliation=Ternary.NOT_APPLICABLE,
            euler_vanishing=Ternary.NOT_APPLICABLE,
            left_orderable=Orderable.NOT_APPLICABLE,
            citations=("non-qhs-zero-numerator",))
    if s1.is_infinite() or s2.is_infinite():
        # Filling one component at infinity leaves an unknot exterior, so
        # the result is a lens space or the three-sphere.
        return SurgeryVerdict(
            slope=(s1, s2), is_qhs=True, homology=homology,
            lspace=Ternary.YES,
            taut_foliation=Ternary.NO,
            euler_vanishing=Ternary.NOT_APPLICABLE,
            left_orderable=Orderable.NO,
            citations=("lens-space-filling", "nonorderable-lens-or-s3"))
    one = ONE
    is_lspace = s1 >= one and s2 >= one
    citations = []
    if is_lspace:
        lspace, foliation = Ternary.YES, Ternary.NO
        citations.append("lspace-threshold")
    else:
        lspace, foliation = Ternary.NO, Ternary.YES
        citations.append("foliation-below-one")
    euler = Ternary.NOT_APPLICABLE
    if foliation is Ternary.YES:
        if wl_euler_vanishes(s1, s2):
            euler = Ternary.YES
        else:
            euler = Ternary.NO
        citations.append("euler-congruence")
    lo_yes = []
    lo_no = []
    if euler is Ternary.YES:
        lo_yes.append("orderable-from-euler-vanishing")
    if any(s.is_integer() and s.num <= -1 for s in (s1, s2)):
        lo_yes.append("orderable-negative-integer-fiber")
    if is_lspace and any(s.is_integer() for s in (s1, s2)):
        lo_no.append("nonorderable-positive-integer-lspace")
    if lo_yes and lo_no:
        raise InconsistentVerdictError(
            f"orderability rules disagree on {s1}, {s2}: "
            f"{lo_yes} versus {lo_no}")
    if lo_yes:
        orderable = Orderable.YES
        citations.extend(lo_yes)
    elif lo_no:
        orderable = Orderable.NO
        citations.extend(lo_no)
    else:
        orderable = Orderable.UNKNOWN
    return SurgeryVerdict(
        slope=(s1, s2), is_qhs=True, homology=homology,
        lspace=lspace, taut_foliation=foliation, euler_vanishing=euler,
        left_orderable=orderable, citations=tuple(citations))


def plot_class(verdict):
    """Coarse class used by the scatter output: lspace, foliation or
    non-qhs."""
    if not verdict.is_qhs:
        return "non-qhs"
    if verdict.lspace is Ternary.YES:
        return "lspace"
    return "foliation"
