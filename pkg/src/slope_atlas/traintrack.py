"""Boundary train tracks and the slope intervals they realize.

Each template names the track induced on one boundary torus by a branched
surface; a measured lamination carried by the track realizes a boundary
slope, and the realizable slopes form an open arc.  For the two annulus
templates the text fixes a two-weight parametrization (x, y) with slope
x - y, so witnesses are exact weight pairs; the other templates are sourced
from pictures only and their witnesses are membership certificates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .slopes import INF, MINUS_ONE, ONE, ZERO, CircularArc, ExtRational


class TrackTemplate(enum.Enum):
    A0_POSITIVE = "a0_positive"
    A0_NEGATIVE = "a0_negative"
    PPLUS = "pplus"
    PMINUS = "pminus"
    N_OUT = "n_out"
    N_IN = "n_in"
    WL_SPECIAL_FIRST = "wl_special_first"
    WL_SPECIAL_SECOND = "wl_special_second"

    def __str__(self):
        return self.value


_REALIZED = {
    TrackTemplate.A0_POSITIVE: CircularArc(INF, ONE),
    TrackTemplate.PPLUS: CircularArc(INF, ONE),
    TrackTemplate.A0_NEGATIVE: CircularArc(MINUS_ONE, INF),
    TrackTemplate.PMINUS: CircularArc(MINUS_ONE, INF),
    TrackTemplate.N_OUT: CircularArc(ZERO, INF),
    TrackTemplate.N_IN: CircularArc(INF, ZERO),
    TrackTemplate.WL_SPECIAL_FIRST: CircularArc(ZERO, INF),
    TrackTemplate.WL_SPECIAL_SECOND: CircularArc(MINUS_ONE, ONE),
}

_PARAMETRIC = (TrackTemplate.A0_POSITIVE, TrackTemplate.A0_NEGATIVE)


def realized_interval(template):
    """The open arc of slopes realized by the template."""
    return _REALIZED[template]


@dataclass(frozen=True)
class Witness:
    """Evidence that a slope is realized by a track template.

    Parametric witnesses carry the weight pair (x, y) with x - y equal to
    the slope; certificate witnesses carry only the slope and the realized
    arc it was checked against.
    """

    template: TrackTemplate
    slope: ExtRational
    parametric: bool
    x: ExtRational | None = None
    y: ExtRational | None = None

    @property
    def arc(self):
        return realized_interval(self.template)


def witness(template, slope):
    """A witness that the slope lies in the template's realized interval.

    Raises ValueError when the slope is not realized.  For the two annulus
    templates the weights are x = (max(0, s) + 1)/2 and y = x - s (or the
    mirror assignment), which meet the positivity constraints exactly when
    the slope is realized.
    """
    arc = realized_interval(template)
    if not arc.contains(slope):
        raise ValueError(f"slope {slope} is not realized by {template}: "
                         f"the realized interval is {arc}")
    if template not in _PARAMETRIC:
        return Witness(template, slope, parametric=False)
    s = slope.as_fraction()
    if template is TrackTemplate.A0_POSITIVE:
        x = (max(Fraction(0), s) + 1) / 2
        y = x - s
    else:
        y = (max(Fraction(0), -s) + 1) / 2
        x = s + y
    return Witness(template, slope, parametric=True,
                   x=ExtRational.from_fraction(x),
                   y=ExtRational.from_fraction(y))
