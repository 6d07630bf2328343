"""The measure mu+ on (0,pi), interval measures, and power-weight classes.

The density of mu+ is sin(t/2)^(2a+1) cos(t/2)^(2b+1); under u = sin^2(t/2)
an interval measure becomes an incomplete Beta integral, which is the closed
form used by default. Membership tests for the Muckenhoupt-type class over
((0,pi), mu+) and for its psi-transferred counterpart over ((0,pi), dt) are
exact inequalities in (r, s, p), not numerical checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad as _adaptive_quad
from scipy.special import betainc, betaln

from .basis import JacobiParams


@dataclass(frozen=True)
class PowerWeight:
    """w(t) = |sin(t/2)|^r * cos(t/2)^s."""

    r: float
    s: float

    def __call__(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return (np.abs(np.sin(theta / 2.0)) ** self.r
                * np.cos(theta / 2.0) ** self.s)

    def shifted(self, dr: float, ds: float) -> "PowerWeight":
        return PowerWeight(self.r + dr, self.s + ds)


@dataclass(frozen=True)
class Ball:
    """Interval ball (center-radius, center+radius) clipped to (0,pi)."""

    center: float
    radius: float

    def __post_init__(self):
        if not (0.0 <= self.center <= math.pi):
            raise ValueError("center must lie in [0,pi]")
        if self.radius <= 0.0:
            raise ValueError("radius must be positive")

    @property
    def endpoints(self) -> tuple[float, float]:
        return (max(self.center - self.radius, 0.0),
                min(self.center + self.radius, math.pi))


def mu_density(params: JacobiParams, theta) -> np.ndarray:
    """Density of the symmetric measure at theta in (-pi,pi): psi(theta)^2."""
    theta = np.asarray(theta, dtype=float)
    s = np.abs(np.sin(theta / 2.0))
    c = np.cos(theta / 2.0)
    return s ** (2.0 * params.alpha + 1.0) * c ** (2.0 * params.beta + 1.0)


def interval_measure(params: JacobiParams, lo: float, hi: float,
                     method: str = "betainc") -> float:
    """mu+ of (lo, hi) within [0, pi]."""
    if not (0.0 <= lo <= hi <= math.pi + 1e-15):
        raise ValueError("interval must satisfy 0 <= lo <= hi <= pi")
    hi = min(hi, math.pi)
    if lo == hi:
        return 0.0
    a, b = params.alpha, params.beta
    if method == "betainc":
        # u = sin^2(t/2) turns the density into u^a (1-u)^b du; evaluate the
        # right half through the complementary v = cos^2(t/2) form so the
        # regularized-Beta difference never cancels near a full endpoint
        scale = math.exp(betaln(a + 1.0, b + 1.0))
        half = math.pi / 2.0
        total = 0.0
        if lo < half:
            t0, t1 = lo, min(hi, half)
            total += float(betainc(a + 1.0, b + 1.0, math.sin(t1 / 2.0) ** 2)
                           - betainc(a + 1.0, b + 1.0, math.sin(t0 / 2.0) ** 2))
        if hi > half:
            t0, t1 = max(lo, half), hi
            # cos(t/2) = sin((pi-t)/2), and the subtraction pi - t is exact
            # where it matters, so v vanishes exactly at t = pi
            v0 = math.sin((math.pi - t0) / 2.0) ** 2
            v1 = math.sin((math.pi - t1) / 2.0) ** 2
            total += float(betainc(b + 1.0, a + 1.0, v0)
                           - betainc(b + 1.0, a + 1.0, v1))
        return scale * total
    if method == "quad":
        val, _ = _adaptive_quad(lambda t: float(mu_density(params, t)), lo, hi,
                                limit=200)
        return val
    raise ValueError(f"unknown method {method!r}")


def ball_measure(params: JacobiParams, ball: Ball, method: str = "betainc") -> float:
    lo, hi = ball.endpoints
    return interval_measure(params, lo, hi, method=method)


def mu_total(params: JacobiParams) -> float:
    return interval_measure(params, 0.0, math.pi)


def _within(lower: float, value: float, upper: float, closed_upper: bool) -> bool:
    if not value > lower:
        return False
    return value <= upper if closed_upper else value < upper


def ap_membership(params: JacobiParams, weight: PowerWeight, p: float) -> bool:
    """Power-weight criterion for the Muckenhoupt-type class over ((0,pi), mu+).

    For 1 < p < infinity: -(2a+2) < r < (2a+2)(p-1) and the same in (b, s).
    At p = 1 the upper bounds close up (r <= 0, s <= 0).
    """
    if not (1.0 <= p < math.inf):
        raise ValueError("p must satisfy 1 <= p < infinity")
    a, b = params.alpha, params.beta
    closed = p == 1.0
    return (_within(-(2 * a + 2), weight.r, (2 * a + 2) * (p - 1), closed)
            and _within(-(2 * b + 2), weight.s, (2 * b + 2) * (p - 1), closed))


def bp_membership(params: JacobiParams, weight: PowerWeight, p: float) -> bool:
    """Criterion for the transferred class over ((0,pi), dt).

    For 1 < p < infinity: -1-(a+1/2)p < r < p-1+(a+1/2)p, same in (b, s);
    at p = 1 the upper bounds close up. Equivalent formulation:
    w_{r,s} belongs here iff w shifted by (a+1/2)(p-2), (b+1/2)(p-2) is in
    the mu+ class, which the tests exercise directly.
    """
    if not (1.0 <= p < math.inf):
        raise ValueError("p must satisfy 1 <= p < infinity")
    a, b = params.alpha, params.beta
    closed = p == 1.0
    return (_within(-1 - (a + 0.5) * p, weight.r, p - 1 + (a + 0.5) * p, closed)
            and _within(-1 - (b + 0.5) * p, weight.s, p - 1 + (b + 0.5) * p, closed))


def unweighted_bp_window(params: JacobiParams) -> tuple[float, float]:
    """Range of 1/p (as an interval) for which the constant weight passes
    the dt-class test, closed on the right exactly when p = 1 is admissible.

    For min(a,b) >= -1/2 this is all of (0, 1]; otherwise the window is
    -min(a,b)-1/2 < 1/p < min(a,b)+3/2.
    """
    m = min(params.alpha, params.beta)
    if m >= -0.5:
        return (0.0, 1.0)
    return (-m - 0.5, m + 1.5)


def unweighted_bp_admissible(params: JacobiParams, p: float) -> bool:
    """Analytic form of bp_membership for the constant weight.

    True for every p in [1, infinity) iff min(a,b) >= -1/2; otherwise exactly
    on the open window -min(a,b)-1/2 < 1/p < min(a,b)+3/2. Derived from the
    power-weight inequalities independently of bp_membership's code path, so
    the two can be compared.
    """
    if not (1.0 <= p < math.inf):
        raise ValueError("p must satisfy 1 <= p < infinity")
    m = min(params.alpha, params.beta)
    if m >= -0.5:
        return True
    return -m - 0.5 < 1.0 / p < m + 1.5
