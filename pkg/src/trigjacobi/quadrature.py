"""Quadrature grids in theta and in the semigroup time variable.

Theta grids are Gauss rules under x = cos(theta): exact for products of
basis elements whose combined x-degree (counting each sin(theta) factor as
one) stays below 2*order. The weighted variants divide out psi^2 so the same
nodes integrate against plain dtheta whenever the integrand carries a psi^2
factor, which every function-setting inner product does.

Time grids are log-uniform with trapezoid weights in log t; each constructed
grid is checked against a closed-form incomplete-Gamma integral and rejected
if the quadrature cannot reproduce it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammainc, gammaln, roots_jacobi

from .basis import JacobiParams
from .measure import mu_density

TAGS = ("mu_plus", "mu_full", "theta_plus", "theta_full")


@dataclass(frozen=True)
class ThetaGrid:
    params: JacobiParams
    order: int
    tag: str
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "order": self.order,
            "tag": self.tag,
            "nodes": self.nodes.tolist(),
            "weights": self.weights.tolist(),
        }

    @staticmethod
    def from_dict(d: dict) -> "ThetaGrid":
        return ThetaGrid(
            params=JacobiParams(d["alpha"], d["beta"]),
            order=int(d["order"]),
            tag=d["tag"],
            nodes=np.asarray(d["nodes"], dtype=float),
            weights=np.asarray(d["weights"], dtype=float),
        )


def gauss_jacobi_grid(params: JacobiParams, order: int, tag: str = "mu_plus") -> ThetaGrid:
    """Gauss rule with `order` nodes on (0,pi), optionally symmetrized or
    reweighted for plain-dtheta integration."""
    if tag not in TAGS:
        raise ValueError(f"tag must be one of {TAGS}")
    if order < 1:
        raise ValueError("order must be positive")
    x, w = roots_jacobi(order, params.alpha, params.beta)
    # dmu+ = 2^{-a-b-1} (1-x)^a (1+x)^b dx under x = cos(theta)
    w = w * 2.0 ** (-params.alpha - params.beta - 1.0)
    theta = np.arccos(x)[::-1]
    w = w[::-1]
    if tag in ("theta_plus", "theta_full"):
        w = w / mu_density(params, theta)
    if tag in ("mu_full", "theta_full"):
        theta = np.concatenate([-theta[::-1], theta])
        w = np.concatenate([w[::-1], w])
    return ThetaGrid(params=params, order=order, tag=tag,
                     nodes=theta, weights=w)


def _values_on(grid: ThetaGrid, f) -> np.ndarray:
    vals = f(grid.nodes) if callable(f) else np.asarray(f)
    if vals.shape[-1] != grid.nodes.shape[0]:
        raise ValueError("sample array does not match the grid")
    return vals


def integrate_theta(grid: ThetaGrid, f) -> float | np.ndarray:
    vals = _values_on(grid, f)
    return vals @ grid.weights


def inner_product(grid: ThetaGrid, f, g) -> float | complex | np.ndarray:
    """<f, g> against the grid's underlying measure; conjugates g."""
    fv = _values_on(grid, f)
    gv = _values_on(grid, g)
    return (fv * np.conj(gv)) @ grid.weights


@dataclass(frozen=True)
class TGrid:
    """Log-uniform time grid on [t_min, t_max]."""

    t_min: float = 1e-4
    t_max: float = 40.0
    points_per_decade: int = 32
    nodes: np.ndarray = field(init=False, repr=False)
    log_weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if not (0.0 < self.t_min < self.t_max):
            raise ValueError("need 0 < t_min < t_max")
        if self.points_per_decade < 4:
            raise ValueError("points_per_decade must be at least 4")
        decades = math.log10(self.t_max / self.t_min)
        npts = max(int(round(decades * self.points_per_decade)) + 1, 9)
        u = np.linspace(math.log(self.t_min), math.log(self.t_max), npts)
        h = u[1] - u[0]
        w = np.full(npts, h)
        w[0] = w[-1] = h / 2.0
        # Gregory end correction: adds h^2/12 (g'(a) - g'(b)) with one-sided
        # three-point derivative stencils, lifting the trapezoid rule to
        # fourth order so short grids still pass the validation below
        w[[0, 1, 2]] += np.array([-3.0, 4.0, -1.0]) * h / 24.0
        w[[-1, -2, -3]] += np.array([-3.0, 4.0, -1.0]) * h / 24.0
        object.__setattr__(self, "nodes", np.exp(u))
        object.__setattr__(self, "log_weights", w)
        self._validate()

    def _validate(self):
        # int t^{W-1} e^{-2t} dt over [t_min, t_max], closed form via the
        # regularized lower incomplete Gamma
        for W in (1.0, 2.0):
            got = self.integrate(np.exp(-2.0 * self.nodes), W)
            want = math.exp(gammaln(W) - W * math.log(2.0)) * (
                gammainc(W, 2.0 * self.t_max) - gammainc(W, 2.0 * self.t_min))
            if abs(got - want) > 1e-6 * abs(want):
                raise ValueError(
                    f"time grid fails its quadrature check at W={W}: "
                    f"{got!r} vs {want!r}; refine points_per_decade")

    def integrate(self, samples, W: float) -> float | np.ndarray:
        """int f(t) t^{W-1} dt with f given by samples on the nodes.

        In u = log t the integrand becomes f(e^u) e^{uW}, handled by the
        trapezoid weights; samples may carry leading axes.
        """
        samples = np.asarray(samples)
        if samples.shape[-1] != self.nodes.shape[0]:
            raise ValueError("sample array does not match the time grid")
        return samples @ (self.log_weights * self.nodes**W)

    def to_dict(self) -> dict:
        return {
            "t_min": self.t_min,
            "t_max": self.t_max,
            "points_per_decade": self.points_per_decade,
        }

    @staticmethod
    def from_dict(d: dict) -> "TGrid":
        return TGrid(t_min=d["t_min"], t_max=d["t_max"],
                     points_per_decade=int(d["points_per_decade"]))


def t_norm(grid: TGrid, samples, p: float, W: float = 1.0) -> float | np.ndarray:
    """L^p norm in t against t^{W-1} dt (p = inf ignores W).

    The p = 2, W = 2M+2N case is the square-function norm; p = inf is the
    maximal-operator sup; p = 1 shows up in kernel size integrals.
    """
    samples = np.asarray(samples)
    if p == math.inf:
        return np.max(np.abs(samples), axis=-1)
    if p == 2:
        return np.sqrt(grid.integrate(np.abs(samples) ** 2, W))
    if p == 1:
        return grid.integrate(np.abs(samples), W)
    raise ValueError("p must be 1, 2, or inf")
