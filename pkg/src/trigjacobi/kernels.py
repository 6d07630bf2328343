"""Semigroup kernels on (0,pi)^2 and everything built from them.

Every kernel here is a spectral series sum_k coef(k) e^{-t speed(k)}
thetafac_k(theta) phifac_k(phi). The even component pairs the trigonometric
polynomials with weights e^{-t sqrt(lam_k)}; the odd component pairs the
sine-carrying companions s_k with e^{-t sqrt(lam_{k+1})}. Derivative families
come in two genuinely different evaluation routes (term-wise ladder factors
vs t-derivatives with a pointwise first-order tail), which the tests compare.

Series are truncated adaptively: the tail bound e^{-tn} n^q < eps_tail with
q covering both the polynomial sup growth and the derivative powers.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import comb

from .basis import (
    JacobiParams,
    coeff_A,
    eigenvalue,
    odd_factor_table,
    trig_poly_table,
)
from .quadrature import TGrid

COMPONENTS = ("even", "odd")


class TruncationError(ValueError):
    """The requested accuracy needs more terms than the configured cap."""


@dataclass(frozen=True)
class TruncationConfig:
    eps_tail: float = 1e-10
    n_cap: int = 4000
    t_floor: float = 1e-4

    def series_length(self, params: JacobiParams, t: float, orders: int) -> int:
        """Smallest n with e^{-tn} (n+1)^q below eps_tail.

        q = 2 max(alpha,beta) + 2 + orders majorizes the sup growth of the
        summands including norm constants and the derivative powers of the
        eigenvalues. Solved by a fixed point of n = (q log n - log eps)/t.
        """
        if t < self.t_floor:
            raise TruncationError(
                f"t={t} is below the configured floor {self.t_floor}")
        q = max(2.0 * max(params.alpha, params.beta) + 2.0 + orders, 0.5)
        log_eps = math.log(self.eps_tail)
        n = max(-log_eps / t, 10.0)
        for _ in range(60):
            n_next = (q * math.log(n + 1.0) - log_eps) / t
            if abs(n_next - n) < 0.5:
                n = n_next
                break
            n = n_next
        n = int(math.ceil(n)) + 1
        if n > self.n_cap:
            raise TruncationError(
                f"series needs {n} terms at t={t}, cap is {self.n_cap}; "
                "raise n_cap or t")
        return n


DEFAULT_TRUNCATION = TruncationConfig()


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite atomic measure sum_j weight_j * delta_{t_j} on (0, infinity)."""

    times: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.times) != len(self.weights) or not self.times:
            raise ValueError("need matching, nonempty times and weights")
        if any(t <= 0.0 for t in self.times):
            raise ValueError("atoms must sit at positive times")
        if not all(math.isfinite(w) for w in self.weights):
            raise ValueError("weights must be finite")

    @property
    def total_mass(self) -> float:
        return float(sum(self.weights))


# --- cached theta-derivative tables -----------------------------------------

_TABLE_CACHE: dict = {}
_TABLE_CACHE_CAP = 24


def _grid_key(theta: np.ndarray) -> str:
    return hashlib.sha1(theta.tobytes()).hexdigest()


def _tables(params: JacobiParams, kind: str, theta: np.ndarray,
            nmax: int, dmax: int) -> np.ndarray:
    key = (params.alpha, params.beta, kind, _grid_key(theta))
    hit = _TABLE_CACHE.get(key)
    if hit is not None and hit.shape[0] > dmax and hit.shape[1] > nmax:
        return hit
    build = trig_poly_table if kind == "even" else odd_factor_table
    table = build(params, nmax, theta, dmax)
    if len(_TABLE_CACHE) >= _TABLE_CACHE_CAP:
        _TABLE_CACHE.pop(next(iter(_TABLE_CACHE)))
    _TABLE_CACHE[key] = table
    return table


# --- kernel families ---------------------------------------------------------

@dataclass(frozen=True)
class KernelHandle:
    """A kernel family member; evaluation happens in eval_pairs/eval_matrix."""

    params: JacobiParams
    family: tuple

    @property
    def orders(self) -> int:
        """Total derivative order, used in the truncation exponent."""
        kind = self.family[0]
        if kind == "poisson":
            return 0
        if kind in ("ladder", "direct"):
            return self.family[2] + self.family[3]
        if kind == "partial":
            return self.family[1] + self.family[2] + self.family[3] + self.family[4]
        raise AssertionError(kind)

    @property
    def table_params(self) -> JacobiParams:
        if self.family[0] == "partial":
            return self.params.shifted(self.family[1])
        return self.params

    def eval_pairs(self, theta, phi, t, cfg: TruncationConfig = DEFAULT_TRUNCATION,
                   n_override: int | None = None) -> np.ndarray:
        return _eval_pairs(self, theta, phi, t, cfg, n_override)

    def eval_matrix(self, theta, phi, t: float,
                    cfg: TruncationConfig = DEFAULT_TRUNCATION) -> np.ndarray:
        return _eval_matrix(self, theta, phi, t, cfg)


def poisson_kernel(params: JacobiParams, component: str) -> KernelHandle:
    """The even or odd component of the symmetrized semigroup kernel,
    as a function on (0,pi)^2."""
    if component not in COMPONENTS:
        raise ValueError(f"component must be one of {COMPONENTS}")
    return KernelHandle(params, ("poisson", component))


def kernel_derivative(handle: KernelHandle, N: int, M: int,
                      route: str = "ladder") -> KernelHandle:
    """The N-th interlaced first-order chain and M t-derivatives applied to a
    semigroup kernel component (chain in theta, even chain on the even
    component, odd chain on the odd one).

    route "ladder": term-wise closed form through the ladder factors.
    route "direct": N = 2k + tail as (d_t^2 - lam_0)^k with binomial assembly,
    odd tails applied as pointwise first-order operators on the theta factor.
    """
    if handle.family[0] != "poisson":
        raise ValueError("derivatives start from a semigroup kernel")
    if N < 0 or M < 0 or (N == 0 and M == 0):
        raise ValueError("need N, M >= 0 with N + M > 0")
    if route not in ("ladder", "direct"):
        raise ValueError("route must be 'ladder' or 'direct'")
    return KernelHandle(handle.params, (route, handle.family[1], N, M))


def partial_derivative_kernel(params: JacobiParams, shift: int,
                              L: int, N: int, M: int) -> KernelHandle:
    """Plain partial derivatives d_phi^L d_theta^N d_t^M of the even semigroup
    kernel with parameters shifted by `shift`. This is the exact shape of the
    size-lemma left-hand sides."""
    if shift < 0 or L < 0 or N < 0 or M < 0:
        raise ValueError("orders must be nonnegative")
    if L > 1 or N > 1:
        raise ValueError("spatial orders above 1 are not needed and not built")
    return KernelHandle(params, ("partial", shift, L, N, M))


def _speeds(params: JacobiParams, component: str, n: int) -> np.ndarray:
    ks = np.arange(n, dtype=float)
    if component == "even":
        return np.sqrt(eigenvalue(params, ks))
    return np.sqrt(eigenvalue(params, ks + 1.0))


def _ladder_roots(params: JacobiParams, ks: np.ndarray) -> np.ndarray:
    # sqrt(lam_k - lam_0) = sqrt(k (k + alpha + beta + 1))
    return np.sqrt(ks * (ks + params.alpha + params.beta + 1.0))


def _factors(handle: KernelHandle, theta: np.ndarray, phi: np.ndarray,
             n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """speed, coef (n,), theta factor (n, |theta|), phi factor (n, |phi|)."""
    p = handle.params
    kind = handle.family[0]
    ks = np.arange(n, dtype=float)

    if kind in ("poisson", "ladder", "direct"):
        comp = handle.family[1]
        N, M = (0, 0) if kind == "poisson" else handle.family[2:4]
        speed = _speeds(p, comp, n)
        if comp == "even":
            lam_idx = ks
            phifac = _tables(p, "even", phi, n, 0)[0, :n]
        else:
            lam_idx = ks + 1.0
            phifac = _tables(p, "odd", phi, n, 0)[0, :n]
        lam = eigenvalue(p, lam_idx)
        if kind == "poisson":
            coef = np.full(n, 0.5)
            thetafac = (_tables(p, "even", theta, n, 0)[0, :n] if comp == "even"
                        else _tables(p, "odd", theta, n, 0)[0, :n])
            return speed, coef, thetafac, phifac
        if kind == "ladder":
            roots = _ladder_roots(p, lam_idx)
            coef = 0.5 * (-np.sqrt(lam)) ** M * (-roots) ** N
            if N % 2 == 0:
                thetafac = (_tables(p, "even", theta, n, 0)[0, :n]
                            if comp == "even"
                            else _tables(p, "odd", theta, n, 0)[0, :n])
            elif comp == "even":
                # land on the odd companions, index k-1, empty at k=0
                S = _tables(p, "odd", theta, n, 0)
                thetafac = np.zeros((n, theta.size))
                thetafac[1:] = S[0, : n - 1]
            else:
                T = _tables(p, "even", theta, n + 1, 0)
                thetafac = T[0, 1 : n + 1]
            return speed, coef, thetafac, phifac
        # direct route: (d_t^2 - lam_0)^{N//2} d_t^M with explicit binomials,
        # never collapsed to the ladder coefficient
        k0, tail = N // 2, N % 2
        js = np.arange(k0 + 1)
        binom = comb(k0, js) * (-p.lam0) ** (k0 - js)
        mult = np.zeros(n)
        for j, c in zip(js, binom):
            mult += c * (-np.sqrt(lam)) ** (2 * j + M)
        coef = 0.5 * mult
        if tail == 0:
            thetafac = (_tables(p, "even", theta, n, 0)[0, :n]
                        if comp == "even"
                        else _tables(p, "odd", theta, n, 0)[0, :n])
        elif comp == "even":
            thetafac = _tables(p, "even", theta, n, 1)[1, :n]
        else:
            S = _tables(p, "odd", theta, n, 1)
            thetafac = -S[1, :n] - coeff_A(p, theta)[None, :] * S[0, :n]
        return speed, coef, thetafac, phifac

    if kind == "partial":
        shift, L, N, M = handle.family[1:5]
        ps = p.shifted(shift)
        speed = _speeds(ps, "even", n)
        coef = 0.5 * (-speed) ** M
        thetafac = _tables(ps, "even", theta, n, N)[N, :n]
        phifac = _tables(ps, "even", phi, n, L)[L, :n]
        return speed, coef, thetafac, phifac

    raise AssertionError(kind)


def _eval_pairs(handle: KernelHandle, theta, phi, t,
                cfg: TruncationConfig, n_override: int | None) -> np.ndarray:
    """Kernel samples K_t(theta_i, phi_i): shape (npairs, nt).

    Terms are summed in k-slices so each t only pays for the series length
    its own truncation bound demands.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    if theta.shape != phi.shape:
        raise ValueError("theta and phi must pair up")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    p_tab = handle.table_params
    if n_override is not None:
        n_arr = np.full(t.shape, int(n_override))
    else:
        n_arr = np.array([cfg.series_length(p_tab, ti, handle.orders)
                          for ti in t])
    n_max = int(n_arr.max())
    speed, coef, thetafac, phifac = _factors(handle, theta, phi, n_max)
    A = (coef[:, None] * thetafac * phifac)  # (n_max, npairs)
    out = np.zeros((t.size, theta.size))
    bounds = np.unique(n_arr)[::-1]
    lo_next = np.concatenate([bounds[1:], [0]])
    for b, lo in zip(bounds, lo_next):
        rows = np.where(n_arr >= b)[0]
        ks = slice(int(lo), int(b))
        E = np.exp(-np.outer(t[rows], speed[ks]))
        out[rows] += E @ A[ks]
    return out.T


def _eval_matrix(handle: KernelHandle, theta, phi, t: float,
                 cfg: TruncationConfig) -> np.ndarray:
    """Full kernel matrix K_t(theta_i, phi_j) at a single time."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    n = cfg.series_length(handle.table_params, float(t), handle.orders)
    speed, coef, thetafac, phifac = _factors(handle, theta, phi, n)
    d = coef * np.exp(-float(t) * speed)
    return (thetafac * d[:, None]).T @ phifac


# --- kernels defined by time integrals ---------------------------------------

def riesz_kernel(handle: KernelHandle, N: int, tgrid: TGrid,
                 cfg: TruncationConfig = DEFAULT_TRUNCATION,
                 route: str = "ladder") -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Off-diagonal Riesz-type kernel: (1/Gamma(N)) int_0^inf (chain kernel)
    t^{N-1} dt, realized on the given time grid.

    Returns a pair evaluator; the time integral converges off the diagonal
    where the chain kernel decays in t and stays bounded as t -> 0+.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    deriv = kernel_derivative(handle, N, 0, route=route)

    def eval_pairs(theta, phi):
        samples = deriv.eval_pairs(theta, phi, tgrid.nodes, cfg)
        return tgrid.integrate(samples, float(N)) / math.gamma(N)

    return eval_pairs


def multiplier_kernel(handle: KernelHandle, spec,
                      tgrid: TGrid | None = None,
                      cfg: TruncationConfig = DEFAULT_TRUNCATION,
                      ) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Kernel of a spectral multiplier of Laplace transform type.

    spec callable phi(t): kernel = -int d_t K_t phi(t) dt on the time grid.
    spec DiscreteMeasure:  kernel = sum_j weight_j K_{t_j}, an exact finite
    sum through the same kernel evaluations the semigroup itself uses.
    """
    if isinstance(spec, DiscreteMeasure):
        def eval_pairs_atoms(theta, phi):
            out = None
            for tj, wj in zip(spec.times, spec.weights):
                term = wj * handle.eval_pairs(theta, phi, np.array([tj]), cfg)[:, 0]
                out = term if out is None else out + term
            return out

        return eval_pairs_atoms
    if tgrid is None:
        raise ValueError("a time grid is required for a Laplace-type profile")
    deriv = kernel_derivative(handle, 0, 1)

    def eval_pairs_fn(theta, phi):
        samples = deriv.eval_pairs(theta, phi, tgrid.nodes, cfg)
        return -tgrid.integrate(samples * spec(tgrid.nodes)[None, :], 1.0)

    return eval_pairs_fn


def symmetrized_kernel_pairs(params: JacobiParams, theta, phi, t,
                             weighted: bool = False,
                             cfg: TruncationConfig = DEFAULT_TRUNCATION) -> np.ndarray:
    """The full symmetrized kernel on (-pi,pi)^2 through its parity parts:
    even in each variable plus sign(theta phi) times the odd part.

    weighted=True multiplies by psi(theta) psi(phi), giving the kernel of the
    function-setting semigroup."""
    from .basis import psi

    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    at, ap = np.abs(theta), np.abs(phi)
    sign = np.sign(theta) * np.sign(phi)
    even = poisson_kernel(params, "even").eval_pairs(at, ap, t, cfg)
    odd = poisson_kernel(params, "odd").eval_pairs(at, ap, t, cfg)
    out = even + sign[:, None] * odd
    if weighted:
        out = out * (psi(params, theta) * psi(params, phi))[:, None]
    return out
