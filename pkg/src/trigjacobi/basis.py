"""Trigonometric Jacobi bases and their first-order ladder structure.

Everything here lives on the trigonometric side of the substitution x = cos(theta):
normalized polynomials P_n(theta) on (0,pi), Lebesgue-orthonormal functions
phi_n = psi * P_n, and the symmetrized systems Phi_n (polynomial type) and
Theta_n = psi * Phi_n (function type) on (-pi,pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

TRIG_POLY = "trig_poly"
JACOBI_FN = "jacobi_fn"
SYM_POLY = "sym_poly"
SYM_FN = "sym_fn"

KINDS = (TRIG_POLY, JACOBI_FN, SYM_POLY, SYM_FN)

# first-order operators accepted by the derivative dispatcher
OPS = ("delta", "delta_star", "D", "D_star", "DD", "DD_bar")


@dataclass(frozen=True)
class JacobiParams:
    """Type parameters (alpha, beta), both > -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError(
                f"need alpha > -1 and beta > -1, got ({self.alpha}, {self.beta})"
            )

    def shifted(self, k: float) -> "JacobiParams":
        if k < 0:
            raise ValueError("parameter shift must be nonnegative")
        return JacobiParams(self.alpha + k, self.beta + k)

    @property
    def lam0(self) -> float:
        """Bottom eigenvalue ((alpha+beta+1)/2)^2; zero iff alpha+beta = -1."""
        return ((self.alpha + self.beta + 1.0) / 2.0) ** 2


def eigenvalue(params: JacobiParams, n) -> float | np.ndarray:
    """n-th eigenvalue (n + (alpha+beta+1)/2)^2."""
    half = (params.alpha + params.beta + 1.0) / 2.0
    return (np.asarray(n, dtype=float) + half) ** 2 if np.ndim(n) else (float(n) + half) ** 2


def half_index(n: int) -> int:
    """<n> = floor((n+1)/2): index of the eigenvalue attached to Phi_n."""
    return (n + 1) // 2


@dataclass(frozen=True)
class EigenData:
    n: int
    lam: float
    half_index: int


def eigen(params: JacobiParams, n: int) -> EigenData:
    if n < 0:
        raise ValueError("index must be nonnegative")
    return EigenData(n=n, lam=eigenvalue(params, n), half_index=half_index(n))


def psi(params: JacobiParams, theta) -> np.ndarray:
    """Weight factor |sin(t/2)|^(alpha+1/2) * cos(t/2)^(beta+1/2) on (-pi,pi)."""
    theta = np.asarray(theta, dtype=float)
    if np.any(np.abs(theta) >= np.pi):
        raise ValueError("psi is defined for |theta| < pi")
    s = np.abs(np.sin(theta / 2.0))
    c = np.cos(theta / 2.0)
    return s ** (params.alpha + 0.5) * c ** (params.beta + 0.5)


def log_norm_constant(params: JacobiParams, n) -> np.ndarray:
    """log of c_n normalizing c_n P_n(cos .) in L2(dmu+).

    The n = 0 branch uses Gamma(alpha+beta+2) directly, which stays finite in
    the degenerate case alpha+beta = -1 where the generic formula has a 0*inf
    ambiguity.
    """
    a, b = params.alpha, params.beta
    n = np.asarray(n, dtype=float)
    # the generic formula hits gammaln(0) at n = 0 when alpha+beta = -1
    with np.errstate(invalid="ignore", divide="ignore"):
        generic = 0.5 * (
            np.log(2.0 * n + a + b + 1.0)
            + gammaln(n + 1.0)
            + gammaln(n + a + b + 1.0)
            - gammaln(n + a + 1.0)
            - gammaln(n + b + 1.0)
        )
    base = 0.5 * (gammaln(a + b + 2.0) - gammaln(a + 1.0) - gammaln(b + 1.0))
    return np.where(n == 0, base, generic)


def norm_constant(params: JacobiParams, n) -> float | np.ndarray:
    out = np.exp(log_norm_constant(params, n))
    return float(out) if out.ndim == 0 else out


def jacobi_table(params: JacobiParams, nmax: int, x) -> np.ndarray:
    """Values P_n(x) for 0 <= n <= nmax by the three-term recurrence.

    Returns an array of shape (nmax+1,) + x.shape. The recurrence coefficients
    are nonsingular for every n >= 2 when alpha, beta > -1, and degree 1 is
    written explicitly, so the degenerate combination alpha+beta = -1 is safe.
    """
    a, b = params.alpha, params.beta
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((nmax + 1,) + x.shape, dtype=float)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for n in range(2, nmax + 1):
        c0 = 2.0 * n * (n + a + b) * (2.0 * n + a + b - 2.0)
        c1 = 2.0 * n + a + b - 1.0
        c2 = (2.0 * n + a + b) * (2.0 * n + a + b - 2.0)
        c3 = a * a - b * b
        c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + a + b)
        out[n] = (c1 * (c2 * x + c3) * out[n - 1] - c4 * out[n - 2]) / c0
    return out


def jacobi_poly(params: JacobiParams, n: int, x) -> float | np.ndarray:
    """Classical Jacobi polynomial P_n(x) on [-1,1]."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0 + 1e-12):
        raise ValueError("argument outside [-1,1]")
    val = jacobi_table(params, n, xa)[n]
    return float(val.reshape(-1)[0]) if np.ndim(x) == 0 else val


def _deriv_gamma_ratio(params: JacobiParams, n: np.ndarray, k: int) -> np.ndarray:
    # d^k/dx^k P_n = Gamma(n+a+b+1+k) / (2^k Gamma(n+a+b+1)) * P_{n-k}^{a+k,b+k}
    s = n + params.alpha + params.beta + 1.0
    return np.exp(gammaln(s + k) - gammaln(s) - k * math.log(2.0))


def jacobi_deriv_table(params: JacobiParams, nmax: int, x, k: int) -> np.ndarray:
    """k-th x-derivatives of P_n(x), n = 0..nmax, via the parameter-shift identity."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if k == 0:
        return jacobi_table(params, nmax, x)
    out = np.zeros((nmax + 1,) + x.shape, dtype=float)
    if nmax < k:
        return out
    shifted = jacobi_table(params.shifted(k), nmax - k, x)
    ns = np.arange(k, nmax + 1, dtype=float)
    ratio = _deriv_gamma_ratio(params, ns, k)
    out[k:] = ratio[(...,) + (None,) * x.ndim] * shifted
    return out


def trig_poly_table(params: JacobiParams, nmax: int, theta, dmax: int = 0,
                    normalized: bool = True) -> np.ndarray:
    """Theta-derivative table of the trigonometric polynomials.

    Returns T with shape (dmax+1, nmax+1, npts): T[d, n] is the d-th theta
    derivative of c_n P_n(cos theta) (or of the unnormalized P_n(cos theta)).
    Supports dmax <= 3.
    """
    if dmax > 3:
        raise ValueError("theta derivatives implemented up to order 3")
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    x = np.cos(theta)
    s, c = np.sin(theta), x
    p0 = jacobi_table(params, nmax, x)
    out = np.empty((dmax + 1, nmax + 1, theta.size), dtype=float)
    out[0] = p0
    if dmax >= 1:
        p1 = jacobi_deriv_table(params, nmax, x, 1)
        out[1] = -s * p1
    if dmax >= 2:
        p2 = jacobi_deriv_table(params, nmax, x, 2)
        out[2] = -c * p1 + s * s * p2
    if dmax >= 3:
        p3 = jacobi_deriv_table(params, nmax, x, 3)
        out[3] = s * p1 + 3.0 * s * c * p2 - s ** 3 * p3
    if normalized:
        cn = norm_constant(params, np.arange(nmax + 1))
        out *= cn[None, :, None]
    return out


def odd_factor_table(params: JacobiParams, nmax: int, theta, dmax: int = 0) -> np.ndarray:
    """Theta-derivative table of s_n = (1/2) sin(theta) * c_n' P_n^{a+1,b+1}(cos theta).

    s_n = sqrt(2) * Phi_{2n+1} restricted to its natural formula; odd about 0.
    Shape (dmax+1, nmax+1, npts), dmax <= 3.
    """
    if dmax > 3:
        raise ValueError("theta derivatives implemented up to order 3")
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    T = trig_poly_table(params.shifted(1), nmax, theta, dmax)
    s, c = np.sin(theta), np.cos(theta)
    out = np.empty_like(T)
    out[0] = 0.5 * s * T[0]
    if dmax >= 1:
        out[1] = 0.5 * (c * T[0] + s * T[1])
    if dmax >= 2:
        out[2] = 0.5 * (-s * T[0] + 2.0 * c * T[1] + s * T[2])
    if dmax >= 3:
        out[3] = 0.5 * (-c * T[0] - 3.0 * s * T[1] + 3.0 * c * T[2] + s * T[3])
    return out


@dataclass(frozen=True)
class BasisElement:
    """One element of one of the four orthonormal systems.

    kind: trig_poly -> P_n on (0,pi) with dmu+;   jacobi_fn -> phi_n on (0,pi) with dtheta;
          sym_poly  -> Phi_n on (-pi,pi) with dmu; sym_fn    -> Theta_n on (-pi,pi) with dtheta.
    """

    params: JacobiParams
    index: int
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.index < 0:
            raise ValueError("index must be nonnegative")

    @property
    def parity(self) -> str:
        if self.kind in (TRIG_POLY, JACOBI_FN):
            return "even"
        return "even" if self.index % 2 == 0 else "odd"

    @property
    def eigen_index(self) -> int:
        """Index k with eigenvalue lambda_k."""
        if self.kind in (TRIG_POLY, JACOBI_FN):
            return self.index
        return half_index(self.index)

    @property
    def lam(self) -> float:
        return eigenvalue(self.params, self.eigen_index)


def _check_domain(elem: BasisElement, theta: np.ndarray):
    if elem.kind in (TRIG_POLY, JACOBI_FN):
        if np.any(theta <= 0.0) or np.any(theta >= np.pi):
            raise ValueError("element is defined on (0,pi)")
    else:
        if np.any(np.abs(theta) >= np.pi):
            raise ValueError("element is defined on (-pi,pi)")


def eval_basis_dtheta(elem: BasisElement, theta, order: int = 0) -> np.ndarray:
    """Pointwise values (order=0) or theta-derivatives of a basis element.

    Polynomial kinds support order <= 3; the psi-weighted kinds support
    order = 0 only (their derivatives are reached through the conjugation
    identities rather than pointwise formulas).
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    _check_domain(elem, theta)
    p, n = elem.params, elem.index
    if elem.kind == TRIG_POLY:
        return trig_poly_table(p, n, theta, order)[order, n]
    if elem.kind == SYM_POLY:
        root2 = 1.0 / math.sqrt(2.0)
        if n % 2 == 0:
            return root2 * trig_poly_table(p, n // 2, theta, order)[order, n // 2]
        k = (n - 1) // 2
        return root2 * odd_factor_table(p, k, theta, order)[order, k]
    if order != 0:
        raise ValueError("psi-weighted elements are evaluated at order 0 only")
    if elem.kind == JACOBI_FN:
        return psi(p, theta) * eval_basis_dtheta(
            BasisElement(p, n, TRIG_POLY), theta, 0)
    # sym_fn: Theta_n = psi * Phi_n exactly, both parities; the sign(theta)
    # carried by the odd-index definition is absorbed by sin(theta/2) > 0 <=> theta > 0
    return psi(p, theta) * eval_basis_dtheta(BasisElement(p, n, SYM_POLY), theta, 0)


def eval_basis(elem: BasisElement, theta) -> np.ndarray:
    return eval_basis_dtheta(elem, theta, 0)


def coeff_A(params: JacobiParams, theta) -> np.ndarray:
    """A(t) = (alpha+1/2)cot(t/2) - (beta+1/2)tan(t/2), the odd-part multiplier of DD."""
    theta = np.asarray(theta, dtype=float)
    return ((params.alpha + 0.5) / np.tan(theta / 2.0)
            - (params.beta + 0.5) * np.tan(theta / 2.0))


def coeff_A_prime(params: JacobiParams, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return (-(params.alpha + 0.5) / (2.0 * np.sin(theta / 2.0) ** 2)
            - (params.beta + 0.5) / (2.0 * np.cos(theta / 2.0) ** 2))


def coeff_b(params: JacobiParams, theta) -> np.ndarray:
    """b(t) = A(t)/2 = psi'/psi; the reflection multiplier of DD_bar."""
    return 0.5 * coeff_A(params, theta)


# ---------------------------------------------------------------------------
# exact ladder action on basis elements
# ---------------------------------------------------------------------------

def _ladder_root(params: JacobiParams, n: int) -> float:
    # sqrt(lambda_n - lambda_0) = sqrt(n (n + alpha + beta + 1))
    return math.sqrt(n * (n + params.alpha + params.beta + 1.0))


def ladder_step(op: str, elem: BasisElement) -> tuple[float, BasisElement | None]:
    """Apply one first-order operator to an element when the result is again
    a scalar multiple of an element of the same family.

    Closed cases:
      delta      on even-parity sym_poly:   delta Phi_{2k}   = -r_k Phi_{2k-1}
      delta_star on odd-parity  sym_poly:   delta* Phi_{2k+1} = -r_{k+1} Phi_{2k+2}
      DD on any sym_poly, DD_bar on any sym_fn (signs differ by parity)
      D  on jacobi_fn:  D phi_n^{a,b}   = -r_n phi_{n-1}^{a+1,b+1}
      D_star on jacobi_fn with a,b >= 0 shift available: the inverse shift step
    Returns (coefficient, element); (0.0, None) when the image vanishes.
    Raises ValueError when the action is not ladder-closed.
    """
    p, n = elem.params, elem.index
    if elem.kind == SYM_POLY or elem.kind == SYM_FN:
        kind = elem.kind
        even = n % 2 == 0
        if op in ("DD", "DD_bar"):
            if (op == "DD") != (kind == SYM_POLY):
                raise ValueError(f"{op} acts on the other symmetrized family")
            if even:
                k = n // 2
                if k == 0:
                    return 0.0, None
                return -_ladder_root(p, k), BasisElement(p, n - 1, kind)
            k = (n - 1) // 2
            return +_ladder_root(p, k + 1), BasisElement(p, n + 1, kind)
        if op == "delta":
            if kind != SYM_POLY or not even:
                raise ValueError("delta is ladder-closed on even-index sym_poly only")
            k = n // 2
            if k == 0:
                return 0.0, None
            return -_ladder_root(p, k), BasisElement(p, n - 1, kind)
        if op == "delta_star":
            if kind != SYM_POLY or even:
                raise ValueError("delta* is ladder-closed on odd-index sym_poly only")
            k = (n - 1) // 2
            return -_ladder_root(p, k + 1), BasisElement(p, n + 1, kind)
        raise ValueError(f"operator {op!r} is not ladder-closed on {kind}")
    if elem.kind == JACOBI_FN:
        if op == "D":
            if n == 0:
                return 0.0, None
            return -_ladder_root(p, n), BasisElement(p.shifted(1), n - 1, JACOBI_FN)
        if op == "D_star":
            # inverse of the shift: D*_{a,b} phi_{n}^{a+1,b+1} = -r_{n+1} phi_{n+1}^{a,b}
            if p.alpha <= 0 or p.beta <= 0:
                raise ValueError("D_star ladder needs parameters that are already shifted")
            base = JacobiParams(p.alpha - 1.0, p.beta - 1.0)
            return -_ladder_root(base, n + 1), BasisElement(base, n + 1, JACOBI_FN)
        raise ValueError(f"operator {op!r} is not ladder-closed on jacobi_fn")
    raise ValueError(f"no ladder action on kind {elem.kind!r}")


def interlaced_on_element(variant: str, N: int, elem: BasisElement) -> tuple[float, BasisElement]:
    """delta_N^even or delta_N^odd applied exactly to a symmetrized element.

    Closed form: the chain alternates between indices 2k <-> 2k-1 (even
    variant) or 2k+1 <-> 2k+2 (odd variant), each step contributing the same
    factor, so delta_N^even Phi_{2k} = (-r_k)^N Phi_{2k - (N mod 2)} and
    delta_N^odd Phi_{2k+1} = (-r_{k+1})^N Phi_{2k+1 + (N mod 2)}.
    """
    if variant not in ("even", "odd"):
        raise ValueError("variant must be 'even' or 'odd'")
    if N < 0:
        raise ValueError("chain length must be nonnegative")
    if elem.kind != SYM_POLY:
        raise ValueError("interlaced chains act on sym_poly elements")
    if N == 0:
        return 1.0, elem
    n = elem.index
    if variant == "even":
        if n % 2 != 0:
            raise ValueError("even chain starts on an even-index element")
        k = n // 2
        if k == 0:
            return 0.0, elem
        return (-_ladder_root(elem.params, k)) ** N, BasisElement(
            elem.params, n - (N % 2), SYM_POLY)
    if n % 2 != 1:
        raise ValueError("odd chain starts on an odd-index element")
    k = (n - 1) // 2
    return (-_ladder_root(elem.params, k + 1)) ** N, BasisElement(
        elem.params, n + (N % 2), SYM_POLY)


def d_power_on_element(N: int, elem: BasisElement) -> tuple[float, BasisElement | None]:
    """DD^N (or DD_bar^N on the function side) by iterating the ladder.

    The relation to the interlaced chains carries a parity-dependent sign:
    DD^N = (-1)^floor(N/2) delta_N^even on even elements and
    DD^N = (-1)^ceil(N/2) delta_N^odd on odd ones. The signs fall out of the
    ladder automatically; this helper never absorbs them.
    """
    op = "DD" if elem.kind == SYM_POLY else "DD_bar"
    coef, cur = 1.0, elem
    for _ in range(N):
        c, cur = ladder_step(op, cur)
        coef *= c
        if cur is None:
            return 0.0, None
    return coef, cur


def interlaced_fn_chain(N: int, elem: BasisElement) -> tuple[float, BasisElement]:
    """D_N^even = ...D D* D applied to a Jacobi function phi_n.

    Steps alternate D (shifting parameters up) and D* (shifting back), so the
    result is phi with the same parameters for N even and shifted ones for N
    odd: D_N^even phi_n = (-r_n)^N phi_{n - (N mod 2)}^{(shifted iff N odd)}.
    """
    if elem.kind != JACOBI_FN:
        raise ValueError("interlaced function chains act on jacobi_fn elements")
    if N == 0:
        return 1.0, elem
    if elem.index == 0:
        return 0.0, elem
    coef, cur = 1.0, elem
    for i in range(N):
        c, cur = ladder_step("D" if i % 2 == 0 else "D_star", cur)
        coef *= c
        if cur is None:
            return 0.0, elem
    return coef, cur


def apply_jacobi_operator(elem: BasisElement, theta) -> np.ndarray:
    """The symmetrized second-order operator, applied as a differential operator.

    JJ f = -f'' - A f' - A' f_odd + lambda_0 f, evaluated with analytic
    derivatives of the element. Independent of the ladder identities, so
    eigen-residual tests built on this are not circular.
    """
    if elem.kind != SYM_POLY:
        raise ValueError("differential application implemented for sym_poly")
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    f0 = eval_basis_dtheta(elem, theta, 0)
    f1 = eval_basis_dtheta(elem, theta, 1)
    f2 = eval_basis_dtheta(elem, theta, 2)
    p = elem.params
    out = -f2 - coeff_A(p, theta) * f1 + p.lam0 * f0
    if elem.parity == "odd":
        out -= coeff_A_prime(p, theta) * f0
    return out
