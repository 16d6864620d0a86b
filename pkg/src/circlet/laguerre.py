"""Discrete-series realization on the positive half-line and the half-plane.

For a half-integer weight k > 1/2 the half-line model L2(R+, dr/r)
carries the generators
    gen_a     = i r d/dr
    gen_b     = r / 2
    gen_theta = 2 r d^2/dr^2 - (r^2/2 + 2 q)/r,      q = k(k - 1),
whose compact generator -(1/2) gen_theta has the orthonormal eigenbasis
    basis_n(r) = e^{-r/2} r^k L_n^{(2k-1)}(r) / sqrt(G(n+2k)/G(n+1))
with eigenvalue k + n.  The companion half-plane model (Re w > 0) has the
orthonormal family
    hp_n(w) = Re(w)^k (1+w)^{-2k} ((w-1)/(w+1))^n / sqrt(M_nk),
    M_nk = pi n! (2k-2)! / (2^{4k-2} (2k+n-1)!),
and the two are exchanged by the Laplace-type kernel
    K(w, r) = Re(w)^k r^k e^{-r w/2} / (2 sqrt(pi (2k-2)!)),
i.e. transform(f)(w) = int_0^inf dr/r K(w, r) f(r), which is also the
mode sum K(w, r) = sum_n hp_n(w) conj(basis_n(r)) (geometric convergence
since |(w-1)/(w+1)| < 1 on the half-plane).

Laguerre polynomials are evaluated by the standard three-term upward
recurrence; factorial ratios go through log-gamma.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, roots_laguerre

from .line import LogGrid, RPlusFunction

GL_NODES_DEFAULT = 128


class QuadratureConvergenceWarning(RuntimeWarning):
    """Gauss-Laguerre estimate has not settled (typically Re(w) near 0)."""


@dataclass(frozen=True)
class LaguerreBasisSpec:
    """Weight k of the discrete series; half-integer, k > 1/2."""

    k: float

    def __post_init__(self):
        if not (self.k > 0.5 and np.isfinite(self.k)):
            raise ValueError(f"weight must exceed 1/2, got {self.k}")
        if abs(2.0 * self.k - round(2.0 * self.k)) > 1e-12:
            raise ValueError(f"weight must be a half-integer, got {self.k}")

    @property
    def q(self) -> float:
        return self.k * (self.k - 1.0)


def genlaguerre(n: int, m: float, r) -> np.ndarray:
    """Generalized Laguerre polynomial L_n^{(m)}(r), upward three-term recurrence."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    r = np.asarray(r, dtype=float)
    prev = np.ones_like(r)
    if n == 0:
        return prev
    cur = 1.0 + m - r
    for j in range(1, n):
        prev, cur = cur, ((2.0 * j + 1.0 + m - r) * cur - (j + m) * prev) / (j + 1.0)
    return cur


def log_norm_rplus(spec: LaguerreBasisSpec, n: int) -> float:
    """ln of the squared half-line normalizer G(n+2k)/G(n+1)."""
    return float(gammaln(n + 2.0 * spec.k) - gammaln(n + 1.0))


def laguerre_basis(spec: LaguerreBasisSpec, n: int, r) -> np.ndarray:
    """Orthonormal eigenfunction basis_n on L2(R+, dr/r)."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("basis functions live on r > 0")
    envelope = np.exp(-0.5 * r + spec.k * np.log(r) - 0.5 * log_norm_rplus(spec, n))
    return envelope * genlaguerre(n, 2.0 * spec.k - 1.0, r)


def laguerre_function(spec: LaguerreBasisSpec, n: int, grid: LogGrid) -> RPlusFunction:
    """basis_n wrapped as an RPlusFunction with an exact evaluator."""
    return RPlusFunction.from_evaluator(grid, lambda r: laguerre_basis(spec, n, r))


def _fd_weights(offsets: np.ndarray, order: int) -> np.ndarray:
    """Finite-difference weights on integer offsets, exact on polynomials."""
    a = np.vander(np.asarray(offsets, dtype=float), increasing=True).T
    rhs = np.zeros(len(offsets))
    rhs[order] = float(math.factorial(order))
    return np.linalg.solve(a, rhs)


# one-sided 4th-order weights; boundary rows would otherwise dominate the
# residual after the 1/r amplification near the origin
_D1_EDGE0 = _fd_weights(np.arange(5), 1)
_D1_EDGE1 = _fd_weights(np.arange(-1, 4), 1)
_D2_EDGE0 = _fd_weights(np.arange(7), 2)
_D2_EDGE1 = _fd_weights(np.arange(-1, 6), 2)


def _log_derivs(values: np.ndarray, h: float) -> tuple[np.ndarray, np.ndarray]:
    """4th-order d/dx and d2/dx2 on a uniform grid, one-sided at the ends."""
    v = values
    d1 = np.empty_like(v)
    d2 = np.empty_like(v)
    d1[2:-2] = (v[:-4] - 8 * v[1:-3] + 8 * v[3:-1] - v[4:]) / (12 * h)
    d2[2:-2] = (-v[:-4] + 16 * v[1:-3] - 30 * v[2:-2] + 16 * v[3:-1] - v[4:]) / (12 * h * h)
    d1[0] = _D1_EDGE0 @ v[:5] / h
    d1[1] = _D1_EDGE1 @ v[:5] / h
    d1[-1] = -(_D1_EDGE0 @ v[-5:][::-1]) / h
    d1[-2] = -(_D1_EDGE1 @ v[-5:][::-1]) / h
    d2[0] = _D2_EDGE0 @ v[:7] / (h * h)
    d2[1] = _D2_EDGE1 @ v[:7] / (h * h)
    d2[-1] = _D2_EDGE0 @ v[-7:][::-1] / (h * h)
    d2[-2] = _D2_EDGE1 @ v[-7:][::-1] / (h * h)
    return d1, d2


def rplus_generators(which: str, f: RPlusFunction, spec: LaguerreBasisSpec) -> RPlusFunction:
    """Apply one half-line generator ('a', 'b' or 'theta') on the log grid.

    Derivatives are finite differences in ln r (4th order inside, one-sided
    at the ends); a warning fires when the function has not decayed at the
    grid ends, where the stencils degrade.
    """
    h = f.grid.log_spacing
    r = f.grid.nodes
    v = f.values
    peak = float(np.max(np.abs(v)))
    edge = float(max(np.abs(v[:2]).max(), np.abs(v[-2:]).max()))
    # power-law vanishing toward r = 0 is slow; only flag edges that carry
    # an appreciable fraction of the peak
    if peak > 0.0 and edge > 1e-2 * peak:
        warnings.warn(
            "function has not decayed at the log-grid ends; "
            "one-sided edge stencils will dominate the error there",
            RuntimeWarning,
            stacklevel=2,
        )
    if which == "b":
        return RPlusFunction(f.grid, 0.5 * r * v)
    d1, d2 = _log_derivs(v, h)
    if which == "a":
        # i r d/dr = i d/d(ln r)
        return RPlusFunction(f.grid, 1j * d1)
    if which == "theta":
        # 2 r d^2/dr^2 = (2/r)(d^2/dx^2 - d/dx) in x = ln r
        out = (2.0 / r) * (d2 - d1) - (0.5 * r + 2.0 * spec.q / r) * v
        return RPlusFunction(f.grid, out)
    raise ValueError(f"unknown generator {which!r}; expected 'a', 'b' or 'theta'")


def log_norm_halfplane(spec: LaguerreBasisSpec, n: int) -> float:
    """ln of the squared half-plane normalizer M_nk."""
    k = spec.k
    return float(
        np.log(np.pi)
        + gammaln(n + 1.0)
        + gammaln(2.0 * k - 1.0)
        - (4.0 * k - 2.0) * np.log(2.0)
        - gammaln(2.0 * k + n)
    )


def require_halfplane(w: complex) -> complex:
    w = complex(w)
    if not (w.real > 0.0 and np.isfinite(w.real) and np.isfinite(w.imag)):
        raise ValueError(f"half-plane point needs Re(w) > 0, got {w}")
    return w


def halfplane_basis(spec: LaguerreBasisSpec, n: int, w) -> np.ndarray:
    """Orthonormal half-plane family hp_n(w), Re(w) > 0."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    w = np.asarray(w, dtype=complex)
    if np.any(w.real <= 0.0):
        raise ValueError("half-plane points need Re(w) > 0")
    k = spec.k
    disk = (w - 1.0) / (w + 1.0)  # |disk| < 1 on the half-plane
    return (
        w.real ** k
        * (1.0 + w) ** (-2.0 * k)
        * disk ** n
        * np.exp(-0.5 * log_norm_halfplane(spec, n))
    )


def laplace_kernel(spec: LaguerreBasisSpec, w, r) -> np.ndarray:
    """Closed-form kernel K(w, r) = Re(w)^k r^k e^{-r w/2} / (2 sqrt(pi (2k-2)!))."""
    w = np.asarray(w, dtype=complex)
    r = np.asarray(r, dtype=float)
    if np.any(w.real <= 0.0):
        raise ValueError("half-plane points need Re(w) > 0")
    if np.any(r <= 0.0):
        raise ValueError("kernel lives on r > 0")
    k = spec.k
    ln_c = -np.log(2.0) - 0.5 * (np.log(np.pi) + gammaln(2.0 * k - 1.0))
    return w.real ** k * r ** k * np.exp(-0.5 * r * w + ln_c)


def laplace_kernel_series(spec: LaguerreBasisSpec, w: complex, r: float, n_terms: int) -> complex:
    """Partial mode sum sum_{n<n_terms} hp_n(w) basis_n(r); converges geometrically."""
    w = require_halfplane(w)
    total = 0.0 + 0.0j
    for n in range(n_terms):
        total += complex(halfplane_basis(spec, n, w)) * float(laguerre_basis(spec, n, r))
    return total


def laplace_transform(
    f: RPlusFunction,
    spec: LaguerreBasisSpec,
    w: complex,
    n_nodes: int = GL_NODES_DEFAULT,
) -> complex:
    """int_0^inf dr/r K(w, r) f(r) by Gauss-Laguerre in u = r Re(w)/2.

    The kernel's |e^{-r w/2}| = e^{-u} is exactly the quadrature weight, so
    it cancels analytically and only the phase and the function values are
    sampled.  Warns when halving the node count moves the estimate (small
    Re(w) pushes f's variation under the nodes).
    """
    w = require_halfplane(w)

    def estimate(nn: int) -> complex:
        u, wq = roots_laguerre(nn)
        rr = 2.0 * u / w.real
        k = spec.k
        ln_c = -np.log(2.0) - 0.5 * (np.log(np.pi) + gammaln(2.0 * k - 1.0))
        # K(w,r) with the e^{-u} modulus removed; the measure dr/r becomes du/u
        core = np.exp(ln_c + k * np.log(w.real) + k * np.log(rr)) * np.exp(
            -0.5j * rr * w.imag
        )
        vals = f(rr)
        return complex(np.sum(wq * core * vals / u))

    full = estimate(n_nodes)
    half = estimate(max(8, n_nodes // 2))
    tol = 1e-8 * max(abs(full), 1e-30) + 1e-14
    if abs(full - half) > tol:
        warnings.warn(
            f"Gauss-Laguerre estimate moved by {abs(full - half):.3e} when "
            f"halving the nodes at w = {w}; treat the value as unconverged",
            QuadratureConvergenceWarning,
            stacklevel=2,
        )
    return full


def gauss_laguerre_gram(spec: LaguerreBasisSpec, n_max: int, n_nodes: int = GL_NODES_DEFAULT) -> np.ndarray:
    """Gram matrix <basis_n | basis_m> on L2(R+, dr/r) by Gauss-Laguerre.

    The integrand e^{-r} r^{2k-1} L_n L_m is weight times polynomial for
    half-integer k, so the rule is exact once 2 n_nodes - 1 covers the
    degree."""
    u, wq = roots_laguerre(n_nodes)
    funcs = []
    for n in range(n_max + 1):
        # each row is r^{k-1/2} L_n / sqrt(norm); products give the integrand
        funcs.append(
            np.exp((spec.k - 0.5) * np.log(u) - 0.5 * log_norm_rplus(spec, n))
            * genlaguerre(n, 2.0 * spec.k - 1.0, u)
        )
    F = np.array(funcs)
    return (F * wq) @ F.T
