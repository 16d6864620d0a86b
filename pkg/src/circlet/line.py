"""Flat-geometry counterpart: the affine wavelet transform on the line.

Signals sit on a uniform endpoint-exclusive grid over a window [lo, hi);
all Fourier work treats the window as one period, so signals must decay
inside it.  The affine group acts by
    (U(a, b) f)(x) = a^(-1/2) f((x - b)/a),
and the admissibility constant of a wavelet G is
    C = int |G^(k)|^2 / |k| dk        (unitary Fourier convention),
with the k = 0 bin excluded.  Reconstruction divides per half-line by
2 pi C_sgn(k), the exact resolution constant for that frequency sign.

The companion Fourier-picture action on L2(R+, da/a),
    (U(a', b') phi)(a) = e^{-i a b'} phi(a' a),
lives on a log-uniform grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import GridMismatchError

DEFAULT_LINE_SAMPLES = 2048


@dataclass(frozen=True)
class LineGrid:
    """Uniform grid x_j = lo + j (hi - lo)/n, j = 0..n-1 (hi excluded)."""

    lo: float
    hi: float
    n_samples: int

    def __post_init__(self):
        if not (self.hi > self.lo and np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise ValueError(f"bad window [{self.lo}, {self.hi})")
        if self.n_samples < 4 or self.n_samples % 2:
            raise ValueError(f"n_samples must be even and >= 4, got {self.n_samples}")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / self.n_samples

    @property
    def nodes(self) -> np.ndarray:
        return self.lo + self.spacing * np.arange(self.n_samples)

    @property
    def freqs(self) -> np.ndarray:
        """Angular frequencies of the periodized window, FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n_samples, d=self.spacing)


@dataclass(frozen=True, eq=False)
class LineSignal:
    """Sampled line signal with an optional exact evaluator."""

    grid: LineGrid
    values: np.ndarray
    evaluator: Callable[[np.ndarray], np.ndarray] | None = field(default=None)

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=complex)
        if v.shape != (self.grid.n_samples,):
            raise ValueError(
                f"values shape {v.shape} does not match grid ({self.grid.n_samples},)"
            )
        if not np.all(np.isfinite(v.view(float))):
            raise ValueError("signal values must be finite")
        object.__setattr__(self, "values", v)

    @staticmethod
    def from_evaluator(grid: LineGrid, fn: Callable) -> "LineSignal":
        return LineSignal(grid, np.asarray(fn(grid.nodes), dtype=complex), evaluator=fn)

    def __call__(self, x) -> np.ndarray:
        xs = np.asarray(x, dtype=float)
        if self.evaluator is not None:
            return np.asarray(self.evaluator(xs), dtype=complex)
        re = np.interp(xs, self.grid.nodes, self.values.real, left=0.0, right=0.0)
        im = np.interp(xs, self.grid.nodes, self.values.imag, left=0.0, right=0.0)
        return re + 1j * im

    def norm(self) -> float:
        return float(np.sqrt(self.grid.spacing * np.sum(np.abs(self.values) ** 2)))

    def inner(self, other: "LineSignal") -> complex:
        if self.grid != other.grid:
            raise GridMismatchError("signals live on different grids")
        return complex(self.grid.spacing * np.sum(np.conj(self.values) * other.values))


def affine_action(f: LineSignal, a: float, b: float) -> LineSignal:
    """Unitary affine action a^(-1/2) f((x-b)/a) on the same grid."""
    if not (a > 0.0 and np.isfinite(a)):
        raise ValueError(f"dilation must be positive and finite, got {a}")

    def acted(x):
        return a ** -0.5 * f((np.asarray(x, dtype=float) - b) / a)

    if f.evaluator is not None:
        return LineSignal.from_evaluator(f.grid, acted)
    return LineSignal(f.grid, acted(f.grid.nodes))


def spectrum(f: LineSignal) -> np.ndarray:
    """Continuum Fourier transform samples G^(k) at grid.freqs (FFT order)."""
    g = f.grid
    raw = np.fft.fft(f.values)
    # midpoint-free uniform grid: phase anchors the window origin
    return (g.spacing / np.sqrt(2.0 * np.pi)) * raw * np.exp(-1j * g.freqs * g.lo)


@dataclass(frozen=True)
class LineAdmissibility:
    """Admissibility constant split by frequency sign; c_total = c_pos + c_neg."""

    c_total: float
    c_pos: float
    c_neg: float
    converged: bool
    admissible: bool


def line_admissibility(gamma: LineSignal) -> LineAdmissibility:
    """Discrete admissibility integral sum_k |G^(k)|^2/|k| dk, k = 0 excluded.

    The k = 0 bin is excluded from the sum, so convergence is judged by
    whether |G^|^2/|k| decays toward the smallest kept frequencies; a
    wavelet with nonvanishing mean fails that and is flagged divergent.
    """
    g = gamma.grid
    sp = spectrum(gamma)
    k = g.freqs
    dk = 2.0 * np.pi / (g.hi - g.lo)
    dens = np.zeros_like(k)
    nz = k != 0.0
    dens[nz] = np.abs(sp[nz]) ** 2 / np.abs(k[nz])
    c_pos = float(np.sum(dens[k > 0]) * dk)
    c_neg = float(np.sum(dens[k < 0]) * dk)
    peak = float(dens.max()) if dens.size else 0.0
    # the smallest nonzero |k| bin on each side must sit well below the peak;
    # a diverging 1/|k| density instead peaks right there
    small = np.argsort(np.abs(np.where(nz, k, np.inf)))[:2]
    converged = peak == 0.0 or float(dens[small].max()) < 1e-1 * peak
    admissible = bool(converged and c_pos > 0.0 and c_neg > 0.0)
    return LineAdmissibility(c_pos + c_neg, c_pos, c_neg, bool(converged), admissible)


def mexican_hat(grid: LineGrid | None = None) -> LineSignal:
    """Second-derivative-of-Gaussian wavelet (1 - x^2) e^{-x^2/2}."""
    grid = grid or LineGrid(-16.0, 16.0, DEFAULT_LINE_SAMPLES)

    def hat(x):
        x = np.asarray(x, dtype=float)
        return (1.0 - x * x) * np.exp(-0.5 * x * x)

    return LineSignal.from_evaluator(grid, hat)


@dataclass(frozen=True)
class LineScaleGrid:
    """Log-uniform scales for the line transform (same machinery as the circle)."""

    a_min: float
    a_max: float
    count: int

    def __post_init__(self):
        if not (0.0 < self.a_min < self.a_max):
            raise ValueError(f"need 0 < a_min < a_max, got [{self.a_min}, {self.a_max}]")
        if self.count < 2:
            raise ValueError(f"need at least 2 scale nodes, got {self.count}")

    @property
    def nodes(self) -> np.ndarray:
        return np.geomspace(self.a_min, self.a_max, self.count)

    @property
    def log_weights(self) -> np.ndarray:
        d = np.log(self.a_max / self.a_min) / (self.count - 1)
        w = np.full(self.count, d)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w


@dataclass(frozen=True, eq=False)
class LineScalogram:
    """Affine wavelet coefficients on translate x scale; b-grid = signal grid."""

    scales: LineScaleGrid
    grid: LineGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=complex)
        if v.shape != (self.scales.count, self.grid.n_samples):
            raise ValueError(
                f"values shape {v.shape} does not match "
                f"({self.scales.count}, {self.grid.n_samples})"
            )
        object.__setattr__(self, "values", v)


def _wavelet_stencil(gamma: LineSignal, grid: LineGrid, a: float) -> np.ndarray:
    """a^{-1/2} G(delta/a) on the signed circular offset grid of `grid`."""
    n = grid.n_samples
    offs = (np.arange(n) + n // 2) % n - n // 2
    delta = offs * grid.spacing
    return a ** -0.5 * gamma(delta / a)


def line_analyze(psi: LineSignal, gamma: LineSignal, scales: LineScaleGrid) -> LineScalogram:
    """W(b, a) = <U(a,b) gamma | psi> for b on the signal grid, per-scale FFT.

    Circular cross-correlation over the periodized window; both signals
    must decay inside the window for the wraparound to be harmless.
    """
    g = psi.grid
    F = np.fft.fft(psi.values)
    out = np.empty((scales.count, g.n_samples), dtype=complex)
    for j, a in enumerate(scales.nodes):
        st = _wavelet_stencil(gamma, g, a)
        out[j] = g.spacing * np.fft.ifft(F * np.conj(np.fft.fft(st)))
    return LineScalogram(scales=scales, grid=g, values=out)


def line_analyze_direct(psi: LineSignal, gamma: LineSignal, a: float, b: float) -> complex:
    """Single coefficient by direct quadrature (oracle route)."""
    return affine_action(gamma, a, b).inner(psi)


def line_synthesize(
    scalogram: LineScalogram,
    gamma: LineSignal,
    adm: LineAdmissibility,
    mode_floor: float = 1e-12,
) -> LineSignal:
    """Reconstruct from int int W(b,a) (U(a,b) gamma)(x) db da/a^2.

    Normalized per frequency half-line by 2 pi C_sgn(k) (the exact
    resolution constant); frequencies on a half-line with constant below
    mode_floor * C_total are dropped, k = 0 included.
    """
    g = scalogram.grid
    acc = np.zeros(g.n_samples, dtype=complex)
    for j, a in enumerate(scalogram.scales.nodes):
        st = _wavelet_stencil(gamma, g, a)
        conv = np.fft.ifft(np.fft.fft(scalogram.values[j]) * np.fft.fft(st))
        acc += (scalogram.scales.log_weights[j] / a) * g.spacing * conv
    k = g.freqs
    acc_hat = np.fft.fft(acc)
    floor = mode_floor * max(adm.c_total, 1e-300)
    scale_fac = np.zeros(g.n_samples)
    pos = (k > 0) & (adm.c_pos > floor)
    neg = (k < 0) & (adm.c_neg > floor)
    scale_fac[pos] = 1.0 / (2.0 * np.pi * adm.c_pos)
    scale_fac[neg] = 1.0 / (2.0 * np.pi * adm.c_neg)
    return LineSignal(g, np.fft.ifft(acc_hat * scale_fac))


@dataclass(frozen=True)
class LogGrid:
    """Log-uniform grid on [r_min, r_max] carrying the measure dr/r."""

    r_min: float
    r_max: float
    n_samples: int

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError(f"need 0 < r_min < r_max, got [{self.r_min}, {self.r_max}]")
        if self.n_samples < 8:
            raise ValueError(f"n_samples must be >= 8, got {self.n_samples}")

    @property
    def log_spacing(self) -> float:
        return np.log(self.r_max / self.r_min) / (self.n_samples - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.geomspace(self.r_min, self.r_max, self.n_samples)


@dataclass(frozen=True, eq=False)
class RPlusFunction:
    """Function on the positive half-line with the scale-invariant measure."""

    grid: LogGrid
    values: np.ndarray
    evaluator: Callable[[np.ndarray], np.ndarray] | None = field(default=None)

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=complex)
        if v.shape != (self.grid.n_samples,):
            raise ValueError(
                f"values shape {v.shape} does not match grid ({self.grid.n_samples},)"
            )
        object.__setattr__(self, "values", v)

    @staticmethod
    def from_evaluator(grid: LogGrid, fn: Callable) -> "RPlusFunction":
        return RPlusFunction(grid, np.asarray(fn(grid.nodes), dtype=complex), evaluator=fn)

    def __call__(self, r) -> np.ndarray:
        rs = np.asarray(r, dtype=float)
        if self.evaluator is not None:
            return np.asarray(self.evaluator(rs), dtype=complex)
        x = np.log(rs)
        xg = np.log(self.grid.nodes)
        re = np.interp(x, xg, self.values.real, left=0.0, right=0.0)
        im = np.interp(x, xg, self.values.imag, left=0.0, right=0.0)
        return re + 1j * im

    def norm(self) -> float:
        return float(
            np.sqrt(self.grid.log_spacing * np.sum(np.abs(self.values) ** 2))
        )


def rplus_action(phi: RPlusFunction, a: float, b: float) -> RPlusFunction:
    """Fourier-picture affine action (U(a,b) phi)(r) = e^{-i r b} phi(a r)."""
    if not (a > 0.0 and np.isfinite(a)):
        raise ValueError(f"dilation must be positive and finite, got {a}")

    def acted(r):
        r = np.asarray(r, dtype=float)
        return np.exp(-1j * r * b) * phi(a * r)

    if phi.evaluator is not None:
        return RPlusFunction.from_evaluator(phi.grid, acted)
    return RPlusFunction(phi.grid, acted(phi.grid.nodes))
