"""Symbols: coefficient series in powers of B, Fourier series, boundary samples.

Also the map Gamma: (a_t) -> sum_t a_t B^t onto the closed span M1 of the
powers of B, with its two-sided norm bounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple, Optional

import numpy as np

from .blaschke import BlaschkeProduct, delta, moebius
from .circle_quadrature import (
    CircleGrid,
    GridFunction,
    inner_product,
    integrate_mean,
)

__all__ = [
    "M1Symbol",
    "FourierSymbol",
    "SampledSymbol",
    "NormBounds",
    "gamma_map",
    "gram_of_powers",
    "norm_bounds_check",
    "gamma_inverse_single_zero",
    "real_valued",
    "change_of_variables_check",
    "trig_interpolate",
]

REAL_TOL = 1e-10


def _coeff_array(coeffs) -> np.ndarray:
    a = np.array(coeffs, dtype=complex).ravel()
    if a.size == 0:
        raise ValueError("empty coefficient window")
    if not np.all(np.isfinite(a)):
        raise ValueError("coefficients must be finite")
    a.flags.writeable = False
    return a


class _Coefficients:
    """Shared behaviour of finite coefficient windows t_min..t_max."""

    t_min: int
    coeffs: np.ndarray

    @property
    def t_max(self) -> int:
        return self.t_min + len(self.coeffs) - 1

    @property
    def bandwidth(self) -> int:
        return max(abs(self.t_min), abs(self.t_max))

    def coefficient(self, t: int) -> complex:
        if self.t_min <= t <= self.t_max:
            return complex(self.coeffs[t - self.t_min])
        return 0j

    def as_dict(self) -> dict[int, complex]:
        return {self.t_min + i: complex(c) for i, c in enumerate(self.coeffs)}

    def is_hermitian(self) -> bool:
        """a_{-t} == conj(a_t) for every t, i.e. the boundary function is real."""
        ts = range(-self.bandwidth, self.bandwidth + 1)
        return all(
            abs(self.coefficient(-t) - self.coefficient(t).conjugate()) <= REAL_TOL
            for t in ts
        )

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


def _window_from_mapping(coeffs: Mapping[int, complex]):
    ts = sorted(coeffs)
    if not ts:
        raise ValueError("empty coefficient window")
    t_min = ts[0]
    arr = np.zeros(ts[-1] - t_min + 1, dtype=complex)
    for t in ts:
        arr[t - t_min] = coeffs[t]
    return t_min, arr


@dataclass(frozen=True, eq=False)
class FourierSymbol(_Coefficients):
    """phi(z) = sum_t a_t z^t for t in t_min..t_min+len(coeffs)-1."""

    t_min: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t_min", int(self.t_min))
        object.__setattr__(self, "coeffs", _coeff_array(self.coeffs))

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, complex]) -> "FourierSymbol":
        return cls(*_window_from_mapping(coeffs))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for i, a in enumerate(self.coeffs):
            if a != 0:
                out = out + a * z ** (self.t_min + i)
        return out

    def sample(self, grid: CircleGrid) -> GridFunction:
        return grid.sample(self)


@dataclass(frozen=True, eq=False)
class M1Symbol(_Coefficients):
    """phi = sum_t a_t B^t, a finite element of the span of the powers of B."""

    B: BlaschkeProduct
    t_min: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t_min", int(self.t_min))
        object.__setattr__(self, "coeffs", _coeff_array(self.coeffs))

    @classmethod
    def from_dict(cls, B: BlaschkeProduct, coeffs: Mapping[int, complex]) -> "M1Symbol":
        return cls(B, *_window_from_mapping(coeffs))

    def representative(self) -> FourierSymbol:
        """The same coefficients against z^t: the function the spectra follow."""
        return FourierSymbol(self.t_min, self.coeffs)

    def sample(self, grid: CircleGrid) -> GridFunction:
        return gamma_map(self, grid)

    def __call__(self, z):
        return self.representative()(self.B(z))


@dataclass(frozen=True, eq=False)
class SampledSymbol:
    """Boundary values on a grid, optionally with the exact function behind them.

    ``func`` lets off-grid evaluation (reparametrization, grid changes) be
    exact; without it trigonometric interpolation of the samples is used.
    """

    samples: GridFunction
    func: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if not np.all(np.isfinite(self.samples.values)):
            raise ValueError("symbol samples must be finite")

    @classmethod
    def from_function(cls, func: Callable, grid: CircleGrid) -> "SampledSymbol":
        return cls(grid.sample(func), func)

    @property
    def grid(self) -> CircleGrid:
        return self.samples.grid

    def at(self, points) -> np.ndarray:
        """Values at arbitrary points on the circle."""
        points = np.asarray(points, dtype=complex)
        if self.func is not None:
            return np.asarray(self.func(points), dtype=complex) * np.ones(points.shape)
        return trig_interpolate(self.samples, points)

    def on(self, grid: CircleGrid) -> "SampledSymbol":
        if grid == self.grid:
            return self
        return SampledSymbol(GridFunction(grid, self.at(grid.nodes)), self.func)

    def sample(self, grid: CircleGrid) -> GridFunction:
        return self.on(grid).samples


def trig_interpolate(f: GridFunction, points) -> np.ndarray:
    """Evaluate the trigonometric interpolant of ``f`` at points on the circle.

    The interpolant uses frequencies -M/2..M/2 with the Nyquist coefficient
    split evenly between +-M/2 so that real samples interpolate to a real
    function.  Both halves are summed by Horner's rule.
    """
    M = f.grid.size
    c = np.fft.fft(f.values) / M
    half = M // 2
    pos = c[: half + 1].copy()
    neg = np.concatenate([[0], c[::-1][: half]])  # neg[t] = c_{-t}
    pos[half] *= 0.5
    neg[half] = pos[half]
    w = np.asarray(points, dtype=complex)
    w = w / np.abs(w)
    wc = w.conj()
    p = np.zeros(w.shape, dtype=complex)
    q = np.zeros(w.shape, dtype=complex)
    for t in range(half, 0, -1):
        p = p * w + pos[t]
        q = q * wc + neg[t]
    return p * w + pos[0] + q * wc


def gamma_map(s: M1Symbol, grid: CircleGrid) -> GridFunction:
    """Samples of sum_t a_t B(xi)^t, with B^{-t} = conj(B)^t on the circle."""
    b = s.B(grid.nodes)
    out = np.zeros(grid.size, dtype=complex)
    for i, a in enumerate(s.coeffs):
        if a == 0:
            continue
        t = s.t_min + i
        base = b if t >= 0 else b.conj()
        out += a * base ** abs(t)
    return GridFunction(grid, out)


def gram_of_powers(B: BlaschkeProduct, t_min: int, t_max: int) -> np.ndarray:
    """G[u, v] = <B^{t_min+u}, B^{t_min+v}>: delta^(n-k) for n >= k, conj(delta)^(k-n) otherwise."""
    d = delta(B)
    ts = np.arange(t_min, t_max + 1)
    diff = ts[:, None] - ts[None, :]
    lower = np.power(d, np.abs(diff))
    return np.where(diff >= 0, lower, lower.conj())


class NormBounds(NamedTuple):
    lhs: float
    mid: float
    rhs: float
    ok: bool
    gamma_sq: float


def norm_bounds_check(s: M1Symbol, grid: CircleGrid, slack: float = 1e-8) -> NormBounds:
    """Evaluate (1-|delta|)/2 ||Gamma a||^2 <= ||a||^2 <= sup|B'| ||Gamma a||^2.

    ||Gamma a||^2 comes from quadrature and sup|B'| from the grid maximum.
    """
    g = gamma_map(s, grid)
    gamma_sq = inner_product(g, g).real
    lhs = (1 - abs(delta(s.B))) / 2 * gamma_sq
    mid = s.norm_sq()
    sup = float(np.max(s.B.abs_derivative_on_circle(grid.nodes)))
    rhs = sup * gamma_sq
    ok = lhs <= mid * (1 + slack) + 1e-300 and mid <= rhs * (1 + slack) + 1e-300
    return NormBounds(lhs, mid, rhs, bool(ok), gamma_sq)


def gamma_inverse_single_zero(lam: complex, f: SampledSymbol) -> SampledSymbol:
    """f o b_{-lam}, resampled on f's grid.

    For B = b_lam this takes the boundary function sum a_n b_lam^n to
    sum a_n z^n, i.e. it realizes the inverse of Gamma.
    """
    lam = complex(lam)
    if not abs(lam) < 1:
        raise ValueError(f"lam must lie in the open disk, got {lam!r}")
    if lam == 0:
        return f
    grid = f.grid
    pts = moebius(-lam, grid.nodes)
    func = None
    if f.func is not None:
        inner = f.func
        func = lambda z: inner(moebius(-lam, z))  # noqa: E731
    return SampledSymbol(GridFunction(grid, f.at(pts)), func)


def _boundary_values(s, grid: Optional[CircleGrid]) -> np.ndarray:
    if isinstance(s, SampledSymbol):
        return s.samples.values if grid is None else s.sample(grid).values
    if isinstance(s, GridFunction):
        return s.values
    return s.sample(grid or CircleGrid(4096)).values


def real_valued(s, grid: Optional[CircleGrid] = None, tol: float = REAL_TOL) -> bool:
    """True iff the boundary samples have imaginary part at most ``tol``."""
    return bool(np.max(np.abs(_boundary_values(s, grid).imag)) <= tol)


def change_of_variables_check(h: Callable, B: BlaschkeProduct, grid: CircleGrid, tol: float = 1e-9):
    """Compare int h with int (h o B)|B'| for a non-negative h on the circle.

    Returns ``(lhs, rhs, ok)`` with ``ok = lhs <= rhs + tol``.  Only the
    inequality is checked.
    """
    xi = grid.nodes
    hv = np.asarray(h(xi), dtype=complex)
    if np.max(np.abs(hv.imag)) > REAL_TOL or np.min(hv.real) < -REAL_TOL:
        raise ValueError("h must be non-negative on the circle")
    lhs = integrate_mean(GridFunction(grid, hv)).real
    composed = np.asarray(h(B(xi)), dtype=complex).real * B.abs_derivative_on_circle(xi)
    rhs = integrate_mean(GridFunction(grid, composed)).real
    return lhs, rhs, bool(lhs <= rhs + tol)
