"""Uniform-grid quadrature and discrete Fourier analysis on the unit circle.

Every integral in the package is a mean over the M-th roots of unity, i.e. the
trapezoidal rule for the normalized arc-length measure d(xi)/2pi.  For smooth
(rational) integrands this converges geometrically in M.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "CircleGrid",
    "GridFunction",
    "GridMismatchError",
    "integrate_mean",
    "inner_product",
    "fourier_coefficients",
    "default_grid_size",
    "next_power_of_two",
]

MIN_GRID_SIZE = 16
DEFAULT_MIN_SIZE = 4096


class GridMismatchError(ValueError):
    pass


def next_power_of_two(x: float) -> int:
    return 1 << max(0, int(np.ceil(np.log2(max(x, 1)))))


@dataclass(frozen=True)
class CircleGrid:
    """The nodes exp(2 pi i m / M), m = 0..M-1, with M a power of two >= 16."""

    size: int

    def __post_init__(self):
        M = self.size
        if not isinstance(M, (int, np.integer)) or M < MIN_GRID_SIZE:
            raise ValueError(f"grid size must be an integer >= {MIN_GRID_SIZE}, got {M!r}")
        if M & (M - 1):
            raise ValueError(f"grid size must be a power of two, got {M}")

    @cached_property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.size) / self.size

    @cached_property
    def nodes(self) -> np.ndarray:
        # built from the angle, never by repeated multiplication
        z = np.exp(1j * self.angles)
        z.flags.writeable = False
        return z

    def sample(self, func) -> "GridFunction":
        """Sample a vectorized callable of the boundary point xi."""
        values = np.broadcast_to(np.asarray(func(self.nodes), dtype=complex), (self.size,))
        return GridFunction(self, values)

    def constant(self, c: complex) -> "GridFunction":
        return GridFunction(self, np.full(self.size, c, dtype=complex))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples f(xi_m) of a function on the circle."""

    grid: CircleGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.shape != (self.grid.size,):
            raise ValueError(
                f"expected {self.grid.size} samples, got array of shape {v.shape}"
            )
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def _check(self, other: "GridFunction"):
        if other.grid != self.grid:
            raise GridMismatchError(
                f"grid mismatch: {self.grid.size} vs {other.grid.size} nodes"
            )

    def _binary(self, other, op):
        if isinstance(other, GridFunction):
            self._check(other)
            other = other.values
        return GridFunction(self.grid, op(self.values, other))

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __mul__(self, other):
        return self._binary(other, np.multiply)

    __rmul__ = __mul__

    def __neg__(self):
        return GridFunction(self.grid, -self.values)

    def conj(self) -> "GridFunction":
        return GridFunction(self.grid, self.values.conj())

    def map(self, func) -> "GridFunction":
        return GridFunction(self.grid, func(self.values))

    def norm(self) -> float:
        return float(np.sqrt(inner_product(self, self).real))


def integrate_mean(f: GridFunction) -> complex:
    """(1/M) sum_m f(xi_m), the trapezoidal value of (1/2pi) int_T f.

    Exact for trigonometric polynomials of degree < M.
    """
    return complex(np.mean(f.values))


def inner_product(f: GridFunction, g: GridFunction) -> complex:
    """<f, g> = (1/M) sum_m f(xi_m) conj(g(xi_m))."""
    f._check(g)
    return complex(np.vdot(g.values, f.values) / f.grid.size)


def fourier_coefficients(f: GridFunction, t_min: int, t_max: int) -> np.ndarray:
    """Discrete Fourier coefficients hat f(t) for t = t_min..t_max.

    Entry for t is (1/M) sum_m f(xi_m) xi_m^{-t}.  The window must span
    fewer than M indices, otherwise distinct t would alias onto one bin.
    """
    M = f.grid.size
    if t_max < t_min:
        raise ValueError(f"empty window [{t_min}, {t_max}]")
    if t_max - t_min >= M:
        raise ValueError(
            f"window [{t_min}, {t_max}] is wider than the grid ({M} nodes)"
        )
    spectrum = np.fft.fft(f.values) / M
    return spectrum[np.arange(t_min, t_max + 1) % M]


def default_grid_size(n: int, degree: int, bandwidth: int = 0,
                      sup_derivative: float | None = None) -> int:
    """Grid size for model-space computations with power n and |Z(B)| = degree.

    max(4096, 16 n (degree + bandwidth)) rounded up to a power of two.  When
    sup|B'| is known it also guards against zeros close to the circle, where
    B^n oscillates faster than the zero count suggests.
    """
    target = 16 * n * (degree + bandwidth)
    if sup_derivative is not None:
        target = max(target, 8 * (2 * n + bandwidth + 2) * sup_derivative)
    return max(DEFAULT_MIN_SIZE, next_power_of_two(target))
