"""Finite Blaschke products on the unit disk."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .circle_quadrature import CircleGrid, GridFunction, integrate_mean

__all__ = [
    "BlaschkeProduct",
    "moebius",
    "compose_moebius",
    "evaluate",
    "derivative_on_circle",
    "winding_number",
    "boundary_phase",
    "delta",
]


def _check_disk(lam: complex):
    if not abs(lam) < 1:
        raise ValueError(f"zero outside open disk: {lam!r}")


def moebius(lam: complex, z):
    """The Blaschke factor b_lam(z) = (z - lam) / (1 - conj(lam) z)."""
    lam = complex(lam)
    _check_disk(lam)
    z = np.asarray(z, dtype=complex)
    return (z - lam) / (1.0 - lam.conjugate() * z)


def compose_moebius(lam: complex, z):
    """b_lam(b_{-lam}(z)); the identity map for every lam in the disk."""
    return moebius(lam, moebius(-complex(lam), z))


@dataclass(frozen=True)
class BlaschkeProduct:
    """B(z) = prod_j b_{lam_j}(z)^{m_j} with distinct zeros lam_j.

    ``zeros`` is a tuple of ``(lam_j, m_j)`` pairs.  The order is kept as
    given: it fixes the labelling j = 1..p of the Malmquist basis.
    """

    zeros: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        cleaned = []
        for pair in self.zeros:
            lam, m = pair
            lam = complex(lam)
            _check_disk(lam)
            if int(m) != m or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            cleaned.append((lam, int(m)))
        if not cleaned:
            raise ValueError("a constant Blaschke product has a trivial model space")
        lams = [lam for lam, _ in cleaned]
        for a in range(len(lams)):
            for b in range(a + 1, len(lams)):
                if lams[a] == lams[b]:
                    raise ValueError(
                        f"zero {lams[a]!r} listed twice; give it a multiplicity instead"
                    )
        object.__setattr__(self, "zeros", tuple(cleaned))

    @classmethod
    def from_zeros(cls, zeros: Iterable[complex]) -> "BlaschkeProduct":
        """Build from a flat list; repeated entries become multiplicities."""
        pairs: list[list] = []
        for lam in zeros:
            lam = complex(lam)
            for pair in pairs:
                if pair[0] == lam:
                    pair[1] += 1
                    break
            else:
                pairs.append([lam, 1])
        return cls(tuple((lam, m) for lam, m in pairs))

    @classmethod
    def identity(cls) -> "BlaschkeProduct":
        """B(z) = z, the classical case."""
        return cls(((0j, 1),))

    @property
    def points(self) -> np.ndarray:
        return np.array([lam for lam, _ in self.zeros], dtype=complex)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.zeros)

    @property
    def degree(self) -> int:
        """|Z(B)|, the zero count with multiplicity."""
        return sum(self.multiplicities)

    @property
    def p(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return evaluate(self, z)

    def derivative(self, z):
        """B'(z) by the product rule."""
        z = np.asarray(z, dtype=complex)
        factors = [moebius(lam, z) for lam, _ in self.zeros]
        total = np.zeros(np.shape(z), dtype=complex)
        for j, (lam, m) in enumerate(self.zeros):
            term = m * factors[j] ** (m - 1) * (1 - abs(lam) ** 2) / (1 - lam.conjugate() * z) ** 2
            for i, (_, mi) in enumerate(self.zeros):
                if i != j:
                    term = term * factors[i] ** mi
            total = total + term
        return total

    def abs_derivative_on_circle(self, xi):
        """|B'(xi)| for |xi| = 1, via sum_j m_j (1 - |lam_j|^2) / |1 - conj(lam_j) xi|^2."""
        xi = np.asarray(xi, dtype=complex)
        out = np.zeros(np.shape(xi))
        for lam, m in self.zeros:
            out = out + m * (1 - abs(lam) ** 2) / np.abs(1 - lam.conjugate() * xi) ** 2
        return out

    def sup_derivative(self) -> float:
        """sup over the circle of |B'|, bounded above by sum m (1+|lam|)/(1-|lam|)."""
        grid = CircleGrid(4096)
        # the maximum of each term sits at xi = lam/|lam|; include those points
        extra = [lam / abs(lam) for lam, _ in self.zeros if lam != 0]
        pts = np.concatenate([grid.nodes, np.array(extra, dtype=complex)])
        return float(np.max(self.abs_derivative_on_circle(pts)))

    def power_on(self, grid: CircleGrid, t: int) -> GridFunction:
        """Samples of B^t; negative powers use conj(B) since |B| = 1 on T."""
        b = self(grid.nodes)
        if t < 0:
            b = b.conj()
        return GridFunction(grid, b ** abs(t))


def evaluate(B: BlaschkeProduct, z):
    """prod_j ((z - lam_j) / (1 - conj(lam_j) z))^{m_j}, factors in stored order."""
    z = np.asarray(z, dtype=complex)
    for lam, _ in B.zeros:
        if lam != 0 and np.any(z == 1 / lam.conjugate()):
            raise ZeroDivisionError(f"pole of B at {1 / lam.conjugate()!r}")
    out = np.ones(np.shape(z), dtype=complex)
    for lam, m in B.zeros:
        out = out * moebius(lam, z) ** m
    return out if out.ndim else complex(out)


def derivative_on_circle(B: BlaschkeProduct, grid: CircleGrid) -> GridFunction:
    """Samples of B'(xi) on the grid nodes."""
    return GridFunction(grid, B.derivative(grid.nodes))


def winding_number(B: BlaschkeProduct, grid: CircleGrid) -> float:
    """(1/2 pi i) of the contour integral of B'/B, as a grid mean of xi B'(xi)/B(xi)."""
    xi = grid.nodes
    integrand = GridFunction(grid, xi * B.derivative(xi) / B(xi))
    return integrate_mean(integrand).real


def boundary_phase(B: BlaschkeProduct, grid: CircleGrid) -> np.ndarray:
    """Unwrapped arg B(e^{i theta}) at the grid angles (strictly increasing)."""
    return np.unwrap(np.angle(B(grid.nodes)))


def delta(B: BlaschkeProduct) -> complex:
    """B(0) = prod_j (-lam_j)^{m_j}; always |B(0)| < 1."""
    out = 1 + 0j
    for lam, m in B.zeros:
        out *= (-lam) ** m
    return out


def as_blaschke(zeros: Sequence) -> BlaschkeProduct:
    """Coerce ``[(lam, m), ...]`` or a BlaschkeProduct."""
    if isinstance(zeros, BlaschkeProduct):
        return zeros
    return BlaschkeProduct(tuple((complex(lam), m) for lam, m in zeros))
