"""Orthonormal (Malmquist) basis of the model space K_{B^n}.

For B = prod_j b_{lam_j}^{m_j} the basis of K_B is

    e_j^r = b_{lam_j}^r * prod_{i<j} b_{lam_i}^{m_i} * k_{lam_j},
        j = 1..p, r = 0..m_j - 1,

and K_{B^n} is spanned by B^k e_j^r for k = 0..n-1.  Elements are stored in
the flat order ``block(j, r) * n + k`` where ``block(j, r) = sum_{i<j} m_i + r``:
one contiguous run of n elements per (j, r), which is the order in which the
compression of a symbol in the span of {B^t} is block diagonal.

Zero labels j are 1-based, matching the usual notation; r and k are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .blaschke import BlaschkeProduct, moebius
from .circle_quadrature import CircleGrid, GridFunction

__all__ = [
    "BasisIndex",
    "MalmquistBasis",
    "kernel_sample",
    "basis_element",
    "build_basis",
    "gram_matrix",
    "block_index",
]


class BasisIndex(NamedTuple):
    j: int
    r: int
    k: int


def block_index(B: BlaschkeProduct, j: int, r: int) -> int:
    """Position of the (j, r) run among the |Z(B)| runs."""
    _check_jr(B, j, r)
    return sum(B.multiplicities[: j - 1]) + r


def _check_jr(B: BlaschkeProduct, j: int, r: int):
    if not 1 <= j <= B.p:
        raise IndexError(f"zero index j={j} outside 1..{B.p}")
    m = B.multiplicities[j - 1]
    if not 0 <= r < m:
        raise IndexError(f"offset r={r} outside 0..{m - 1} for zero {j}")


def kernel_sample(lam: complex, grid: CircleGrid) -> GridFunction:
    """Normalized reproducing kernel k_lam(z) = sqrt(1 - |lam|^2) / (1 - conj(lam) z)."""
    lam = complex(lam)
    if not abs(lam) < 1:
        raise ValueError(f"kernel point must lie in the open disk, got {lam!r}")
    z = grid.nodes
    return GridFunction(grid, np.sqrt(1 - abs(lam) ** 2) / (1 - lam.conjugate() * z))


def _element_values(B: BlaschkeProduct, j: int, r: int, z: np.ndarray) -> np.ndarray:
    lam_j = B.zeros[j - 1][0]
    out = np.sqrt(1 - abs(lam_j) ** 2) / (1 - lam_j.conjugate() * z)
    if r:
        out = out * moebius(lam_j, z) ** r
    for lam_i, m_i in B.zeros[: j - 1]:
        out = out * moebius(lam_i, z) ** m_i
    return out


def basis_element(B: BlaschkeProduct, idx, grid: CircleGrid) -> GridFunction:
    """Samples of e_j^r for ``idx = (j, r)``."""
    j, r = idx
    _check_jr(B, j, r)
    return GridFunction(grid, _element_values(B, j, r, grid.nodes))


@dataclass(frozen=True, eq=False)
class MalmquistBasis:
    """The n |Z(B)| basis functions of K_{B^n}, sampled on ``grid``.

    ``elements`` has shape ``(dim, M)``; row ``flat_index(j, r, k)`` holds
    B^k e_j^r.
    """

    B: BlaschkeProduct
    n: int
    grid: CircleGrid
    elements: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.n * self.B.degree

    def __len__(self):
        return self.dim

    def flat_index(self, j: int, r: int, k: int) -> int:
        if not 0 <= k < self.n:
            raise IndexError(f"power offset k={k} outside 0..{self.n - 1}")
        return block_index(self.B, j, r) * self.n + k

    def index(self, flat: int) -> BasisIndex:
        if not 0 <= flat < self.dim:
            raise IndexError(flat)
        block, k = divmod(flat, self.n)
        for j, m in enumerate(self.B.multiplicities, start=1):
            if block < m:
                return BasisIndex(j, block, k)
            block -= m
        raise AssertionError("unreachable")

    def element(self, flat: int) -> GridFunction:
        return GridFunction(self.grid, self.elements[flat])


def build_basis(B: BlaschkeProduct, n: int, grid: CircleGrid) -> MalmquistBasis:
    """Sample the ordered basis of K_{B^n}.  No re-orthogonalization is done."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = n * B.degree
    if grid.size < 8 * dim:
        raise ValueError(
            f"grid of {grid.size} nodes is too coarse for dim K_(B^{n}) = {dim}; "
            f"use at least {8 * dim} nodes"
        )
    z = grid.nodes
    b = B(z)
    rows = np.empty((dim, grid.size), dtype=complex)
    pos = 0
    for j, m in enumerate(B.multiplicities, start=1):
        for r in range(m):
            e = _element_values(B, j, r, z)
            for _ in range(n):
                rows[pos] = e
                e = e * b
                pos += 1
    rows.flags.writeable = False
    return MalmquistBasis(B, n, grid, rows)


def gram_matrix(basis: MalmquistBasis) -> np.ndarray:
    """G[a, b] = <u_a, u_b> over the basis; the identity up to quadrature error."""
    U = basis.elements
    return U @ U.conj().T / basis.grid.size
