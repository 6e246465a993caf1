"""Matrices of compressed Toeplitz operators on K_{B^n} in the Malmquist basis.

Entry convention, used throughout: ``A[row, col] = <phi * u_col, u_row>``.
Columns index the input vector, so inside a diagonal block the entry at
(row offset l, column offset i) is a_{l-i}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np
import scipy.linalg

from .blaschke import BlaschkeProduct
from .circle_quadrature import CircleGrid, GridFunction, GridMismatchError, inner_product
from .malmquist import MalmquistBasis, basis_element
from .symbol import FourierSymbol, M1Symbol, SampledSymbol

__all__ = [
    "CompressedMatrix",
    "ClassicalToeplitz",
    "BlockDeviation",
    "classical_toeplitz",
    "compress_quadrature",
    "compress_analytic",
    "lemma7_entry",
    "block_deviation",
]


@dataclass(frozen=True, eq=False)
class CompressedMatrix:
    """Dense matrix of T_{phi, K_{B^n}} in the basis Sigma.

    ``path`` records how it was obtained: ``"analytic"`` (block formula, no
    quadrature) or ``"quadrature"`` (entrywise inner products).
    """

    entries: np.ndarray = field(repr=False)
    B: BlaschkeProduct
    n: int
    symbol: str
    path: str

    def __post_init__(self):
        A = np.array(self.entries, dtype=complex)
        dim = self.n * self.B.degree
        if A.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got shape {A.shape}")
        A.flags.writeable = False
        object.__setattr__(self, "entries", A)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def hermitian_defect(self) -> float:
        A = self.entries
        return float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0


@dataclass(frozen=True, eq=False)
class ClassicalToeplitz:
    """The n x n Toeplitz matrix T_{phi, K_{z^n}}, entry (l, i) = a_{l-i}."""

    n: int
    symbol: FourierSymbol
    entries: np.ndarray = field(repr=False)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def classical_toeplitz(coeffs: FourierSymbol | M1Symbol, n: int) -> ClassicalToeplitz:
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(coeffs, M1Symbol):
        coeffs = coeffs.representative()
    column = [coeffs.coefficient(t) for t in range(n)]
    row = [coeffs.coefficient(-t) for t in range(n)]
    A = scipy.linalg.toeplitz(column, row).astype(complex)
    A.flags.writeable = False
    return ClassicalToeplitz(n, coeffs, A)


def _describe(symbol) -> str:
    if isinstance(symbol, M1Symbol):
        return "m1:" + _coeff_text(symbol)
    if isinstance(symbol, FourierSymbol):
        return "fourier:" + _coeff_text(symbol)
    return "samples"


def _coeff_text(s) -> str:
    return ";".join(f"{t}={c.real:g}{c.imag:+g}j" for t, c in s.as_dict().items())


def compress_quadrature(phi: Union[SampledSymbol, GridFunction],
                        basis: MalmquistBasis) -> CompressedMatrix:
    """Entrywise ``<phi u_col, u_row>`` by grid quadrature.

    No projection is formed: u_row already lies in the model space.
    """
    samples = phi.samples if isinstance(phi, SampledSymbol) else phi
    if samples.grid != basis.grid:
        raise GridMismatchError(
            f"symbol sampled on {samples.grid.size} nodes, basis on {basis.grid.size}"
        )
    U = basis.elements
    A = (U.conj() * samples.values) @ U.T / basis.grid.size
    return CompressedMatrix(A, basis.B, basis.n, "samples", "quadrature")


def compress_analytic(s: M1Symbol, B: BlaschkeProduct | None, n: int) -> CompressedMatrix:
    """Block diagonal matrix with |Z(B)| copies of the n x n Toeplitz block of s."""
    B = s.B if B is None else B
    if B != s.B:
        raise ValueError("symbol is expanded in powers of a different Blaschke product")
    T = classical_toeplitz(s.representative(), n).entries
    A = np.kron(np.eye(B.degree), T)
    return CompressedMatrix(A, B, n, _describe(s), "analytic")


def lemma7_entry(B: BlaschkeProduct, i: int, l: int, t: int, idx1, idx2,
                 grid: CircleGrid) -> complex:
    """Quadrature value of <B^t B^i e_{idx1}, B^l e_{idx2}>.

    Expected to equal 1 when t + i == l and idx1 == idx2, and 0 otherwise.
    """
    if i < 0 or l < 0:
        raise ValueError("powers i and l must be non-negative")
    left = B.power_on(grid, t + i) * basis_element(B, idx1, grid)
    right = B.power_on(grid, l) * basis_element(B, idx2, grid)
    return inner_product(left, right)


class BlockDeviation(NamedTuple):
    offdiag: float
    blockspread: float
    toeplitzspread: float


def block_deviation(A: CompressedMatrix) -> BlockDeviation:
    """Distance of ``A`` from |Z(B)| equal Toeplitz diagonal blocks of size n."""
    n, d = A.n, A.B.degree
    E = A.entries
    blocks = [E[b * n:(b + 1) * n, b * n:(b + 1) * n] for b in range(d)]
    mask = np.kron(np.eye(d, dtype=bool), np.ones((n, n), dtype=bool))
    off = float(np.max(np.abs(E[~mask]))) if d > 1 else 0.0
    spread = 0.0
    for a in range(d):
        for b in range(a + 1, d):
            spread = max(spread, float(np.max(np.abs(blocks[a] - blocks[b]))))
    tspread = 0.0
    for blk in blocks:
        for k in range(-(n - 1), n):
            diag = np.diagonal(blk, k)
            tspread = max(tspread, float(np.max(np.abs(diag - diag[0]))))
    return BlockDeviation(off, spread, tspread)
