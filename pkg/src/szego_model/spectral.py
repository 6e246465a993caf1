"""Spectra of compressed Toeplitz matrices and Szego-type distribution experiments.

A sequence A_n is distributed as g when, for every continuous compactly
supported G,

    (1/dim) sum_k G(value_k(A_n))  ->  (1/2pi) int_T G(g(xi)) |dxi|.

The experiments here tabulate both sides for hat-shaped G along a schedule of
n and report the gap.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .blaschke import BlaschkeProduct
from .circle_quadrature import CircleGrid, GridFunction, default_grid_size, integrate_mean
from .compression import CompressedMatrix, compress_analytic, compress_quadrature
from .malmquist import build_basis
from .symbol import (
    FourierSymbol,
    M1Symbol,
    SampledSymbol,
    gamma_inverse_single_zero,
    real_valued,
)

__all__ = [
    "NotHermitianError",
    "Hat",
    "hat_family",
    "default_family",
    "SpectrumResult",
    "jacobi_eigh",
    "hermitian_eigenvalues",
    "singular_values",
    "empirical_average",
    "limit_integral",
    "limit_function",
    "ReportRow",
    "DistributionReport",
    "szego_experiment",
    "gaps_nonincreasing",
]

HERMITIAN_TOL = 1e-9
CSV_COLUMNS = ("n", "dim", "G_center", "G_width", "mode", "empirical", "limit", "gap")


class NotHermitianError(ValueError):
    pass


@dataclass(frozen=True)
class Hat:
    """G(x) = max(0, 1 - |x - center| / width), supported on [center-width, center+width]."""

    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"hat width must be positive, got {self.width}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.maximum(0.0, 1.0 - np.abs(x - self.center) / self.width)


def hat_family(centers: Iterable[float], widths: Iterable[float]) -> list[Hat]:
    widths = list(widths)
    return [Hat(float(c), float(w)) for w in widths for c in centers]


def default_family(values, widths=(1.0, 0.5, 0.25), count: int = 5) -> list[Hat]:
    """Hats whose centers span the range of the limit function's values."""
    v = np.asarray(values, dtype=float)
    lo, hi = float(np.min(v)), float(np.max(v))
    return hat_family(np.linspace(lo, hi, count), widths)


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    values: np.ndarray
    kind: str
    residual: float

    def __len__(self):
        return len(self.values)


def _entries(A) -> np.ndarray:
    return np.asarray(A.entries if isinstance(A, CompressedMatrix) else A, dtype=complex)


def jacobi_eigh(A, tol: float = 1e-11, max_sweeps: int = 100):
    """Cyclic Jacobi eigensolver for a complex Hermitian matrix.

    Each rotation first removes the phase of a_pq and then applies the real
    symmetric rotation with tan(2 theta) = 2|a_pq| / (a_qq - a_pp).  Sweeps
    stop once the off-diagonal Frobenius norm is at most ``tol * ||A||_F``.

    Returns:
        (eigenvalues ascending, eigenvectors as columns, sweeps used)
    """
    A = np.array(_entries(A), dtype=complex)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = np.linalg.norm(A) or 1.0
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        off = np.sqrt(np.sum(np.abs(A) ** 2) - np.sum(np.abs(np.diag(A)) ** 2))
        if off <= tol * scale:
            sweeps -= 1
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                theta = 0.5 * np.arctan2(2 * mag, (A[q, q] - A[p, p]).real)
                c, s = np.cos(theta), np.sin(theta)
                # J = [[c, s], [-s conj(phase), c conj(phase)]] on (p, q)
                colp = A[:, p].copy()
                colq = A[:, q]
                A[:, p] = c * colp - s * phase.conjugate() * colq
                A[:, q] = s * colp + c * phase.conjugate() * colq
                rowp = A[p, :].copy()
                rowq = A[q, :]
                A[p, :] = c * rowp - s * phase * rowq
                A[q, :] = s * rowp + c * phase * rowq
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                vp = V[:, p].copy()
                V[:, p] = c * vp - s * phase.conjugate() * V[:, q]
                V[:, q] = s * vp + c * phase.conjugate() * V[:, q]
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    w = np.diag(A).real
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order], sweeps


def hermitian_eigenvalues(A, method: str = "lapack") -> SpectrumResult:
    """Real eigenvalues of a Hermitian matrix, ascending.

    ``method="lapack"`` uses the tridiagonal reduction behind numpy.linalg.eigh;
    ``method="jacobi"`` uses :func:`jacobi_eigh`.  Raises NotHermitianError when
    ``max|A - A*|`` exceeds 1e-9: eigenvalue distributions are only claimed for
    real-valued symbols.
    """
    M = _entries(A)
    defect = float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0
    if defect > HERMITIAN_TOL:
        raise NotHermitianError(
            f"matrix is not Hermitian (max |A - A*| = {defect:.3e} > {HERMITIAN_TOL:g}); "
            "eigenvalue distribution requires a real-valued symbol"
        )
    H = (M + M.conj().T) / 2
    if method == "lapack":
        w, V = np.linalg.eigh(H)
    elif method == "jacobi":
        w, V, _ = jacobi_eigh(H)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    residual = float(np.max(np.linalg.norm(M @ V - V * w, axis=0))) if w.size else 0.0
    return SpectrumResult(w, "eigen", residual)


def singular_values(A) -> SpectrumResult:
    """Singular values ascending; residual is the max-norm SVD reconstruction error."""
    M = _entries(A)
    U, s, Vh = np.linalg.svd(M)
    residual = float(np.max(np.abs((U * s) @ Vh - M))) if M.size else 0.0
    return SpectrumResult(s[::-1].copy(), "singular", residual)


def empirical_average(spec: SpectrumResult, G) -> float:
    """(1/dim) sum_k G(value_k)."""
    return float(np.mean(G(spec.values)))


def limit_integral(g, G) -> float:
    """Grid mean of G(g(xi)); ``g`` must be real-valued (pass |g| for singular values)."""
    if isinstance(g, SampledSymbol):
        g = g.samples
    return float(integrate_mean(g.map(lambda v: G(v.real))).real)


def _is_single_zero(B: BlaschkeProduct) -> bool:
    return B.p == 1 and B.multiplicities[0] == 1


def limit_function(B: BlaschkeProduct, symbol, grid: CircleGrid, mode: str) -> GridFunction:
    """The function g the spectra are distributed as.

    * coefficient series in powers of B: sum a_t z^t (same coefficients against z);
    * boundary samples with B = b_lam: f o b_{-lam} (f itself when lam = 0).

    Singular-value mode takes the modulus.
    """
    if isinstance(symbol, M1Symbol):
        g = symbol.representative().sample(grid)
    elif isinstance(symbol, (SampledSymbol, FourierSymbol)):
        if not _is_single_zero(B):
            raise ValueError(
                "no known limit for a general symbol unless B has a single simple zero; "
                "expand the symbol in powers of B instead"
            )
        f = symbol if isinstance(symbol, SampledSymbol) else SampledSymbol.from_function(symbol, grid)
        g = gamma_inverse_single_zero(B.zeros[0][0], f.on(grid)).samples
    else:
        raise TypeError(f"unsupported symbol type {type(symbol).__name__}")
    if mode == "singular":
        return g.map(np.abs)
    return g.map(np.real)


@dataclass(frozen=True)
class ReportRow:
    n: int
    dim: int
    G_center: float
    G_width: float
    mode: str
    empirical: float
    limit: float
    gap: float


def _fmt(x) -> str:
    return repr(float(x)) if isinstance(x, (float, np.floating)) else str(x)


@dataclass
class DistributionReport:
    rows: list[ReportRow]
    meta: dict = field(default_factory=dict)

    def gaps(self, G: Hat, mode: str) -> list[float]:
        return [r.gap for r in self.rows
                if r.G_center == G.center and r.G_width == G.width and r.mode == mode]

    def schedule(self) -> list[int]:
        out: list[int] = []
        for r in self.rows:
            if r.n not in out:
                out.append(r.n)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([_fmt(getattr(r, c)) for c in CSV_COLUMNS])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "DistributionReport":
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        rows = [
            ReportRow(int(d["n"]), int(d["dim"]), float(d["G_center"]), float(d["G_width"]),
                      d["mode"], float(d["empirical"]), float(d["limit"]), float(d["gap"]))
            for d in reader
        ]
        return cls(rows)

    def to_json(self) -> str:
        return json.dumps({"meta": self.meta, "rows": [asdict(r) for r in self.rows]},
                          indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DistributionReport":
        data = json.loads(text)
        return cls([ReportRow(**r) for r in data["rows"]], data.get("meta", {}))


def _thread_count(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("SZEGO_THREADS", "1") or 1)
    return max(1, threads)


def szego_experiment(B: BlaschkeProduct, symbol, n_schedule: Sequence[int],
                     family: Optional[Sequence[Hat]] = None, mode: str = "eigen",
                     grid_size: Optional[int] = None, path: str = "auto",
                     threads: Optional[int] = None) -> DistributionReport:
    """Compare spectral averages on K_{B^n} with their limit for each n.

    Args:
        B: the Blaschke product defining the model spaces.
        symbol: an ``M1Symbol`` over ``B`` (analytic path available), or a
            ``SampledSymbol``/``FourierSymbol`` (quadrature only; the limit is
            known when B has a single simple zero).
        n_schedule: strictly increasing powers n.
        family: hat test functions; defaults to hats spanning the range of g.
        mode: ``"eigen"``, ``"singular"`` or ``"both"``.
        grid_size: quadrature nodes; the default is sized for the largest n.
        path: ``"analytic"``, ``"quadrature"`` or ``"auto"`` (analytic when
            the symbol is an ``M1Symbol``).
        threads: worker count; defaults to ``$SZEGO_THREADS`` or 1.
    """
    n_schedule = [int(n) for n in n_schedule]
    if not n_schedule:
        raise ValueError("n_schedule is empty")
    if any(n < 1 for n in n_schedule):
        raise ValueError("n must be >= 1")
    if any(b <= a for a, b in zip(n_schedule, n_schedule[1:])):
        raise ValueError("n_schedule must be strictly increasing")
    modes = ("eigen", "singular") if mode == "both" else (mode,)
    if any(m not in ("eigen", "singular") for m in modes):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(symbol, M1Symbol) and symbol.B != B:
        raise ValueError("symbol is expanded in powers of a different Blaschke product")
    if path == "auto":
        path = "analytic" if isinstance(symbol, M1Symbol) else "quadrature"
    if path == "analytic" and not isinstance(symbol, M1Symbol):
        raise ValueError("the analytic path needs the symbol's coefficients in powers of B")

    bandwidth = symbol.bandwidth if hasattr(symbol, "bandwidth") else 0
    if grid_size is None:
        grid_size = default_grid_size(max(n_schedule), B.degree, bandwidth, B.sup_derivative())
    grid = CircleGrid(grid_size)

    if isinstance(symbol, FourierSymbol):
        symbol = SampledSymbol.from_function(symbol, grid)
    if isinstance(symbol, SampledSymbol):
        symbol = symbol.on(grid)
    if "eigen" in modes and not real_valued(symbol, grid):
        raise NotHermitianError(
            "eigen mode requires a real-valued symbol (eigenvalue distribution "
            "is only established for real symbols)"
        )

    limits = {m: limit_function(B, symbol, grid, m) for m in modes}
    if family is None:
        family = default_family(limits[modes[0]].values.real)
    family = list(family)
    limit_values = {(m, G): limit_integral(limits[m], G) for m in modes for G in family}
    samples = symbol.sample(grid) if path == "quadrature" else None

    def run(n: int) -> list[ReportRow]:
        if path == "analytic":
            A = compress_analytic(symbol, B, n)
        else:
            A = compress_quadrature(samples, build_basis(B, n, grid))
        rows = []
        for m in modes:
            spec = hermitian_eigenvalues(A) if m == "eigen" else singular_values(A)
            for G in family:
                emp = empirical_average(spec, G)
                lim = limit_values[(m, G)]
                rows.append(ReportRow(n, A.dim, G.center, G.width, m, emp, lim, abs(emp - lim)))
        return rows

    workers = min(_thread_count(threads), len(n_schedule))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, n_schedule))
    else:
        chunks = [run(n) for n in n_schedule]

    meta = {
        "blaschke": [[lam.real, lam.imag, m] for lam, m in B.zeros],
        "grid_size": grid_size,
        "path": path,
        "modes": list(modes),
    }
    return DistributionReport([r for chunk in chunks for r in chunk], meta)


def gaps_nonincreasing(gaps: Sequence[float], allowance: float = 0.2) -> bool:
    """Each gap is at most the previous one plus ``allowance`` times the larger of the two."""
    return all(b <= a + allowance * max(a, b) for a, b in zip(gaps, gaps[1:]))
