"""Command-line front end: ``szego-model {verify,matrix,szego} --config run.json``.

Exit codes: 0 success, 1 a check failed, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .blaschke import BlaschkeProduct
from .checks import run_checks
from .circle_quadrature import CircleGrid, GridFunction, default_grid_size
from .compression import CompressedMatrix, block_deviation, compress_analytic, compress_quadrature
from .malmquist import build_basis
from .spectral import DistributionReport, hat_family, szego_experiment
from .svg import loglog_chart
from .symbol import FourierSymbol, M1Symbol, SampledSymbol, gamma_map, real_valued

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    blaschke: BlaschkeProduct
    symbol: object
    n_schedule: list[int]
    n: Optional[int] = None
    grid_size: Optional[int] = None
    mode: str = "eigen"
    centers: Optional[list[float]] = None
    widths: list[float] = field(default_factory=lambda: [1.0, 0.5, 0.25])
    output: str = "out"
    seed: int = 0

    @property
    def matrix_n(self) -> int:
        if self.n is not None:
            return self.n
        if self.n_schedule:
            return self.n_schedule[-1]
        return 4


def parse_complex(value) -> complex:
    """Accept a number, ``[re, im]`` or ``{"re": x, "im": y}``."""
    if isinstance(value, bool):
        raise ConfigError(f"not a number: {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, dict) and set(value) <= {"re", "im"}:
        return complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
    raise ConfigError(f"cannot read a complex number from {value!r}")


def _parse_blaschke(raw) -> BlaschkeProduct:
    if not isinstance(raw, list) or not raw:
        raise ConfigError("'blaschke' must be a non-empty list of [re, im, multiplicity]")
    pairs = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) not in (2, 3):
            raise ConfigError(f"bad zero entry {entry!r}; expected [re, im, multiplicity]")
        re, im = float(entry[0]), float(entry[1])
        m = entry[2] if len(entry) == 3 else 1
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ConfigError(f"multiplicity must be a positive integer, got {m!r}")
        if not abs(complex(re, im)) < 1:
            raise ConfigError(f"zero outside open disk: {complex(re, im)}")
        pairs.append((complex(re, im), m))
    try:
        return BlaschkeProduct(tuple(pairs))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _read_samples(raw: dict, base: Path) -> np.ndarray:
    if "values" in raw:
        return np.array([parse_complex(v) for v in raw["values"]], dtype=complex)
    if "path" not in raw:
        raise ConfigError("samples symbol needs 'values' or 'path'")
    path = base / raw["path"]
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read samples file {path}: {exc}") from exc
    vals = []
    for row in csv.reader(io.StringIO(text)):
        if not row or row[0].strip().lower() in ("re", "#"):
            continue
        re = float(row[0])
        im = float(row[1]) if len(row) > 1 and row[1].strip() else 0.0
        vals.append(complex(re, im))
    return np.array(vals, dtype=complex)


def _parse_symbol(raw, B: BlaschkeProduct, base: Path):
    if not isinstance(raw, dict) or "type" not in raw:
        raise ConfigError("'symbol' must be an object with a 'type'")
    kind = raw["type"]
    if kind in ("m1", "fourier"):
        coeffs = raw.get("coefficients")
        if not isinstance(coeffs, list) or not coeffs:
            raise ConfigError("coefficient symbol needs a non-empty 'coefficients' list")
        t_min = raw.get("t_min", 0)
        if not isinstance(t_min, int) or isinstance(t_min, bool):
            raise ConfigError("'t_min' must be an integer")
        a = [parse_complex(c) for c in coeffs]
        return M1Symbol(B, t_min, a) if kind == "m1" else FourierSymbol(t_min, a)
    if kind == "samples":
        vals = _read_samples(raw, base)
        try:
            grid = CircleGrid(len(vals))
        except ValueError as exc:
            raise ConfigError(f"samples: {exc}") from exc
        if not np.all(np.isfinite(vals)):
            raise ConfigError("samples must be finite")
        return SampledSymbol(GridFunction(grid, vals))
    raise ConfigError(f"unknown symbol type {kind!r}; use m1, fourier or samples")


def load_config(path: str | os.PathLike, overrides: Optional[dict] = None) -> RunConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})

    B = _parse_blaschke(data.get("blaschke"))
    symbol = _parse_symbol(data.get("symbol", {"type": "m1", "t_min": -1, "coefficients": [1, 0, 1]}),
                           B, path.parent)
    schedule = data.get("n_schedule", [])
    if not isinstance(schedule, list) or not all(isinstance(n, int) and not isinstance(n, bool)
                                                 for n in schedule):
        raise ConfigError("'n_schedule' must be a list of integers")
    if any(n < 1 for n in schedule):
        raise ConfigError("n must be >= 1")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ConfigError("'n_schedule' must be strictly increasing")
    n = data.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 1):
        raise ConfigError("n must be >= 1")
    grid_size = data.get("grid_size")
    if grid_size is not None:
        try:
            CircleGrid(grid_size)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    mode = data.get("mode", "eigen")
    if mode not in ("eigen", "singular", "both"):
        raise ConfigError(f"mode must be eigen, singular or both, got {mode!r}")
    if mode in ("eigen", "both") and not real_valued(symbol, None):
        raise ConfigError("eigen mode requires a real-valued symbol "
                          "(eigenvalue distribution holds for real symbols only)")
    tf = data.get("test_functions", {})
    if not isinstance(tf, dict):
        raise ConfigError("'test_functions' must be an object with centers and widths")
    centers = tf.get("centers")
    widths = tf.get("widths", [1.0, 0.5, 0.25])
    try:
        widths = [float(w) for w in widths]
        centers = None if centers is None else [float(c) for c in centers]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad test_functions: {exc}") from exc
    if any(w <= 0 for w in widths):
        raise ConfigError("test function widths must be positive")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise ConfigError("'seed' must be an integer")
    return RunConfig(B, symbol, schedule, n, grid_size, mode, centers, widths,
                     str(data.get("output", "out")), seed)


def _complex_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def matrix_to_csv(A: CompressedMatrix) -> str:
    lines = ["rows,cols,path", f"{A.dim},{A.dim},{A.path}"]
    for row in A.entries:
        lines.append(",".join(f"{repr(float(z.real))},{repr(float(z.imag))}" for z in row))
    return "\n".join(lines) + "\n"


def read_matrix_csv(text: str) -> tuple[np.ndarray, str]:
    lines = text.strip().splitlines()
    if lines[0] != "rows,cols,path":
        raise ValueError("missing 'rows,cols,path' header")
    rows, cols, path = lines[1].split(",")
    data = np.array([[float(x) for x in line.split(",")] for line in lines[2:]])
    A = data[:, 0::2] + 1j * data[:, 1::2]
    if A.shape != (int(rows), int(cols)):
        raise ValueError("matrix shape does not match header")
    return A, path


def _matrix_json(A: CompressedMatrix) -> dict:
    return {
        "rows": A.dim, "cols": A.dim, "path": A.path, "n": A.n,
        "entries": [[_complex_json(z) for z in row] for row in A.entries],
    }


def _blaschke_json(B: BlaschkeProduct) -> list:
    return [[lam.real, lam.imag, m] for lam, m in B.zeros]


def cmd_verify(cfg: RunConfig, out: Optional[Path]) -> int:
    symbol = cfg.symbol if isinstance(cfg.symbol, M1Symbol) else None
    n = cfg.n if cfg.n is not None else 4
    checks = run_checks(cfg.blaschke, n, symbol, cfg.grid_size, cfg.seed)
    width = max(len(c.name) for c in checks)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{c.name:<{width}}  deviation={c.deviation: .3e}  threshold={c.threshold:.1e}  {status}")
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "verify.json").write_text(json.dumps(
            {"blaschke": _blaschke_json(cfg.blaschke), "n": n,
             "checks": [c._asdict() for c in checks]}, indent=2, sort_keys=True) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_matrix(cfg: RunConfig, out: Path) -> int:
    B, n, s = cfg.blaschke, cfg.matrix_n, cfg.symbol
    bw = getattr(s, "bandwidth", 0)
    size = cfg.grid_size or (s.grid.size if isinstance(s, SampledSymbol) else
                             default_grid_size(n, B.degree, bw, B.sup_derivative()))
    grid = CircleGrid(size)
    basis = build_basis(B, n, grid)
    out.mkdir(parents=True, exist_ok=True)
    payload = {"blaschke": _blaschke_json(B), "n": n, "grid_size": size}
    if isinstance(s, M1Symbol):
        analytic = compress_analytic(s, B, n)
        quad = compress_quadrature(gamma_map(s, grid), basis)
        agreement = float(np.max(np.abs(analytic.entries - quad.entries)))
        (out / "matrix_analytic.csv").write_text(matrix_to_csv(analytic))
        (out / "matrix_quadrature.csv").write_text(matrix_to_csv(quad))
        payload["analytic"] = _matrix_json(analytic)
        payload["path_agreement_max_deviation"] = agreement
        print(f"path agreement: max |analytic - quadrature| = {agreement:.3e}")
    else:
        quad = compress_quadrature(s.sample(grid), basis)
        (out / "matrix_quadrature.csv").write_text(matrix_to_csv(quad))
        payload["note"] = "analytic path unavailable: symbol not given as coefficients in powers of B"
        print("note: analytic path unavailable for this symbol; wrote quadrature matrix only")
    dev = block_deviation(quad)
    payload["quadrature"] = _matrix_json(quad)
    payload["block_deviation"] = dev._asdict()
    print(f"block deviation: offdiag={dev.offdiag:.3e} blockspread={dev.blockspread:.3e} "
          f"toeplitzspread={dev.toeplitzspread:.3e}")
    (out / "matrix.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_szego(cfg: RunConfig, out: Path) -> int:
    if not cfg.n_schedule:
        raise ConfigError("'n_schedule' is empty")
    family = None
    if cfg.centers is not None:
        family = hat_family(cfg.centers, cfg.widths)
    try:
        report = szego_experiment(cfg.blaschke, cfg.symbol, cfg.n_schedule, family,
                                  cfg.mode, cfg.grid_size)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.csv").write_text(report.to_csv())
    (out / "report.json").write_text(report.to_json() + "\n")
    (out / "gaps.svg").write_text(_gap_chart(report))
    for mode in report.meta["modes"]:
        rows = [r for r in report.rows if r.mode == mode]
        first = [r for r in rows if r.n == cfg.n_schedule[0]]
        last = [r for r in rows if r.n == cfg.n_schedule[-1]]
        print(f"{mode}: max gap n={cfg.n_schedule[0]}: {max(r.gap for r in first):.3e}, "
              f"n={cfg.n_schedule[-1]}: {max(r.gap for r in last):.3e}")
    return EXIT_OK


def _gap_chart(report: DistributionReport) -> str:
    series: dict[str, tuple[list, list]] = {}
    for r in report.rows:
        label = f"{r.mode} hat({r.G_center:.3g},{r.G_width:.3g})"
        xs, ys = series.setdefault(label, ([], []))
        xs.append(r.n)
        ys.append(r.gap)
    return loglog_chart(series, title="spectral distribution gap vs n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="szego-model",
        description="Compressed Toeplitz operators on model spaces K_(B^n) and "
                    "their spectral distribution.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("verify", "run the numerical invariant suite for the configured B"),
                       ("matrix", "write the compressed matrix (analytic and quadrature paths)"),
                       ("szego", "run a spectral distribution experiment over n_schedule")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", help="output directory (default: config 'output')")
        p.add_argument("--grid-size", type=int, help="override the quadrature grid size")
        p.add_argument("--mode", choices=("eigen", "singular", "both"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(args.config, {"grid_size": args.grid_size, "mode": args.mode})
        if args.command == "verify":
            return cmd_verify(cfg, Path(args.out) if args.out else None)
        out = Path(args.out or cfg.output)
        if args.command == "matrix":
            return cmd_matrix(cfg, out)
        return cmd_szego(cfg, out)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
