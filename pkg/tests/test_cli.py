import json

import numpy as np
import pytest

from szego_model import DistributionReport
from szego_model.cli import load_config, main, read_matrix_csv


def write_config(tmp_path, name="run.json", **data):
    data.setdefault("output", str(tmp_path / "out"))
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


TWO_ZERO = [[0.5, 0, 1], [-0.3, 0.4, 1]]
THREE_ZERO = [[0.5, 0, 1], [-0.3, 0.4, 2]]
SYMMETRIC = {"type": "m1", "t_min": -2, "coefficients": [0.3, 1, 0.5, 1, 0.3]}


def test_verify_classical(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=[[0, 0, 1]])
    assert main(["verify", "--config", cfg]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "checks passed" in out


def test_verify_three_zero_writes_report(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=THREE_ZERO, n=4, symbol=SYMMETRIC)
    assert main(["verify", "--config", cfg, "--out", str(tmp_path / "v")]) == 0
    report = json.loads((tmp_path / "v" / "verify.json").read_text())
    assert report["checks"] and all(c["passed"] for c in report["checks"])
    names = {c["name"] for c in report["checks"]}
    assert any(n.startswith("Gram = I") for n in names)


def test_zero_outside_disk(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=[[1.2, 0, 1]])
    for cmd in ("verify", "matrix", "szego"):
        assert main([cmd, "--config", cfg]) == 2
        assert "zero outside open disk" in capsys.readouterr().err


def test_matrix_m1_writes_both_paths(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=TWO_ZERO, n=3, symbol=SYMMETRIC)
    out = tmp_path / "m"
    assert main(["matrix", "--config", cfg, "--out", str(out)]) == 0
    assert "path agreement" in capsys.readouterr().out
    A, path_a = read_matrix_csv((out / "matrix_analytic.csv").read_text())
    Q, path_q = read_matrix_csv((out / "matrix_quadrature.csv").read_text())
    assert (path_a, path_q) == ("analytic", "quadrature")
    assert A.shape == (6, 6)
    assert np.max(np.abs(A - Q)) <= 1e-8
    payload = json.loads((out / "matrix.json").read_text())
    assert payload["path_agreement_max_deviation"] <= 1e-8
    assert set(payload["block_deviation"]) == {"offdiag", "blockspread", "toeplitzspread"}
    assert payload["analytic"]["entries"][0][0] == {"re": 0.5, "im": 0.0}


def test_matrix_csv_header(tmp_path):
    cfg = write_config(tmp_path, blaschke=[[0, 0, 1]], n=2, mode="singular",
                       symbol={"type": "m1", "coefficients": [2, 1]})
    main(["matrix", "--config", cfg])
    lines = (tmp_path / "out" / "matrix_analytic.csv").read_text().splitlines()
    assert lines[:2] == ["rows,cols,path", "2,2,analytic"]
    assert lines[2:] == ["2.0,0.0,0.0,0.0", "1.0,0.0,2.0,0.0"]


def test_matrix_sampled_symbol(tmp_path, capsys):
    M = 1024
    theta = 2 * np.pi * np.arange(M) / M
    (tmp_path / "f.csv").write_text("re,im\n" + "".join(f"{float(np.cos(t))!r},0.0\n" for t in theta))
    cfg = write_config(tmp_path, blaschke=[[0.5, 0, 1]], n=4, symbol={"type": "samples", "path": "f.csv"})
    out = tmp_path / "s"
    assert main(["matrix", "--config", cfg, "--out", str(out)]) == 0
    assert "analytic path unavailable" in capsys.readouterr().out
    assert not (out / "matrix_analytic.csv").exists()
    Q, _ = read_matrix_csv((out / "matrix_quadrature.csv").read_text())
    assert Q.shape == (4, 4) and np.allclose(Q, Q.conj().T, atol=1e-12)
    assert "note" in json.loads((out / "matrix.json").read_text())


def test_matrix_n_zero(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=[[0.5, 0, 1]], n=0)
    assert main(["matrix", "--config", cfg]) == 2
    assert "n must be >= 1" in capsys.readouterr().err


def test_szego_single_zero_scenario(tmp_path, capsys):
    M = 4096
    vals = [[float(np.cos(2 * np.pi * k / M)), 0.0] for k in range(M)]
    cfg = write_config(tmp_path, blaschke=[[0.5, 0, 1]], n_schedule=[16, 64, 256],
                       symbol={"type": "samples", "values": vals},
                       test_functions={"centers": [-0.5, 0, 0.5], "widths": [0.5]})
    assert main(["szego", "--config", cfg]) == 0
    out = tmp_path / "out"
    report = DistributionReport.from_csv((out / "report.csv").read_text())
    for c in (-0.5, 0, 0.5):
        gaps = [r.gap for r in report.rows if r.G_center == c]
        assert gaps[-1] < gaps[0]
    svg = (out / "gaps.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg
    assert DistributionReport.from_json((out / "report.json").read_text()).rows == report.rows


def test_szego_two_zero_matches_classical(tmp_path):
    common = dict(n_schedule=[8, 16], mode="both", symbol=SYMMETRIC,
                  test_functions={"centers": [0, 1, 2], "widths": [1, 0.5]})
    cfg2 = write_config(tmp_path, "two.json", blaschke=TWO_ZERO, output=str(tmp_path / "two"), **common)
    cfg0 = write_config(tmp_path, "one.json", blaschke=[[0, 0, 1]], output=str(tmp_path / "one"), **common)
    assert main(["szego", "--config", cfg2]) == 0
    assert main(["szego", "--config", cfg0]) == 0
    r2 = DistributionReport.from_csv((tmp_path / "two" / "report.csv").read_text())
    r0 = DistributionReport.from_csv((tmp_path / "one" / "report.csv").read_text())
    assert len(r2.rows) == len(r0.rows)
    for a, b in zip(r2.rows, r0.rows):
        assert (a.n, a.mode, a.G_center, a.G_width) == (b.n, b.mode, b.G_center, b.G_width)
        assert abs(a.empirical - b.empirical) <= 1e-9
        assert abs(a.limit - b.limit) <= 1e-9
        assert abs(a.gap - b.gap) <= 1e-9


def test_szego_empty_schedule(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=[[0.5, 0, 1]], n_schedule=[])
    assert main(["szego", "--config", cfg]) == 2
    assert "n_schedule" in capsys.readouterr().err


def test_szego_complex_symbol_in_eigen_mode(tmp_path, capsys):
    cfg = write_config(tmp_path, blaschke=[[0.5, 0, 1]], n_schedule=[4],
                       symbol={"type": "m1", "t_min": 1, "coefficients": [1]})
    assert main(["szego", "--config", cfg]) == 2
    assert "real-valued" in capsys.readouterr().err
    assert main(["szego", "--config", cfg, "--mode", "singular"]) == 0


def test_szego_deterministic(tmp_path):
    cfg = write_config(tmp_path, blaschke=THREE_ZERO, n_schedule=[4, 8], mode="both", symbol=SYMMETRIC)
    outputs = []
    for run in ("a", "b"):
        out = tmp_path / run
        assert main(["szego", "--config", cfg, "--out", str(out)]) == 0
        outputs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outputs[0] == outputs[1]
    assert set(outputs[0]) == {"report.csv", "report.json", "gaps.svg"}


@pytest.mark.parametrize("data", [
    "{not json",
    "[]",
    json.dumps({"blaschke": []}),
    json.dumps({"blaschke": [[0.1, 0, 1]], "n_schedule": [4, 4]}),
    json.dumps({"blaschke": [[0.1, 0, 1]], "mode": "spooky"}),
    json.dumps({"blaschke": [[0.1, 0, 1]], "grid_size": 1000}),
    json.dumps({"blaschke": [[0.1, 0, 1]], "symbol": {"type": "wavelet"}}),
    json.dumps({"blaschke": [[0.1, 0, 1]], "symbol": {"type": "samples", "values": [1, 2, 3]}}),
    json.dumps({"blaschke": [[0.1, 0, 1.5]]}),
])
def test_malformed_configs_exit_2(tmp_path, capsys, data):
    path = tmp_path / "bad.json"
    path.write_text(data)
    assert main(["verify", "--config", str(path)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_usage_errors(tmp_path, capsys):
    assert main([]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2


def test_load_config_defaults(tmp_path):
    cfg = load_config(write_config(tmp_path, blaschke=[[0.5, 0, 2]]))
    assert cfg.blaschke.degree == 2
    assert cfg.mode == "eigen" and cfg.n_schedule == [] and cfg.matrix_n == 4
    assert cfg.symbol.is_hermitian()
