"""Numerical checks of the structural facts the package relies on, for one B."""
from __future__ import annotations

import itertools
from typing import NamedTuple, Optional

import numpy as np

from .blaschke import BlaschkeProduct, boundary_phase, compose_moebius, delta, winding_number
from .circle_quadrature import CircleGrid, default_grid_size, inner_product
from .compression import block_deviation, compress_analytic, compress_quadrature
from .malmquist import basis_element, build_basis, gram_matrix
from .symbol import (
    M1Symbol,
    SampledSymbol,
    gamma_inverse_single_zero,
    gamma_map,
    gram_of_powers,
    change_of_variables_check,
    norm_bounds_check,
)

__all__ = ["Check", "run_checks", "shift_table_deviation", "CHANGE_OF_VARIABLES_WEIGHTS"]


class Check(NamedTuple):
    name: str
    deviation: float
    threshold: float
    passed: bool


CHANGE_OF_VARIABLES_WEIGHTS = {
    "|xi-1|^2": lambda xi: np.abs(xi - 1) ** 2,
    "1+Re xi": lambda xi: 1 + xi.real,
    "|k_0.3|^2": lambda xi: (1 - 0.09) / np.abs(1 - 0.3 * xi) ** 2,
}


def _within(name, deviation, threshold) -> Check:
    return Check(name, float(deviation), float(threshold), bool(deviation <= threshold))


def _index_pairs(B: BlaschkeProduct):
    return [(j, r) for j, m in enumerate(B.multiplicities, start=1) for r in range(m)]


def shift_table_deviation(B: BlaschkeProduct, grid: CircleGrid,
                           t_range=range(-4, 5), il_range=range(0, 4)) -> float:
    """Max |<B^t B^i e_a, B^l e_b> - [t+i == l][a == b]| over the whole table."""
    idx = _index_pairs(B)
    t_range, il_range = list(t_range), list(il_range)
    elems = {a: basis_element(B, a, grid) for a in idx}
    lo = min(t_range) + min(il_range)
    hi = max(t_range) + max(il_range)
    vec = {(p, a): (B.power_on(grid, p) * elems[a]).values
           for p in range(min(lo, min(il_range)), max(hi, max(il_range)) + 1) for a in idx}
    worst = 0.0
    for a, b in itertools.product(idx, idx):
        for t, i, l in itertools.product(t_range, il_range, il_range):
            got = np.vdot(vec[(l, b)], vec[(t + i, a)]) / grid.size
            expected = 1.0 if (t + i == l and a == b) else 0.0
            worst = max(worst, abs(got - expected))
    return float(worst)


def run_checks(B: BlaschkeProduct, n: int = 4, symbol: Optional[M1Symbol] = None,
               grid_size: Optional[int] = None, seed: int = 0, trials: int = 20) -> list[Check]:
    if n < 1:
        raise ValueError("n must be >= 1")
    sup = B.sup_derivative()
    bw = symbol.bandwidth if symbol is not None else 1
    if grid_size is None:
        grid_size = max(8192, default_grid_size(n + 1, B.degree, max(bw, 8), sup))
    grid = CircleGrid(grid_size)
    out: list[Check] = []

    b = B(grid.nodes)
    out.append(_within("unimodular |B| on circle", np.max(np.abs(np.abs(b) - 1)), 1e-12))
    steps = np.diff(boundary_phase(B, grid))
    out.append(Check("boundary phase increasing (min step)", float(np.min(steps)), 0.0,
                     bool(np.min(steps) > 0)))
    out.append(_within("winding number = |Z(B)|", abs(winding_number(B, grid) - B.degree), 1e-6))
    d = delta(B)
    out.append(_within("delta = B(0)", abs(d - B(0)), 1e-14))
    out.append(Check("|delta| < 1", abs(d), 1.0, abs(d) < 1))

    basis = build_basis(B, n, grid)
    G = gram_matrix(basis)
    out.append(_within(f"Gram = I for K_(B^{n})", np.max(np.abs(G - np.eye(basis.dim))), 1e-9))
    bigger = build_basis(B, n + 1, grid)
    out.append(_within("dim K_(B^(n+1)) - dim K_(B^n) = |Z(B)|",
                       abs(bigger.dim - basis.dim - B.degree), 0))
    nest = max(
        float(np.max(np.abs(basis.elements[basis.flat_index(*basis.index(f))]
                            - bigger.elements[bigger.flat_index(*basis.index(f))])))
        for f in range(basis.dim)
    )
    out.append(_within("K_(B^n) basis nested in K_(B^(n+1))", nest, 1e-14))

    out.append(_within("shift table <B^t B^i e, B^l e>", shift_table_deviation(B, grid), 1e-9))

    s = symbol if symbol is not None else M1Symbol.from_dict(B, {-1: 1, 1: 1})
    analytic = compress_analytic(s, B, n)
    quad = compress_quadrature(gamma_map(s, grid), basis)
    out.append(_within("analytic vs quadrature compression",
                       np.max(np.abs(analytic.entries - quad.entries)), 1e-8))
    dev = block_deviation(quad)
    out.append(_within("block structure of quadrature matrix", max(dev), 1e-8))

    powers = [B.power_on(grid, t) for t in range(-4, 5)]
    Gp = gram_of_powers(B, -4, 4)
    worst = max(abs(inner_product(powers[u], powers[v]) - Gp[u, v])
                for u in range(9) for v in range(9))
    out.append(_within("<B^n, B^k> = delta^(n-k)", worst, 1e-10))

    for name, h in CHANGE_OF_VARIABLES_WEIGHTS.items():
        lhs, rhs, ok = change_of_variables_check(h, B, grid)
        out.append(Check(f"change of variables inequality, h = {name}", lhs - rhs, 1e-9, ok))

    rng = np.random.default_rng(seed)
    bound_ok, upper_excess = True, -np.inf
    for _ in range(trials):
        a = rng.standard_normal(17) + 1j * rng.standard_normal(17)
        nb = norm_bounds_check(M1Symbol(B, -8, a), grid)
        bound_ok &= nb.ok
        upper_excess = max(upper_excess, nb.gamma_sq / (nb.mid * 2 / (1 - abs(d))) - 1)
    out.append(Check("Gamma two-sided norm bounds", 0.0, 1e-8, bool(bound_ok)))
    out.append(Check("||Gamma a||^2 <= 2||a||^2/(1-|delta|)", upper_excess, 1e-8,
                     bool(upper_excess <= 1e-8)))

    for lam, _ in B.zeros:
        err = np.max(np.abs(compose_moebius(lam, grid.nodes) - grid.nodes))
        out.append(_within(f"b_lam o b_-lam = id, lam = {lam:.4g}", err, 1e-12))
        f = SampledSymbol(grid.sample(lambda z: z.real + 0.3 * (z ** 2).imag))
        back = gamma_inverse_single_zero(-lam, gamma_inverse_single_zero(lam, f))
        out.append(_within(f"Gamma_lam Gamma_-lam = I on samples, lam = {lam:.4g}",
                           np.max(np.abs(back.samples.values - f.samples.values)), 1e-9))
    return out
