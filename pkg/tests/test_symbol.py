import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from szego_model import (
    BlaschkeProduct,
    CircleGrid,
    FourierSymbol,
    GridFunction,
    M1Symbol,
    SampledSymbol,
    delta,
    gamma_inverse_single_zero,
    gamma_map,
    gram_of_powers,
    inner_product,
    change_of_variables_check,
    moebius,
    norm_bounds_check,
    real_valued,
)
from szego_model.symbol import trig_interpolate


def test_gamma_map_examples(grid, B_id, B_half):
    np.testing.assert_allclose(gamma_map(M1Symbol(B_half, 0, [1]), grid).values, 1)
    np.testing.assert_allclose(gamma_map(M1Symbol(B_id, 1, [1]), grid).values, grid.nodes, atol=1e-15)
    s = M1Symbol.from_dict(B_half, {1: 1, -1: 1})
    expected = 2 * moebius(0.5, grid.nodes).real
    np.testing.assert_allclose(gamma_map(s, grid).values, expected, atol=1e-14)


def test_coefficient_window():
    s = FourierSymbol.from_dict({-2: 1, 3: 2j})
    assert (s.t_min, s.t_max, s.bandwidth) == (-2, 3, 3)
    assert s.coefficient(0) == 0 and s.coefficient(3) == 2j and s.coefficient(7) == 0
    assert not s.is_hermitian()
    assert FourierSymbol.from_dict({-1: 1 - 1j, 0: 2, 1: 1 + 1j}).is_hermitian()


def test_gram_of_powers_examples(grid, B_id, B_half):
    np.testing.assert_allclose(gram_of_powers(B_id, -3, 3), np.eye(7))
    G = gram_of_powers(B_half, 0, 2)
    assert G[1, 0] == pytest.approx(-0.5)
    assert G[2, 0] == pytest.approx(0.25)
    # quadrature oracle <B^n, 1>
    assert inner_product(B_half.power_on(grid, 1), grid.constant(1)) == pytest.approx(-0.5, abs=1e-14)
    assert inner_product(B_half.power_on(grid, 2), grid.constant(1)) == pytest.approx(0.25, abs=1e-14)


def test_gram_of_powers_matches_quadrature(grid, B_three, B_two):
    for B in (B_three, B_two):
        G = gram_of_powers(B, -4, 4)
        assert np.allclose(G, G.conj().T)
        P = np.array([B.power_on(grid, t).values for t in range(-4, 5)])
        Q = P @ P.conj().T / grid.size
        assert np.max(np.abs(Q - G)) < 1e-10


def test_norm_identity_via_gram(grid, B_three, rng):
    a = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    s = M1Symbol(B_three, -4, a)
    g = gamma_map(s, grid)
    G = gram_of_powers(B_three, -4, 4)
    # G[n, k] = <B^n, B^k>, so ||sum a_n B^n||^2 = sum_{n,k} a_n conj(a_k) G[n, k]
    assert inner_product(g, g).real == pytest.approx((a @ G @ a.conj()).real, rel=1e-9)


def test_norm_bounds_examples(grid, B_half, B_id):
    nb = norm_bounds_check(M1Symbol(B_half, 0, [1]), grid)
    assert (nb.lhs, nb.mid, nb.rhs) == pytest.approx((0.25, 1, 3), rel=1e-12)
    assert nb.ok
    nb = norm_bounds_check(M1Symbol(B_half, 0, [0]), grid)
    assert (nb.lhs, nb.mid, nb.rhs, nb.ok) == (0, 0, 0, True)
    a = np.array([1, -2j, 0.5, 3])
    nb = norm_bounds_check(M1Symbol(B_id, -2, a), grid)
    sq = np.sum(np.abs(a) ** 2)
    assert (nb.lhs, nb.mid, nb.rhs) == pytest.approx((sq / 2, sq, sq), rel=1e-12)
    assert nb.ok


coeffs = st.lists(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
                  min_size=1, max_size=9)


@settings(max_examples=30, deadline=None)
@given(coeffs, coeffs, st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_gamma_linearity(a, b, alpha):
    B = BlaschkeProduct(((0.5, 1), (-0.3 + 0.4j, 2)))
    g = CircleGrid(256)
    n = max(len(a), len(b))
    a = np.pad(a, (0, n - len(a)))
    b = np.pad(b, (0, n - len(b)))
    lhs = gamma_map(M1Symbol(B, -4, alpha * a + b), g).values
    rhs = alpha * gamma_map(M1Symbol(B, -4, a), g).values + gamma_map(M1Symbol(B, -4, b), g).values
    assert np.max(np.abs(lhs - rhs)) <= 1e-13 * max(1, np.abs(alpha * a).sum() + np.abs(b).sum())


@settings(max_examples=30, deadline=None)
@given(coeffs)
def test_upper_bound_property(a):
    B = BlaschkeProduct(((0.5, 1), (-0.3 + 0.4j, 2)))
    s = M1Symbol(B, -4, a)
    nb = norm_bounds_check(s, CircleGrid(1024))
    assert nb.ok
    assert nb.gamma_sq <= nb.mid * 2 / (1 - abs(delta(B))) * (1 + 1e-8) + 1e-300


def test_gamma_inverse_examples(grid):
    f = SampledSymbol(grid.sample(lambda z: 0.3 * z.real + z.imag ** 2))
    assert gamma_inverse_single_zero(0, f) is f
    b = SampledSymbol(grid.sample(lambda z: moebius(0.5, z)))
    out = gamma_inverse_single_zero(0.5, b)
    # b_{1/2} has Fourier content at every frequency, so accuracy is set by interpolation
    assert np.max(np.abs(out.samples.values - grid.nodes)) < 1e-12
    const = SampledSymbol(grid.constant(2.5))
    np.testing.assert_allclose(gamma_inverse_single_zero(0.5, const).samples.values, 2.5, atol=1e-13)
    with pytest.raises(ValueError):
        gamma_inverse_single_zero(1.1, f)


def test_gamma_inverse_with_exact_function(grid):
    f = SampledSymbol.from_function(lambda z: z.real, grid)
    g = gamma_inverse_single_zero(0.5, f)
    np.testing.assert_allclose(g.samples.values, moebius(-0.5, grid.nodes).real, atol=1e-15)
    back = gamma_inverse_single_zero(-0.5, g)
    np.testing.assert_allclose(back.samples.values, f.samples.values, atol=1e-14)


def test_gamma_inverse_roundtrip_interpolated(grid):
    f = SampledSymbol(grid.sample(lambda z: np.exp(z.real) * np.cos(2 * z.imag)))
    for lam in (0.5, 0.3 + 0.4j):
        back = gamma_inverse_single_zero(-lam, gamma_inverse_single_zero(lam, f))
        assert np.max(np.abs(back.samples.values - f.samples.values)) < 1e-10


def test_trig_interpolate_reproduces_nodes_and_polynomials():
    g = CircleGrid(32)
    f = g.sample(lambda z: 2 + z ** 3 - 0.5j * z ** -5)
    np.testing.assert_allclose(trig_interpolate(f, g.nodes), f.values, atol=1e-13)
    pts = np.exp(1j * np.array([0.1, 1.7, -2.2]))
    np.testing.assert_allclose(trig_interpolate(f, pts), 2 + pts ** 3 - 0.5j * pts ** -5, atol=1e-13)
    # Nyquist term is split so that real data interpolates to a real function
    r = g.sample(lambda z: np.cos(16 * np.angle(z)))
    assert np.max(np.abs(trig_interpolate(r, pts).imag)) < 1e-13


def test_sampled_symbol_regrid():
    g1, g2 = CircleGrid(64), CircleGrid(256)
    f = SampledSymbol(g1.sample(lambda z: (z + 1 / z).real + z.imag ** 3))
    moved = f.on(g2)
    np.testing.assert_allclose(moved.samples.values,
                               (g2.nodes + 1 / g2.nodes).real + g2.nodes.imag ** 3, atol=1e-12)


def test_real_valued_examples(grid, B_half):
    assert real_valued(M1Symbol.from_dict(B_half, {1: 1, -1: 1}), grid)
    assert not real_valued(M1Symbol(B_half, 1, [1]), grid)
    assert real_valued(SampledSymbol(grid.constant(3)))
    assert real_valued(FourierSymbol(0, [3]), grid)


def test_hermitian_flag_agrees_with_samples(grid, B_three, rng):
    a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    coeffs = np.concatenate([a[::-1].conj(), [0.7], a])
    s = M1Symbol(B_three, -3, coeffs)
    assert s.is_hermitian() and real_valued(s, grid)
    s2 = M1Symbol(B_three, -3, coeffs + 0.1j)
    assert not s2.is_hermitian() and not real_valued(s2, grid)


WEIGHTS = [
    lambda xi: np.abs(xi - 1) ** 2,
    lambda xi: 1 + xi.real,
    lambda xi: (1 - 0.09) / np.abs(1 - 0.3 * xi) ** 2,
]


@pytest.mark.parametrize("h", WEIGHTS)
def test_change_of_variables_inequality(h, B_half, B_three, grid8k):
    for B in (B_half, B_three):
        lhs, rhs, ok = change_of_variables_check(h, B, grid8k)
        assert ok
        # independent adaptive quadrature of the left side
        ref = integrate.quad(lambda t: h(np.exp(1j * t)).real, 0, 2 * np.pi, epsabs=1e-13)[0] / (2 * np.pi)
        assert lhs == pytest.approx(ref, abs=1e-10)


def test_change_of_variables_rejects_negative(B_half, grid):
    with pytest.raises(ValueError):
        change_of_variables_check(lambda xi: xi.real, B_half, grid)


def test_sampled_symbol_rejects_nonfinite(grid):
    with pytest.raises(ValueError):
        SampledSymbol(GridFunction(grid, np.full(grid.size, np.nan)))
