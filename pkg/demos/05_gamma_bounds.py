"""
Coefficients versus functions in the span of B^t
================================================

The map a -> sum_t a_t B^t is bounded above and below. The Gram matrix of
the powers of B depends only on delta = B(0).
"""

# %%
import numpy as np

from szego_model import (
    BlaschkeProduct, CircleGrid, M1Symbol, delta, gram_of_powers, norm_bounds_check,
)

B = BlaschkeProduct(((0.5, 1), (-0.3 + 0.4j, 2)))
print("delta =", delta(B))
print(np.round(gram_of_powers(B, 0, 3), 4))

# %%
rng = np.random.default_rng(0)
grid = CircleGrid(8192)
ratios = []
for _ in range(200):
    a = rng.standard_normal(17) + 1j * rng.standard_normal(17)
    nb = norm_bounds_check(M1Symbol(B, -8, a), grid)
    assert nb.ok
    ratios.append(nb.gamma_sq / nb.mid)
print(f"||Gamma a||^2 / ||a||^2 in [{min(ratios):.3f}, {max(ratios):.3f}]")
print(f"guaranteed range [{1 / B.sup_derivative():.3f}, {2 / (1 - abs(delta(B))):.3f}]")
