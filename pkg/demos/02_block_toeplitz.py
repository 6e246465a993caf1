"""
Compressions of symbols built from powers of B
==============================================

A symbol phi = sum_t a_t B^t compresses, in the orthonormal basis of
K_(B^n), to deg(B) copies of the n x n Toeplitz matrix of (a_t). We compute
the matrix two ways and compare.
"""

# %%
import numpy as np

from szego_model import (
    BlaschkeProduct, CircleGrid, M1Symbol, SampledSymbol, block_deviation, build_basis,
    compress_analytic, compress_quadrature, default_grid_size, gamma_map,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)
B = BlaschkeProduct(((0.5, 1), (-0.3 + 0.4j, 2)))
s = M1Symbol(B, -2, [0.3, 1, 0.5, 1, 0.3])
n = 5

# %%
# Quadrature path: sample phi on the circle and take inner products.
grid = CircleGrid(default_grid_size(n, B.degree, s.bandwidth, B.sup_derivative()))
Q = compress_quadrature(gamma_map(s, grid), build_basis(B, n, grid))

# %%
# Closed-form path: a block diagonal of classical Toeplitz matrices.
A = compress_analytic(s, B, n)
print(A.entries[:n, :n].real)
print(f"grid M = {grid.size}, max |analytic - quadrature| = {np.max(np.abs(A.entries - Q.entries)):.2e}")
print("block deviation of the quadrature matrix:", block_deviation(Q))

# %%
# A general symbol, here Re z, is not of this form and couples the blocks.
cos = grid.sample(lambda z: z.real)
print("Re z:", block_deviation(compress_quadrature(SampledSymbol(cos), build_basis(B, n, grid))))
