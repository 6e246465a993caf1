"""
Orthonormal bases of model spaces
=================================

For a finite Blaschke product B the space K_(B^n) has dimension n * deg(B).
We build its rational orthonormal basis on a quadrature grid and look at
the Gram matrix.
"""

# %%
import numpy as np

from szego_model import BlaschkeProduct, CircleGrid, build_basis, gram_matrix

B = BlaschkeProduct(((0.5, 1), (-0.3 + 0.4j, 2)))
grid = CircleGrid(8192)
basis = build_basis(B, n=6, grid=grid)
print(f"deg B = {B.degree}, dim K_(B^6) = {basis.dim}")

# %%
# Every element has unit norm and distinct elements are orthogonal.
G = gram_matrix(basis)
print(f"max |Gram - I| = {np.max(np.abs(G - np.eye(basis.dim))):.2e}")

# %%
# The flat position of an element is block * n + k, where the block runs
# over the zeros counted with multiplicity and k is the power of B.
for flat in (0, 5, 6, 17):
    print(flat, "->", basis.index(flat))

# %%
# With B(z) = z the basis is the monomials 1, z, ..., z^(n-1).
mono = build_basis(BlaschkeProduct.identity(), 4, CircleGrid(256))
print("monomial error:", max(np.max(np.abs(mono.elements[k] - mono.grid.nodes ** k)) for k in range(4)))
