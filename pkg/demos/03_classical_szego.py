"""
Eigenvalue distribution in the classical case
=============================================

With B(z) = z and phi = z + 1/z the compression is the tridiagonal Toeplitz
matrix with eigenvalues 2 cos(k pi / (n + 1)). Averages of a test function
over the spectrum approach its circle average over 2 cos(theta).
"""

# %%
import numpy as np

from szego_model import BlaschkeProduct, Hat, M1Symbol, hat_family, szego_experiment

B = BlaschkeProduct.identity()
phi = M1Symbol(B, -1, [1, 0, 1])
family = hat_family([-1.5, 0, 1.5], [1.0])
report = szego_experiment(B, phi, [32, 64, 128, 256, 512], family, "eigen")

# %%
for G in family:
    gaps = report.gaps(G, "eigen")
    print(f"hat({G.center:+.1f}, {G.width}):", " ".join(f"{g:.1e}" for g in gaps))

# %%
# The hat at 0 has a closed-form limit.
G = Hat(0, 1)
closed = 1 / 3 - (2 / np.pi) * (2 - np.sqrt(3))
row = [r for r in report.rows if r.n == 512 and r.G_center == 0][0]
print(f"limit by quadrature {row.limit:.8f}, closed form {closed:.8f}, empirical {row.empirical:.8f}")
