"""
A symbol that is not a polynomial in B
======================================

For B = b_(1/2) and f = cos(theta) the compressions are no longer Toeplitz,
but their spectra still distribute like f o b_(-1/2). The symbol is given
only by its samples, as it would be when read from a data file.
"""

# %%
import numpy as np

from szego_model import (
    BlaschkeProduct, CircleGrid, SampledSymbol, gaps_nonincreasing,
    hat_family, limit_function, szego_experiment,
)

B = BlaschkeProduct(((0.5, 1),))
f = SampledSymbol(CircleGrid(4096).sample(lambda z: z.real))
family = hat_family([-1, -0.5, 0, 0.5, 1], [0.5])
report = szego_experiment(B, f, [16, 32, 64, 128, 256], family, "eigen")

# %%
for G in family:
    gaps = report.gaps(G, "eigen")
    print(f"hat({G.center:+.1f}):", " ".join(f"{g:.1e}" for g in gaps),
          "| non-increasing:", gaps_nonincreasing(gaps))

# %%
# The limit is harmonic, so its mean is Re b_(-1/2)(0) = 1/2 while cos averages to 0.
g = limit_function(B, f, CircleGrid(4096), "eigen")
print(f"mean of cos: {np.mean(f.samples.values.real):+.4f}, mean of limit: {np.mean(g.values.real):+.4f}")
