"""Shapes of the data-adaptive LP basis.

The basis functions are orthonormal polynomials of the mid-rank transform
under the empirical distribution itself.  For a continuous variable the
unit-interval versions S_j look like smooth Legendre-type curves; for a
count variable with few values they collapse to coarse staircases.
"""

import numpy as np

from lpcopula import build_basis, eval_S

rng = np.random.default_rng(0)
continuous = rng.normal(size=500)
counts = rng.poisson(1.2, size=500).astype(float)
u = np.linspace(0.05, 0.95, 10)
for name, x in [("continuous", continuous), ("poisson(1.2)", counts)]:
    b = build_basis(x, 4)
    print("%s: %d unique values, degree %d" % (name, b.margin.n_unique, b.m))
    for j in range(1, b.m + 1):
        print("  S_%d:" % j, " ".join("%+5.2f" % s for s in eval_S(b, j, u)))
