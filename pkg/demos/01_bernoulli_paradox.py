"""Perfect dependence between two binary variables.

For discrete margins the copula is not unique and many rank coefficients
cannot reach +-1.  The LP comean LP[1,1] uses the tie-corrected mid-rank
score, so Y = X gives exactly 1 and Y = 1 - X gives exactly -1 for every
success probability.
"""

import numpy as np

from lpcopula import build_basis, estimate_comeans, fit_copula

print("  p   LP[1,1](X, X)  LP[1,1](X, 1-X)")
for k in range(1, 10):
    x = np.r_[np.zeros(k), np.ones(10 - k)]
    bx = build_basis(x, 1)
    same = estimate_comeans(bx, bx, x, x).coeffs[0, 0]
    flip = estimate_comeans(bx, build_basis(1 - x, 1), x, 1 - x).coeffs[0, 0]
    print("%.1f  %13.6f  %15.6f" % (k / 10, same, flip))

# the copula of a perfectly dependent binary pair is a two-cell checkerboard
x = np.r_[np.zeros(3), np.ones(7)]
print("\ncell densities for Y = X, P(X=0) = 0.3 (rows: X, columns: Y):")
print(np.round(fit_copula(x, x, m=1, denoise=False).cell_densities(), 6) + 0.0)
