"""Copulas of categorical data: a checkerboard and a tie-aware Spearman test.

Eye and hair colour are ordinal categories.  Coding them in their natural
order and fitting the LP copula gives a piecewise-constant density whose
4 x 5 cells have areas equal to the products of category proportions.  For
the 2 x 2 feeding/teeth table, LP[1,1] is the mid-rank Spearman correlation
and sqrt(n) LP[1,1] is approximately standard normal under independence.
"""

import numpy as np

from lpcopula import fit_copula, generalized_spearman, load_dataset

np.set_printoptions(precision=2, suppress=True)
ds = load_dataset("fisher_caithness")
mod = fit_copula(ds["eye"], ds["hair"], m=4)
print("eye (rows: blue, light, medium, dark) x hair (fair, red, medium, dark, black)")
print("copula density on each cell:")
print(mod.cell_densities())
print("cell widths: eye %s, hair %s" % (mod.basis_x.margin.cell_widths(),
                                        mod.basis_y.margin.cell_widths()))

yates = load_dataset("yates")
res = generalized_spearman(yates["feeding"], yates["teeth"])
print("\nfeeding vs malocclusion: LP[1,1] = %.3f, z = %.3f, one-sided p = %.3f"
      % (res.lp11, res.z, res.p_one_sided))
