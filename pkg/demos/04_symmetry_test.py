"""Testing exchangeability of a dependence structure.

LPSym compares LP[j,k] with LP[k,j].  A Gaussian copula is exchangeable; the
Khoudraji device applied to it is not.  The geyser data look symmetric.
"""

import numpy as np

from lpcopula import fit_copula, khoudraji, load_dataset, lpsym
from lpcopula.reference import Gaussian

np.set_printoptions(precision=2, suppress=True)
gauss = Gaussian(0.8)
asym = khoudraji(gauss, 0.1, 0.6, convention="complement")
for name, fam in [("Gaussian(0.8)", gauss), ("Khoudraji of Gaussian(0.8)", asym)]:
    uv = fam.sample(1000, 1)
    mod = fit_copula(uv[:, 0], uv[:, 1], m=4, denoise=False)
    print(name)
    print(mod.comeans.coeffs)
    print("LPSym p = %.3g\n" % lpsym(mod.comeans).p_value)

ds = load_dataset("geyser")
mod = fit_copula(ds["eruptions"], ds["waiting"], m=4, denoise=False)
print("geyser eruptions vs waiting")
print(mod.comeans.coeffs)
print("LPSym p = %.3f" % lpsym(mod.comeans).p_value)
