"""Dependence between a discrete and a continuous variable.

Fifteen adults in five age groups took an IQ test.  Age is ordinal with five
levels, so its LP basis has four functions; IQ is continuous.  The comean
matrix is dominated by LP[2,1]: the quadratic age component against the
linear IQ component, i.e. IQ peaks in middle age.
"""

import warnings

import numpy as np

from lpcopula import conditional_profile, fit_copula, lpinfor, load_dataset
from lpcopula.inference import SmallSampleWarning

warnings.simplefilter("ignore", SmallSampleWarning)

ds = load_dataset("wais")
mod = fit_copula(ds["age"], ds["iq"], m=4, denoise=False)
np.set_printoptions(precision=3, suppress=True)
print("comean matrix LP[j,k] (rows: age basis, columns: IQ basis)")
print(mod.comeans.coeffs)

raw = lpinfor(mod.comeans)
den_mod = fit_copula(ds["age"], ds["iq"], m=4, denoise=True)
den = lpinfor(den_mod.comeans, denoised=True)
print("\nLPINFOR raw: stat %.3f, dof %d, p %.4f" % (raw.statistic, raw.dof, raw.p_value))
print("LPINFOR BIC-selected: stat %.3f, dof %d, p %.4f, kept %s"
      % (den.statistic, den.dof, den.p_value, [c[0] for c in den.components]))

# E[T_1(IQ) | age group]: the conditional mean of the IQ score by age
u = den_mod.basis_x.margin.midcdf
labels = ["16-19", "20-34", "35-54", "55-69", "70+"]
print("\nconditional mean of standardized IQ score by age group")
for lab, val in zip(labels, conditional_profile(den_mod, 1, u)):
    print("  %-6s %+.3f" % (lab, val))
