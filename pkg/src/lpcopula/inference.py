"""Chi-square calibrated dependence and symmetry tests on comean matrices."""

from dataclasses import dataclass, field
import math
import warnings

import numpy as np
from scipy import stats

from .basis import build_basis
from .comeans import estimate_comeans
from .margins import fit_margin

#: below this sample size the chi-square calibration is only indicative
SMALL_N = 30


class SmallSampleWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TestResult:
    statistic: float
    scaled: float
    dof: int
    p_value: float
    components: list = field(default_factory=list)

    __test__ = False  # not a pytest class

    def to_dict(self):
        return {
            "statistic": self.statistic,
            "scaled": self.scaled,
            "dof": self.dof,
            "p_value": self.p_value,
            "components": [[list(ix), v] for ix, v in self.components],
        }


def _chi2_sf(x, dof):
    if dof == 0:
        return 1.0
    return float(min(1.0, max(0.0, stats.chi2.sf(x, dof))))


def _warn_small(n):
    if n < SMALL_N:
        warnings.warn("n=%d: chi-square calibration is asymptotic" % n,
                      SmallSampleWarning, stacklevel=3)


def lpinfor(t, denoised=False):
    """LPINFOR dependence test: sum of squared comeans.

    ``n * statistic`` is referred to a chi-square with ``m1 * m2`` degrees of
    freedom for the raw statistic.  With ``denoised=True`` only selected
    comeans are summed and the reference has one degree of freedom per
    retained comean.  ``components`` lists ``((j, k), LP[j, k])`` for the
    contributing entries in decreasing magnitude.
    """
    if t.d != 2:
        raise ValueError("lpinfor needs a bivariate comean matrix")
    mask = t.selected if denoised else np.ones(t.coeffs.shape, dtype=bool)
    vals = t.coeffs[mask]
    stat = float(np.sum(vals ** 2))
    dof = int(mask.sum())
    scaled = t.n * stat
    _warn_small(t.n)
    idx = np.argwhere(mask)
    order = np.argsort(-np.abs(vals), kind="stable")
    comps = [((int(idx[o][0]) + 1, int(idx[o][1]) + 1), float(vals[o])) for o in order]
    return TestResult(stat, scaled, dof, _chi2_sf(scaled, dof), comps)


def lpsym(t):
    """Symmetry test ``1/2 sum_{j<k} (LP[j,k] - LP[k,j])**2`` on raw comeans.

    Under independence each difference is ``N(0, 2/n)``, so ``n * statistic``
    is referred to chi-square with ``m(m-1)/2`` degrees of freedom.
    """
    if t.d != 2 or t.coeffs.shape[0] != t.coeffs.shape[1]:
        raise ValueError("lpsym needs a square comean matrix")
    a = t.coeffs
    m = a.shape[0]
    ju, ku = np.triu_indices(m, 1)
    diff = a[ju, ku] - a[ku, ju]
    stat = float(0.5 * np.sum(diff ** 2))
    dof = m * (m - 1) // 2
    scaled = t.n * stat
    _warn_small(t.n)
    comps = [((int(j) + 1, int(k) + 1), float(dv)) for j, k, dv in zip(ju, ku, diff)]
    return TestResult(stat, scaled, dof, _chi2_sf(scaled, dof), comps)


@dataclass(frozen=True)
class SpearmanResult:
    lp11: float
    z: float
    p_one_sided: float
    p_two_sided: float

    def to_dict(self):
        return {"lp11": self.lp11, "z": self.z,
                "p_one_sided": self.p_one_sided, "p_two_sided": self.p_two_sided}


def generalized_spearman(x, y):
    """Mid-rank Spearman correlation ``LP[1,1]`` valid under ties.

    Returns the coefficient, ``z = sqrt(n) * LP[1,1]``, the upper one-sided
    p-value ``1 - Phi(z)`` and the two-sided ``2 (1 - Phi(|z|))``.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    bx = build_basis(fit_margin(x), 1)
    by = build_basis(fit_margin(y), 1)
    lp11 = float(estimate_comeans(bx, by, x, y).coeffs[0, 0])
    z = math.sqrt(x.size) * lp11
    return SpearmanResult(lp11, z, float(stats.norm.sf(z)), float(2 * stats.norm.sf(abs(z))))
