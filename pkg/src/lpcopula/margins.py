"""Tie-aware empirical margins and the mid-distribution transform."""

from dataclasses import dataclass

import numpy as np


def _as_sample(sample):
    x = np.asarray(sample, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("empty sample")
    if not np.all(np.isfinite(x)):
        raise ValueError("non-finite input")
    # canonicalize -0.0 so that exact equality groups it with 0.0
    return x + 0.0


@dataclass(frozen=True, eq=False)
class EmpiricalMargin:
    """Empirical distribution of one variable.

    Attributes
    ----------
    values : ndarray
        Strictly increasing unique sample values.
    masses : ndarray
        Probability mass of each value (tie count / n).
    cdf : ndarray
        Cumulative probability at each value; the last entry is exactly 1.
    midcdf : ndarray
        ``cdf - masses / 2``.
    n : int
        Sample size.
    cube_sum : float
        Sum of cubed masses, the tie correction in the variance of the
        mid-distribution transform.
    """

    values: np.ndarray
    masses: np.ndarray
    cdf: np.ndarray
    midcdf: np.ndarray
    n: int
    cube_sum: float

    @property
    def n_unique(self):
        return len(self.values)

    @property
    def degenerate(self):
        return self.n_unique == 1

    def index_of(self, x):
        """Positions of ``x`` in ``values``; raises for off-support points."""
        x = np.asarray(x, dtype=float) + 0.0
        idx = np.searchsorted(self.values, x)
        idx_c = np.minimum(idx, self.n_unique - 1)
        if np.any(self.values[idx_c] != x):
            raise ValueError("value outside empirical support")
        return idx_c

    def cell_index(self, u):
        """Index of the cdf cell containing ``u``, i.e. the quantile index."""
        u = np.asarray(u, dtype=float)
        if np.any(~(u > 0)) or np.any(~(u <= 1)):
            raise ValueError("u out of range")
        return np.searchsorted(self.cdf, u, side="left")

    def cell_widths(self):
        """Lengths of the unit-interval cells on which quantile is constant."""
        return np.diff(self.cdf, prepend=0.0)


def fit_margin(sample):
    """Build the empirical margin of ``sample``.

    No jittering is applied; ties are kept as point masses.
    """
    x = _as_sample(sample)
    values, counts = np.unique(x, return_counts=True)
    n = x.size
    cum = np.cumsum(counts)
    masses = counts / n
    cdf = cum / n
    midcdf = cdf - masses / 2
    for arr in (values, masses, cdf, midcdf):
        arr.setflags(write=False)
    return EmpiricalMargin(values=values, masses=masses, cdf=cdf, midcdf=midcdf,
                           n=int(n), cube_sum=float(np.sum(masses ** 3)))


def mid_distribution(margin, x):
    """Mid-distribution value ``F(x) - p(x)/2`` at support point(s) ``x``."""
    out = margin.midcdf[margin.index_of(x)]
    return out if np.ndim(x) else float(out)


def quantile(margin, u):
    """Smallest support value whose cdf is at least ``u``, for ``0 < u <= 1``."""
    out = margin.values[margin.cell_index(u)]
    return out if np.ndim(u) else float(out)


def pseudo_observations(x, y):
    """Mid-distribution pseudo-observations of a paired sample.

    Returns an ``(n, 2)`` array with columns ``F~mid_X(x_i)`` and
    ``F~mid_Y(y_i)``.
    """
    x = _as_sample(x)
    y = _as_sample(y)
    if x.size != y.size:
        raise ValueError("length mismatch: %d vs %d" % (x.size, y.size))
    mx, my = fit_margin(x), fit_margin(y)
    return np.column_stack([mx.midcdf[mx.index_of(x)], my.midcdf[my.index_of(y)]])
