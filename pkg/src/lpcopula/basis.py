"""Data-adaptive orthonormal polynomials of the mid-rank transform."""

from dataclasses import dataclass

import numpy as np

from .margins import fit_margin

#: residual-to-candidate norm ratio below which a new column is rank deficient
RANK_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LPBasis:
    """Orthonormal score table over the support of an empirical margin.

    ``table[i, j-1]`` is ``T_j(values[i])``.  Columns are orthonormal and
    centered under the weights ``margin.masses``.  ``m`` is the effective
    degree; it is smaller than ``requested`` only when the construction hit
    numerical rank deficiency.
    """

    margin: object
    table: np.ndarray
    requested: int

    @property
    def m(self):
        return self.table.shape[1]

    def scores(self, x):
        """``(len(x), m)`` matrix of ``T_j(x_i)``; ``x`` must lie in the support."""
        return self.table[self.margin.index_of(x)]

    def unit_scores(self, u):
        """``(len(u), m)`` matrix of ``S_j(u_i) = T_j(Q(u_i))``."""
        return self.table[self.margin.cell_index(u)]


def default_degree(margin, m=4):
    return max(0, min(m, margin.n_unique - 1))


def build_basis(margin, m=None):
    """Build the degree-``m`` LP basis of an empirical margin.

    The first column is the standardized mid-distribution transform.  Higher
    columns are the Gram-Schmidt orthonormalization of increasing powers of
    the first one under the empirical measure; see Notes.

    Parameters
    ----------
    margin : EmpiricalMargin or array_like
        Margin (a raw sample is fitted first).
    m : int, optional
        Requested degree.  Defaults to ``min(4, n_unique - 1)``.

    Notes
    -----
    Raw powers ``T_1**j`` are numerically useless beyond a few dozen degrees.
    The degree-``j`` candidate is taken as ``T_1 * T_{j-1}`` instead, which
    spans the same polynomial space, and is orthogonalized against the
    constant and the previous columns (three-term step plus one full
    reorthogonalization pass).  In exact arithmetic the result equals
    orthonormalizing raw powers.  Each column has a positive leading
    coefficient in ``T_1`` (equivalently a positive weighted covariance with
    ``T_1**j``).
    """
    if not hasattr(margin, "midcdf"):
        margin = fit_margin(margin)
    if margin.degenerate:
        raise ValueError("constant variable")
    if m is None:
        m = default_degree(margin)
    m = int(m)
    if m < 1:
        raise ValueError("basis degree must be at least 1")
    if m > margin.n_unique - 1:
        raise ValueError("basis degree exceeds unique values - 1")

    p = margin.masses
    w = np.sqrt(p)
    t1 = np.sqrt(12.0) * (margin.midcdf - 0.5) / np.sqrt(1.0 - margin.cube_sum)

    k = margin.n_unique
    # columns hold sqrt(p) * T_j so the weighted inner product is a plain dot
    q = np.empty((k, m + 1), order="F")
    q[:, 0] = w
    eff = 0
    for j in range(1, m + 1):
        cand = t1 * q[:, j - 1]
        cnorm = np.linalg.norm(cand)
        r = cand - (q[:, j - 1] @ cand) * q[:, j - 1]
        if j >= 2:
            r -= (q[:, j - 2] @ r) * q[:, j - 2]
        # one full reorthogonalization pass
        r -= q[:, :j] @ (q[:, :j].T @ r)
        rnorm = np.linalg.norm(r)
        if not rnorm > RANK_TOL * cnorm:
            break
        q[:, j] = r / rnorm
        eff = j
    if eff == 0:
        raise ValueError("constant variable")
    table = q[:, 1:eff + 1] / w[:, None]
    table.setflags(write=False)
    return LPBasis(margin=margin, table=table, requested=m)


def _check_index(basis, j):
    if not 1 <= j <= basis.m:
        raise ValueError("basis index %d out of range 1..%d" % (j, basis.m))


def eval_T(basis, j, x):
    """Value of ``T_j`` at support point(s) ``x``."""
    _check_index(basis, j)
    out = basis.table[basis.margin.index_of(x), j - 1]
    return out if np.ndim(x) else float(out)


def eval_S(basis, j, u):
    """Value of the unit-interval step function ``S_j`` at ``u`` in (0, 1]."""
    _check_index(basis, j)
    out = basis.table[basis.margin.cell_index(u), j - 1]
    return out if np.ndim(u) else float(out)


def unit_gram(basis):
    """Exact ``[int_0^1 S_j S_k du]`` by summing over the cdf cells."""
    cw = basis.margin.cell_widths()
    return basis.table.T @ (cw[:, None] * basis.table)


def unit_means(basis):
    """Exact ``int_0^1 S_j du`` for each column."""
    return basis.margin.cell_widths() @ basis.table


def basis_tsv(basis):
    """TSV dump: value, p, midcdf, T_1..T_m (one row per support value)."""
    mg = basis.margin
    head = ["value", "p", "midcdf"] + ["T%d" % j for j in range(1, basis.m + 1)]
    lines = ["\t".join(head)]
    for i in range(mg.n_unique):
        row = [mg.values[i], mg.masses[i], mg.midcdf[i]] + list(basis.table[i])
        lines.append("\t".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
