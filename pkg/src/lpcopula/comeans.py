"""LP-comean matrices and tensors, and their Schwarz-criterion denoising."""

from dataclasses import dataclass, replace
import json
import math

import numpy as np


@dataclass(frozen=True, eq=False)
class ComeanTensor:
    """Cross-moments of LP scores.

    For ``d == 2``, ``coeffs[j-1, k-1]`` holds ``LP[j, k]``.  For ``d == 3``
    the array has shape ``(m1+1, m2+1, m3+1)`` and index 0 stands for the
    constant factor 1; entries with fewer than two nonzero indices are
    structurally zero and never selected.
    """

    dims: tuple
    coeffs: np.ndarray
    n: int
    selected: np.ndarray

    @property
    def d(self):
        return len(self.dims)

    @property
    def candidates(self):
        """Mask of entries that are genuine dependence coefficients."""
        if self.d == 2:
            return np.ones(self.coeffs.shape, dtype=bool)
        nz = sum(np.indices(self.coeffs.shape)[i] > 0 for i in range(self.d))
        return nz >= 2

    @property
    def null_sd(self):
        return comean_null_sd(self.n)

    def masked(self):
        """Coefficients with unselected entries set to zero."""
        return np.where(self.selected, self.coeffs, 0.0)

    def transpose(self):
        return replace(self, dims=tuple(reversed(self.dims)),
                       coeffs=self.coeffs.T.copy(), selected=self.selected.T.copy())

    def to_dict(self):
        return {
            "dims": list(self.dims),
            "n": self.n,
            "coeffs": [float(c) for c in self.coeffs.ravel()],
            "selected": [bool(s) for s in self.selected.ravel()],
            "null_sd": self.null_sd,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, obj):
        shape = tuple(d + 1 for d in obj["dims"]) if len(obj["dims"]) == 3 \
            else tuple(obj["dims"])
        return cls(dims=tuple(obj["dims"]),
                   coeffs=np.asarray(obj["coeffs"], dtype=float).reshape(shape),
                   n=int(obj["n"]),
                   selected=np.asarray(obj["selected"], dtype=bool).reshape(shape))


def comean_null_sd(n):
    """Standard deviation of an empirical comean under independence."""
    return 1.0 / math.sqrt(n)


def estimate_comeans(basis_x, basis_y, x, y):
    """Empirical comean matrix ``(1/n) sum_i T_j(x_i) T_k(y_i)``.

    The bases must have been built on the margins of these samples.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size:
        raise ValueError("length mismatch: %d vs %d" % (x.size, y.size))
    for b, s in ((basis_x, x), (basis_y, y)):
        if b.margin.n != s.size:
            raise ValueError("basis/margin mismatch: margin built on n=%d, sample has %d"
                             % (b.margin.n, s.size))
    tx, ty = basis_x.scores(x), basis_y.scores(y)
    n = x.size
    coeffs = tx.T @ ty / n
    return ComeanTensor(dims=(basis_x.m, basis_y.m), coeffs=coeffs, n=n,
                        selected=np.ones(coeffs.shape, dtype=bool))


def estimate_comeans_3(bases, samples):
    """Trivariate comeans ``LP[j, k, l]`` with 0 meaning "factor omitted"."""
    if len(bases) != 3 or len(samples) != 3:
        raise ValueError("need three bases and three samples")
    samples = [np.asarray(s, dtype=float).ravel() for s in samples]
    n = samples[0].size
    if any(s.size != n for s in samples):
        raise ValueError("length mismatch")
    for b, s in zip(bases, samples):
        if b.margin.n != n:
            raise ValueError("basis/margin mismatch")
    # prepend the constant column so index 0 is the empty factor
    t = [np.column_stack([np.ones(n), b.scores(s)]) for b, s in zip(bases, samples)]
    coeffs = np.einsum("ij,ik,il->jkl", *t) / n
    dims = tuple(b.m for b in bases)
    cand = sum(np.indices(coeffs.shape)[i] > 0 for i in range(3)) >= 2
    coeffs = np.where(cand, coeffs, 0.0)
    return ComeanTensor(dims=dims, coeffs=coeffs, n=n, selected=cand)


def select_bic(t, criterion="bic", penalty=None):
    """Retain the dominant comeans by a penalized sum of squares.

    Entries are ranked by decreasing magnitude (ties by index order) and the
    prefix maximizing ``sum of squares - k * penalty`` is kept; the default
    per-term penalty is ``log(n)/n`` (``criterion="bic"``) or ``2/n``
    (``criterion="aic"``).  A non-positive maximum keeps nothing.
    """
    if penalty is None:
        if criterion == "bic":
            penalty = math.log(t.n) / t.n
        elif criterion == "aic":
            penalty = 2.0 / t.n
        else:
            raise ValueError("unknown criterion %r" % criterion)
    cand = t.candidates.ravel()
    flat = np.abs(t.coeffs.ravel())
    idx = np.flatnonzero(cand)
    order = idx[np.argsort(-flat[idx], kind="stable")]
    score = np.cumsum(flat[order] ** 2) - penalty * np.arange(1, len(order) + 1)
    keep = np.zeros(flat.size, dtype=bool)
    if len(score) and score.max() > 0:
        kbest = int(np.argmax(score)) + 1
        keep[order[:kbest]] = True
    return replace(t, selected=keep.reshape(t.coeffs.shape))
