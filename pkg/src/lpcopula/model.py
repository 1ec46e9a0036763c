"""LP orthogonal-series copula density and its spectral summaries."""

from dataclasses import dataclass, field
import itertools

import numpy as np

from .basis import build_basis, default_degree
from .comeans import estimate_comeans, select_bic
from .margins import fit_margin


@dataclass(frozen=True, eq=False)
class CopulaModel:
    """Bivariate LP copula density ``1 + sum LP[j,k] S_j(u) S_k(v)``.

    Only selected comeans enter the series.  With ``clip=True`` the density
    is ``max(value, 0)`` renormalized by its exact integral; the default is
    the raw signed series, which integrates to one exactly.
    """

    basis_x: object
    basis_y: object
    comeans: object
    clip: bool = False

    @property
    def coef(self):
        return self.comeans.masked()

    def cell_densities(self, clip=None):
        """Density value on each rectangle of the checkerboard partition.

        Row ``i`` is the ``i``-th support value of X, column ``j`` that of Y;
        the cell has area ``p_X(i) * p_Y(j)``.
        """
        if clip is None:
            clip = self.clip
        f = 1.0 + self.basis_x.table @ self.coef @ self.basis_y.table.T
        if clip:
            f = np.maximum(f, 0.0)
            f = f / integrate_cells(self, f)
        return f

    def cell_areas(self):
        return np.outer(self.basis_x.margin.cell_widths(),
                        self.basis_y.margin.cell_widths())

    @property
    def _clip_norm(self):
        return integrate_cells(self, np.maximum(self.cell_densities(clip=False), 0.0))


def integrate_cells(model, values):
    """Exact integral over the unit square of a checkerboard function."""
    return float(np.sum(model.cell_areas() * values))


def fit_copula(x, y, m=4, denoise=True, criterion="bic", clip=False):
    """Fit the LP copula of a paired sample.

    ``m`` is capped per margin at ``n_unique - 1``; ``m`` may also be a pair
    ``(m_x, m_y)``.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size:
        raise ValueError("length mismatch: %d vs %d" % (x.size, y.size))
    mx, my = (m, m) if np.ndim(m) == 0 else m
    gx, gy = fit_margin(x), fit_margin(y)
    bx = build_basis(gx, default_degree(gx, mx))
    by = build_basis(gy, default_degree(gy, my))
    t = estimate_comeans(bx, by, x, y)
    if denoise:
        t = select_bic(t, criterion=criterion)
    return CopulaModel(bx, by, t, clip=clip)


def density(model, u, v):
    """Density at ``(u, v)``; arrays broadcast elementwise."""
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    ix = model.basis_x.margin.cell_index(u)
    iy = model.basis_y.margin.cell_index(v)
    su, sv = model.basis_x.table[ix], model.basis_y.table[iy]
    out = 1.0 + np.einsum("...j,jk,...k->...", su, model.coef, sv)
    if model.clip:
        out = np.maximum(out, 0.0) / model._clip_norm
    return out if out.ndim else float(out)


def grid_points(L):
    if L < 1:
        raise ValueError("grid size L must be >= 1")
    return np.arange(1, L + 1) / (L + 1)


def density_grid(model, L):
    """``L x L`` density values at ``(i/(L+1), j/(L+1))``; rows index u."""
    g = grid_points(L)
    su = model.basis_x.unit_scores(g)
    sv = model.basis_y.unit_scores(g)
    out = 1.0 + su @ model.coef @ sv.T
    if model.clip:
        out = np.maximum(out, 0.0) / model._clip_norm
    return out


def grid_tsv(grid, matrix=False):
    """Render a density grid as TSV: ``u v density`` triples or a matrix."""
    L = grid.shape[0]
    g = grid_points(L)
    if matrix:
        return "".join("\t".join(repr(float(v)) for v in row) + "\n" for row in grid)
    lines = ["u\tv\tdensity"]
    for i in range(L):
        for j in range(L):
            lines.append("%r\t%r\t%r" % (float(g[i]), float(g[j]), float(grid[i, j])))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """SVD ``LP = U diag(s) V^T`` of the (selected) comean matrix."""

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def reconstruct(self):
        return (self.left * self.singular_values) @ self.right.T


def spectral(model):
    """Copula principal components of a fitted model.

    Each left singular vector is signed so its largest-magnitude entry is
    positive; the matching right vector flips with it.
    """
    a = model.coef
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    v = vt.T
    for k in range(len(s)):
        i = np.argmax(np.abs(u[:, k]))
        if u[i, k] < 0:
            u[:, k] = -u[:, k]
            v[:, k] = -v[:, k]
    return SpectralDecomposition(singular_values=s, left=u, right=v)


@dataclass(frozen=True, eq=False)
class MaxCorrelation:
    lpmax: float
    lambda1: float
    phi_values: np.ndarray
    phi_scores: np.ndarray
    psi_values: np.ndarray
    psi_scores: np.ndarray

    def to_dict(self):
        return {
            "lpmax": self.lpmax,
            "lambda1": self.lambda1,
            "phi": [[float(a), float(b)] for a, b in zip(self.phi_values, self.phi_scores)],
            "psi": [[float(a), float(b)] for a, b in zip(self.psi_values, self.psi_scores)],
        }


def max_correlation(model, x, y):
    """LP-maximal correlation and the optimal transformations.

    ``lpmax`` is the empirical correlation of ``phi_1(F~mid_X(x_i))`` and
    ``psi_1(F~mid_Y(y_i))``; ``lambda1`` is the leading singular value.  The
    transformation tables give ``phi_1`` and ``psi_1`` at each support value.
    """
    sd = spectral(model)
    if sd.singular_values.size == 0 or not sd.singular_values[0] > 0:
        raise ValueError("no dependence component")
    u1, v1 = sd.left[:, 0], sd.right[:, 0]
    gx, gy = model.basis_x.margin, model.basis_y.margin
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    phi = model.basis_x.unit_scores(gx.midcdf[gx.index_of(x)]) @ u1
    psi = model.basis_y.unit_scores(gy.midcdf[gy.index_of(y)]) @ v1
    r = float(np.corrcoef(phi, psi)[0, 1])
    return MaxCorrelation(lpmax=r, lambda1=float(sd.singular_values[0]),
                          phi_values=gx.values, phi_scores=model.basis_x.table @ u1,
                          psi_values=gy.values, psi_scores=model.basis_y.table @ v1)


def conditional_profile(model, k, u):
    """``E[T_k(Y) | X = Q(u)] = sum_j S_j(u) LP[j, k]`` from selected comeans."""
    if not 1 <= k <= model.basis_y.m:
        raise ValueError("index k=%d out of range 1..%d" % (k, model.basis_y.m))
    out = model.basis_x.unit_scores(u) @ model.coef[:, k - 1]
    return out if np.ndim(u) else float(out)


@dataclass(frozen=True, eq=False)
class TreeCopula:
    """Product of bivariate LP copulas over a maximum spanning tree.

    ``edges`` holds ``(i, j, model, weight)`` with ``i < j``.
    """

    d: int
    edges: list = field(default_factory=list)

    def density(self, u):
        """Unnormalized product density at points ``u`` of shape ``(..., d)``."""
        u = np.asarray(u, dtype=float)
        if u.shape[-1] != self.d:
            raise ValueError("expected points of dimension %d" % self.d)
        out = np.ones(u.shape[:-1])
        for i, j, m, _ in self.edges:
            out = out * density(m, u[..., i], u[..., j])
        return out if out.ndim else float(out)


def _max_spanning_tree(d, weights):
    """Kruskal on ``{(i, j): w}``; ties go to the smaller index pair."""
    parent = list(range(d))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    chosen = []
    for (i, j) in sorted(weights, key=lambda e: (-weights[e], e)):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == d - 1:
                break
    return sorted(chosen)


def fit_tree(samples, m=4, denoise=True):
    """Fit a tree copula to ``d`` paired samples.

    Edge weights are the LPINFOR statistics (BIC-denoised when ``denoise``),
    and each tree edge carries its own bivariate LP copula.
    """
    samples = [np.asarray(s, dtype=float).ravel() for s in samples]
    d = len(samples)
    if d < 2:
        raise ValueError("need at least two variables")
    models, weights = {}, {}
    for i, j in itertools.combinations(range(d), 2):
        mod = fit_copula(samples[i], samples[j], m=m, denoise=denoise)
        models[i, j] = mod
        weights[i, j] = float(np.sum(mod.coef ** 2))
    edges = [(i, j, models[i, j], weights[i, j])
             for i, j in _max_spanning_tree(d, weights)]
    return TreeCopula(d=d, edges=edges)
