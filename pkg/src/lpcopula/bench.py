"""Monte-Carlo MIAE harness and self-timing for the LP copula estimator."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import json
import math
import time

import numpy as np

from .model import density_grid, fit_copula, grid_points

_MASK64 = (1 << 64) - 1


def splitmix64(x):
    """One splitmix64 output for the 64-bit state ``x``."""
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def replication_seed(master, b):
    """Seed of replication ``b``; depends only on ``(master, b)``."""
    return splitmix64(splitmix64(master & _MASK64) ^ (b & _MASK64))


@dataclass(frozen=True)
class BenchConfig:
    family: object
    n: int = 1000
    B: int = 250
    L: int = 50
    m: int = 4
    seed: int = 0
    denoise: bool = True

    def __post_init__(self):
        if self.B < 1 or self.L < 1 or self.n < 4 or self.m < 1:
            raise ValueError("invalid bench config: need B >= 1, L >= 1, n >= 4, m >= 1")


@dataclass
class BenchReport:
    family: str
    n: int
    B: int
    L: int
    m: int
    seed: int
    denoise: bool
    miae_mean: float
    miae_stderr: float
    errors: list
    fit_seconds: list = field(default_factory=list)

    def to_dict(self, timing=False):
        d = {k: getattr(self, k) for k in
             ("family", "n", "B", "L", "m", "seed", "denoise", "miae_mean", "miae_stderr")}
        d["errors"] = list(self.errors)
        if timing:
            d["fit_seconds"] = list(self.fit_seconds)
        return d

    def to_json(self, timing=False):
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self):
        rows = [("family", self.family), ("n", self.n), ("B", self.B), ("L", self.L),
                ("m", self.m), ("seed", self.seed), ("denoise", self.denoise),
                ("miae_mean", "%.6f" % self.miae_mean),
                ("miae_stderr", "%.6f" % self.miae_stderr)]
        w = max(len(k) for k, _ in rows)
        return "".join("%-*s  %s\n" % (w, k, v) for k, v in rows)


def _replication(cfg, truth, b):
    uv = cfg.family.sample(cfg.n, replication_seed(cfg.seed, b))
    t0 = time.perf_counter()
    model = fit_copula(uv[:, 0], uv[:, 1], m=cfg.m, denoise=cfg.denoise)
    dt = time.perf_counter() - t0
    err = float(np.mean(np.abs(density_grid(model, cfg.L) - truth)))
    return err, dt


def _chunk(args):
    cfg, truth, bs = args
    return [_replication(cfg, truth, b) for b in bs]


def run_miae(cfg, workers=1):
    """Estimate the mean integrated absolute error of the LP fit.

    Replication ``b`` samples with ``replication_seed(cfg.seed, b)``, fits
    the LP copula and averages ``|fitted - true|`` over the
    ``(i/(L+1), j/(L+1))`` lattice.  Results do not depend on ``workers``.
    """
    g = grid_points(cfg.L)
    uu, vv = np.meshgrid(g, g, indexing="ij")
    try:
        truth = cfg.family.pdf(uu, vv)
    except NotImplementedError:
        raise ValueError("family %s has no density" % cfg.family.label) from None
    if workers > 1 and cfg.B > 1:
        chunks = [list(range(cfg.B))[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_chunk, [(cfg, truth, c) for c in chunks]))
        res = [None] * cfg.B
        for c, part in zip(chunks, parts):
            for b, r in zip(c, part):
                res[b] = r
    else:
        res = [_replication(cfg, truth, b) for b in range(cfg.B)]
    errors = [r[0] for r in res]
    # fixed-order reduction over the replication index
    total = 0.0
    for e in errors:
        total += e
    mean = total / cfg.B
    if cfg.B > 1:
        ss = 0.0
        for e in errors:
            ss += (e - mean) ** 2
        stderr = math.sqrt(ss / (cfg.B - 1)) / math.sqrt(cfg.B)
    else:
        stderr = 0.0
    return BenchReport(family=cfg.family.label, n=cfg.n, B=cfg.B, L=cfg.L, m=cfg.m,
                       seed=cfg.seed, denoise=cfg.denoise, miae_mean=mean,
                       miae_stderr=stderr, errors=errors,
                       fit_seconds=[r[1] for r in res])


def run_timing(n_list, reps=5, m=4, seed=0):
    """Median wall-clock seconds of a full fit on independent uniforms, per n."""
    rows = []
    for n in n_list:
        rng = np.random.default_rng(seed)
        times = []
        for _ in range(reps):
            u, v = rng.random(n), rng.random(n)
            t0 = time.perf_counter()
            fit_copula(u, v, m=m, denoise=True)
            times.append(time.perf_counter() - t0)
        rows.append((int(n), float(np.median(times))))
    return rows
