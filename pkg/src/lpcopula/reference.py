"""Parametric copulas with exact samplers and densities, used as ground truth.

Every family exposes ``cdf``, ``pdf``, the conditional cdf
``hfunc(u, v) = P(V <= v | U = u)`` and its inverse in ``v``.  Sampling draws
two independent uniforms ``(u, w)`` and returns ``(u, hinv(u, w))``, except
for the Khoudraji device which uses its max construction.
"""

import numpy as np
from scipy import stats

_BISECT_STEPS = 64


def _bisect(h, u, w):
    """Solve ``h(u, v) = w`` for ``v`` in (0, 1) by vectorized bisection."""
    lo = np.zeros_like(w)
    hi = np.ones_like(w)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        below = h(u, mid) < w
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def _uv(u, v):
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    if np.any(~((u > 0) & (u < 1))) or np.any(~((v > 0) & (v < 1))):
        raise ValueError("copula evaluated outside the open unit square")
    return u, v


def _out(x):
    return x if np.ndim(x) else float(x)


class ReferenceCopula:
    name = "copula"
    exchangeable = True

    def __init__(self, *params):
        self.params = tuple(float(p) for p in params)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, ", ".join("%g" % p for p in self.params))

    @property
    def label(self):
        return "%s(%s)" % (self.name, ", ".join("%g" % p for p in self.params))

    def cdf(self, u, v):
        return _out(self._cdf(*_uv(u, v)))

    def pdf(self, u, v):
        return _out(self._pdf(*_uv(u, v)))

    def hfunc(self, u, v):
        return _out(self._h(*_uv(u, v)))

    def hfunc_v(self, u, v):
        """``dC/dv(u, v) = P(U <= u | V = v)``."""
        if not self.exchangeable:
            raise NotImplementedError
        return self.hfunc(v, u)

    def hinv(self, u, w):
        u, w = _uv(u, w)
        return _out(self._hinv(u, w))

    def _hinv(self, u, w):
        return _bisect(self._h, u, w)

    def sample(self, n, seed=None):
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        return self._sample(int(n), rng)

    def _sample(self, n, rng):
        u = rng.random(n)
        w = rng.random(n)
        # Generator.random is [0, 1); keep draws in the open interval
        u = np.where(u == 0.0, 0.5 / 2 ** 53, u)
        w = np.where(w == 0.0, 0.5 / 2 ** 53, w)
        return np.column_stack([u, self._hinv(u, w)])


class Independence(ReferenceCopula):
    name = "independence"

    def _cdf(self, u, v):
        return u * v

    def _pdf(self, u, v):
        return np.ones_like(u)

    def _h(self, u, v):
        return v.copy()

    def _hinv(self, u, w):
        return w.copy()


class Gaussian(ReferenceCopula):
    name = "gaussian"

    def __init__(self, rho):
        if not -1 < rho < 1:
            raise ValueError("gaussian copula needs -1 < rho < 1")
        super().__init__(rho)
        self.rho = float(rho)

    def _cdf(self, u, v):
        r = self.rho
        pts = np.stack([stats.norm.ppf(u), stats.norm.ppf(v)], axis=-1)
        return stats.multivariate_normal(mean=[0, 0], cov=[[1, r], [r, 1]]).cdf(pts)

    def _pdf(self, u, v):
        r = self.rho
        a, b = stats.norm.ppf(u), stats.norm.ppf(v)
        q = (r * r * (a * a + b * b) - 2 * r * a * b) / (2 * (1 - r * r))
        return np.exp(-q) / np.sqrt(1 - r * r)

    def _h(self, u, v):
        r = self.rho
        a, b = stats.norm.ppf(u), stats.norm.ppf(v)
        return stats.norm.cdf((b - r * a) / np.sqrt(1 - r * r))

    def _hinv(self, u, w):
        r = self.rho
        a = stats.norm.ppf(u)
        return stats.norm.cdf(r * a + np.sqrt(1 - r * r) * stats.norm.ppf(w))


class StudentT(ReferenceCopula):
    name = "t"

    def __init__(self, rho, df=5):
        if not -1 < rho < 1:
            raise ValueError("t copula needs -1 < rho < 1")
        if not df > 0:
            raise ValueError("t copula needs df > 0")
        super().__init__(rho, df)
        self.rho, self.df = float(rho), float(df)

    def _cdf(self, u, v):
        r, nu = self.rho, self.df
        pts = np.stack([stats.t.ppf(u, nu), stats.t.ppf(v, nu)], axis=-1)
        dist = stats.multivariate_t(loc=[0, 0], shape=[[1, r], [r, 1]], df=nu)
        return dist.cdf(pts, random_state=0)

    def _pdf(self, u, v):
        r, nu = self.rho, self.df
        a, b = stats.t.ppf(u, nu), stats.t.ppf(v, nu)
        q = (a * a - 2 * r * a * b + b * b) / (nu * (1 - r * r))
        log_joint = (-(nu + 2) / 2 * np.log1p(q) - np.log(2 * np.pi)
                     - 0.5 * np.log(1 - r * r))
        return np.exp(log_joint - stats.t.logpdf(a, nu) - stats.t.logpdf(b, nu))

    def _scale(self, a):
        r, nu = self.rho, self.df
        return np.sqrt((nu + a * a) * (1 - r * r) / (nu + 1))

    def _h(self, u, v):
        a, b = stats.t.ppf(u, self.df), stats.t.ppf(v, self.df)
        return stats.t.cdf((b - self.rho * a) / self._scale(a), self.df + 1)

    def _hinv(self, u, w):
        a = stats.t.ppf(u, self.df)
        b = self.rho * a + self._scale(a) * stats.t.ppf(w, self.df + 1)
        return stats.t.cdf(b, self.df)


class Frank(ReferenceCopula):
    name = "frank"

    def __init__(self, theta):
        if theta == 0 or not np.isfinite(theta):
            raise ValueError("frank copula needs finite theta != 0")
        super().__init__(theta)
        self.theta = float(theta)

    def _cdf(self, u, v):
        t = self.theta
        return -np.log1p(np.expm1(-t * u) * np.expm1(-t * v) / np.expm1(-t)) / t

    def _pdf(self, u, v):
        t = self.theta
        e = np.expm1(-t)
        den = e + np.expm1(-t * u) * np.expm1(-t * v)
        return -t * e * np.exp(-t * (u + v)) / den ** 2

    def _h(self, u, v):
        t = self.theta
        ev = np.expm1(-t * v)
        return np.exp(-t * u) * ev / (np.expm1(-t) + np.expm1(-t * u) * ev)

    def _hinv(self, u, w):
        t = self.theta
        ev = w * np.expm1(-t) / (np.exp(-t * u) - w * np.expm1(-t * u))
        return -np.log1p(ev) / t


class Clayton(ReferenceCopula):
    name = "clayton"

    def __init__(self, theta):
        if not theta > -1 or theta == 0:
            raise ValueError("clayton copula needs theta > -1, theta != 0")
        super().__init__(theta)
        self.theta = float(theta)

    def _base(self, u, v):
        t = self.theta
        return u ** -t + v ** -t - 1

    def _cdf(self, u, v):
        b = self._base(u, v)
        return np.where(b > 0, np.maximum(b, 1e-300) ** (-1 / self.theta), 0.0)

    def _pdf(self, u, v):
        t = self.theta
        b = self._base(u, v)
        val = (1 + t) * (u * v) ** (-t - 1) * np.maximum(b, 1e-300) ** (-1 / t - 2)
        return np.where(b > 0, val, 0.0)

    def _h(self, u, v):
        t = self.theta
        b = self._base(u, v)
        val = u ** (-t - 1) * np.maximum(b, 1e-300) ** (-1 / t - 1)
        return np.where(b > 0, val, 0.0)

    def _hinv(self, u, w):
        t = self.theta
        return ((w ** (-t / (1 + t)) - 1) * u ** -t + 1) ** (-1 / t)


class Plackett(ReferenceCopula):
    name = "plackett"

    def __init__(self, theta):
        if not theta > 0 or theta == 1:
            raise ValueError("plackett copula needs theta > 0, theta != 1")
        super().__init__(theta)
        self.theta = float(theta)

    def _sr(self, u, v):
        t = self.theta
        s = 1 + (t - 1) * (u + v)
        return s, np.sqrt(s * s - 4 * u * v * t * (t - 1))

    def _cdf(self, u, v):
        s, r = self._sr(u, v)
        return (s - r) / (2 * (self.theta - 1))

    def _pdf(self, u, v):
        t = self.theta
        s, r = self._sr(u, v)
        return t * (1 + (t - 1) * (u + v - 2 * u * v)) / r ** 3

    def _h(self, u, v):
        s, r = self._sr(u, v)
        return 0.5 * (1 - (s - 2 * self.theta * v) / r)

    def _hinv(self, u, w):
        t = self.theta
        a = w * (1 - w)
        b = t + a * (t - 1) ** 2
        c = 2 * a * (u * t * t + 1 - u) + t * (1 - 2 * a)
        d = np.sqrt(t) * np.sqrt(t + 4 * a * u * (1 - u) * (1 - t) ** 2)
        return (c - (1 - 2 * w) * d) / (2 * b)


class AMH(ReferenceCopula):
    name = "amh"

    def __init__(self, theta):
        if not -1 <= theta < 1:
            raise ValueError("AMH copula needs -1 <= theta < 1")
        super().__init__(theta)
        self.theta = float(theta)

    def _cdf(self, u, v):
        return u * v / (1 - self.theta * (1 - u) * (1 - v))

    def _pdf(self, u, v):
        t = self.theta
        den = 1 - t * (1 - u) * (1 - v)
        num = 1 + t * ((1 + u) * (1 + v) - 3) + t * t * (1 - u) * (1 - v)
        return num / den ** 3

    def _h(self, u, v):
        t = self.theta
        den = 1 - t * (1 - u) * (1 - v)
        return v * (1 - t * (1 - v)) / den ** 2


class Joe(ReferenceCopula):
    name = "joe"

    def __init__(self, theta):
        if not theta >= 1:
            raise ValueError("joe copula needs theta >= 1")
        super().__init__(theta)
        self.theta = float(theta)

    def _parts(self, u, v):
        t = self.theta
        x, y = (1 - u) ** t, (1 - v) ** t
        return x, y, x + y - x * y

    def _cdf(self, u, v):
        x, y, a = self._parts(u, v)
        return 1 - a ** (1 / self.theta)

    def _pdf(self, u, v):
        t = self.theta
        x, y, a = self._parts(u, v)
        return a ** (1 / t - 2) * ((1 - u) * (1 - v)) ** (t - 1) * (t - 1 + a)

    def _h(self, u, v):
        t = self.theta
        x, y, a = self._parts(u, v)
        return a ** (1 / t - 1) * (1 - u) ** (t - 1) * (1 - y)


class Gumbel(ReferenceCopula):
    name = "gumbel"

    def __init__(self, theta):
        if not theta >= 1:
            raise ValueError("gumbel copula needs theta >= 1")
        super().__init__(theta)
        self.theta = float(theta)

    def _parts(self, u, v):
        x, y = -np.log(u), -np.log(v)
        s = x ** self.theta + y ** self.theta
        return x, y, s, np.exp(-s ** (1 / self.theta))

    def _cdf(self, u, v):
        return self._parts(u, v)[3]

    def _pdf(self, u, v):
        t = self.theta
        x, y, s, c = self._parts(u, v)
        return (c / (u * v) * (x * y) ** (t - 1) * s ** (2 / t - 2)
                * (1 + (t - 1) * s ** (-1 / t)))

    def _h(self, u, v):
        t = self.theta
        x, y, s, c = self._parts(u, v)
        return c * s ** (1 / t - 1) * x ** (t - 1) / u


class Khoudraji(ReferenceCopula):
    """Asymmetrized copula ``u**(1-l1) v**(1-l2) C(u**l1, v**l2)``."""

    name = "khoudraji"
    exchangeable = False

    def __init__(self, base, lam1, lam2):
        _check_lambdas(lam1, lam2)
        if not base.exchangeable:
            raise ValueError("khoudraji base must be exchangeable")
        self.base = base
        self.lam1, self.lam2 = float(lam1), float(lam2)
        self.params = base.params + (self.lam1, self.lam2)

    @property
    def label(self):
        return "khoudraji(%s, %g, %g)" % (self.base.label, self.lam1, self.lam2)

    def __repr__(self):
        return "Khoudraji(%r, %g, %g)" % (self.base, self.lam1, self.lam2)

    def _cdf(self, u, v):
        l1, l2 = self.lam1, self.lam2
        return u ** (1 - l1) * v ** (1 - l2) * self.base._cdf(u ** l1, v ** l2)

    def _pdf(self, u, v):
        # product rule on the closed form; note u**(a + l1 - 1) == 1
        l1, l2 = self.lam1, self.lam2
        a, b = 1 - l1, 1 - l2
        s, t = u ** l1, v ** l2
        bs = self.base
        out = l1 * l2 * bs._pdf(s, t)
        if a > 0:
            out = out + a * l2 * u ** (a - 1) * bs._h(t, s)
        if b > 0:
            out = out + l1 * b * v ** (b - 1) * bs._h(s, t)
        if a > 0 and b > 0:
            out = out + a * b * u ** (a - 1) * v ** (b - 1) * bs._cdf(s, t)
        return out

    def _h(self, u, v):
        l1, l2 = self.lam1, self.lam2
        a = 1 - l1
        s, t = u ** l1, v ** l2
        bs = self.base
        val = l1 * bs._h(s, t)
        if a > 0:
            val = val + a * u ** (a - 1) * bs._cdf(s, t)
        return v ** (1 - l2) * val

    def _sample(self, n, rng):
        st = self.base._sample(n, rng)
        wz = rng.random((n, 2))
        wz = np.where(wz == 0.0, 0.5 / 2 ** 53, wz)
        out = np.empty((n, 2))
        for c, lam in enumerate((self.lam1, self.lam2)):
            own = st[:, c] ** (1 / lam)
            other = wz[:, c] ** (1 / (1 - lam)) if lam < 1 else np.zeros(n)
            out[:, c] = np.maximum(own, other)
        return out


def _check_lambdas(lam1, lam2):
    for lam in (lam1, lam2):
        if not 0 < lam <= 1:
            raise ValueError("khoudraji exponents must lie in (0, 1]")


FAMILIES = {
    "independence": Independence,
    "gaussian": Gaussian,
    "t": StudentT,
    "frank": Frank,
    "clayton": Clayton,
    "plackett": Plackett,
    "amh": AMH,
    "joe": Joe,
    "gumbel": Gumbel,
}


def make_family(name, *params):
    """Instantiate a reference copula by tag, e.g. ``make_family("frank", 6)``."""
    try:
        cls = FAMILIES[name.lower()]
    except KeyError:
        raise ValueError("unknown copula family %r" % name) from None
    return cls(*params)


def khoudraji(base, lam1, lam2, convention="base"):
    """Khoudraji asymmetrization of ``base``.

    ``convention="base"`` puts ``lam`` on the base copula's arguments,
    ``u**(1-lam1) v**(1-lam2) C(u**lam1, v**lam2)``.  ``"complement"`` puts
    it on the independence factor instead, ``u**lam1 v**lam2
    C(u**(1-lam1), v**(1-lam2))``, which is the same family with exponents
    ``1 - lam``.
    """
    if convention == "base":
        return Khoudraji(base, lam1, lam2)
    if convention == "complement":
        if not (0 <= lam1 < 1 and 0 <= lam2 < 1):
            raise ValueError("complement exponents must lie in [0, 1)")
        return Khoudraji(base, 1 - lam1, 1 - lam2)
    raise ValueError("unknown khoudraji convention %r" % convention)


def sample(fam, n, seed):
    """``n`` i.i.d. draws from ``fam`` as an ``(n, 2)`` array."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return fam.sample(n, seed)


def true_density(fam, u, v):
    return fam.pdf(u, v)


def khoudraji_cdf(base, lam1, lam2, u, v):
    """Khoudraji-device cdf of ``base`` at ``(u, v)``."""
    _check_lambdas(lam1, lam2)
    u, v = _uv(u, v)
    return _out(u ** (1 - lam1) * v ** (1 - lam2) * base._cdf(u ** lam1, v ** lam2))


#: the twelve benchmark families (Student t with 5 degrees of freedom)
BENCH_FAMILIES = [
    ("Gaussian (0.70)", Gaussian(0.70)),
    ("Student-t (-0.30)", StudentT(-0.30, 5)),
    ("Frank (6)", Frank(6)),
    ("Frank (-2)", Frank(-2)),
    ("Plackett (6)", Plackett(6)),
    ("Plackett (0.10)", Plackett(0.10)),
    ("Clayton (3)", Clayton(3)),
    ("Clayton (-0.50)", Clayton(-0.50)),
    ("AMH (0.85)", AMH(0.85)),
    ("AMH (-0.85)", AMH(-0.85)),
    ("Joe (1.5)", Joe(1.5)),
    ("Gumbel (1.5)", Gumbel(1.5)),
]

#: the Student t benchmark row with 4 degrees of freedom
STUDENT_T4 = StudentT(-0.30, 4)
