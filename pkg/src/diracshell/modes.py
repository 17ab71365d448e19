"""Sphere diagonalization data for the shell-coupled Dirac operator.

On the unit sphere the boundary operators K and W act diagonally /
antidiagonally on the spinor spherical harmonics psi_{j +- 1/2}^{m_j}:

    K psi_{j+-1/2} = d_{j+-1/2} psi_{j+-1/2}
    W psi_{j+-1/2} = p_{j+-1/2} psi_{j-+1/2},   p purely imaginary,
                                                p_{j+1/2} = -p_{j-1/2}

with |p|^2 = 1/4 - kappa^2 d_{j+1/2} d_{j-1/2}. The d coefficients are
Funk-Hecke integrals of the Yukawa kernel and carry closed forms for the
first two degrees. This module computes all of that, the sharp
uncertainty inequality data (M, delta), and the coefficient-product scan
behind the open monotonicity question.

Index conventions: half-integers j, m_j are passed as exact twice-values
(odd integers j2, mj2) wherever they index data structures; the sign
s in {-1,+1} selects the orbital degree l = j + s/2 = (j2 + s)/2.
"""
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import sph_harm_y, eval_legendre, iv, kv

from .kernels import SpectralParams

_QUAD_NODES = 240


@lru_cache(maxsize=8)
def _quad_rule(nodes=_QUAD_NODES):
    t, wt = leggauss(nodes)
    # map [-1,1] -> [0,2], the chord-length variable u = |x - e3|
    return t + 1.0, wt


def d_coefficient(n: int, kappa: float, nodes: int = _QUAD_NODES) -> float:
    """Funk-Hecke eigenvalue of the Yukawa kernel on degree-n harmonics.

    d_n = (1/2) int_0^2 e^{-kappa u} P_n(1 - u^2/2) du, the chord-variable
    form of the classical reduction; exact for the unit sphere.
    """
    if n < 0:
        raise ValueError("degree n must be nonnegative")
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    u, wt = _quad_rule(nodes)
    return 0.5 * float(np.sum(wt * np.exp(-kappa * u) * eval_legendre(n, 1.0 - 0.5 * u * u)))


def d_table(nmax: int, kappa: float, nodes: int = _QUAD_NODES) -> np.ndarray:
    """d_0 .. d_nmax in one pass (three-term Legendre recurrence on the rule)."""
    u, wt = _quad_rule(nodes)
    x = 1.0 - 0.5 * u * u
    f = wt * np.exp(-kappa * u)
    P_prev = np.ones_like(x)
    out = np.empty(nmax + 1)
    out[0] = 0.5 * float(f @ P_prev)
    if nmax == 0:
        return out
    P = x.copy()
    out[1] = 0.5 * float(f @ P)
    for n in range(1, nmax):
        P_prev, P = P, ((2 * n + 1) * x * P - n * P_prev) / (n + 1)
        out[n + 1] = 0.5 * float(f @ P)
    return out


def d0_closed(kappa: float) -> float:
    """Closed form d_0 = (1 - e^{-2 kappa}) / (2 kappa), kappa -> 0 limit 1."""
    if kappa == 0.0:
        return 1.0
    return (1.0 - np.exp(-2.0 * kappa)) / (2.0 * kappa)


def d1_closed(kappa: float) -> float:
    """Closed form d_1 = (1/2kappa)(1 - 1/kappa^2 + (1 + 1/kappa)^2 e^{-2 kappa})."""
    if kappa == 0.0:
        return 1.0 / 3.0
    return (1.0 - 1.0 / kappa ** 2 + (1.0 + 1.0 / kappa) ** 2 * np.exp(-2.0 * kappa)) / (2.0 * kappa)


def d_bessel(n: int, kappa: float) -> float:
    """Modified-Bessel product I_{n+1/2}(kappa) K_{n+1/2}(kappa).

    Numerically verified against the Funk-Hecke quadrature (it reproduces
    both closed forms at n = 0, 1); used as an independent cross-check.
    """
    if kappa <= 0:
        raise ValueError("Bessel form needs kappa > 0")
    return float(iv(n + 0.5, kappa) * kv(n + 0.5, kappa))


def _check_j2(j2: int):
    if j2 < 1 or j2 % 2 == 0:
        raise ValueError("j must be a positive half-integer (odd twice-value)")


@dataclass(frozen=True)
class ModeCoefficients:
    """d and |p| data at one half-integer j (stored as twice-j)."""
    j2: int
    d_minus: float
    d_plus: float
    p_abs: float


def p_abs(j2: int, kappa: float) -> float:
    """|p_{j +- 1/2}| = sqrt(1/4 - kappa^2 d_{j+1/2} d_{j-1/2}).

    The radicand stays positive for every j and kappa (the explicit
    exponential lower bound below); asserted here.
    """
    _check_j2(j2)
    dm = d_coefficient((j2 - 1) // 2, kappa)
    dp = d_coefficient((j2 + 1) // 2, kappa)
    rad = 0.25 - kappa * kappa * dm * dp
    assert rad > 0.0, "mode radicand must be positive"
    return float(np.sqrt(rad))


def mode_coefficients(j2: int, kappa: float) -> ModeCoefficients:
    _check_j2(j2)
    dm = d_coefficient((j2 - 1) // 2, kappa)
    dp = d_coefficient((j2 + 1) // 2, kappa)
    rad = 0.25 - kappa * kappa * dm * dp
    assert rad > 0.0
    return ModeCoefficients(j2, dm, dp, float(np.sqrt(rad)))


def p_lower_bound(kappa: float) -> float:
    """(1/2) e^{-kappa} sqrt(2 - e^{-2 kappa}), valid for every j."""
    return 0.5 * np.exp(-kappa) * np.sqrt(2.0 - np.exp(-2.0 * kappa))


@dataclass(frozen=True)
class MinP:
    M: float
    j2_argmin: int
    certified_tail: bool   # |p| within 1e-6 of 1/2 over the last 50 scanned modes


def min_p(kappa: float, j2_max: int = 399) -> MinP:
    """Minimum of |p_j| over j = 1/2 .. j2_max/2 with a tail heuristic.

    The scan cannot prove a global minimum (open question); the flag
    reports whether the tail already sits within 1e-6 of the limit 1/2.
    """
    _check_j2(j2_max)
    nmax = (j2_max + 1) // 2
    d = d_table(nmax, kappa)
    j2s = np.arange(1, j2_max + 1, 2)
    rad = 0.25 - kappa * kappa * d[(j2s - 1) // 2] * d[(j2s + 1) // 2]
    assert np.all(rad > 0.0)
    p = np.sqrt(rad)
    k = int(np.argmin(p))
    tail = p[-50:] if p.size >= 50 else p
    return MinP(float(p[k]), int(j2s[k]), bool(np.all(np.abs(tail - 0.5) < 1e-6)))


def m_formula(kappa: float) -> float:
    """Conditional closed form for M = |p_{1/2}|, valid if the product
    monotonicity question holds: 1/(2 kappa) - (1/2)(1 + 1/kappa) e^{-2 kappa}."""
    if kappa <= 0:
        return 0.5
    return 1.0 / (2.0 * kappa) - 0.5 * (1.0 + 1.0 / kappa) * np.exp(-2.0 * kappa)


def delta_star(lam: float, params: SpectralParams, j2_0: int, sign: int) -> float:
    """Optimal delta = M / (1/lambda + (m+a) d_{j0 -+ 1/2}) for f = psi_{j0 +- 1/2}."""
    if lam <= 0:
        raise ValueError("lambda must be positive")
    _check_j2(j2_0)
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    M = min_p(params.kappa).M
    d_opp = d_coefficient((j2_0 - sign) // 2, params.kappa)
    return M / (1.0 / lam + (params.m + params.a) * d_opp)


def verify_uncertainty(coeffs, lam: float, params: SpectralParams, delta: float):
    """Evaluate both sides of the sharp uncertainty inequality in mode space.

    coeffs: iterable of (j2, sign, mj2, c) giving f = sum c psi_{j + s/2};
    returns (lhs, rhs) with lhs = ||f||^2 and the per-mode right-hand side

        |c|^2 ( |p_j|^2 / (2 M delta q) + delta q / (2 M) ),
        q = 1/lambda + (m+a) d_{j - s/2}.

    The AM-GM structure guarantees lhs <= rhs; equality exactly at the
    minimizing mode with delta = delta_star.
    """
    if lam <= 0 or delta <= 0:
        raise ValueError("lambda and delta must be positive")
    kap = params.kappa
    M = min_p(kap).M
    lhs = 0.0
    rhs = 0.0
    for j2, sign, mj2, c in coeffs:
        _check_j2(j2)
        if abs(mj2) > j2 or (mj2 - 1) % 2 != 0:
            raise ValueError("invalid mj")
        if sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        c2 = abs(c) ** 2
        p = p_abs(j2, kap)
        q = 1.0 / lam + (params.m + params.a) * d_coefficient((j2 - sign) // 2, kap)
        lhs += c2
        rhs += c2 * (p * p / (2.0 * M * delta * q) + delta * q / (2.0 * M))
    return lhs, rhs


def riesz_constants():
    """The sharp constants: 2 in ||f|| <= 2 ||W f|| and 2 pi in the Riesz bound."""
    return 2.0, 2.0 * np.pi


def scan_question(kappa_grid, j2_max: int = 399) -> dict:
    """Scan d_{j+1/2} d_{j-1/2} < d_1 d_0 for j >= 3/2 on a kappa grid.

    Returns {kappa: [violating j2, ...]}; expected empty lists. Reported,
    never asserted: the strict inequality is an open question.
    """
    _check_j2(j2_max)
    if j2_max < 3:
        raise ValueError("need j2_max >= 3, nothing to scan below j = 3/2")
    out = {}
    nmax = (j2_max + 1) // 2
    for kap in kappa_grid:
        d = d_table(nmax, float(kap))
        j2s = np.arange(3, j2_max + 1, 2)
        prod = d[(j2s - 1) // 2] * d[(j2s + 1) // 2]
        bad = j2s[prod >= d[0] * d[1]]
        out[float(kap)] = [int(b) for b in bad]
    return out


# ---------------------------------------------------------------------------
# spherical and spinor spherical harmonics


def spherical_harmonic(n: int, l: int, point) -> complex:
    """Orthonormal Y_n^l (Condon-Shortley phase) at a unit vector."""
    if n < 0 or abs(l) > n:
        raise ValueError("invalid spherical harmonic index")
    x = np.asarray(point, dtype=float)
    r = np.linalg.norm(x)
    if abs(r - 1.0) > 1e-10:
        raise ValueError("point must lie on the unit sphere")
    th = np.arccos(np.clip(x[2] / r, -1.0, 1.0))
    ph = np.arctan2(x[1], x[0])
    return complex(sph_harm_y(n, l, th, ph))


@dataclass(frozen=True)
class ModeIndex:
    """j, m_j as twice-values plus the sign selecting l = j + sign/2."""
    j2: int
    mj2: int
    sign: int

    def __post_init__(self):
        _check_j2(self.j2)
        if abs(self.mj2) > self.j2 or self.mj2 % 2 == 0:
            raise ValueError("mj must be a half-integer with |mj| <= j")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")

    @property
    def l(self) -> int:
        return (self.j2 + self.sign) // 2


def _spinor_weights(idx: ModeIndex):
    j = idx.j2 / 2.0
    mj = idx.mj2 / 2.0
    if idx.sign == -1:
        cu = np.sqrt((j + mj) / (2.0 * j))
        cd = np.sqrt((j - mj) / (2.0 * j))
    else:
        cu = np.sqrt((j + 1.0 - mj) / (2.0 * j + 2.0))
        cd = -np.sqrt((j + 1.0 + mj) / (2.0 * j + 2.0))
    return cu, cd


def spinor_harmonic(idx: ModeIndex, point) -> np.ndarray:
    """2-spinor psi at a unit vector, in the printed normalization.

    psi_{j-1/2} = (sqrt(j+mj) Y^{mj-1/2}, sqrt(j-mj) Y^{mj+1/2}) / sqrt(2j)
    psi_{j+1/2} = (sqrt(j+1-mj) Y^{mj-1/2}, -sqrt(j+1+mj) Y^{mj+1/2}) / sqrt(2j+2)

    the sign choice making sigma_dot(N) act as the pure swap
    psi_{j +- 1/2} -> psi_{j -+ 1/2}.
    """
    x = np.asarray(point, dtype=float)
    if abs(np.linalg.norm(x) - 1.0) > 1e-10:
        raise ValueError("point must lie on the unit sphere")
    th = np.arccos(np.clip(x[2], -1.0, 1.0))
    ph = np.arctan2(x[1], x[0])
    return _spinor_eval(idx, th, ph)


def _spinor_eval(idx: ModeIndex, th, ph) -> np.ndarray:
    l = idx.l
    mu = (idx.mj2 - 1) // 2
    md = (idx.mj2 + 1) // 2
    cu, cd = _spinor_weights(idx)
    up = cu * sph_harm_y(l, mu, th, ph) if (cu != 0.0 and abs(mu) <= l) else np.zeros_like(th, dtype=complex)
    dn = cd * sph_harm_y(l, md, th, ph) if (cd != 0.0 and abs(md) <= l) else np.zeros_like(th, dtype=complex)
    return np.stack([up, dn], axis=-1)


def spinor_basis(directions: np.ndarray, jmax2: int):
    """Sample all spinor harmonics with j <= jmax2/2 at given unit vectors.

    Returns (B, meta): B of shape (2N, K) with the two spinor components
    interleaved per point, meta a list of ModeIndex in column order.
    """
    _check_j2(jmax2)
    X = np.asarray(directions, dtype=float)
    th = np.arccos(np.clip(X[:, 2], -1.0, 1.0))
    ph = np.arctan2(X[:, 1], X[:, 0])
    cols = []
    meta = []
    for j2 in range(1, jmax2 + 1, 2):
        for sign in (-1, 1):
            for mj2 in range(-j2, j2 + 1, 2):
                idx = ModeIndex(j2, mj2, sign)
                v = _spinor_eval(idx, th, ph)
                c = np.empty(2 * X.shape[0], dtype=complex)
                c[0::2] = v[:, 0]
                c[1::2] = v[:, 1]
                cols.append(c)
                meta.append(idx)
    return np.array(cols).T, meta
