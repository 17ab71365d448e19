"""Point spectrum of the shell-coupled Dirac operator on the unit sphere.

Restricted to a fixed (j, m_j) pair the boundary operator acts on the
two-dimensional span of (psi_{j - s/2}, 0) and (0, psi_{j + s/2}) through
a 2x2 Hermitian block whose eigenvalue -1/lambda is equivalent to the
scalar condition

    lambda^2/4 - b lambda = 1,
    b = (m + a) d_{j - s/2} - (m - a) d_{j + s/2},  s in {-1, +1}.

Everything here is mode arithmetic: solving that quadratic, tracing the
eigenvalue curves over the coupling window a in (-m, m), bracketing the
admissible lambda range, and rebuilding the surface eigendensity from a
root. Half-integers are passed as twice-values (odd ints) throughout.

Sign of the antidiagonal: p is purely imaginary with p_{j+1/2} =
-p_{j-1/2}; with the printed spinor-harmonic normalization, applying the
discretized W to sampled harmonics fixes the phase to p_{j-1/2} = +i|p|.
The blocks for the opposite choice are unitarily equivalent (conjugate by
diag(1,-1)), so all spectral quantities are phase-independent; the stored
phase is the one the discrete operator realizes.
"""
from dataclasses import dataclass
import numpy as np

from .kernels import SpectralParams
from . import modes

_GOLD = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EigenQuery:
    """One (m, a, j, sign, lambda) candidate; j as twice-value."""
    m: float
    a: float
    j2: int
    sign: int
    lam: float

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("m must be positive")
        if abs(self.a) >= self.m:
            raise ValueError("need |a| < m")
        modes._check_j2(self.j2)
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")


def _b_coeff(m: float, a: float, j2: int, sign: int) -> float:
    kap = np.sqrt(max(m * m - a * a, 0.0))
    d_opp = modes.d_coefficient((j2 - sign) // 2, kap)
    d_sel = modes.d_coefficient((j2 + sign) // 2, kap)
    return (m + a) * d_opp - (m - a) * d_sel


def condition_residual(q: EigenQuery) -> float:
    """lambda^2/4 - b lambda - 1; zero iff lambda solves the mode condition."""
    b = _b_coeff(q.m, q.a, q.j2, q.sign)
    return q.lam * q.lam / 4.0 - b * q.lam - 1.0


def solve_lambda(m: float, a: float, j2: int, sign: int):
    """Both roots 2(b +- sqrt(b^2+1)); real with product exactly -4."""
    if abs(a) >= m:
        raise ValueError("need |a| < m")
    modes._check_j2(j2)
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    b = _b_coeff(m, a, j2, sign)
    s = np.sqrt(b * b + 1.0)
    return 2.0 * (b + s), 2.0 * (b - s)


@dataclass(frozen=True)
class EigenCurve:
    """Positive-root eigencurve samples over a coupling grid."""
    m: float
    j2: int
    sign: int
    a: np.ndarray
    lam: np.ndarray
    residual: np.ndarray


def _d_pair_grid(kappas: np.ndarray, l1: int, l2: int):
    """d_l1, d_l2 for an array of kappas in one quadrature pass."""
    from numpy.polynomial.legendre import leggauss
    from scipy.special import eval_legendre
    u, wt = leggauss(modes._QUAD_NODES)
    u = u + 1.0
    x = 1.0 - 0.5 * u * u
    E = np.exp(-np.multiply.outer(kappas, u))
    d1 = 0.5 * E @ (wt * eval_legendre(l1, x))
    d2 = 0.5 * E @ (wt * eval_legendre(l2, x))
    return d1, d2


def trace_curve(m: float, j2: int, sign: int, a_grid, negative: bool = False) -> EigenCurve:
    """Eigencurve a -> positive root over a_grid strictly inside (-m, m).

    negative=True returns the lambda < 0 branch through the mirror
    symmetry lambda(a) = -lambda_+(-a; opposite sign) instead of
    re-deriving formulas for negative coupling strengths.
    """
    a = np.asarray(a_grid, dtype=float)
    if a.size == 0:
        raise ValueError("empty coupling grid")
    if np.any(np.abs(a) >= m):
        raise ValueError("grid must lie strictly inside (-m, m)")
    if negative:
        base = trace_curve(m, j2, -sign, -a, negative=False)
        lam = -base.lam
        res = np.array([condition_residual(EigenQuery(m, ai, j2, sign, li))
                        for ai, li in zip(a, lam)])
        return EigenCurve(m, j2, sign, a, lam, res)
    kap = np.sqrt(m * m - a * a)
    d_opp, d_sel = _d_pair_grid(kap, (j2 - sign) // 2, (j2 + sign) // 2)
    b = (m + a) * d_opp - (m - a) * d_sel
    lam = 2.0 * (b + np.sqrt(b * b + 1.0))
    res = lam * lam / 4.0 - b * lam - 1.0
    return EigenCurve(m, j2, sign, a, lam, res)


def _golden_extremum(f, lo: float, hi: float, want_max: bool, tol: float = 1e-12):
    sgn = -1.0 if want_max else 1.0
    x1 = hi - _GOLD * (hi - lo)
    x2 = lo + _GOLD * (hi - lo)
    f1, f2 = sgn * f(x1), sgn * f(x2)
    while hi - lo > tol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLD * (hi - lo)
            f1 = sgn * f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLD * (hi - lo)
            f2 = sgn * f(x2)
    return sgn * min(f1, f2)


def admissible_interval(m: float, j2: int, sign: int):
    """Open-interval limits of the positive-root range over a in (-m, m).

    Endpoint limits use d_n -> 1/(2n+1) as kappa -> 0 (the closed forms
    have a removable singularity there); a 2001-point interior sweep with
    golden-section refinement guards against interior extrema, which are
    not assumed absent.
    """
    modes._check_j2(j2)
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    l_opp = (j2 - sign) // 2
    l_sel = (j2 + sign) // 2
    roots = []
    for b in (2.0 * m / (2 * l_opp + 1), -2.0 * m / (2 * l_sel + 1)):
        roots.append(2.0 * (b + np.sqrt(b * b + 1.0)))
    a = np.linspace(-m, m, 2003)[1:-1]
    curve = trace_curve(m, j2, sign, a)
    lam = curve.lam

    def lam_at(av: float) -> float:
        b = _b_coeff(m, av, j2, sign)
        return 2.0 * (b + np.sqrt(b * b + 1.0))

    k_hi = int(np.argmax(lam))
    k_lo = int(np.argmin(lam))
    cands_hi = list(roots) + [lam[k_hi]]
    cands_lo = list(roots) + [lam[k_lo]]
    if 0 < k_hi < a.size - 1:
        cands_hi.append(_golden_extremum(lam_at, a[k_hi - 1], a[k_hi + 1], True))
    if 0 < k_lo < a.size - 1:
        cands_lo.append(_golden_extremum(lam_at, a[k_lo - 1], a[k_lo + 1], False))
    return min(cands_lo), max(cands_hi)


def mode_block(j2: int, sign: int, params: SpectralParams) -> np.ndarray:
    """Action of the boundary operator on span{(psi_{j-s/2},0),(0,psi_{j+s/2})}.

    [[(m+a) d_{j-s/2}, -s i|p|], [s i|p|, (a-m) d_{j+s/2}]]; Hermitian,
    determinant identically -1/4, eigenvalue -1/lambda equivalent to the
    quadratic mode condition.
    """
    modes._check_j2(j2)
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    kap = params.kappa
    d_opp = modes.d_coefficient((j2 - sign) // 2, kap)
    d_sel = modes.d_coefficient((j2 + sign) // 2, kap)
    p = modes.p_abs(j2, kap)
    return np.array([[(params.m + params.a) * d_opp, -sign * 1j * p],
                     [sign * 1j * p, (params.a - params.m) * d_sel]])


def mode_block_sup(params: SpectralParams, j2_max: int = 4001) -> float:
    """sup over j <= j2_max/2 and both signs of the block spectral norm."""
    modes._check_j2(j2_max)
    kap = params.kappa
    nmax = (j2_max + 1) // 2
    d = modes.d_table(nmax, kap)
    j2s = np.arange(1, j2_max + 1, 2)
    dm = d[(j2s - 1) // 2]
    dp = d[(j2s + 1) // 2]
    p2 = 0.25 - kap * kap * dm * dp
    best = 0.0
    for d_opp, d_sel in ((dm, dp), (dp, dm)):
        al = (params.m + params.a) * d_opp
        de = (params.a - params.m) * d_sel
        mid = 0.5 * (al + de)
        rad = np.sqrt(0.25 * (al - de) ** 2 + p2)
        best = max(best, float(np.max(np.abs(mid) + rad)))
    return best


def isospectral_partner(lam: float) -> float:
    """The paired coupling -4/lambda with the same point spectrum."""
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    return -4.0 / lam


@dataclass(frozen=True)
class EigenDensity:
    """Surface density g = (f, h) in mode coefficients.

    h = psi_{j + s/2}^{m_j} with coefficient 1; f = f_coeff psi_{j - s/2}^{m_j}.
    """
    j2: int
    mj2: int
    sign: int
    params: SpectralParams
    lam: float
    f_coeff: complex

    def coefficient_vector(self) -> np.ndarray:
        return np.array([self.f_coeff, 1.0 + 0.0j])

    def sample(self, directions: np.ndarray) -> np.ndarray:
        """(N, 4) samples: components 0,1 carry f, components 2,3 carry h."""
        X = np.asarray(directions, dtype=float)
        th = np.arccos(np.clip(X[:, 2], -1.0, 1.0))
        ph = np.arctan2(X[:, 1], X[:, 0])
        f = modes._spinor_eval(modes.ModeIndex(self.j2, self.mj2, -self.sign), th, ph)
        h = modes._spinor_eval(modes.ModeIndex(self.j2, self.mj2, self.sign), th, ph)
        out = np.empty((X.shape[0], 4), dtype=complex)
        out[:, 0:2] = self.f_coeff * f
        out[:, 2:4] = h
        return out


def construct_eigendensity(j2: int, mj2: int, sign: int, params: SpectralParams,
                           lam: float) -> EigenDensity:
    """Eigendensity for a root of the mode condition.

    f = -p_{j+s/2} / (1/lambda + (m+a) d_{j-s/2}) psi_{j-s/2}, i.e.
    f_coeff = s i|p| / q with the realized antidiagonal phase. Validates
    the condition residual (1e-8) and the block action C g = -g/lambda
    (1e-10) before returning.
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    q = EigenQuery(params.m, params.a, j2, sign, lam)
    res = condition_residual(q)
    if abs(res) > 1e-8:
        raise ValueError(f"lambda does not satisfy the mode condition (residual {res:.3e})")
    kap = params.kappa
    p = modes.p_abs(j2, kap)
    d_opp = modes.d_coefficient((j2 - sign) // 2, kap)
    f_coeff = sign * 1j * p / (1.0 / lam + (params.m + params.a) * d_opp)
    dens = EigenDensity(j2, mj2, sign, params, lam, complex(f_coeff))
    v = dens.coefficient_vector()
    act = mode_block(j2, sign, params) @ v + v / lam
    if np.linalg.norm(act) / np.linalg.norm(v) > 1e-10:
        raise AssertionError("mode block action check failed")
    return dens


def evaluate_eigenfunction(g: np.ndarray, nodes: np.ndarray, weights: np.ndarray,
                           params: SpectralParams, x) -> np.ndarray:
    """Layer potential phi(x) = sum_i phi_a(x - y_i) g_i w_i off the surface.

    g: (N, 4) density samples on quadrature nodes. Rejects x on (or
    numerically touching) the surface and the a = 0 case, whose
    eigenfunction reconstruction does not go through the layer formula.
    """
    if params.a == 0.0:
        raise ValueError("a = 0 reconstruction is not a layer potential")
    if abs(params.a) >= params.m:
        raise ValueError("need |a| < m")
    from .kernels import phi_a
    g = np.asarray(g)
    Y = np.asarray(nodes, dtype=float)
    x = np.asarray(x, dtype=float)
    dist = np.linalg.norm(Y - x, axis=1)
    if np.min(dist) < 1e-6:
        raise ValueError("x lies on the surface")
    out = np.zeros(4, dtype=complex)
    for i in range(Y.shape[0]):
        out += weights[i] * (phi_a(params, x - Y[i]) @ g[i])
    return out
