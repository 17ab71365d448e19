"""Fundamental solution of the free Dirac operator at energy a.

phi_a(x) = (e^{-kappa|x|}/4pi|x|) (a + m beta + (1 + kappa|x|) i alpha.x / |x|^2),
kappa = sqrt(m^2 - a^2). Its 2x2 blocks are the Yukawa kernel k_a and the
gradient-type kernel w_a. The omega split separates the a-independent
principal-value part omega_3 from the weakly singular remainder.
"""
from dataclasses import dataclass, field
import numpy as np

from .algebra import alpha_dot, beta, sigma_dot, I2, I4


@dataclass(frozen=True)
class SpectralParams:
    """Mass m > 0 and spectral point a with |a| <= m; kappa derived."""
    m: float
    a: float
    kappa: float = field(init=False)

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("mass m must be positive")
        if abs(self.a) > self.m:
            raise ValueError("require |a| <= m for decaying kernels")
        object.__setattr__(self, "kappa", float(np.sqrt(max(self.m ** 2 - self.a ** 2, 0.0))))


def _radius(x) -> float:
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    if r == 0.0:
        raise ValueError("kernel evaluated at the singular point x = 0")
    return r


def k_a(p: SpectralParams, x) -> float:
    """Scalar Yukawa kernel e^{-kappa r}/(4 pi r)."""
    r = _radius(x)
    return float(np.exp(-p.kappa * r) / (4.0 * np.pi * r))


def w_a(p: SpectralParams, x) -> np.ndarray:
    """2x2 kernel (e^{-kappa r}/4 pi r^3)(1 + kappa r) i sigma.x."""
    x = np.asarray(x, dtype=float)
    r = _radius(x)
    c = np.exp(-p.kappa * r) * (1.0 + p.kappa * r) / (4.0 * np.pi * r ** 3)
    return c * 1j * sigma_dot(x)


def phi_a(p: SpectralParams, x) -> np.ndarray:
    """4x4 fundamental solution block matrix [(a+m)k_a I2, w_a; w_a, (a-m)k_a I2]."""
    x = np.asarray(x, dtype=float)
    r = _radius(x)
    ka = np.exp(-p.kappa * r) / (4.0 * np.pi * r)
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = (p.a + p.m) * ka * I2
    out[2:, 2:] = (p.a - p.m) * ka * I2
    wb = w_a(p, x)
    out[:2, 2:] = wb
    out[2:, :2] = wb
    return out


def omega_split(p: SpectralParams, x):
    """phi_a = omega_1 + omega_2 + omega_3.

    omega_3 = (i/4pi) alpha.x/|x|^3 is the odd principal-value kernel and
    does not depend on a; omega_1 carries the (a + m beta) Yukawa part and
    omega_2 the remainder of the alpha part, both O(1/r). omega_2 uses an
    expm1 form, stable for kappa r << 1.
    """
    x = np.asarray(x, dtype=float)
    r = _radius(x)
    kr = p.kappa * r
    om1 = (np.exp(-kr) / (4.0 * np.pi * r)) * (p.a * I4 + p.m * beta())
    # e^{-kr}(1+kr) - 1 = kr + expm1(-kr)(1+kr), of size O((kr)^2)
    f = kr + np.expm1(-kr) * (1.0 + kr)
    ax = alpha_dot(x)
    om2 = f / (4.0 * np.pi * r ** 3) * 1j * ax
    om3 = 1j * ax / (4.0 * np.pi * r ** 3)
    return om1, om2, om3


def yukawa_pair(X, Y, NY, p: SpectralParams):
    """Vectorized Yukawa kernel and its normal-derivative companion.

    X, Y broadcastable (...,3) arrays of evaluation and source points, NY
    source normals. Returns (G, DL) with G = e^{-kappa r}/4 pi r and
    DL = e^{-kappa r}(1 + kappa r) (X-Y).N(Y) / 4 pi r^3 (the derivative
    of G in the source normal). Zero-distance entries produce inf/nan and
    are the caller's responsibility.
    """
    d = np.asarray(X, dtype=float) - np.asarray(Y, dtype=float)
    r = np.sqrt(np.einsum("...k,...k->...", d, d))
    G = np.exp(-p.kappa * r) / (4.0 * np.pi * r)
    DL = np.exp(-p.kappa * r) * (1.0 + p.kappa * r) \
        * np.einsum("...k,...k->...", d, np.asarray(NY, dtype=float)) / (4.0 * np.pi * r ** 3)
    return G, DL
