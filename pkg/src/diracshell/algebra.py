"""Pauli and Dirac matrix algebra.

Fixed 2x2 / 4x4 complex realization used across the project: sigma_j,
alpha_j, beta, and the block swap tau. All entries are 0, +-1 or +-1j,
so the algebraic identities (anticommutation, squares to identity) hold
exactly in floating point.
"""
import numpy as np

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def pauli(j: int) -> np.ndarray:
    """Pauli matrix sigma_j, j in {1,2,3}."""
    if j not in (1, 2, 3):
        raise ValueError("pauli index must be 1, 2 or 3")
    return _SIGMA[j - 1].copy()


def beta() -> np.ndarray:
    """beta = diag(I2, -I2)."""
    b = np.zeros((4, 4), dtype=complex)
    b[:2, :2] = I2
    b[2:, 2:] = -I2
    return b


def alpha(j: int) -> np.ndarray:
    """Dirac alpha_j: antidiagonal blocks sigma_j."""
    s = pauli(j)
    a = np.zeros((4, 4), dtype=complex)
    a[:2, 2:] = s
    a[2:, :2] = s
    return a


def tau() -> np.ndarray:
    """Block swap (0 I2; I2 0) of the 2-spinor components."""
    t = np.zeros((4, 4), dtype=complex)
    t[:2, 2:] = I2
    t[2:, :2] = I2
    return t


def sigma_dot(v) -> np.ndarray:
    """sum_j v_j sigma_j for a 3-vector v."""
    v = np.asarray(v)
    return v[0] * _SIGMA[0] + v[1] * _SIGMA[1] + v[2] * _SIGMA[2]


def alpha_dot(v) -> np.ndarray:
    """sum_j v_j alpha_j for a 3-vector v."""
    s = sigma_dot(v)
    a = np.zeros((4, 4), dtype=complex)
    a[:2, 2:] = s
    a[2:, :2] = s
    return a


def sigma_dot_batch(V: np.ndarray) -> np.ndarray:
    """sigma_dot for an (N,3) array of vectors, returned as (N,2,2)."""
    V = np.asarray(V)
    out = np.zeros(V.shape[:-1] + (2, 2), dtype=complex)
    out[..., 0, 0] = V[..., 2]
    out[..., 1, 1] = -V[..., 2]
    out[..., 0, 1] = V[..., 0] - 1j * V[..., 1]
    out[..., 1, 0] = V[..., 0] + 1j * V[..., 1]
    return out
