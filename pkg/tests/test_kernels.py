import numpy as np
import pytest

from diracshell import kernels
from diracshell.algebra import alpha_dot
from diracshell.kernels import SpectralParams


def test_params_validation():
    p = SpectralParams(2.0, 1.0)
    assert p.kappa == pytest.approx(np.sqrt(3.0), abs=1e-15)
    with pytest.raises(ValueError):
        SpectralParams(0.0, 0.0)
    with pytest.raises(ValueError):
        SpectralParams(1.0, 1.5)
    # boundary |a| = m is allowed: kappa = 0 is the massless-limit kernel
    assert SpectralParams(1.0, 1.0).kappa == 0.0


def test_k_a_value():
    p = SpectralParams(1.0, 0.0)
    x = np.array([0.3, -0.4, 1.2])
    r = np.linalg.norm(x)
    assert kernels.k_a(p, x) == pytest.approx(np.exp(-r) / (4 * np.pi * r), rel=1e-15)
    with pytest.raises(ValueError):
        kernels.k_a(p, [0.0, 0.0, 0.0])


def test_w_a_skew_hermitian_and_odd():
    p = SpectralParams(1.0, 0.5)
    x = np.array([0.2, 0.7, -0.1])
    w = kernels.w_a(p, x)
    assert np.allclose(w.conj().T, -w, atol=1e-16)
    assert np.allclose(kernels.w_a(p, -x), -w, atol=1e-16)


def test_phi_a_block_structure():
    p = SpectralParams(1.3, -0.4)
    x = np.array([0.5, 0.1, 0.9])
    ph = kernels.phi_a(p, x)
    ka = kernels.k_a(p, x)
    assert np.allclose(ph[:2, :2], (p.a + p.m) * ka * np.eye(2))
    assert np.allclose(ph[2:, 2:], (p.a - p.m) * ka * np.eye(2))
    assert np.allclose(ph[:2, 2:], kernels.w_a(p, x))
    assert np.allclose(ph[2:, :2], kernels.w_a(p, x))


def test_omega_split_sums_to_phi():
    p = SpectralParams(1.0, 0.6)
    x = np.array([0.4, -0.2, 0.3])
    om1, om2, om3 = kernels.omega_split(p, x)
    assert np.allclose(om1 + om2 + om3, kernels.phi_a(p, x), atol=1e-14)
    # omega_3 carries no a dependence
    _, _, om3b = kernels.omega_split(SpectralParams(2.0, -1.0), x)
    assert np.allclose(om3, om3b)


def test_omega2_stable_at_tiny_kappa_r():
    # e^{-t}(1+t) - 1 = -t^2/2 + O(t^3); naive evaluation cancels at t ~ 1e-6
    p = SpectralParams(1.0, 0.0)
    x = np.array([1e-6, 0.0, 0.0])
    _, om2, _ = kernels.omega_split(p, x)
    t = p.kappa * 1e-6
    ref = (-t * t / 2.0) / (4.0 * np.pi * 1e-18) * 1j * alpha_dot(x)
    assert np.allclose(om2, ref, rtol=1e-5)


def test_yukawa_pair_matches_pointwise(rng):
    p = SpectralParams(1.0, 0.3)
    X = rng.standard_normal((5, 1, 3))
    Y = rng.standard_normal((1, 4, 3))
    NY = rng.standard_normal((1, 4, 3))
    NY /= np.linalg.norm(NY, axis=-1, keepdims=True)
    G, DL = kernels.yukawa_pair(X, Y, NY, p)
    assert G.shape == (5, 4) and DL.shape == (5, 4)
    for i in range(5):
        for j in range(4):
            assert G[i, j] == pytest.approx(kernels.k_a(p, X[i, 0] - Y[0, j]), rel=1e-14)


def test_yukawa_normal_derivative_direction(rng):
    # DL is the derivative of G along the source normal
    p = SpectralParams(1.0, 0.0)
    x = np.array([1.0, 0.2, -0.3])
    y = np.array([0.1, -0.5, 0.4])
    n = np.array([0.6, 0.8, 0.0])
    h = 1e-6
    gp, _ = kernels.yukawa_pair(x, y + h * n, n, p)
    gm, _ = kernels.yukawa_pair(x, y - h * n, n, p)
    _, dl = kernels.yukawa_pair(x, y, n, p)
    assert dl == pytest.approx((gp - gm) / (2 * h), rel=1e-8)
