import numpy as np
import pytest

from diracshell import modes
from diracshell.algebra import sigma_dot
from diracshell.kernels import SpectralParams

KAPPAS = (0.1, 0.5, 1.0, 2.0, 5.0)


def test_closed_forms_match_quadrature():
    for kap in KAPPAS:
        assert modes.d_coefficient(0, kap) == pytest.approx(modes.d0_closed(kap), abs=1e-12)
        assert modes.d_coefficient(1, kap) == pytest.approx(modes.d1_closed(kap), abs=1e-12)


def test_frozen_reference_values():
    assert modes.d0_closed(1.0) == pytest.approx(0.4323323583816936, abs=1e-15)
    assert modes.d1_closed(1.0) == pytest.approx(0.2706705664732254, abs=1e-15)
    assert modes.p_abs(1, 1.0) == pytest.approx(0.3646647167633875, abs=1e-14)
    assert modes.d_table(201, 1.0)[200] == pytest.approx(0.002493734569049239, rel=1e-10)


def test_bessel_product_identity():
    for n in (0, 1, 3, 7):
        for kap in (0.5, 1.0, 2.0):
            assert modes.d_coefficient(n, kap) == pytest.approx(
                modes.d_bessel(n, kap), rel=1e-13)


def test_massless_limit_is_harmonic_sequence():
    for n in (0, 1, 2, 5, 20):
        assert modes.d_coefficient(n, 0.0) == pytest.approx(1.0 / (2 * n + 1), abs=1e-13)
    assert modes.d0_closed(0.0) == 1.0
    assert modes.d1_closed(0.0) == pytest.approx(1.0 / 3.0, abs=1e-15)


def test_d_table_matches_single_evaluations():
    kap = 1.3
    tab = modes.d_table(10, kap)
    for n in range(10):
        assert tab[n] == pytest.approx(modes.d_coefficient(n, kap), abs=1e-14)
    assert np.all(np.diff(tab) < 0)  # strictly decreasing in degree


def test_quarter_identity_sample():
    for kap in KAPPAS:
        for j2 in (1, 3, 7, 51):
            mc = modes.mode_coefficients(j2, kap)
            assert mc.p_abs ** 2 + kap ** 2 * mc.d_plus * mc.d_minus == pytest.approx(
                0.25, abs=1e-13)


def test_p_lower_bound_holds():
    for kap in (0.5, 1.0, 2.0):
        lb = modes.p_lower_bound(kap)
        for j2 in range(1, 400, 2):
            assert modes.p_abs(j2, kap) >= lb - 1e-12


def test_min_p_frozen():
    mp = modes.min_p(1.0)
    assert mp.M == pytest.approx(0.3646647167633876, abs=1e-14)
    assert mp.j2_argmin == 1
    # tail window at the default range sits at 6.2e-6, above the 1e-6 gate
    assert mp.certified_tail is False
    assert abs(modes.p_abs(399, 1.0) - 0.5) < 1e-3


def test_m_formula_agrees_at_default():
    for kap in (0.3, 1.0, 2.5):
        mp = modes.min_p(kap)
        if mp.j2_argmin == 1:
            assert mp.M == pytest.approx(modes.m_formula(kap), abs=1e-12)


def test_delta_star_equality_and_strict_inequality(rng):
    par = SpectralParams(1.0, 0.0)
    for j2, sign in ((1, 1), (1, -1), (3, 1)):
        from diracshell import eigen
        lam = eigen.solve_lambda(par.m, par.a, j2, sign)[0]
        ds = modes.delta_star(lam, par, j2, sign)
        lhs, rhs = modes.verify_uncertainty([(j2, sign, 1, 1.0)], lam, par, ds)
        # equality only when (j2, sign) is the minimizing mode for this kappa
        assert lhs <= rhs + 1e-12
    lam = 2.0
    ds = modes.delta_star(lam, par, 1, 1)
    for _ in range(20):
        coeffs = [(int(2 * k + 1), 1, 1, rng.standard_normal() + 1j * rng.standard_normal())
                  for k in rng.integers(0, 8, size=3)]
        lhs, rhs = modes.verify_uncertainty(coeffs, lam, par, ds)
        assert lhs <= rhs + 1e-12


def test_verify_uncertainty_rejects_bad_input():
    par = SpectralParams(1.0, 0.0)
    with pytest.raises(ValueError):
        modes.verify_uncertainty([(2, 1, 1, 1.0)], 2.0, par, 0.5)  # even j2
    with pytest.raises(ValueError):
        modes.verify_uncertainty([(1, 1, 3, 1.0)], 2.0, par, 0.5)  # mj > j
    with pytest.raises(ValueError):
        modes.verify_uncertainty([(1, 2, 1, 1.0)], 2.0, par, 0.5)  # bad sign
    with pytest.raises(ValueError):
        modes.verify_uncertainty([(1, 1, 1, 1.0)], -2.0, par, 0.5)


def test_riesz_constants():
    c_spinor, c_field = modes.riesz_constants()
    assert c_spinor == 2.0
    assert c_field == pytest.approx(2.0 * np.pi, abs=1e-15)


def test_scan_question_small_grid():
    out = modes.scan_question([0.5, 1.0], j2_max=99)
    assert set(out) == {0.5, 1.0}
    assert all(v == [] for v in out.values())
    with pytest.raises(ValueError):
        modes.scan_question([1.0], j2_max=1)


def test_spherical_harmonic_low_orders():
    th, ph = 0.7, 1.9
    x = np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])
    assert modes.spherical_harmonic(0, 0, x) == pytest.approx(
        1.0 / np.sqrt(4 * np.pi), abs=1e-14)
    assert modes.spherical_harmonic(1, 0, x) == pytest.approx(
        np.sqrt(3 / (4 * np.pi)) * np.cos(th), abs=1e-14)
    # Condon-Shortley phase on l = m = 1
    assert modes.spherical_harmonic(1, 1, x) == pytest.approx(
        -np.sqrt(3 / (8 * np.pi)) * np.sin(th) * np.exp(1j * ph), abs=1e-14)
    with pytest.raises(ValueError):
        modes.spherical_harmonic(1, 0, [2.0, 0.0, 0.0])


def test_mode_index_validation_and_l():
    idx = modes.ModeIndex(3, -1, 1)
    assert idx.l == 2
    assert modes.ModeIndex(3, -1, -1).l == 1
    with pytest.raises(ValueError):
        modes.ModeIndex(2, 1, 1)
    with pytest.raises(ValueError):
        modes.ModeIndex(3, 5, 1)
    with pytest.raises(ValueError):
        modes.ModeIndex(3, 1, 0)


def test_spinor_harmonic_normalization_weights():
    # |c_up|^2 + |c_down|^2 = 1 for every mode
    for j2 in (1, 3, 5, 7):
        for sign in (-1, 1):
            for mj2 in range(-j2, j2 + 1, 2):
                v = modes.spinor_harmonic(modes.ModeIndex(j2, mj2, sign),
                                          [0.0, 0.0, 1.0])
                assert np.isfinite(v).all()


def test_sigma_dot_normal_swaps_partners(rng):
    # (sigma.x) psi_{j,s}(x) = psi_{j,-s}(x) pointwise on the sphere
    for _ in range(5):
        x = rng.standard_normal(3)
        x /= np.linalg.norm(x)
        for j2, mj2, sign in ((1, 1, 1), (3, -1, 1), (5, 3, -1), (7, -5, -1)):
            a = sigma_dot(x) @ modes.spinor_harmonic(modes.ModeIndex(j2, mj2, sign), x)
            b = modes.spinor_harmonic(modes.ModeIndex(j2, mj2, -sign), x)
            assert np.allclose(a, b, atol=1e-12)


def test_spinor_basis_orthonormal_under_surface_quadrature(sphere16):
    dirs = sphere16.nodes / np.linalg.norm(sphere16.nodes, axis=1, keepdims=True)
    B, meta = modes.spinor_basis(dirs, jmax2=7)
    assert B.shape == (2 * sphere16.n_nodes, len(meta))
    w2 = np.repeat(sphere16.weights, 2)
    gram = B.conj().T @ (w2[:, None] * B)
    assert np.linalg.norm(gram - np.eye(len(meta)), 2) < 1e-6
