import numpy as np
import pytest

from diracshell import surfaces


def test_sphere_geometry_exact(sphere16):
    s = sphere16
    r = np.linalg.norm(s.nodes, axis=1)
    assert np.max(np.abs(r - 1.0)) < 1e-14
    assert np.allclose(s.normals, s.nodes, atol=1e-14)
    assert s.area() == pytest.approx(4 * np.pi, rel=1e-14)
    assert s.is_sphere()
    assert s.n_nodes == s.nodes.shape[0] == s.weights.size


def test_sphere_cells_match_weights(sphere16):
    # weight-matched cells: chart cell area equals the node weight exactly
    c = sphere16.cells
    area = (np.cos(c[:, 0]) - np.cos(c[:, 1])) * (c[:, 3] - c[:, 2])
    assert np.max(np.abs(area - sphere16.weights)) < 1e-13
    # cells tile the sphere
    assert area.sum() == pytest.approx(4 * np.pi, rel=1e-14)


def test_radius_scaling():
    s = surfaces.make_sphere(8, radius=2.0)
    assert s.area() == pytest.approx(16 * np.pi, rel=1e-13)
    assert np.allclose(np.linalg.norm(s.nodes, axis=1), 2.0)
    assert np.allclose(s.normals, s.nodes / 2.0)


def test_ellipsoid_area_matches_prolate_formula():
    a, c = 1.0, 1.5
    e = np.sqrt(1.0 - a * a / (c * c))
    exact = 2 * np.pi * a * a * (1 + c / (a * e) * np.arcsin(e))
    s = surfaces.make_ellipsoid((a, a, c), 16)
    assert s.area() == pytest.approx(exact, rel=1e-10)
    assert not s.is_sphere()


def test_ellipsoid_normals_outward_unit():
    s = surfaces.make_ellipsoid((1.0, 1.2, 1.5), 12)
    assert np.allclose(np.linalg.norm(s.normals, axis=1), 1.0, atol=1e-14)
    # outward: positive projection on the position vector
    assert np.all(np.einsum("ij,ij->i", s.normals, s.nodes) > 0)
    # implicit-function gradient direction
    grad = 2 * s.nodes / s.axes ** 2
    grad /= np.linalg.norm(grad, axis=1, keepdims=True)
    assert np.allclose(s.normals, grad, atol=1e-13)


def test_chart_geometry_sphere_curvature():
    th = np.linspace(0.1, np.pi - 0.1, 7)
    ph = np.linspace(0.0, 2 * np.pi, 7)
    xt, xp, nrm, gi, H = surfaces.chart_geometry(np.array([1.0, 1.0, 1.0]), th, ph)
    assert np.allclose(H, -1.0, atol=1e-12)
    assert np.allclose(np.linalg.norm(nrm, axis=-1), 1.0)
    # tangents orthogonal to the normal
    assert np.max(np.abs(np.einsum("...k,...k->...", xt, nrm))) < 1e-13
    assert np.max(np.abs(np.einsum("...k,...k->...", xp, nrm))) < 1e-13


def test_chart_geometry_scaled_sphere_curvature():
    th, ph = np.array([0.8]), np.array([0.3])
    _, _, _, _, H = surfaces.chart_geometry(np.array([2.0, 2.0, 2.0]), th, ph)
    assert H[0] == pytest.approx(-0.5, abs=1e-13)


def test_chart_point_jacobian_consistency():
    axes = np.array([1.0, 1.3, 0.8])
    th, ph = 1.1, 2.4
    x, J = surfaces.chart_point(axes, th, ph)
    xt, xp, _, _, _ = surfaces.chart_geometry(axes, th, ph)
    assert J == pytest.approx(np.linalg.norm(np.cross(xt, xp)), rel=1e-13)


def test_validation():
    with pytest.raises(ValueError):
        surfaces.make_sphere(7)
    with pytest.raises(ValueError):
        surfaces.make_ellipsoid((1.0, -1.0, 1.0), 12)
    with pytest.raises(ValueError):
        surfaces.make_ellipsoid((1.0, 1.0), 12)


def test_ring_bookkeeping(sphere16):
    s = sphere16
    assert s.ring_start.size == s.n_theta
    assert s.nphi.sum() == s.n_nodes
    for k in range(s.n_theta):
        lo = s.ring_start[k]
        hi = lo + s.nphi[k]
        assert np.all(s.ring[lo:hi, 0] == k)
        assert np.all(s.ring[lo:hi, 1] == np.arange(s.nphi[k]))
        assert np.allclose(s.theta[lo:hi], s.theta[lo])


def test_refinement_node_growth():
    n8 = surfaces.make_sphere(8).n_nodes
    n16 = surfaces.make_sphere(16).n_nodes
    # product grid: roughly 4x nodes per doubling
    assert 3.0 < n16 / n8 < 5.0
