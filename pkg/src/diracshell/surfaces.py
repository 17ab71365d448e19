"""Quadrature grids on closed parametrized surfaces.

Gauss-Legendre rings in cos(theta) crossed with uniform azimuth, node
weights from the exact chart Jacobian. Ring cell boundaries are placed at
the cumulative Gauss-Legendre weights, so on the sphere each chart cell
has area exactly equal to its node's quadrature weight and the singular
integration tiers can share one measure with the far field.

Only C^2 axis-aligned ellipsoids (the sphere as the degenerate case) are
built here; that is all the operator layer is validated on.
"""
from dataclasses import dataclass, field
import numpy as np
from numpy.polynomial.legendre import leggauss


@dataclass
class SurfacePatchization:
    """Nodes, outward normals, weights and chart cells of one surface."""
    nodes: np.ndarray        # (N, 3)
    normals: np.ndarray      # (N, 3) outward unit
    weights: np.ndarray      # (N,) positive area elements
    cells: np.ndarray        # (N, 4) theta_lo, theta_hi, phi_lo, phi_hi
    ring: np.ndarray         # (N, 2) ring index, azimuth index
    theta: np.ndarray        # (N,)
    phi: np.ndarray          # (N,)
    nphi: np.ndarray         # nodes per ring
    ring_start: np.ndarray   # first node index of each ring
    axes: np.ndarray         # (3,) semi-axes
    n_theta: int
    _dtan: tuple = field(default=None, repr=False, compare=False)

    @property
    def n_nodes(self) -> int:
        return self.nodes.shape[0]

    def area(self) -> float:
        return float(self.weights.sum())

    def is_sphere(self) -> bool:
        return bool(np.allclose(self.axes, self.axes[0]))


def chart_point(axes, th, ph):
    """Ellipsoid chart and its area Jacobian (w.r.t. dtheta dphi)."""
    a1, a2, a3 = axes
    s, t = np.sin(th), np.cos(th)
    x = np.stack([a1 * s * np.cos(ph), a2 * s * np.sin(ph), a3 * t], -1)
    J = np.sqrt((a2 * a3 * s * s * np.cos(ph)) ** 2
                + (a1 * a3 * s * s * np.sin(ph)) ** 2
                + (a1 * a2 * s * t) ** 2)
    return x, J


def chart_geometry(axes, th, ph):
    """Tangents, outward normal, inverse metric and mean curvature.

    Mean curvature is signed against the outward normal (sphere: -1/R),
    the sign the double-layer regularization below depends on.
    """
    a1, a2, a3 = axes
    s, t = np.sin(th), np.cos(th)
    cp, sp = np.cos(ph), np.sin(ph)
    xt = np.stack([a1 * t * cp, a2 * t * sp, -a3 * s], -1)
    xp = np.stack([-a1 * s * sp, a2 * s * cp, np.zeros_like(s)], -1)
    cross = np.cross(xt, xp)
    J = np.linalg.norm(cross, axis=-1)
    nrm = cross / J[..., None]
    E = np.einsum('...k,...k->...', xt, xt)
    F = np.einsum('...k,...k->...', xt, xp)
    G = np.einsum('...k,...k->...', xp, xp)
    xtt = np.stack([-a1 * s * cp, -a2 * s * sp, -a3 * t], -1)
    xtp = np.stack([-a1 * t * sp, a2 * t * cp, np.zeros_like(s)], -1)
    xpp = np.stack([-a1 * s * cp, -a2 * s * sp, np.zeros_like(s)], -1)
    e = np.einsum('...k,...k->...', xtt, nrm)
    f = np.einsum('...k,...k->...', xtp, nrm)
    g = np.einsum('...k,...k->...', xpp, nrm)
    det = E * G - F * F
    H = (e * G - 2 * f * F + g * E) / (2 * det)
    gi = np.stack([G / det, -F / det, E / det], -1)   # g^tt, g^tp, g^pp
    return xt, xp, nrm, gi, H


def make_ellipsoid(axes, n_theta: int, c_ring: float = 1.6) -> SurfacePatchization:
    """Product grid on an axis-aligned ellipsoid.

    Ring azimuth counts scale with sin(theta) (at least 8), balancing the
    local node spacing; cell boundaries at cumulative GL weights.
    """
    if n_theta < 8:
        raise ValueError("need n_theta >= 8")
    axes = np.asarray(axes, dtype=float)
    if axes.shape != (3,) or np.any(axes <= 0):
        raise ValueError("axes must be three positive reals")
    a1, a2, a3 = axes
    t, wt = leggauss(n_theta)
    order = np.argsort(-t)        # descending t = ascending theta
    t, wt = t[order], wt[order]
    tb = np.concatenate([[1.0], 1.0 - np.cumsum(wt)])
    tb[-1] = -1.0
    th_nodes = np.arccos(t)
    th_bounds = np.arccos(np.clip(tb, -1.0, 1.0))
    Xs, Ns, ws, cells, rings, ths, phs = [], [], [], [], [], [], []
    nphi = np.maximum(8, np.round(c_ring * n_theta * np.sin(th_nodes)).astype(int))
    for k in range(n_theta):
        th = th_nodes[k]
        s, tc = np.sin(th), np.cos(th)
        M = nphi[k]
        dphi = 2.0 * np.pi / M
        phi = (np.arange(M) + 0.5) * dphi
        cp, sp = np.cos(phi), np.sin(phi)
        x = np.stack([a1 * s * cp, a2 * s * sp, np.full(M, a3 * tc)], -1)
        cross = np.stack([a2 * a3 * s * s * cp, a1 * a3 * s * s * sp,
                          np.full(M, a1 * a2 * s * tc)], -1)
        J = np.linalg.norm(cross, axis=1)
        nrm = cross / J[:, None]
        w = wt[k] * dphi * J / s      # d sigma = (J / sin theta) dt dphi
        Xs.append(x); Ns.append(nrm); ws.append(w)
        cells.append(np.stack([np.full(M, th_bounds[k]), np.full(M, th_bounds[k + 1]),
                               phi - 0.5 * dphi, phi + 0.5 * dphi], -1))
        rings.append(np.stack([np.full(M, k), np.arange(M)], -1))
        ths.append(np.full(M, th)); phs.append(phi)
    ring_start = np.concatenate([[0], np.cumsum(nphi)])[:-1]
    return SurfacePatchization(
        nodes=np.concatenate(Xs), normals=np.concatenate(Ns),
        weights=np.concatenate(ws), cells=np.concatenate(cells),
        ring=np.concatenate(rings).astype(int),
        theta=np.concatenate(ths), phi=np.concatenate(phs),
        nphi=nphi, ring_start=ring_start.astype(int),
        axes=axes, n_theta=n_theta)


def make_sphere(n_theta: int, radius: float = 1.0) -> SurfacePatchization:
    return make_ellipsoid((radius, radius, radius), n_theta)
