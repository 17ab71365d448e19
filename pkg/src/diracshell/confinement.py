"""Impenetrability of electrostatic + Lorentz-scalar shell couplings.

For coupling strengths (lambda_e, lambda_s) with lambda_e^2 != lambda_s^2
the shell is impenetrable iff lambda_e^2 - lambda_s^2 = -4. The operator
form of the criterion is the anticommutator identity

    {C (alpha.N), Lambda (alpha.N)} + (Lambda (alpha.N))^2 = s I,
    Lambda = (lambda_s beta - lambda_e) / (lambda_e^2 - lambda_s^2) - C,
    s = 1/4 + 1/(lambda_e^2 - lambda_s^2),

which reduces to the scalar test; confinement is s = 0. The residual of
the discrete identity is dominated by the jump-identity defect of the
same discretization (the cross terms cancel algebraically), so it is
resolution-limited, not coupling-limited.
"""
from dataclasses import dataclass
import numpy as np

from .operators import (DiscreteOperator, ResolvedBasis, resolved_basis,
                        apply_alpha_normal, _op_weighted)


@dataclass(frozen=True)
class CouplingSpec:
    """Electrostatic and Lorentz-scalar strengths; |lambda_e| != |lambda_s|."""
    lambda_e: float
    lambda_s: float

    def __post_init__(self):
        if abs(self.lambda_e) == abs(self.lambda_s):
            raise ValueError("require |lambda_e| != |lambda_s|")

    @property
    def denominator(self) -> float:
        return self.lambda_e ** 2 - self.lambda_s ** 2


def confinement_scalar(c: CouplingSpec) -> float:
    """1/4 + 1/(lambda_e^2 - lambda_s^2); zero exactly when confining."""
    return 0.25 + 1.0 / c.denominator


def is_confining(c: CouplingSpec, tol: float = 1e-10) -> bool:
    """Impenetrable iff lambda_e^2 - lambda_s^2 = -4 (within tol)."""
    return abs(c.denominator + 4.0) < tol


def is_selfadjoint_regime(c_or_le, lambda_s: float = None, tol: float = 1e-10) -> bool:
    """Distinguished self-adjointness: |lambda_e| != |lambda_s| and
    lambda_e^2 - lambda_s^2 != 4 (within tol, so couplings like
    (3, sqrt 5) classify as intended). Accepts a CouplingSpec or two
    reals; the excluded |lambda_e| = |lambda_s| line must be classifiable."""
    if lambda_s is None:
        le, ls = c_or_le.lambda_e, c_or_le.lambda_s
    else:
        le, ls = c_or_le, lambda_s
    return abs(le) != abs(ls) and abs(le * le - ls * ls - 4.0) >= tol


def criterion_residual(opC: DiscreteOperator, normals=None, coupling=None,
                       scalar: float = None, basis: ResolvedBasis = None) -> float:
    """Residual of the impenetrability identity on the resolved subspace.

    coupling: a CouplingSpec (Lambda and the scalar are built from it) or
    an explicit Lambda matrix in the weighted form (then scalar defaults
    to 0, e.g. the trivial Lambda = 0 case; pass scalar for others, e.g.
    1/4 + 1/lambda^2 for the purely electrostatic Lambda = -(1/lambda + C)).
    """
    op = _op_weighted(opC)
    surf = op.surf
    if normals is None:
        normals = surf.normals
    if basis is None:
        basis = resolved_basis(surf)
    Q = basis.Q4
    AQ = apply_alpha_normal(surf, Q)
    CAQ = op.mat @ AQ
    if isinstance(coupling, CouplingSpec):
        den = coupling.denominator
        c_b = coupling.lambda_s / den
        c_0 = -coupling.lambda_e / den
        s = confinement_scalar(coupling)

        def beta4(V):
            out = V.copy()
            out[2::4] = -out[2::4]
            out[3::4] = -out[3::4]
            return out

        def lam_apply(V):
            return c_b * beta4(V) + c_0 * V - op.mat @ V

        LAQ = lam_apply(AQ)
        R = op.mat @ apply_alpha_normal(surf, LAQ) \
            + lam_apply(apply_alpha_normal(surf, CAQ)) \
            + lam_apply(apply_alpha_normal(surf, LAQ)) - s * Q
    else:
        L = np.asarray(coupling)
        if L.shape != op.mat.shape:
            raise ValueError("Lambda dimension mismatch")
        s = 0.0 if scalar is None else scalar
        LAQ = L @ AQ
        R = op.mat @ apply_alpha_normal(surf, LAQ) \
            + L @ apply_alpha_normal(surf, CAQ) \
            + L @ apply_alpha_normal(surf, LAQ) - s * Q
    return float(np.linalg.svd(R, compute_uv=False)[0])
