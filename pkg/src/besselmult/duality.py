"""Biorthogonal duals of Riesz bases and inverses of multipliers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BesselMultError,
    FunctionalSequence,
    NotRieszError,
    Symbol,
    SymbolError,
    VectorSequence,
    symbol_classify,
)
from .multiplier import Multiplier
from .norms import BoundsCertificate, riesz_bounds
from .reports import CheckReport

__all__ = [
    "DualSystem",
    "dual_riesz_basis",
    "biorthogonality_check",
    "kernel_witness",
    "invert_multiplier",
    "composition_errors",
]

COND_LIMIT = 1e12
KERNEL_TOL = 1e-10


def _opposite(seq, elements):
    if isinstance(seq, FunctionalSequence):
        return VectorSequence(seq.host, elements, seq.coeff)
    return FunctionalSequence(seq.host, elements, seq.coeff)


@dataclass(frozen=True, eq=False)
class DualSystem:
    original: FunctionalSequence | VectorSequence
    dual: VectorSequence | FunctionalSequence
    bounds_original: BoundsCertificate
    bounds_dual: BoundsCertificate
    condition_number: float
    biorthogonality_error: float
    reconstruction_error: float
    span_relative: bool = False

    def to_dict(self):
        return {
            "condition_number": self.condition_number,
            "biorthogonality_error": self.biorthogonality_error,
            "reconstruction_error": self.reconstruction_error,
            "span_relative": self.span_relative,
            "bounds_original": self.bounds_original.to_dict(),
            "bounds_dual": self.bounds_dual.to_dict(),
        }


def dual_riesz_basis(seq, settings=None, probes: int = 8, seed: int = 0) -> DualSystem:
    """The unique biorthogonal Riesz basis of a square invertible system.

    Dual rows are the columns of the inverse of the row matrix. Both
    reconstruction formulas ``f = sum g_i(f) f_i`` and ``g = sum f_i(g) g_i``
    are evaluated on seeded random probes; the worst error is stored.
    Tall systems (K < dim) get a pseudo-inverse dual on their span,
    flagged ``span_relative``.
    """
    G = seq.elements
    K, n = G.shape
    sv = np.linalg.svd(G, compute_uv=False)
    smallest = float(sv[-1]) if K <= n else 0.0
    cond = float(sv[0] / smallest) if smallest > 0 else np.inf
    if K > n or cond > COND_LIMIT:
        raise NotRieszError(
            f"not a Riesz basis: smallest singular value {smallest:.3e}, condition number {cond:.3e}",
            smallest,
        )
    span_relative = K < n
    F = np.linalg.pinv(G).T if span_relative else np.linalg.inv(G).T
    dual = _opposite(seq, F)
    bio = float(np.max(np.abs(G @ F.T - np.eye(K))))

    rng = np.random.default_rng(seed)
    cplx = np.iscomplexobj(G)
    err = 0.0
    for _ in range(probes):
        c = rng.standard_normal(K) + (1j * rng.standard_normal(K) if cplx else 0)
        # probes in the span of each system so the tall case is covered as well
        f = c @ F
        g = c @ G
        err = max(err, float(np.max(np.abs((G @ f) @ F - f))), float(np.max(np.abs((F @ g) @ G - g))))
    if not span_relative:
        for _ in range(probes):
            f = rng.standard_normal(n) + (1j * rng.standard_normal(n) if cplx else 0)
            err = max(err, float(np.max(np.abs((G @ f) @ F - f))), float(np.max(np.abs((F @ f) @ G - f))))
    return DualSystem(
        original=seq,
        dual=dual,
        bounds_original=riesz_bounds(seq, settings=settings),
        bounds_dual=riesz_bounds(dual, settings=settings),
        condition_number=cond,
        biorthogonality_error=bio,
        reconstruction_error=err,
        span_relative=span_relative,
    )


def biorthogonality_check(g, f, tol: float = 1e-10) -> CheckReport:
    """max_ij |g_i(f_j) - delta_ij| <= tol."""
    G, F = g.elements, f.elements
    if G.shape != F.shape:
        raise BesselMultError(f"shapes differ: {G.shape} vs {F.shape}")
    err = float(np.max(np.abs(G @ F.T - np.eye(G.shape[0]))))
    return CheckReport("max|g_i(f_j) - delta_ij| <= tol", err, tol, passed=err <= tol)


def kernel_witness(seq, q: float | None = None, tol: float = KERNEL_TOL):
    """A unit-l^q coefficient vector d with sum d_i g_i = 0, or None."""
    from .core import lp_norm
    from .norms import synthesis_exponents

    q, target = synthesis_exponents(seq, q)
    S = seq.elements.T
    n, K = S.shape
    _, sv, vh = np.linalg.svd(S, full_matrices=True)
    if K <= n and sv[-1] > tol * max(1.0, sv[0]):
        return None
    d = vh[-1].conj()
    d = d / lp_norm(d, q)
    if lp_norm(S @ d, target) > tol * max(1.0, sv[0]):
        return None
    # fix the sign so the largest entry is positive
    i = int(np.argmax(np.abs(d)))
    return d * (np.conj(d[i]) / abs(d[i]))


def invert_multiplier(M: Multiplier, tol: float = 1e-12, settings=None) -> Multiplier:
    """M^{-1} = M_{1/m, dual(Psi), dual(Phi)} for Riesz bases and a semi-normalized m."""
    cls = symbol_classify(M.symbol, tol)
    if not cls.semi_normalized:
        raise SymbolError(f"symbol not semi-normalized: min|m_k| = {cls.min_abs:.3e} <= {tol:.1e}")
    psi, phi = M.analysis_seq, M.synthesis_seq
    if not (psi.K == psi.dim == phi.dim):
        raise NotRieszError(
            f"inversion needs square bases with n1 == n2 == K, got K={psi.K}, n1={psi.dim}, n2={phi.dim}"
        )
    psi_dual = dual_riesz_basis(psi, settings).dual
    phi_dual = dual_riesz_basis(phi, settings).dual
    return Multiplier(Symbol(1.0 / M.symbol.values), phi_dual, psi_dual)


def composition_errors(M: Multiplier, Minv: Multiplier, probes: int = 8, seed: int = 0):
    """Max-entry errors of Minv M - I and M Minv - I, plus probe residuals."""
    n = M.source.dim
    left = float(np.max(np.abs(Minv.matrix @ M.matrix - np.eye(n))))
    right = float(np.max(np.abs(M.matrix @ Minv.matrix - np.eye(M.target.dim))))
    rng = np.random.default_rng(seed)
    probe = 0.0
    for _ in range(probes):
        f = rng.standard_normal(n)
        probe = max(probe, float(np.max(np.abs(Minv.matrix @ (M.matrix @ f) - f))),
                    float(np.max(np.abs(M.matrix @ (Minv.matrix @ f) - f))))
    return {"left": left, "right": right, "probe": probe}
