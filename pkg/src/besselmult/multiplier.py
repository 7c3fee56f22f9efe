"""(p,q)-Bessel multipliers M f = sum_k m_k psi_k(f) phi_k.

The matrix of M is ``Phi^T diag(m) Psi`` (rows of Psi are the analysis
functionals, rows of Phi the synthesis vectors) and is computed once at
construction. Norm checks compare certified lower bounds of ||M|| against
products of certified upper Bessel bounds, so a failed check is a genuine
counterexample and not estimator noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    BesselMultError,
    DimensionError,
    FunctionalSequence,
    NotRieszError,
    Symbol,
    SymbolError,
    VectorSequence,
    coerce_symbol,
    conjugate_exponent,
    lp_norm,
)
from .norms import (
    NormEstimate,
    bessel_bound,
    operator_norm,
    riesz_bounds,
    weak_p_norm,
)
from .reports import CheckReport

__all__ = [
    "Multiplier",
    "RankOne",
    "NuclearCertificate",
    "TruncationSweep",
    "build_multiplier",
    "apply",
    "factorized_apply",
    "multiplier_norm",
    "norm_bound_check",
    "lower_norm_check",
    "adjoint",
    "truncate",
    "truncation_error_check",
    "truncation_sweep",
    "rank_one_identities",
    "symbol_recovery",
    "nuclear_upper_bound",
    "trace_norm_hilbert",
]

IDENTITY_TOL = 1e-12
RECOVERY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Multiplier:
    symbol: Symbol
    analysis_seq: FunctionalSequence
    synthesis_seq: VectorSequence
    matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        m = coerce_symbol(self.symbol)
        object.__setattr__(self, "symbol", m)
        psi, phi = self.analysis_seq, self.synthesis_seq
        if not isinstance(psi, FunctionalSequence) or not isinstance(phi, VectorSequence):
            raise BesselMultError("analysis_seq must be a FunctionalSequence, synthesis_seq a VectorSequence")
        if not (m.K == psi.K == phi.K):
            raise DimensionError(f"lengths differ: symbol {m.K}, analysis {psi.K}, synthesis {phi.K}")
        if not math.isclose(psi.coeff.p, phi.coeff.p, rel_tol=1e-12):
            raise BesselMultError(
                f"analysis is {psi.coeff.p}-Bessel but synthesis is paired with p={phi.coeff.p}"
            )
        if np.iscomplexobj(m.values) and np.any(m.values.imag != 0):
            if not (psi.host.is_complex and phi.host.is_complex):
                raise BesselMultError("a complex symbol needs complex spaces on both sides")
        mat = (phi.elements.T * m.values) @ psi.elements
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def K(self) -> int:
        return self.symbol.K

    @property
    def source(self):
        return self.analysis_seq.host

    @property
    def target(self):
        return self.synthesis_seq.host

    def with_symbol(self, m) -> "Multiplier":
        return Multiplier(coerce_symbol(m), self.analysis_seq, self.synthesis_seq)

    def with_analysis(self, psi) -> "Multiplier":
        return Multiplier(self.symbol, psi, self.synthesis_seq)

    def with_synthesis(self, phi) -> "Multiplier":
        return Multiplier(self.symbol, self.analysis_seq, phi)


def build_multiplier(m, synthesis: VectorSequence, analysis: FunctionalSequence) -> Multiplier:
    """M_{m, Phi, Psi}; argument order follows the usual subscript order."""
    return Multiplier(coerce_symbol(m), analysis, synthesis)


def apply(M: Multiplier, f):
    """Evaluate M f by the defining sum over k."""
    f = np.asarray(f)
    if f.shape != (M.source.dim,):
        raise DimensionError(f"vector of shape {f.shape} is not in a space of dim {M.source.dim}")
    out = np.zeros(M.target.dim, dtype=np.result_type(f, M.matrix))
    for mk, psi_k, phi_k in zip(M.symbol.values, M.analysis_seq.elements, M.synthesis_seq.elements):
        out = out + mk * (psi_k @ f) * phi_k
    return out


def factorized_apply(M: Multiplier, f):
    """T_Phi(D_m(U_Psi f))."""
    from .core import analysis_apply, diagonal_apply, synthesis_apply

    return synthesis_apply(M.synthesis_seq, diagonal_apply(M.symbol, analysis_apply(M.analysis_seq, f)))


def multiplier_norm(M: Multiplier, settings=None) -> NormEstimate:
    return operator_norm(M.matrix, M.source.norm_exponent, M.target.norm_exponent, settings)


def _bounds(M, B1, B2, settings):
    if B1 is None:
        B1 = bessel_bound(M.analysis_seq, settings)
    if B2 is None:
        B2 = bessel_bound(M.synthesis_seq, settings)
    return B1, B2


def _upper(b):
    return b.upper if isinstance(b, NormEstimate) else float(b)


def norm_bound_check(M: Multiplier, B1=None, B2=None, settings=None) -> CheckReport:
    """||M|| <= B1 B2 ||m||_inf with a certified lower bound on the left."""
    B1, B2 = _bounds(M, B1, B2, settings)
    est = multiplier_norm(M, settings)
    sup = M.symbol.norm(math.inf)
    return CheckReport(
        "norm <= B1*B2*sup|m|",
        est.lower,
        _upper(B1) * _upper(B2) * sup,
        extra={"norm_upper": est.upper, "B1": _upper(B1), "B2": _upper(B2), "sup_m": sup},
    )


def _dual_rows(E):
    return np.linalg.inv(E).T


def lower_norm_check(M: Multiplier, cert1=None, cert2=None, settings=None) -> CheckReport:
    """A1 A2 ||m||_inf <= ||M|| for Riesz bases, witnessed by the dual of Psi.

    M f_i = m_i phi_i for the biorthogonal f_i, so each
    |m_i| ||phi_i|| / ||f_i|| is a lower bound for ||M||.
    """
    psi, phi = M.analysis_seq, M.synthesis_seq
    if cert1 is None:
        cert1 = riesz_bounds(psi, settings=settings)
    if cert2 is None:
        cert2 = riesz_bounds(phi, settings=settings)
    if cert1.kind != "q_riesz_basis":
        raise NotRieszError("analysis sequence (Psi) is not a certified Riesz basis")
    if cert2.kind != "q_riesz_basis":
        raise NotRieszError("synthesis sequence (Phi) is not a certified Riesz basis")
    F = _dual_rows(psi.elements)
    s, t = M.source.norm_exponent, M.target.norm_exponent
    ratios = [lp_norm(M.matrix @ f, t) / lp_norm(f, s) for f in F]
    witness = max(ratios)
    upper = multiplier_norm(M, settings).upper
    lhs = cert1.A_est.lower * cert2.A_est.lower * M.symbol.norm(math.inf)
    return CheckReport(
        "A1*A2*sup|m| <= norm",
        lhs,
        witness,
        extra={"norm_upper": upper, "witness_index": int(np.argmax(ratios))},
    )


def adjoint(M: Multiplier) -> Multiplier:
    """M* = M_{conj(m), Psi, Phi} with the roles of the sequences swapped.

    Complex data uses the conjugate-transpose convention, so the sequences
    are conjugated together with the symbol and the matrix of the result
    is M^H.
    """
    psi, phi = M.analysis_seq, M.synthesis_seq
    new_analysis = FunctionalSequence(phi.host.dual(), np.conj(phi.elements), phi.coeff.swapped())
    new_synthesis = VectorSequence(psi.host.dual(), np.conj(psi.elements), psi.coeff.swapped())
    return Multiplier(M.symbol.conj(), new_analysis, new_synthesis)


def truncate(M: Multiplier, N: int) -> Multiplier:
    """Zero the symbol from index N on."""
    if not 0 <= N <= M.K:
        raise BesselMultError(f"truncation index {N} outside [0, {M.K}]")
    v = np.array(M.symbol.values)
    v[N:] = 0
    return M.with_symbol(Symbol(v))


def truncation_error_check(M: Multiplier, N: int, B1=None, B2=None, settings=None) -> CheckReport:
    B1, B2 = _bounds(M, B1, B2, settings)
    diff = M.matrix - truncate(M, N).matrix
    est = operator_norm(diff, M.source.norm_exponent, M.target.norm_exponent, settings)
    tail = M.symbol.tail_sup(N)
    return CheckReport(
        f"norm(M - M^({N})) <= tail_sup*B1*B2",
        est.lower,
        tail * _upper(B1) * _upper(B2),
        extra={"N": N, "tail_sup": tail, "lhs_upper": est.upper},
    )


@dataclass
class TruncationSweep:
    rows: list
    rhs_nonincreasing: bool

    @property
    def passed(self) -> bool:
        return self.rhs_nonincreasing and all(r.passed for r in self.rows)

    def to_dict(self):
        return {"rows": [r.to_dict() for r in self.rows], "rhs_nonincreasing": self.rhs_nonincreasing,
                "pass": self.passed}


def truncation_sweep(M: Multiplier, B1=None, B2=None, settings=None) -> TruncationSweep:
    """Run the truncation check for N = K, K-1, ..., 0."""
    B1, B2 = _bounds(M, B1, B2, settings)
    rows = [truncation_error_check(M, N, B1, B2, settings) for N in range(M.K, -1, -1)]
    rhs = [r.rhs for r in rows]  # ordered by decreasing N
    mono = all(a <= b for a, b in zip(rhs, rhs[1:]))
    return TruncationSweep(rows, mono)


@dataclass(frozen=True, eq=False)
class RankOne:
    """The operator y (x) omega : z -> omega(z) y."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "left", np.asarray(self.left).ravel())
        object.__setattr__(self, "right", np.asarray(self.right).ravel())

    @property
    def matrix(self) -> np.ndarray:
        return np.outer(self.left, self.right)

    def apply(self, z):
        return (self.right @ np.asarray(z)) * self.left

    def norm(self, source_exponent=2.0, target_exponent=2.0) -> float:
        return lp_norm(self.left, target_exponent) * lp_norm(self.right, conjugate_exponent(source_exponent))


def _identity_report(claim, lhs_mat, rhs_mat):
    err = float(np.max(np.abs(lhs_mat - rhs_mat))) if lhs_mat.size else 0.0
    scale = max(1.0, float(np.max(np.abs(rhs_mat))) if rhs_mat.size else 1.0)
    return CheckReport(claim, err, IDENTITY_TOL * scale, extra={"max_abs_error": err})


def rank_one_identities(a: RankOne, b: RankOne, S, T, source_exponent=2.0, target_exponent=2.0,
                        settings=None) -> list:
    """Check the five rank-one identities for a = y(x)w, b = z(x)tau.

    Shapes: y in Y, w in X*, z in Z, tau in Y*, S : W -> X, T : Y -> Z.
    """
    y, w = a.left, a.right
    z, tau = b.left, b.right
    S, T = np.asarray(S), np.asarray(T)
    if tau.size != y.size or T.shape[1] != y.size or S.shape[0] != w.size:
        raise DimensionError("incompatible dimensions for rank-one identities")
    reports = [
        _identity_report("(z(x)tau)(y(x)w) = tau(y) z(x)w", b.matrix @ a.matrix, (tau @ y) * np.outer(z, w)),
        _identity_report("T(y(x)w) = T(y)(x)w", T @ a.matrix, np.outer(T @ y, w)),
        _identity_report("(y(x)w)S = y(x)S*(w)", a.matrix @ S, np.outer(y, S.T @ w)),
        _identity_report("(y(x)w)* = w(x)k(y)", a.matrix.conj().T, np.outer(np.conj(w), np.conj(y))),
    ]
    product = a.norm(source_exponent, target_exponent)
    est = operator_norm(a.matrix, source_exponent, target_exponent, settings)
    err = abs(est.lower - product)
    reports.append(CheckReport("norm(y(x)w) = norm(y)*norm(w)", err, IDENTITY_TOL * max(1.0, product),
                               extra={"estimate": est.lower, "product": product}))
    return reports


def symbol_recovery(matrix, analysis: FunctionalSequence, synthesis: VectorSequence, tol=RECOVERY_TOL) -> Symbol:
    """Recover m from M = Phi^T diag(m) Psi.

    Needs Phi injective on coefficients (a Riesz sequence) and no zero
    row in Psi. Probes with the dual of Psi when Psi is a basis,
    otherwise projects each row by least squares.
    """
    M = np.asarray(matrix)
    Psi, Phi = analysis.elements, synthesis.elements
    if M.shape != (synthesis.dim, analysis.dim):
        raise DimensionError(f"matrix shape {M.shape} does not match ({synthesis.dim}, {analysis.dim})")
    for k, row in enumerate(Psi):
        if not np.any(row):
            raise SymbolError(f"symbol not identifiable at k={k}: analysis element is zero")
    sv = np.linalg.svd(Phi.T, compute_uv=False)
    if synthesis.K > synthesis.dim or sv[-1] <= 1e-12 * sv[0]:
        raise NotRieszError("synthesis sequence is not a Riesz sequence", float(sv[-1]) if sv.size else 0.0)
    C = np.linalg.pinv(Phi.T) @ M
    if analysis.K == analysis.dim and np.linalg.cond(Psi) < 1e12:
        values = np.diag(C @ _dual_rows(Psi).T).copy()
    else:
        values = np.einsum("kj,kj->k", C, np.conj(Psi)) / np.sum(np.abs(Psi) ** 2, axis=1)
    if np.iscomplexobj(values) and not np.any(values.imag):
        values = values.real
    rebuilt = (Phi.T * values) @ Psi
    err = float(np.max(np.abs(rebuilt - M)))
    if err > tol * max(1.0, float(np.max(np.abs(M)))):
        raise BesselMultError(f"matrix is not a multiplier over these sequences (residual {err:.3e})")
    return Symbol(values)


@dataclass(frozen=True)
class NuclearCertificate:
    r: float
    sigma_norm: float
    analysis_weak_norm: float
    synthesis_weak_norm: float
    p: float
    q: float

    @property
    def upper(self) -> float:
        return self.sigma_norm * self.analysis_weak_norm * self.synthesis_weak_norm

    @property
    def exponent_condition(self) -> bool:
        return 1 + 1 / self.r >= 1 / self.p + 1 / self.q - 1e-15

    def to_dict(self):
        return {"r": self.r, "sigma_norm": self.sigma_norm, "analysis_weak_norm": self.analysis_weak_norm,
                "synthesis_weak_norm": self.synthesis_weak_norm, "upper": self.upper,
                "exponent_condition": self.exponent_condition}


def nuclear_upper_bound(M: Multiplier, r: float, settings=None) -> NuclearCertificate:
    """Canonical factorization certificate N_(r,p,q)(M) <= B1 ||m||_r B2."""
    if not r > 0:
        raise BesselMultError(f"r must be positive, got {r}")
    p, q = M.analysis_seq.coeff.p, M.analysis_seq.coeff.q
    return NuclearCertificate(
        r=float(r),
        sigma_norm=M.symbol.norm(r),
        analysis_weak_norm=weak_p_norm(M.analysis_seq, p, settings),
        synthesis_weak_norm=weak_p_norm(M.synthesis_seq, q, settings),
        p=p,
        q=q,
    )


def trace_norm_hilbert(matrix) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(np.asarray(matrix), compute_uv=False)))
