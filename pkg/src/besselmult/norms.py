"""Certified operator norms between l^s spaces and the frame constants.

Away from s = t = 2 the norm ||A||_{s->t} is not computable exactly, so
every routine returns an interval: a lower bound realized by an explicit
witness vector and a rigorous upper bound. Lower frame / Riesz constants
are infima and come out the other way round (the witness realizes the
upper end).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import optimize

from .core import (
    BesselMultError,
    FunctionalSequence,
    NotRieszError,
    conjugate_exponent,
    lp_norm,
)

__all__ = [
    "EstimatorSettings",
    "NormEstimate",
    "BoundsCertificate",
    "dual_vector",
    "opnorm_power",
    "opnorm_upper_interpolation",
    "opnorm_sampling_oracle",
    "operator_norm",
    "injectivity_modulus",
    "bessel_bound",
    "riesz_bounds",
    "frame_bounds",
    "weak_p_norm",
    "analysis_exponents",
    "synthesis_exponents",
]

# relative slack allowed between a witness value and a rigorous bound that
# agree in exact arithmetic
FP_RTOL = 1e-9
RANK_RTOL = 1e-12
VERTEX_LIMIT = 20


@dataclass(frozen=True)
class EstimatorSettings:
    restarts: int = 8
    max_iter: int = 500
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iter < 1 or self.tol <= 0:
            raise BesselMultError("restarts and max_iter must be >= 1 and tol > 0")


DEFAULT_SETTINGS = EstimatorSettings()


@dataclass(frozen=True, eq=False)
class NormEstimate:
    """Interval [lower, upper] for a sup (operator norm) or inf (modulus).

    For ``sense == "sup"`` the witness attains ``lower``; for
    ``sense == "inf"`` it attains ``upper``.
    """

    lower: float
    upper: float
    witness: np.ndarray
    method: str
    iterations: int = 0
    seed: int = 0
    source_exponent: float = 2.0
    target_exponent: float = 2.0
    sense: str = "sup"
    stationary: bool = True

    def __post_init__(self):
        if self.lower < 0 or self.lower > self.upper:
            raise RuntimeError(f"internal error: invalid certificate [{self.lower}, {self.upper}]")

    @property
    def value(self) -> float:
        """The witnessed value (best point estimate)."""
        return self.lower if self.sense == "sup" else self.upper

    @property
    def gap(self) -> float:
        return (self.upper - self.lower) / self.upper if self.upper > 0 else 0.0

    def witness_ratio(self, matrix) -> float:
        w = self.witness
        den = lp_norm(w, self.source_exponent)
        if den == 0:
            return 0.0
        return lp_norm(np.asarray(matrix) @ w, self.target_exponent) / den

    def scaled(self, c: float) -> "NormEstimate":
        c = abs(c)
        return replace(self, lower=self.lower * c, upper=self.upper * c)

    def to_dict(self) -> dict:
        from .io import encode_vector

        return {
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "iterations": self.iterations,
            "seed": self.seed,
            "witness": encode_vector(self.witness),
            "sense": self.sense,
            "stationary": self.stationary,
            "source_exponent": _json_exp(self.source_exponent),
            "target_exponent": _json_exp(self.target_exponent),
        }


def _json_exp(x):
    return "inf" if math.isinf(x) else x


@dataclass(frozen=True, eq=False)
class BoundsCertificate:
    """Lower constant A and upper constant B of a frame or Riesz inequality."""

    A_est: NormEstimate
    B_est: NormEstimate
    kind: str

    @property
    def A(self) -> float:
        return self.A_est.value

    @property
    def B(self) -> float:
        return self.B_est.value

    def to_dict(self) -> dict:
        return {"kind": self.kind, "A": self.A_est.to_dict(), "B": self.B_est.to_dict()}


def _settings(settings):
    return DEFAULT_SETTINGS if settings is None else settings


def _check_exponent(x, name, open_interval=True):
    x = float(x)
    if open_interval and not (1.0 < x < math.inf):
        raise BesselMultError(f"{name} exponent must lie in (1, inf) for power iteration, got {x}")
    if not (1.0 <= x <= math.inf):
        raise BesselMultError(f"{name} exponent must lie in [1, inf], got {x}")
    return x


def dual_vector(y, r: float) -> np.ndarray:
    """Unit vector w in l^{r'} with sum_i w_i y_i = ||y||_r."""
    y = np.asarray(y)
    a = np.abs(y)
    top = a.max() if a.size else 0.0
    w = np.zeros_like(y, dtype=np.result_type(y, float))
    if top == 0:
        return w
    if math.isinf(r):
        i = int(np.argmax(a))
        w[i] = np.conj(y[i]) / a[i]
        return w
    u = y / top
    au = np.abs(u)
    nz = au > 0
    w[nz] = np.conj(u[nz]) / au[nz] * au[nz] ** (r - 1.0)
    return w / lp_norm(w, conjugate_exponent(r))


def _is_complex(A):
    return np.iscomplexobj(A)


def _random_start(rng, n, complex_):
    x = rng.standard_normal(n)
    if complex_:
        x = x + 1j * rng.standard_normal(n)
    return x


def _zero_estimate(n, s, t, seed, sense="sup", dtype=float):
    w = np.zeros(n, dtype=dtype)
    w[0] = 1.0
    return NormEstimate(0.0, 0.0, w, "exact_spectral", 0, seed, s, t, sense, True)


def _identity_norm(d, a, b):
    """||I_d||_{a->b}."""
    if b >= a:
        return 1.0
    return d ** (1.0 / b - 1.0 / a)


def opnorm_upper_interpolation(matrix, source_exponent: float, target_exponent: float) -> float:
    """Rigorous upper bound for ||A||_{s->t} from elementary sums.

    For s == t this is the Riesz-Thorin / Schur value
    ``||A||_1^{1/s} ||A||_inf^{1 - 1/s}``. Otherwise the minimum of a row
    bound, a column bound and factorizations through the equal-exponent
    bound and the Euclidean norm.
    """
    A = np.asarray(matrix)
    s = _check_exponent(source_exponent, "source", open_interval=False)
    t = _check_exponent(target_exponent, "target", open_interval=False)
    m, n = A.shape
    absA = np.abs(A)
    col = absA.sum(axis=0).max()
    row = absA.sum(axis=1).max()

    def interp(r):
        if math.isinf(r):
            return row
        return col ** (1.0 / r) * row ** (1.0 - 1.0 / r)

    if s == t:
        return float(interp(s))
    s_dual = conjugate_exponent(s)
    bounds = [
        lp_norm([lp_norm(r_, s_dual) for r_ in A], t),
        lp_norm([lp_norm(c_, t) for c_ in A.T], s_dual),
        interp(s) * _identity_norm(m, s, t),
        _identity_norm(n, s, t) * interp(t),
        _identity_norm(n, s, 2.0) * np.linalg.norm(A, 2) * _identity_norm(m, 2.0, t),
    ]
    return float(min(bounds))


def _finalize(lower, upper, witness, method, iterations, seed, s, t, sense="sup", stationary=True):
    if lower > upper:
        if lower <= upper * (1 + FP_RTOL) + 1e-300:
            upper = lower
        else:
            raise RuntimeError(f"internal error: witness {lower} exceeds rigorous bound {upper}")
    return NormEstimate(float(lower), float(upper), witness, method, int(iterations), int(seed), s, t, sense, stationary)


def _power_restart(A, AT, x, s, t, max_iter, tol):
    """One nonlinear power run; returns (value, x, iterations, stationary, history)."""
    s_dual = conjugate_exponent(s)
    x = x / lp_norm(x, s)
    val = lp_norm(A @ x, t)
    history = [val]
    for it in range(1, max_iter + 1):
        if val == 0.0:
            return val, x, it, False, history
        g = dual_vector(A @ x, t)
        z = AT @ g
        xn = dual_vector(z, s_dual)
        vn = lp_norm(A @ xn, t)
        if vn < val * (1 - 1e-12):
            raise RuntimeError(f"internal error: power iteration decreased ({val} -> {vn})")
        converged = vn - val <= tol * vn
        if vn >= val:
            x, val = xn, vn
        history.append(val)
        if converged:
            return val, x, it, True, history
    return val, x, max_iter, False, history


def opnorm_power(
    matrix,
    source_exponent: float,
    target_exponent: float,
    restarts: int = 8,
    max_iter: int = 500,
    tol: float = 1e-10,
    seed: int = 0,
    return_histories: bool = False,
):
    """Lower bound for ||A||_{s->t} by nonlinear power iteration.

    Each restart alternates the duality maps
    ``x <- J_{s'}(A^T J_t(A x))``, which never decreases ``||Ax||_t``.
    Starts: top right singular vector, the coordinate vector of the
    largest column, the all-ones vector, then seeded random vectors. The
    best restart wins, ties going to the lowest index.
    """
    A = np.asarray(matrix)
    if A.ndim != 2:
        raise BesselMultError("matrix must be two-dimensional")
    s = _check_exponent(source_exponent, "source")
    t = _check_exponent(target_exponent, "target")
    m, n = A.shape
    if not np.any(A):
        est = _zero_estimate(n, s, t, seed, dtype=A.dtype)
        return (est, []) if return_histories else est
    AT = A.T
    cplx = _is_complex(A)
    starts = [np.linalg.svd(A)[2][0].conj()]
    col_norms = [lp_norm(c, t) for c in A.T]
    e = np.zeros(n, dtype=A.dtype)
    e[int(np.argmax(col_norms))] = 1.0
    starts.append(e)
    starts.append(np.ones(n, dtype=A.dtype))
    children = np.random.SeedSequence(seed).spawn(max(restarts, 1))
    while len(starts) < restarts:
        rng = np.random.default_rng(children[len(starts)])
        starts.append(_random_start(rng, n, cplx))
    starts = starts[:restarts]

    best = None
    histories = []
    total = 0
    for x0 in starts:
        val, x, its, stat, hist = _power_restart(A, AT, x0, s, t, max_iter, tol)
        histories.append(hist)
        total += its
        if best is None or val > best[0]:
            best = (val, x, its, stat)
    _, w, its, stat = best
    lower = lp_norm(A @ w, t) / lp_norm(w, s)
    upper = opnorm_upper_interpolation(A, s, t)
    method = "power_iteration"
    if s == 2.0 and t == 2.0:
        upper = min(upper, float(np.linalg.norm(A, 2)))
        method = "exact_spectral"
    est = _finalize(lower, upper, w, method, total, seed, s, t, stationary=stat)
    return (est, histories) if return_histories else est


def _exact_vertex(A, s, t, seed):
    """Exact norm when an endpoint exponent makes the extreme points finite."""
    m, n = A.shape
    s_dual = conjugate_exponent(s)
    if s == 1.0:
        vals = [lp_norm(c, t) for c in A.T]
        j = int(np.argmax(vals))
        w = np.zeros(n, dtype=A.dtype)
        w[j] = 1.0
    elif math.isinf(t):
        vals = [lp_norm(r, s_dual) for r in A]
        w = dual_vector(A[int(np.argmax(vals))], s_dual)
    elif _is_complex(A):
        raise BesselMultError("endpoint exponents with complex matrices are not supported")
    elif math.isinf(s):
        if n > VERTEX_LIMIT:
            raise BesselMultError(f"inf-source norm needs 2^{n} sign vectors; dimension too large")
        best, w = -1.0, None
        for signs in itertools.product((1.0, -1.0), repeat=n - 1):
            x = np.array((1.0,) + signs)
            v = lp_norm(A @ x, t)
            if v > best:
                best, w = v, x
    else:  # t == 1
        if m > VERTEX_LIMIT:
            raise BesselMultError(f"l^1 target norm needs 2^{m} sign vectors; dimension too large")
        best, w = -1.0, None
        for signs in itertools.product((1.0, -1.0), repeat=m - 1):
            sig = np.array((1.0,) + signs)
            z = A.T @ sig
            v = lp_norm(z, s_dual)
            if v > best:
                best, w = v, dual_vector(z, s_dual)
    if lp_norm(w, s) == 0:
        return _zero_estimate(n, s, t, seed, dtype=A.dtype)
    val = lp_norm(A @ w, t) / lp_norm(w, s)
    return NormEstimate(val, val, w, "exact_vertex", 0, seed, s, t, "sup", True)


def operator_norm(matrix, source_exponent, target_exponent, settings=None) -> NormEstimate:
    """Certified ||A||_{s->t} for any exponents in [1, inf]."""
    st = _settings(settings)
    A = np.asarray(matrix)
    s = _check_exponent(source_exponent, "source", open_interval=False)
    t = _check_exponent(target_exponent, "target", open_interval=False)
    if not np.any(A):
        return _zero_estimate(A.shape[1], s, t, st.seed, dtype=A.dtype)
    if s == 1.0 or math.isinf(s) or t == 1.0 or math.isinf(t):
        return _exact_vertex(A, s, t, st.seed)
    return opnorm_power(A, s, t, st.restarts, st.max_iter, st.tol, st.seed)


def _sphere_points(d, k, budget):
    """Deterministic points on the surface of the cube [-1, 1]^d."""
    if d == 1:
        return np.array([[1.0], [-1.0]])
    k = int(min(k, max(2, math.floor((budget / (2 * d)) ** (1.0 / (d - 1))))))
    axis = np.linspace(-1.0, 1.0, k)
    face = np.stack(np.meshgrid(*([axis] * (d - 1)), indexing="ij"), axis=-1).reshape(-1, d - 1)
    pts = []
    for i in range(d):
        for sign in (1.0, -1.0):
            p = np.insert(face, i, sign, axis=1)
            pts.append(p)
    return np.vstack(pts)


def opnorm_sampling_oracle(matrix, source_exponent, target_exponent, grid_density=400, seed=0,
                           refine=True) -> NormEstimate:
    """Brute-force lower bound for ||A||_{s->t} by dense sampling.

    Evaluates a deterministic grid on the cube surface plus seeded random
    directions (both pushed to the unit s-sphere), then zooms in with
    successively finer local grids around the best point. No gradient or
    duality information is used. Limited to four real parameters.
    """
    A = np.asarray(matrix)
    s = _check_exponent(source_exponent, "source", open_interval=False)
    t = _check_exponent(target_exponent, "target", open_interval=False)
    m, n = A.shape
    cplx = _is_complex(A)
    d = 2 * n if cplx else n
    if d > 4:
        raise BesselMultError(
            f"sampling oracle limited to 4 real parameters (got {d}); use opnorm_power instead"
        )
    if not np.any(A):
        return NormEstimate(0.0, 0.0, np.eye(n, dtype=A.dtype)[0], "sampling_oracle", 0, seed, s, t)

    def to_vec(P):
        return P[:, :n] + 1j * P[:, n:] if cplx else P

    def values(P):
        X = to_vec(P)
        out = np.empty(len(X))
        for lo in range(0, len(X), 200_000):
            Xc = X[lo:lo + 200_000]
            num = _row_norms(Xc @ A.T, t)
            den = _row_norms(Xc, s)
            out[lo:lo + 200_000] = np.where(den > 0, num / np.where(den > 0, den, 1), 0.0)
        return out

    rng = np.random.default_rng(seed)
    P = np.vstack([_sphere_points(d, grid_density, 2_000_000), rng.standard_normal((grid_density, d))])
    vals = values(P)
    i = int(np.argmax(vals))
    best_val, best_pt = vals[i], P[i]
    count = len(P)
    if refine:
        radius = 4.0 / grid_density
        local = np.stack(np.meshgrid(*([np.linspace(-1, 1, 21 if d <= 3 else 11)] * d), indexing="ij"),
                         axis=-1).reshape(-1, d)
        for _ in range(40):
            base = best_pt / np.abs(best_pt).max()
            Q = base + radius * local
            qv = values(Q)
            j = int(np.argmax(qv))
            count += len(Q)
            if qv[j] > best_val:
                best_val, best_pt = qv[j], Q[j]
            radius *= 0.5
            if radius < 1e-12:
                break
    w = to_vec(best_pt[None, :])[0]
    w = w / lp_norm(w, s)
    lower = lp_norm(A @ w, t)
    upper = opnorm_upper_interpolation(A, s, t)
    return _finalize(lower, upper, w, "sampling_oracle", count, seed, s, t)


def _row_norms(X, r):
    a = np.abs(X)
    if math.isinf(r):
        return a.max(axis=1)
    top = a.max(axis=1)
    safe = np.where(top > 0, top, 1.0)
    return top * np.sum((a / safe[:, None]) ** r, axis=1) ** (1.0 / r)


def _ratio_and_grad(A, u, s, t, cplx):
    n = A.shape[1]
    x = u[:n] + 1j * u[n:] if cplx else u
    y = A @ x
    N = lp_norm(y, t)
    D = lp_norm(x, s)
    if D == 0:
        return math.inf, np.zeros_like(u)

    def grad_norm(v, r, nv):
        a = np.abs(v)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.where(a > 0, a ** (r - 2.0) * v, 0.0) / nv ** (r - 1.0)
        return w

    if N == 0:
        return 0.0, np.zeros_like(u)
    gy = A.conj().T @ grad_norm(y, t, N)
    gx = grad_norm(x, s, D)
    g = gy / D - N * gx / D**2
    if cplx:
        g = np.concatenate([g.real, g.imag])
    return N / D, np.real(g)


def _kernel_estimate(A, s, t, seed, method="exact_spectral"):
    v = np.linalg.svd(A, full_matrices=True)[2][-1].conj()
    v = v / lp_norm(v, s)
    val = lp_norm(A @ v, t)
    return NormEstimate(0.0, float(val), v, method, 0, seed, s, t, "inf", True)


def injectivity_modulus(matrix, source_exponent, target_exponent, settings=None) -> NormEstimate:
    """Certified inf_{||x||_s = 1} ||Ax||_t.

    Rank-deficient maps short-circuit to 0 with a kernel witness. Square
    maps use 1 / ||A^{-1}||_{t->s} (power iteration on the inverse).
    Tall maps take the lower end from the pseudo-inverse, which is a left
    inverse, and the upper end from multi-start descent on the ratio.
    """
    st = _settings(settings)
    A = np.asarray(matrix)
    s = _check_exponent(source_exponent, "source", open_interval=False)
    t = _check_exponent(target_exponent, "target", open_interval=False)
    m, n = A.shape
    if n > m:
        return _kernel_estimate(A, s, t, st.seed)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[0] == 0 or sv[-1] <= RANK_RTOL * sv[0]:
        return _kernel_estimate(A, s, t, st.seed)
    exact2 = s == 2.0 and t == 2.0
    if m == n:
        inv = np.linalg.inv(A)
        est = operator_norm(inv, t, s, st)
        w = inv @ est.witness
        w = w / lp_norm(w, s)
        upper = lp_norm(A @ w, t)
        lower = 1.0 / est.upper
        method = "exact_spectral" if exact2 else est.method
        return _finalize_inf(lower, upper, w, method, est.iterations, st.seed, s, t, est.stationary)

    pinv = np.linalg.pinv(A)
    lower = 1.0 / operator_norm(pinv, t, s, st).upper
    if exact2:
        lower = max(lower, float(sv[-1]) * (1 - 4 * np.finfo(float).eps))
    cplx = _is_complex(A)
    vmin = np.linalg.svd(A)[2][n - 1].conj()
    starts = [vmin]
    if 1 < s < math.inf and 1 < t < math.inf:
        starts.append(pinv @ opnorm_power(pinv, t, s, 3, st.max_iter, st.tol, st.seed).witness)
    children = np.random.SeedSequence(st.seed).spawn(max(st.restarts, 1))
    while len(starts) < st.restarts:
        starts.append(_random_start(np.random.default_rng(children[len(starts)]), n, cplx))
    use_grad = 1 < s < math.inf and 1 < t < math.inf
    best_val, best_x, total = math.inf, None, 0
    for x0 in starts:
        u0 = np.concatenate([x0.real, x0.imag]) if cplx else np.real(x0).astype(float)
        cand = [u0]
        if not exact2:
            res = optimize.minimize(
                lambda u: _ratio_and_grad(A, u, s, t, cplx),
                u0,
                jac=True if use_grad else None,
                method="BFGS",
                options={"maxiter": st.max_iter, "gtol": 1e-12},
            ) if use_grad else optimize.minimize(
                lambda u: _ratio_and_grad(A, u, s, t, cplx)[0], u0, method="Nelder-Mead",
                options={"maxiter": st.max_iter * 10, "xatol": 1e-12, "fatol": 1e-14},
            )
            total += int(res.nit)
            cand.append(res.x)
        for u in cand:
            x = u[:n] + 1j * u[n:] if cplx else u
            if lp_norm(x, s) == 0:
                continue
            val = lp_norm(A @ x, t) / lp_norm(x, s)
            if val < best_val:
                best_val, best_x = val, x / lp_norm(x, s)
    method = "exact_spectral" if exact2 else "interpolation"
    return _finalize_inf(lower, best_val, best_x, method, total, st.seed, s, t, True)


def _finalize_inf(lower, upper, w, method, iterations, seed, s, t, stationary):
    if lower > upper:
        if lower <= upper * (1 + FP_RTOL):
            lower = upper
        else:
            raise RuntimeError(f"internal error: modulus bound {lower} exceeds witness {upper}")
    return NormEstimate(float(lower), float(upper), w, method, int(iterations), int(seed), s, t, "inf", stationary)


def analysis_exponents(seq, p=None):
    """(source, target) exponents of the analysis map of ``seq``.

    Functionals on X act on (X, s) into l^p; vectors of X2 act, as
    functionals on X2*, on (X2*, t') into l^q.
    """
    if isinstance(seq, FunctionalSequence):
        return seq.host.norm_exponent, seq.coeff.p if p is None else p
    return seq.host.dual().norm_exponent, seq.coeff.q if p is None else p


def synthesis_exponents(seq, q=None):
    """(coefficient, target) exponents of the synthesis map of ``seq``."""
    if isinstance(seq, FunctionalSequence):
        return (seq.coeff.q if q is None else q), seq.host.dual().norm_exponent
    return (seq.coeff.p if q is None else q), seq.host.norm_exponent


def _elem_norm_exponent(seq):
    if isinstance(seq, FunctionalSequence):
        return seq.host.dual().norm_exponent
    return seq.host.norm_exponent


def bessel_bound(seq, settings=None) -> NormEstimate:
    """B = ||U|| for the analysis map of a functional (or vector) sequence."""
    s, p = analysis_exponents(seq)
    est = operator_norm(seq.elements, s, p, settings)
    worst = max(seq.element_norms())
    if worst > est.upper * (1 + FP_RTOL) + 1e-15:
        raise RuntimeError(f"internal error: element norm {worst} exceeds Bessel bound {est.upper}")
    return est


def riesz_bounds(seq, q=None, settings=None, require_basis=False, tol=1e-10) -> BoundsCertificate:
    """Riesz constants of the synthesis map d -> sum_k d_k g_k.

    ``q`` defaults to the natural coefficient exponent: coeff.q for
    functionals, coeff.p for vectors.
    """
    q, target = synthesis_exponents(seq, q)
    K, dim = seq.K, seq.dim
    if require_basis and K != dim:
        raise NotRieszError(f"a Riesz basis needs K == dim, got K={K}, dim={dim}")
    S = seq.elements.T
    B = operator_norm(S, q, target, settings)
    if K > dim:
        A = _kernel_estimate(S, q, target, _settings(settings).seed)
    else:
        A = injectivity_modulus(S, q, target, settings)
    if A.lower > tol:
        kind = "q_riesz_basis" if K == dim else "q_riesz_sequence"
    else:
        kind = "p_bessel"
    if require_basis and kind != "q_riesz_basis":
        raise NotRieszError("sequence is not a Riesz basis: lower bound vanishes",
                            float(np.linalg.svd(S, compute_uv=False)[-1]))
    if kind == "q_riesz_basis":
        norms = seq.element_norms()
        if norms.min() < A.lower * (1 - FP_RTOL) or norms.max() > B.upper * (1 + FP_RTOL):
            raise RuntimeError("internal error: element norms fall outside [A, B]")
    return BoundsCertificate(A, B, kind)


def frame_bounds(seq, settings=None, tol=1e-10) -> BoundsCertificate:
    """Frame constants of the analysis map f -> (g_k(f))_k."""
    s, p = analysis_exponents(seq)
    B = bessel_bound(seq, settings)
    A = injectivity_modulus(seq.elements, s, p, settings)
    return BoundsCertificate(A, B, "p_frame" if A.lower > tol else "p_bessel")


def weak_p_norm(seq, p: float, settings=None) -> float:
    """w_p of a sequence: sup over the unit dual ball of ||(x*(x_i))||_p."""
    s, _ = analysis_exponents(seq)
    return operator_norm(seq.elements, s, p, settings).upper
