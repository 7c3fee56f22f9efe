"""Independent reference computations used to freeze expected values.

Nothing here calls into the package under test.
"""

import numpy as np
from scipy import optimize


def spectral_norm(A):
    A = np.asarray(A)
    return float(np.sqrt(max(np.linalg.eigvalsh(A.conj().T @ A).max(), 0.0)))


def _pnorm(x, r):
    x = np.abs(x)
    if np.isinf(r):
        return x.max(axis=-1)
    return (x ** r).sum(axis=-1) ** (1.0 / r)


def angle_grid_norm_2d(A, s, t, n=200_001):
    """Real 2-column matrices: scan the unit circle, then refine the best cell."""
    A = np.asarray(A, dtype=float)

    def ratio(theta):
        x = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return _pnorm(x @ A.T, t) / _pnorm(x, s)

    th = np.linspace(0.0, np.pi, n)
    r = ratio(th)
    i = int(np.argmax(r))
    h = th[1] - th[0]
    res = optimize.minimize_scalar(lambda a: -ratio(np.array([a]))[0], bounds=(th[i] - h, th[i] + h),
                                   method="bounded", options={"xatol": 1e-14})
    return max(float(r[i]), -float(res.fun))


def multistart_norm(A, s, t, starts=400, seed=12345):
    """Real matrices of any width: Nelder-Mead polish from many random starts."""
    A = np.asarray(A, dtype=float)
    rng = np.random.default_rng(seed)
    f = lambda x: -_pnorm(A @ x, t) / max(_pnorm(x, s), 1e-300)
    best = 0.0
    for _ in range(starts):
        x0 = rng.standard_normal(A.shape[1])
        res = optimize.minimize(f, x0, method="Nelder-Mead", options={"xatol": 1e-13, "fatol": 1e-15,
                                                                      "maxiter": 20000})
        best = max(best, -res.fun)
    return best


def golden_pair():
    return (np.sqrt(5) - 1) / 2, (np.sqrt(5) + 1) / 2
