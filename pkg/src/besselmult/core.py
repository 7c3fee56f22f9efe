"""Spaces, sequences, symbols and the elementary operators.

Every object here is finite dimensional: a space is R^n or C^n with an
l^s norm, a sequence is a K x n matrix whose rows are the elements, and
the analysis / synthesis / diagonal operators are plain matrix products.
The dual pairing is bilinear, ``g(f) = sum_i g_i f_i``, for both scalar
fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "BesselMultError",
    "DimensionError",
    "SymbolError",
    "NotRieszError",
    "Space",
    "CoefficientExponent",
    "FunctionalSequence",
    "VectorSequence",
    "Symbol",
    "SymbolClass",
    "conjugate_exponent",
    "lp_norm",
    "dual_pairing",
    "analysis_apply",
    "synthesis_apply",
    "diagonal_apply",
    "symbol_classify",
]


class BesselMultError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(BesselMultError):
    pass


class SymbolError(BesselMultError):
    pass


class NotRieszError(BesselMultError):
    """A sequence lacks the Riesz property needed by an operation."""

    def __init__(self, message, smallest_singular_value=None):
        super().__init__(message)
        self.smallest_singular_value = smallest_singular_value


def conjugate_exponent(s: float) -> float:
    """Return s' with 1/s + 1/s' = 1, mapping 1 <-> inf."""
    s = float(s)
    if s < 1:
        raise BesselMultError(f"norm exponent must lie in [1, inf], got {s}")
    if s == 1.0:
        return math.inf
    if math.isinf(s):
        return 1.0
    return s / (s - 1.0)


def lp_norm(x, r: float) -> float:
    """l^r norm of a vector for r in (0, inf]; r < 1 gives the quasi-norm."""
    a = np.abs(np.asarray(x)).ravel()
    if a.size == 0:
        return 0.0
    if math.isinf(r):
        return float(a.max())
    top = a.max()
    if top == 0.0:
        return 0.0
    # scale first so large r does not overflow
    return float(top * np.sum((a / top) ** r) ** (1.0 / r))


def _as_matrix(elements, name):
    arr = np.array(elements, copy=True)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"{name} must be a non-empty K x n matrix, got shape {arr.shape}")
    if not np.iscomplexobj(arr):
        arr = arr.astype(float)
    if not np.all(np.isfinite(arr)):
        raise BesselMultError(f"{name} contains non-finite entries")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Space:
    """Finite-dimensional space with an l^s norm.

    ``norm_exponent`` may be any value in [1, inf]. ``dual()`` carries the
    conjugate exponent and the same dimension.
    """

    dim: int
    norm_exponent: float = 2.0
    scalar_field: str = "real"

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise DimensionError(f"dim must be a positive integer, got {self.dim}")
        if not (1.0 <= float(self.norm_exponent) <= math.inf):
            raise BesselMultError(f"norm exponent must lie in [1, inf], got {self.norm_exponent}")
        if self.scalar_field not in ("real", "complex"):
            raise BesselMultError(f"scalar_field must be 'real' or 'complex', got {self.scalar_field!r}")
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "norm_exponent", float(self.norm_exponent))

    @property
    def is_complex(self) -> bool:
        return self.scalar_field == "complex"

    def dual(self) -> "Space":
        return Space(self.dim, conjugate_exponent(self.norm_exponent), self.scalar_field)

    def norm(self, x) -> float:
        x = np.asarray(x)
        if x.shape != (self.dim,):
            raise DimensionError(f"vector of shape {x.shape} is not in a space of dim {self.dim}")
        return lp_norm(x, self.norm_exponent)


@dataclass(frozen=True)
class CoefficientExponent:
    """The pair (p, q) with 1/p + 1/q = 1; only p is stored."""

    p: float = 2.0

    def __post_init__(self):
        p = float(self.p)
        if not (1.0 < p < math.inf):
            raise BesselMultError(f"coefficient exponent p must lie in (1, inf), got {self.p}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    def swapped(self) -> "CoefficientExponent":
        return CoefficientExponent(self.q)


def _coerce_coeff(coeff) -> CoefficientExponent:
    if isinstance(coeff, CoefficientExponent):
        return coeff
    return CoefficientExponent(float(coeff))


@dataclass(frozen=True, eq=False)
class _Rows:
    host: Space
    elements: np.ndarray
    coeff: CoefficientExponent = field(default_factory=CoefficientExponent)

    def __post_init__(self):
        arr = _as_matrix(self.elements, type(self).__name__ + ".elements")
        if arr.shape[1] != self.host.dim:
            raise DimensionError(
                f"elements have {arr.shape[1]} columns but host space has dim {self.host.dim}"
            )
        if np.iscomplexobj(arr) and not self.host.is_complex:
            if np.any(arr.imag != 0):
                raise BesselMultError("complex elements require a complex host space")
            arr = arr.real.copy()
            arr.flags.writeable = False
        object.__setattr__(self, "elements", arr)
        object.__setattr__(self, "coeff", _coerce_coeff(self.coeff))

    def __len__(self):
        return self.elements.shape[0]

    @property
    def K(self) -> int:
        return self.elements.shape[0]

    @property
    def dim(self) -> int:
        return self.host.dim


class FunctionalSequence(_Rows):
    """Rows psi_k of the dual space X*, acting on vectors of ``host``.

    ``coeff.p`` is the exponent of the p-Bessel / p-frame claim, so the
    analysis operator maps (host, s) into l^p.
    """

    def element_norms(self) -> np.ndarray:
        r = self.host.dual().norm_exponent
        return np.array([lp_norm(row, r) for row in self.elements])

    def scaled(self, c) -> "FunctionalSequence":
        return FunctionalSequence(self.host, c * self.elements, self.coeff)

    def with_elements(self, elements) -> "FunctionalSequence":
        return FunctionalSequence(self.host, elements, self.coeff)


class VectorSequence(_Rows):
    """Rows phi_k living in ``host``.

    ``coeff.q`` is the exponent of the q-Bessel claim taken against
    ``host.dual()``; the synthesis operator maps l^p into ``host``.
    """

    def element_norms(self) -> np.ndarray:
        r = self.host.norm_exponent
        return np.array([lp_norm(row, r) for row in self.elements])

    def scaled(self, c) -> "VectorSequence":
        return VectorSequence(self.host, c * self.elements, self.coeff)

    def with_elements(self, elements) -> "VectorSequence":
        return VectorSequence(self.host, elements, self.coeff)


AnySequence = Union[FunctionalSequence, VectorSequence]


@dataclass(frozen=True)
class SymbolClass:
    bounded: bool
    semi_normalized: bool
    sup_norm: float
    min_abs: float
    r_norms: dict


@dataclass(frozen=True, eq=False)
class Symbol:
    """Finite symbol m; ``declared_r`` records an r-summability claim."""

    values: np.ndarray
    declared_r: float | None = None

    def __post_init__(self):
        v = np.array(self.values, copy=True).ravel()
        if v.size < 1:
            raise SymbolError("symbol must have at least one entry")
        if not np.iscomplexobj(v):
            v = v.astype(float)
        if not np.all(np.isfinite(v)):
            raise SymbolError("symbol entries must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        if self.declared_r is not None and not self.declared_r > 0:
            raise SymbolError(f"declared r must be positive, got {self.declared_r}")

    def __len__(self):
        return self.values.size

    @property
    def K(self) -> int:
        return self.values.size

    def norm(self, r: float) -> float:
        return lp_norm(self.values, r)

    def tail_sup(self, N: int) -> float:
        """sup_{k >= N} |m_k| (0 for an empty tail)."""
        tail = self.values[N:]
        return float(np.abs(tail).max()) if tail.size else 0.0

    def conj(self) -> "Symbol":
        return Symbol(np.conj(self.values), self.declared_r)

    def __add__(self, other):
        return Symbol(self.values + np.asarray(getattr(other, "values", other)))

    def __sub__(self, other):
        return Symbol(self.values - np.asarray(getattr(other, "values", other)))

    def __rmul__(self, c):
        return Symbol(c * self.values)


def _vec(x, name):
    a = np.asarray(x)
    if a.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {a.shape}")
    return a


def dual_pairing(g, f):
    """Evaluate the functional g at f: ``sum_i g_i f_i`` (no conjugation)."""
    g = _vec(g, "functional")
    f = _vec(f, "vector")
    if g.shape != f.shape:
        raise DimensionError(f"cannot pair functional of dim {g.size} with vector of dim {f.size}")
    return g @ f


def analysis_apply(seq: AnySequence, f):
    """Coefficients (psi_k(f))_k."""
    f = _vec(f, "vector")
    if f.size != seq.dim:
        raise DimensionError(f"vector of dim {f.size} does not match sequence dim {seq.dim}")
    return seq.elements @ f


def synthesis_apply(seq: AnySequence, d):
    """The vector sum_k d_k * row_k."""
    d = _vec(d, "coefficients")
    if d.size != seq.K:
        raise DimensionError(f"{d.size} coefficients for a sequence of length {seq.K}")
    return d @ seq.elements


def diagonal_apply(m: Symbol, c):
    c = _vec(c, "coefficients")
    if c.size != m.K:
        raise DimensionError(f"{c.size} coefficients for a symbol of length {m.K}")
    return m.values * c


def symbol_classify(m: Symbol, tolerance: float = 1e-12, r: Iterable[float] = ()) -> SymbolClass:
    if tolerance < 0:
        raise BesselMultError("tolerance must be non-negative")
    a = np.abs(m.values)
    rs = list(r)
    if m.declared_r is not None and m.declared_r not in rs:
        rs.append(m.declared_r)
    return SymbolClass(
        bounded=True,
        semi_normalized=bool(a.min() > tolerance),
        sup_norm=float(a.max()),
        min_abs=float(a.min()),
        r_norms={float(x): m.norm(x) for x in rs},
    )


def coerce_symbol(m) -> Symbol:
    return m if isinstance(m, Symbol) else Symbol(m)


def standard_basis(n: int, p: float = 2.0, s: float | None = None, kind=FunctionalSequence):
    """Convenience: the rows of the n x n identity as a sequence."""
    host = Space(n, p if s is None else s)
    return kind(host, np.eye(n), CoefficientExponent(p))


def stack_rows(rows: Sequence) -> np.ndarray:
    return np.vstack([np.asarray(r) for r in rows])
