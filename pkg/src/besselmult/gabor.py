"""Finite discrete Gabor systems and time-frequency masking.

Element (j, k) of a system with window g, time step a and frequency step b
is ``g[(n - j*a) mod L] * exp(2*pi*i*k*b*n / L)``; elements are ordered
time-major, index ``j * (L // b) + k``. Analysis uses conjugated rows
(the sesquilinear signal inner product), applied here once so the library
multiplier stays bilinear.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BesselMultError,
    CoefficientExponent,
    FunctionalSequence,
    Space,
    Symbol,
    VectorSequence,
    coerce_symbol,
)
from .multiplier import Multiplier

__all__ = ["GaborSystem", "gabor_generate", "apply_mask", "make_window", "tight_constant"]


@dataclass(frozen=True, eq=False)
class GaborSystem:
    L: int
    window: np.ndarray
    a: int
    b: int

    def __post_init__(self):
        L = int(self.L)
        if L < 1:
            raise BesselMultError(f"signal length must be positive, got {self.L}")
        w = np.asarray(self.window, dtype=complex).ravel()
        if w.size != L:
            raise BesselMultError(f"window has length {w.size}, expected {L}")
        for name, step in (("time step a", self.a), ("frequency step b", self.b)):
            if int(step) != step or step < 1 or L % int(step):
                raise BesselMultError(f"{name}={step} must be a positive divisor of L={L}")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "window", w)

    @property
    def n_time(self) -> int:
        return self.L // self.a

    @property
    def n_freq(self) -> int:
        return self.L // self.b

    @property
    def K(self) -> int:
        return self.n_time * self.n_freq

    def matrix(self) -> np.ndarray:
        L, n = self.L, np.arange(self.L)
        rows = np.empty((self.K, L), dtype=complex)
        for j in range(self.n_time):
            shifted = np.roll(self.window, j * self.a)
            for k in range(self.n_freq):
                rows[j * self.n_freq + k] = shifted * np.exp(2j * np.pi * k * self.b * n / L)
        return rows


def make_window(kind: str, L: int) -> np.ndarray:
    """'impulse' (delta at 0), 'constant' (unit norm) or 'hann' (periodic, unit norm)."""
    if kind == "impulse":
        w = np.zeros(L)
        w[0] = 1.0
        return w
    if kind == "constant":
        return np.full(L, 1.0 / np.sqrt(L))
    if kind == "hann":
        w = 0.5 - 0.5 * np.cos(2 * np.pi * np.arange(L) / L)
        w = np.roll(w, -(L // 2))
        return w / np.linalg.norm(w)
    raise BesselMultError(f"unknown window kind {kind!r}")


def gabor_generate(L: int, window, a: int, b: int):
    """(Phi, Psi): synthesis rows and conjugated analysis rows on C^L."""
    system = window if isinstance(window, GaborSystem) else GaborSystem(L, window, a, b)
    G = system.matrix()
    host = Space(system.L, 2.0, "complex")
    coeff = CoefficientExponent(2.0)
    return VectorSequence(host, G, coeff), FunctionalSequence(host, np.conj(G), coeff)


def tight_constant(system: GaborSystem) -> float:
    """Largest eigenvalue of the frame operator, i.e. B^2."""
    G = system.matrix()
    return float(np.linalg.norm(G, 2) ** 2)


def apply_mask(system: GaborSystem, mask, signal, normalization: float | None = None):
    """Masked resynthesis ``M_{mask,Phi,Psi}(signal) / normalization``.

    ``normalization`` defaults to B^2 of the system, which equals the frame
    constant for tight systems, so an all-ones mask reproduces the input.
    """
    mask = coerce_symbol(np.asarray(getattr(mask, "values", mask)).ravel())
    if mask.K != system.K:
        raise BesselMultError(f"mask has {mask.K} entries, system has {system.K} elements")
    x = np.asarray(signal)
    if x.shape != (system.L,):
        raise BesselMultError(f"signal has shape {x.shape}, expected ({system.L},)")
    phi, psi = gabor_generate(system.L, system, system.a, system.b)
    M = Multiplier(Symbol(np.asarray(mask.values, dtype=complex)), psi, phi)
    if normalization is None:
        normalization = tight_constant(system)
    if normalization == 0:
        return np.zeros(system.L, dtype=complex)
    return (M.matrix @ x) / normalization
