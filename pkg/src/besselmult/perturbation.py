"""l^p distances between sequences and continuity sweeps for multipliers.

Each sweep walks a finite family indexed l = 1..L and records, per row,
a certified lower bound of the operator-norm change against the bound
obtained from the Bessel constants. The Bessel-constant products B1*B2,
B2*||m||, B1*||m|| drive the pass/fail column; the square-root variants
are carried along in ``rhs_sqrt`` for comparison only.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import (
    BesselMultError,
    DimensionError,
    FunctionalSequence,
    Symbol,
    coerce_symbol,
    conjugate_exponent,
    lp_norm,
)
from .multiplier import Multiplier
from .norms import (
    NormEstimate,
    analysis_exponents,
    bessel_bound,
    operator_norm,
)
from .reports import CheckReport

__all__ = [
    "SequenceDistance",
    "TableRow",
    "ConvergenceTable",
    "lp_distance",
    "perturbed_bessel_bound_check",
    "continuity_symbol",
    "continuity_analysis",
    "continuity_synthesis",
    "continuity_joint",
    "symbol_family",
    "sequence_family",
]

TABLE_SLACK = 1e-9
CSV_COLUMNS = ["l", "distance", "lhs_lower", "lhs_upper", "rhs", "ratio", "pass", "rhs_sqrt"]


@dataclass(frozen=True, eq=False)
class SequenceDistance:
    exponent: float
    value: float
    per_element: np.ndarray


def _element_exponent(seq):
    if isinstance(seq, FunctionalSequence):
        return seq.host.dual().norm_exponent
    return seq.host.norm_exponent


def lp_distance(seqA, seqB, exponent: float) -> SequenceDistance:
    """(sum_k ||a_k - b_k||^r)^(1/r) with element norms of the host (dual) space."""
    if type(seqA) is not type(seqB):
        raise BesselMultError("cannot compare a functional sequence with a vector sequence")
    if seqA.elements.shape != seqB.elements.shape or seqA.host.dim != seqB.host.dim:
        raise DimensionError(f"shape mismatch: {seqA.elements.shape} vs {seqB.elements.shape}")
    r = _element_exponent(seqA)
    per = np.array([lp_norm(a - b, r) for a, b in zip(seqA.elements, seqB.elements)])
    return SequenceDistance(float(exponent), lp_norm(per, exponent), per)


def perturbed_bessel_bound_check(psi, phi, B: NormEstimate | None = None, exponent=None,
                                 settings=None) -> list:
    """Bessel bound of a perturbed sequence and the two operator differences.

    With mu the l^p distance of the sequences: B(phi) <= B(psi) + mu,
    ||U_phi - U_psi|| <= mu and ||T_phi - T_psi|| <= mu.
    """
    s, p = analysis_exponents(psi, exponent)
    if B is None:
        B = bessel_bound(psi, settings)
    mu = lp_distance(psi, phi, p).value
    B_phi = operator_norm(phi.elements, s, p, settings)
    diff = phi.elements - psi.elements
    dU = operator_norm(diff, s, p, settings)
    dT = operator_norm(diff.T, conjugate_exponent(p), conjugate_exponent(s), settings)
    return [
        CheckReport("B(phi) <= B(psi) + mu", B_phi.lower, B.upper + mu,
                    extra={"mu": mu, "B_psi": B.upper, "B_phi_upper": B_phi.upper}),
        CheckReport("norm(U_phi - U_psi) <= mu", dU.lower, mu, extra={"upper": dU.upper}),
        CheckReport("norm(T_phi - T_psi) <= mu", dT.lower, mu, extra={"upper": dT.upper}),
    ]


@dataclass
class TableRow:
    l: int
    distance: float
    lhs_lower: float
    lhs_upper: float
    rhs: float
    rhs_sqrt: float

    @property
    def ratio(self) -> float:
        if self.rhs > 0:
            return self.lhs_lower / self.rhs
        return 0.0 if self.lhs_lower <= 1e-14 else math.inf

    @property
    def passed(self) -> bool:
        return self.ratio <= 1.0 + TABLE_SLACK

    def as_record(self) -> dict:
        return {"l": self.l, "distance": self.distance, "lhs_lower": self.lhs_lower,
                "lhs_upper": self.lhs_upper, "rhs": self.rhs, "ratio": self.ratio,
                "pass": self.passed, "rhs_sqrt": self.rhs_sqrt}


@dataclass
class ConvergenceTable:
    name: str
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def column(self, name) -> np.ndarray:
        return np.array([r.as_record()[name] for r in self.rows], dtype=float)

    def lhs_nonincreasing(self, rtol=TABLE_SLACK) -> bool:
        v = self.column("lhs_lower")
        return bool(np.all(v[1:] <= v[:-1] * (1 + rtol) + 1e-15))

    def rhs_nonincreasing(self, rtol=TABLE_SLACK) -> bool:
        v = self.column("rhs")
        return bool(np.all(v[1:] <= v[:-1] * (1 + rtol) + 1e-15))

    def n_epsilon(self, eps: float):
        """First l with distance < eps, and whether every later row has
        lhs_lower < eps * (rhs / distance) there (None if never reached)."""
        for i, row in enumerate(self.rows):
            if row.distance < eps:
                ok = True
                for later in self.rows[i:]:
                    const = later.rhs / later.distance if later.distance > 0 else 0.0
                    if later.lhs_lower > eps * const + 1e-15:
                        ok = False
                return row.l, ok
        return None, False

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed,
                "rows": [r.as_record() for r in self.rows]}

    def write_csv(self, path) -> None:
        with Path(path).open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            w.writeheader()
            for r in self.rows:
                rec = r.as_record()
                rec = {k: (repr(float(v)) if isinstance(v, float) else v) for k, v in rec.items()}
                w.writerow(rec)


def _diff_norm(A, B, M, settings):
    return operator_norm(A.matrix - B.matrix, M.source.norm_exponent, M.target.norm_exponent, settings)


def _B(seq, settings):
    return bessel_bound(seq, settings).upper


def continuity_symbol(M: Multiplier, m_family, p1: float = 2.0, settings=None,
                      B1=None, B2=None) -> ConvergenceTable:
    """||M_{m^(l)} - M_m|| against ||m^(l) - m||_{p1} B1 B2."""
    B1 = _B(M.analysis_seq, settings) if B1 is None else B1
    B2 = _B(M.synthesis_seq, settings) if B2 is None else B2
    table = ConvergenceTable("continuity_symbol")
    for l, ml in enumerate(m_family, start=1):
        ml = coerce_symbol(ml)
        if ml.K != M.K:
            raise DimensionError(f"family member {l} has length {ml.K}, expected {M.K}")
        est = _diff_norm(M.with_symbol(ml), M, M, settings)
        d = lp_norm(ml.values - M.symbol.values, p1)
        table.rows.append(TableRow(l, d, est.lower, est.upper, d * B1 * B2, d * math.sqrt(B1 * B2)))
    return table


def continuity_analysis(M: Multiplier, psi_family, q1: float = 2.0, settings=None,
                        B2=None) -> ConvergenceTable:
    """||M_{m,Psi^(l),Phi} - M|| against B2 ||m||_{p1} dist_{q1}(Psi^(l), Psi)."""
    p1 = conjugate_exponent(q1)
    B2 = _B(M.synthesis_seq, settings) if B2 is None else B2
    mnorm = M.symbol.norm(p1)
    table = ConvergenceTable("continuity_analysis")
    for l, psi_l in enumerate(psi_family, start=1):
        est = _diff_norm(M.with_analysis(psi_l), M, M, settings)
        d = lp_distance(psi_l, M.analysis_seq, q1).value
        table.rows.append(TableRow(l, d, est.lower, est.upper, B2 * mnorm * d, math.sqrt(B2) * mnorm * d))
    return table


def continuity_synthesis(M: Multiplier, phi_family, q1: float = 2.0, settings=None,
                         B1=None) -> ConvergenceTable:
    """||M_{m,Psi,Phi^(l)} - M|| against B1 ||m||_{p1} dist_{q1}(Phi^(l), Phi)."""
    p1 = conjugate_exponent(q1)
    B1 = _B(M.analysis_seq, settings) if B1 is None else B1
    mnorm = M.symbol.norm(p1)
    table = ConvergenceTable("continuity_synthesis")
    for l, phi_l in enumerate(phi_family, start=1):
        est = _diff_norm(M.with_synthesis(phi_l), M, M, settings)
        d = lp_distance(phi_l, M.synthesis_seq, q1).value
        table.rows.append(TableRow(l, d, est.lower, est.upper, B1 * mnorm * d, math.sqrt(B1) * mnorm * d))
    return table


def continuity_joint(M: Multiplier, m_family, psi_family, phi_family, p1: float = 2.0,
                     q1: float | None = None, settings=None) -> ConvergenceTable:
    """All three ingredients move at once; the bound is the triangle sum

    ||M_{m^l,Psi^l,Phi^l} - M_{m,Psi^l,Phi^l}|| + ||M_{m,Psi^l,Phi^l} - M_{m,Psi,Phi^l}||
    + ||M_{m,Psi,Phi^l} - M_{m,Psi,Phi}||, each bounded with the Bessel
    constants of the sequences that actually appear in that term.
    """
    q1 = conjugate_exponent(p1) if q1 is None else q1
    if not (len(m_family) == len(psi_family) == len(phi_family)):
        raise DimensionError("families must have equal length")
    B1 = _B(M.analysis_seq, settings)
    mnorm = M.symbol.norm(p1)
    table = ConvergenceTable("continuity_joint")
    for l, (ml, psi_l, phi_l) in enumerate(zip(m_family, psi_family, phi_family), start=1):
        ml = coerce_symbol(ml)
        Ml = Multiplier(ml, psi_l, phi_l)
        est = _diff_norm(Ml, M, M, settings)
        B1l, B2l = _B(psi_l, settings), _B(phi_l, settings)
        dm = lp_norm(ml.values - M.symbol.values, p1)
        dpsi = lp_distance(psi_l, M.analysis_seq, q1).value
        dphi = lp_distance(phi_l, M.synthesis_seq, q1).value
        rhs = dm * B1l * B2l + mnorm * dpsi * B2l + mnorm * dphi * B1
        rhs_sqrt = dm * math.sqrt(B1l * B2l) + mnorm * dpsi * math.sqrt(B2l) + mnorm * dphi * math.sqrt(B1)
        table.rows.append(TableRow(l, max(dm, dpsi, dphi), est.lower, est.upper, rhs, rhs_sqrt))
    return table


def _rate(rate):
    if rate is None:
        return lambda l: 1.0 / l
    if callable(rate):
        return rate
    power = float(rate)
    return lambda l: l ** (-power)


def symbol_family(m, direction, steps: int = 20, rate=None) -> list:
    """m + rate(l) * direction for l = 1..steps; rate defaults to 1/l,
    a number r means l**-r."""
    m = coerce_symbol(m)
    f = _rate(rate)
    d = np.asarray(direction)
    return [Symbol(m.values + f(l) * d) for l in range(1, steps + 1)]


def sequence_family(seq, direction, steps: int = 20, rate=None) -> list:
    f = _rate(rate)
    d = np.asarray(direction)
    return [seq.with_elements(seq.elements + f(l) * d) for l in range(1, steps + 1)]
