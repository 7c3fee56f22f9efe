"""Command-line front end: ``besselmult <command> --config job.json``.

Exit status: 0 when every check passes, 1 when a mathematical check fails
(or a mathematical precondition such as semi-normalization is violated),
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import io as bio
from .core import (
    BesselMultError,
    CoefficientExponent,
    DimensionError,
    FunctionalSequence,
    NotRieszError,
    Space,
    Symbol,
    SymbolError,
    VectorSequence,
)
from .norms import EstimatorSettings

log = logging.getLogger("besselmult")

COMMANDS = ("bounds", "multiplier", "invert", "nuclear", "perturb", "gabor")
REQUIRED_INPUTS = {
    "bounds": ("sequence",),
    "multiplier": ("symbol", "analysis", "synthesis"),
    "invert": ("symbol", "analysis", "synthesis"),
    "nuclear": ("symbol", "analysis", "synthesis"),
    "perturb": ("symbol", "analysis", "synthesis"),
    "gabor": (),
}
SYMBOL_ROLES = {"symbol", "mask", "signal", "window", "symbol_direction"}
INVERSE_TOL = 1e-8

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class CheckFailure(Exception):
    """A mathematical check or precondition failed."""


@dataclass
class JobConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    exponents: dict = field(default_factory=dict)
    estimator: EstimatorSettings = field(default_factory=EstimatorSettings)
    output: Path = Path("besselmult-out")
    params: dict = field(default_factory=dict)
    figures: bool = True

    @property
    def p(self) -> float:
        return float(self.exponents.get("p", 2.0))

    @property
    def s(self) -> float:
        return _exponent(self.exponents.get("s", self.p), "exponents.s")

    @property
    def t(self) -> float:
        return _exponent(self.exponents.get("t", self.p), "exponents.t")

    @classmethod
    def from_file(cls, path, command=None, overrides=None) -> "JobConfig":
        path = Path(path)
        if not path.is_file():
            raise bio.InputError(f"{path}: config file not found")
        try:
            raw = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise bio.InputError(f"{path}: invalid JSON ({exc})") from None
        if not isinstance(raw, dict):
            raise bio.InputError(f"{path}: config must be a JSON object")
        return cls.from_dict(raw, base=path.parent, command=command, overrides=overrides, source=str(path))

    @classmethod
    def from_dict(cls, raw, base=Path("."), command=None, overrides=None, source="config") -> "JobConfig":
        overrides = overrides or {}
        cmd = command or raw.get("command")
        if raw.get("command") and command and raw["command"] != command:
            raise bio.InputError(f"{source}: field 'command' is {raw['command']!r} but {command!r} was requested")
        if cmd not in COMMANDS:
            raise bio.InputError(f"{source}: field 'command' must be one of {COMMANDS}, got {cmd!r}")
        inputs = raw.get("inputs", {})
        if not isinstance(inputs, dict):
            raise bio.InputError(f"{source}: field 'inputs' must map roles to files")
        inputs = {k: (Path(v) if Path(v).is_absolute() else Path(base) / v) for k, v in inputs.items()}
        for role in REQUIRED_INPUTS[cmd]:
            if role not in inputs:
                raise bio.InputError(f"{source}: field 'inputs.{role}' is required for {cmd}")
        exps = dict(raw.get("exponents", {}))
        if overrides.get("p") is not None:
            exps["p"] = overrides["p"]
        try:
            p = float(exps.get("p", 2.0))
            CoefficientExponent(p)
        except (TypeError, ValueError) as exc:
            raise bio.InputError(f"{source}: field 'exponents.p' invalid ({exc})") from None
        est = dict(raw.get("estimator", {}))
        if overrides.get("seed") is not None:
            est["seed"] = overrides["seed"]
        try:
            settings = EstimatorSettings(**est)
        except (TypeError, ValueError) as exc:
            raise bio.InputError(f"{source}: field 'estimator' invalid ({exc})") from None
        out = overrides.get("out") or raw.get("output") or "besselmult-out"
        out = Path(out) if Path(out).is_absolute() or overrides.get("out") else Path(base) / out
        params = raw.get("params", {})
        if not isinstance(params, dict):
            raise bio.InputError(f"{source}: field 'params' must be an object")
        job = cls(cmd, inputs, exps, settings, out, params, not overrides.get("no_figures", False))
        job.s, job.t  # validate early
        return job


def _exponent(x, name):
    try:
        v = math.inf if x in ("inf", "Infinity") else float(x)
    except (TypeError, ValueError):
        raise bio.InputError(f"field '{name}' must be a number, got {x!r}") from None
    if not 1.0 <= v <= math.inf:
        raise bio.InputError(f"field '{name}' must lie in [1, inf], got {v}")
    return v


def load_inputs(job: JobConfig) -> dict:
    """Parse every referenced file before any computation starts."""
    data = {}
    for role, path in job.inputs.items():
        if role == "mask":
            # a single column or an n_time x n_freq grid, flattened time-major
            data[role] = bio.read_matrix_csv(path).ravel()
        elif role in SYMBOL_ROLES:
            data[role] = bio.read_symbol_csv(path)
        else:
            data[role] = bio.read_matrix_csv(path)
    return data


def _field(*arrays):
    return "complex" if any(np.iscomplexobj(a) for a in arrays) else "real"


def _multiplier_from(job, data):
    from .multiplier import Multiplier

    m, Psi, Phi = data["symbol"], data["analysis"], data["synthesis"]
    fld = _field(m, Psi, Phi)
    try:
        psi = FunctionalSequence(Space(Psi.shape[1], job.s, fld), Psi, CoefficientExponent(job.p))
        phi = VectorSequence(Space(Phi.shape[1], job.t, fld), Phi, CoefficientExponent(job.p))
        return Multiplier(Symbol(m), psi, phi)
    except BesselMultError as exc:
        raise bio.InputError(f"{job.inputs['symbol'].parent}: inputs do not form a multiplier ({exc})") from None


def _checks_passed(report):
    ok = True

    def walk(o):
        nonlocal ok
        if isinstance(o, dict):
            if "pass" in o and o["pass"] is False:
                ok = False
            for v in o.values():
                walk(v)
        elif isinstance(o, list):
            for v in o:
                walk(v)

    walk(report)
    return ok


def run_bounds(job, data):
    from .norms import bessel_bound, frame_bounds, riesz_bounds

    E = data["sequence"]
    role = job.params.get("role", "analysis")
    kind = job.params.get("kind", "frame")
    fld = _field(E)
    if role == "analysis":
        seq = FunctionalSequence(Space(E.shape[1], job.s, fld), E, CoefficientExponent(job.p))
    elif role == "synthesis":
        seq = VectorSequence(Space(E.shape[1], job.t, fld), E, CoefficientExponent(job.p))
    else:
        raise bio.InputError("field 'params.role' must be 'analysis' or 'synthesis'")
    B = bessel_bound(seq, job.estimator)
    report = {"B": B.upper, "bessel": B.to_dict()}
    if kind == "frame":
        report["frame"] = frame_bounds(seq, job.estimator).to_dict()
    elif kind == "riesz":
        report["riesz"] = riesz_bounds(seq, settings=job.estimator).to_dict()
    else:
        raise bio.InputError("field 'params.kind' must be 'frame' or 'riesz'")
    norms = seq.element_norms()
    report["element_norm_check"] = {"claim": "max element norm <= B", "lhs": float(norms.max()),
                                    "rhs": B.upper, "slack": B.upper - float(norms.max()),
                                    "pass": bool(norms.max() <= B.upper * (1 + 1e-9))}
    return report, {}


def run_multiplier(job, data):
    from . import multiplier as mc
    from .norms import riesz_bounds

    M = _multiplier_from(job, data)
    st = job.estimator
    B1 = mc.bessel_bound(M.analysis_seq, st)
    B2 = mc.bessel_bound(M.synthesis_seq, st)
    report = {
        "B1": B1.to_dict(),
        "B2": B2.to_dict(),
        "norm": mc.multiplier_norm(M, st).to_dict(),
        "norm_bound": mc.norm_bound_check(M, B1, B2, st).to_dict(),
    }
    sweep = mc.truncation_sweep(M, B1, B2, st)
    report["truncation"] = sweep.to_dict()
    adj = mc.adjoint(M)
    err = float(np.max(np.abs(adj.matrix - M.matrix.conj().T)))
    report["adjoint"] = {"claim": "matrix(M*) = conj(matrix(M))^T", "lhs": err, "rhs": 1e-12,
                         "slack": 1e-12 - err, "pass": err <= 1e-12}
    c1 = riesz_bounds(M.analysis_seq, settings=st)
    c2 = riesz_bounds(M.synthesis_seq, settings=st)
    if c1.kind == "q_riesz_basis" and c2.kind == "q_riesz_basis":
        report["lower_norm"] = mc.lower_norm_check(M, c1, c2, st).to_dict()
    if c2.kind in ("q_riesz_basis", "q_riesz_sequence") and np.all(np.any(M.analysis_seq.elements, axis=1)):
        rec = mc.symbol_recovery(M.matrix, M.analysis_seq, M.synthesis_seq)
        e = float(np.max(np.abs(rec.values - M.symbol.values)))
        report["symbol_recovery"] = {"claim": "recovered symbol equals input", "lhs": e, "rhs": 1e-9,
                                     "slack": 1e-9 - e, "pass": e <= 1e-9 * max(1.0, M.symbol.norm(math.inf))}
    files = {}
    out = job.output
    bio.write_matrix_csv(out / "matrix.csv", M.matrix)
    files["matrix"] = "matrix.csv"
    _write_truncation_csv(out / "truncation.csv", sweep)
    files["truncation_table"] = "truncation.csv"
    if job.figures:
        from .plotting import plot_truncation_sweep

        plot_truncation_sweep(sweep, out / "truncation.png")
        files["truncation_figure"] = "truncation.png"
    return report, files


def _write_truncation_csv(path, sweep):
    import csv

    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["N", "tail_sup", "lhs_lower", "lhs_upper", "rhs", "pass"])
        for r in sweep.rows:
            w.writerow([r.extra["N"], repr(r.extra["tail_sup"]), repr(r.lhs), repr(r.extra["lhs_upper"]),
                        repr(r.rhs), r.passed])


def run_invert(job, data):
    from .duality import composition_errors, dual_riesz_basis, invert_multiplier

    M = _multiplier_from(job, data)
    tol = float(job.params.get("tol", 1e-12))
    try:
        Minv = invert_multiplier(M, tol, job.estimator)
    except (SymbolError, NotRieszError) as exc:
        raise CheckFailure(str(exc)) from None
    errs = composition_errors(M, Minv, seed=job.estimator.seed)
    worst = max(errs["left"], errs["right"])
    out = job.output
    bio.write_matrix_csv(out / "inverse_matrix.csv", Minv.matrix)
    bio.write_symbol_csv(out / "inverse_symbol.csv", Minv.symbol.values)
    files = {"inverse_matrix": "inverse_matrix.csv", "inverse_symbol": "inverse_symbol.csv"}
    duals = {}
    for role, seq in (("analysis", M.analysis_seq), ("synthesis", M.synthesis_seq)):
        ds = dual_riesz_basis(seq, job.estimator)
        bio.write_matrix_csv(out / f"{role}_original.csv", seq.elements)
        bio.write_matrix_csv(out / f"{role}_dual.csv", ds.dual.elements)
        files[f"{role}_dual_pair"] = [f"{role}_original.csv", f"{role}_dual.csv"]
        duals[role] = ds.to_dict()
    report = {
        "composition": {"claim": "max|Minv M - I|, max|M Minv - I| <= tol", "lhs": worst, "rhs": INVERSE_TOL,
                        "slack": INVERSE_TOL - worst, "pass": worst <= INVERSE_TOL, **errs},
        "duals": duals,
    }
    return report, files


def run_nuclear(job, data):
    from .multiplier import nuclear_upper_bound, trace_norm_hilbert

    M = _multiplier_from(job, data)
    r = float(job.params.get("r", 1.0))
    try:
        cert = nuclear_upper_bound(M, r, job.estimator)
    except BesselMultError as exc:
        raise bio.InputError(f"field 'params.r': {exc}") from None
    report = {"certificate": cert.to_dict()}
    if job.p == 2.0 and job.s == 2.0 and job.t == 2.0 and r == 1.0:
        tn = trace_norm_hilbert(M.matrix)
        report["trace_norm"] = {"claim": "trace norm <= nuclear certificate", "lhs": tn, "rhs": cert.upper,
                                "slack": cert.upper - tn, "pass": tn <= cert.upper * (1 + 1e-9)}
    return report, {}


def _direction(data, role, shape, rng, scale):
    if role in data:
        d = np.asarray(data[role])
        if d.size != int(np.prod(shape)):
            raise bio.InputError(f"field 'inputs.{role}': expected {int(np.prod(shape))} entries, got {d.size}")
        return d.reshape(shape)
    d = rng.standard_normal(shape)
    return scale * d / np.max(np.abs(d))


def run_perturb(job, data):
    from . import perturbation as pl
    from .plotting import plot_convergence_tables

    M = _multiplier_from(job, data)
    st = job.estimator
    steps = int(job.params.get("steps", 20))
    p1 = _exponent(job.params.get("p1", 2.0), "params.p1")
    q1 = pl.conjugate_exponent(p1)
    rates = job.params.get("rates", {})
    scale = float(job.params.get("scale", 0.5))
    rng = np.random.default_rng(st.seed)
    dm = _direction(data, "symbol_direction", (M.K,), rng, scale)
    dpsi = _direction(data, "analysis_direction", M.analysis_seq.elements.shape, rng, scale)
    dphi = _direction(data, "synthesis_direction", M.synthesis_seq.elements.shape, rng, scale)
    m_fam = pl.symbol_family(M.symbol, dm, steps, rates.get("symbol", 1.0))
    psi_fam = pl.sequence_family(M.analysis_seq, dpsi, steps, rates.get("analysis", 1.0))
    phi_fam = pl.sequence_family(M.synthesis_seq, dphi, steps, rates.get("synthesis", 1.0))
    tables = [
        pl.continuity_symbol(M, m_fam, p1, st),
        pl.continuity_analysis(M, psi_fam, q1, st),
        pl.continuity_synthesis(M, phi_fam, q1, st),
        pl.continuity_joint(M, m_fam, psi_fam, phi_fam, p1, q1, st),
    ]
    B = pl.bessel_bound(M.analysis_seq, st)
    bessel_checks = [
        [r.to_dict() for r in pl.perturbed_bessel_bound_check(M.analysis_seq, fam, B, settings=st)]
        for fam in psi_fam
    ]
    files = {}
    for tb in tables:
        tb.write_csv(job.output / f"{tb.name}.csv")
        files[tb.name] = f"{tb.name}.csv"
    if job.figures:
        plot_convergence_tables(tables, job.output / "continuity.png")
        files["figure"] = "continuity.png"
    report = {"tables": [tb.to_dict() for tb in tables], "perturbed_bessel": bessel_checks,
              "p1": p1, "q1": q1}
    return report, files


def run_gabor(job, data):
    from .gabor import GaborSystem, apply_mask, gabor_generate, make_window, tight_constant
    from .norms import frame_bounds

    prm = job.params
    try:
        L, a, b = int(prm.get("L", 4)), int(prm.get("a", 1)), int(prm.get("b", 1))
        window = data["window"] if "window" in data else make_window(prm.get("window", "impulse"), L)
        system = GaborSystem(L, window, a, b)
    except (BesselMultError, ValueError, TypeError) as exc:
        raise bio.InputError(f"field 'params': {exc}") from None
    phi, psi = gabor_generate(L, system, a, b)
    fb = frame_bounds(psi, job.estimator)
    mask = data.get("mask", np.ones(system.K))
    if "signal" in data:
        signal = np.asarray(data["signal"])
    else:
        signal = np.cos(2 * np.pi * np.arange(L) / L) + 0.5 * np.sin(2 * np.pi * (L // 4) * np.arange(L) / L)
    try:
        out_sig = apply_mask(system, mask, signal)
    except BesselMultError as exc:
        raise bio.InputError(f"inputs.mask/inputs.signal: {exc}") from None
    report = {
        "L": L, "a": a, "b": b, "K": system.K,
        "frame": fb.to_dict(),
        "normalization": tight_constant(system),
    }
    tight = fb.B_est.upper - fb.A_est.lower <= 1e-9 * max(1.0, fb.B_est.upper)
    report["tight"] = bool(tight)
    if np.allclose(np.asarray(mask), 1.0) and tight:
        err = float(np.max(np.abs(out_sig - signal)))
        report["reconstruction"] = {"claim": "all-ones mask reproduces input", "lhs": err, "rhs": 1e-10,
                                    "slack": 1e-10 - err, "pass": err <= 1e-10}
    bio.write_symbol_csv(job.output / "masked_signal.csv", out_sig)
    files = {"masked_signal": "masked_signal.csv"}
    if job.figures:
        from .plotting import plot_gabor_mask, plot_signals

        plot_gabor_mask(mask, system.n_time, system.n_freq, job.output / "mask.png")
        plot_signals(signal, out_sig, job.output / "signals.png")
        files.update(mask_figure="mask.png", signal_figure="signals.png")
    return report, files


RUNNERS = {
    "bounds": run_bounds,
    "multiplier": run_multiplier,
    "invert": run_invert,
    "nuclear": run_nuclear,
    "perturb": run_perturb,
    "gabor": run_gabor,
}


def run(job: JobConfig):
    """Execute a job; returns (exit status, report dict)."""
    data = load_inputs(job)
    job.output.mkdir(parents=True, exist_ok=True)
    try:
        body, files = RUNNERS[job.command](job, data)
        status = EXIT_OK if _checks_passed(body) else EXIT_CHECK
        message = "all checks passed" if status == EXIT_OK else "a mathematical check failed"
    except CheckFailure as exc:
        body, files, status, message = {}, {}, EXIT_CHECK, str(exc)
    report = {"command": job.command, "status": status, "message": message,
              "estimator": asdict(job.estimator),
              "exponents": {"p": job.p, "s": job.s, "t": job.t}, "files": files, **body}
    bio.dump_json(report, job.output / "report.json")
    return status, report


def build_parser():
    ap = argparse.ArgumentParser(prog="besselmult", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", required=True, help="JSON job file")
    ap.add_argument("--p", type=float, default=None, help="override exponents.p")
    ap.add_argument("--seed", type=int, default=None, help="override estimator.seed")
    ap.add_argument("--out", default=None, help="override output directory")
    ap.add_argument("--no-figures", action="store_true", help="skip PNG figures")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        job = JobConfig.from_file(args.config, args.command,
                                  {"p": args.p, "seed": args.seed, "out": args.out,
                                   "no_figures": args.no_figures})
        status, report = run(job)
    except bio.InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DimensionError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if status == EXIT_OK:
        print(f"{job.command}: {report['message']} -> {job.output / 'report.json'}")
    else:
        print(f"{job.command}: {report['message']} -> {job.output / 'report.json'}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
