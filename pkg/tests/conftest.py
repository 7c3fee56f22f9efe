import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from besselmult import CoefficientExponent, FunctionalSequence, Space, Symbol, VectorSequence
from besselmult.multiplier import Multiplier

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def functional(rows, s=2.0, p=2.0, field="real"):
    rows = np.atleast_2d(np.asarray(rows))
    return FunctionalSequence(Space(rows.shape[1], s, field), rows, CoefficientExponent(p))


def vector(rows, t=2.0, p=2.0, field="real"):
    rows = np.atleast_2d(np.asarray(rows))
    return VectorSequence(Space(rows.shape[1], t, field), rows, CoefficientExponent(p))


def multiplier(m, psi_rows, phi_rows, p=2.0, s=2.0, t=2.0, field="real"):
    return Multiplier(Symbol(m), functional(psi_rows, s, p, field), vector(phi_rows, t, p, field))


def random_multiplier(rng, p=2.0, n1=None, n2=None, K=None, s=None, t=None, field="real"):
    n1 = n1 or int(rng.integers(1, 6))
    n2 = n2 or int(rng.integers(1, 6))
    K = K or int(rng.integers(1, 9))
    s = p if s is None else s
    t = p if t is None else t
    m = rng.standard_normal(K)
    Psi = rng.standard_normal((K, n1))
    Phi = rng.standard_normal((K, n2))
    if field == "complex":
        m = m + 1j * rng.standard_normal(K)
        Psi = Psi + 1j * rng.standard_normal((K, n1))
        Phi = Phi + 1j * rng.standard_normal((K, n2))
    return multiplier(m, Psi, Phi, p, s, t, field)


def well_conditioned(rng, n, cond_max=50.0):
    while True:
        G = rng.standard_normal((n, n))
        if np.linalg.cond(G) < cond_max:
            return G


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: int(k[1:])):
        ok, detail = results[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'}: {detail}")
