import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselmult import (
    NotRieszError,
    SymbolError,
    biorthogonality_check,
    dual_riesz_basis,
    invert_multiplier,
    kernel_witness,
)
from besselmult.duality import composition_errors
from conftest import functional, multiplier, vector, well_conditioned

seeds = st.integers(0, 2**32 - 1)


def test_dual_examples():
    ds = dual_riesz_basis(functional(np.eye(2)))
    np.testing.assert_array_equal(ds.dual.elements, np.eye(2))
    ds = dual_riesz_basis(functional([[1.0, 0.0], [1.0, 1.0]]))
    np.testing.assert_allclose(ds.dual.elements, [[1.0, -1.0], [0.0, 1.0]], atol=1e-15)
    ds = dual_riesz_basis(functional(2 * np.eye(2)))
    np.testing.assert_allclose(ds.dual.elements, 0.5 * np.eye(2))
    assert ds.bounds_original.B == pytest.approx(2) and ds.bounds_dual.B == pytest.approx(0.5)
    assert ds.bounds_dual.A == pytest.approx(0.5)


def test_dual_keeps_coefficient_exponent_and_flips_role():
    seq = functional([[1.0, 0.0], [1.0, 1.0]], s=3.0, p=3.0)
    ds = dual_riesz_basis(seq)
    assert type(ds.dual).__name__ == "VectorSequence"
    assert ds.dual.coeff.p == seq.coeff.p


def test_dual_rejects_singular_and_flags_tall():
    with pytest.raises(NotRieszError):
        dual_riesz_basis(functional([[1.0, 1.0], [2.0, 2.0]]))
    with pytest.raises(NotRieszError):
        dual_riesz_basis(functional([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
    ds = dual_riesz_basis(functional([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0]]))
    assert ds.span_relative and ds.biorthogonality_error < 1e-12


def test_biorthogonality_examples():
    G = functional([[1.0, 0.0], [1.0, 1.0]])
    assert biorthogonality_check(G, dual_riesz_basis(G).dual).passed
    r = biorthogonality_check(G, vector([[1.0, 0.0], [1.0, 1.0]]))
    assert not r.passed and r.lhs == pytest.approx(1.0)
    r = biorthogonality_check(G, vector(2 * np.array([[1.0, -1.0], [0.0, 1.0]])))
    assert not r.passed


def test_kernel_witness_examples():
    d = kernel_witness(functional([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
    np.testing.assert_allclose(d / d[0], [1, 1, -1], atol=1e-12)
    assert kernel_witness(functional([[2.0, 1.0], [1.0, 3.0]])) is None
    rows = np.array([[1.0, 2.0, 0.0], [1.0, 2.0, 0.0], [0.0, 1.0, 1.0]])
    d = kernel_witness(functional(rows))
    np.testing.assert_allclose(d / d[0], [1, -1, 0], atol=1e-12)


def test_invert_examples():
    Minv = invert_multiplier(multiplier([2, 3], np.eye(2), np.eye(2)))
    np.testing.assert_allclose(Minv.matrix, np.diag([0.5, 1 / 3]))
    G = np.array([[1.0, 0.0], [1.0, 1.0]])
    M = multiplier(np.ones(2), G, G)
    Minv = invert_multiplier(M)
    np.testing.assert_allclose(Minv.matrix, np.linalg.inv(G.T @ G), atol=1e-14)
    np.testing.assert_allclose(Minv.matrix @ M.matrix, np.eye(2), atol=1e-14)
    with pytest.raises(SymbolError, match="symbol not semi-normalized"):
        invert_multiplier(multiplier([1, 1e-15], np.eye(2), np.eye(2)), tol=1e-12)


def test_invert_requires_square_bases():
    with pytest.raises(NotRieszError):
        invert_multiplier(multiplier([1, 1], np.eye(2), [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]))


@given(seeds, st.integers(1, 5))
def test_dual_involution(seed, n):
    G = well_conditioned(np.random.default_rng(seed), n)
    once = dual_riesz_basis(functional(G)).dual
    twice = dual_riesz_basis(once).dual
    np.testing.assert_allclose(twice.elements, G, atol=1e-10)


@given(seeds, st.integers(1, 5))
def test_kernel_witness_none_for_bases(seed, n):
    G = well_conditioned(np.random.default_rng(seed), n)
    assert kernel_witness(functional(G)) is None
    extra = np.random.default_rng(seed + 1).standard_normal((n + 1, n))
    d = kernel_witness(functional(extra))
    assert d is not None
    np.testing.assert_allclose(d @ extra, 0, atol=1e-9)


@given(seeds, st.integers(1, 5))
def test_inverse_composes_both_ways(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.uniform(0.5, 2.0, n) * rng.choice([-1, 1], n)
    M = multiplier(m, well_conditioned(rng, n), well_conditioned(rng, n))
    errs = composition_errors(M, invert_multiplier(M))
    assert max(errs.values()) <= 1e-8
