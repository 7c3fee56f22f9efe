import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from besselmult import (
    BesselMultError,
    CoefficientExponent,
    DimensionError,
    FunctionalSequence,
    Space,
    Symbol,
    SymbolError,
    analysis_apply,
    conjugate_exponent,
    diagonal_apply,
    dual_pairing,
    lp_norm,
    symbol_classify,
    synthesis_apply,
)
from conftest import functional, vector

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
THREE = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])


def test_conjugate_exponent():
    assert conjugate_exponent(2) == 2
    assert conjugate_exponent(1) == np.inf
    assert conjugate_exponent(np.inf) == 1
    assert conjugate_exponent(3) == pytest.approx(1.5)
    with pytest.raises(BesselMultError):
        conjugate_exponent(0.5)


def test_lp_norm_handles_extremes():
    assert lp_norm([3, 4], 2) == 5
    assert lp_norm([3, -4], np.inf) == 4
    assert lp_norm([3, -4], 1) == 7
    assert lp_norm([1e200, 1e200], 2) == pytest.approx(np.sqrt(2) * 1e200)
    assert lp_norm([], 2) == 0.0


def test_space_and_coefficients():
    X = Space(3, 3.0, "complex")
    assert X.dual().norm_exponent == pytest.approx(1.5)
    assert X.is_complex
    assert CoefficientExponent(4).q == pytest.approx(4 / 3)
    assert CoefficientExponent(4).swapped().p == pytest.approx(4 / 3)
    with pytest.raises(BesselMultError):
        Space(0)
    with pytest.raises(BesselMultError):
        Space(2, 0.5)


def test_sequence_validation():
    with pytest.raises(DimensionError):
        FunctionalSequence(Space(3), np.eye(2))
    with pytest.raises(BesselMultError):
        FunctionalSequence(Space(2), np.array([[1j, 0]]))
    seq = functional(THREE)
    with pytest.raises(ValueError):
        seq.elements[0, 0] = 5.0


def test_dual_pairing_examples():
    assert dual_pairing([0, 1], [3, 5]) == 5
    assert dual_pairing([1, 1], [1, -1]) == 0
    assert dual_pairing([2, 3], 1j * np.array([1, 1])) == 5j
    with pytest.raises(DimensionError):
        dual_pairing([1, 2], [1, 2, 3])


def test_analysis_examples():
    np.testing.assert_array_equal(analysis_apply(functional(np.eye(2)), [4, 7]), [4, 7])
    np.testing.assert_array_equal(analysis_apply(functional(THREE), [1, 2]), [1, 2, 3])
    np.testing.assert_array_equal(analysis_apply(functional(np.zeros((3, 2))), [5, -1]), [0, 0, 0])


def test_synthesis_examples():
    np.testing.assert_array_equal(synthesis_apply(vector(np.eye(2)), [4, 7]), [4, 7])
    np.testing.assert_array_equal(synthesis_apply(vector(THREE), [1, 1, 1]), [2, 2])
    np.testing.assert_array_equal(synthesis_apply(vector(THREE), [0, 0, 1]), THREE[2])
    with pytest.raises(DimensionError):
        synthesis_apply(vector(THREE), [1, 1])


def test_diagonal_examples():
    np.testing.assert_array_equal(diagonal_apply(Symbol([2, 3]), [1, 1]), [2, 3])
    np.testing.assert_array_equal(diagonal_apply(Symbol(np.ones(3)), [1, -2, 5]), [1, -2, 5])
    np.testing.assert_array_equal(diagonal_apply(Symbol(np.zeros(3)), [1, -2, 5]), [0, 0, 0])


def test_symbol_classify_examples():
    c = symbol_classify(Symbol([2, 3]), 1e-12)
    assert c.semi_normalized and c.sup_norm == 3
    assert not symbol_classify(Symbol([1, 0.5, 0]), 1e-12).semi_normalized
    assert symbol_classify(Symbol([1, 0.5, 0.25]), r=[1]).r_norms[1.0] == 1.75
    assert Symbol([1, 0.5, 0.25], declared_r=1).K == 3
    with pytest.raises(SymbolError):
        Symbol([np.nan])
    with pytest.raises(SymbolError):
        Symbol([])


def test_symbol_tail_and_arithmetic():
    m = Symbol([3, 1, 2, 0.5])
    assert m.tail_sup(0) == 3 and m.tail_sup(1) == 2 and m.tail_sup(3) == 0.5 and m.tail_sup(4) == 0
    np.testing.assert_array_equal((2 * m - m + m).values, 2 * m.values)
    np.testing.assert_array_equal(Symbol([1j, 2]).conj().values, [-1j, 2])


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_adjoint_identity(K, n, data):
    # <T d, h> = <d, U h> for the same rows, bilinear pairing
    rows = data.draw(hnp.arrays(float, (K, n), elements=finite))
    d = data.draw(hnp.arrays(float, K, elements=finite))
    h = data.draw(hnp.arrays(float, n, elements=finite))
    seq = vector(rows)
    lhs = dual_pairing(h, synthesis_apply(seq, d))
    rhs = dual_pairing(d, analysis_apply(seq, h))
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-6)


@given(st.integers(1, 7), st.integers(1, 5), st.randoms(use_true_random=False), st.data())
def test_synthesis_permutation_invariant(K, n, rnd, data):
    rows = data.draw(hnp.arrays(float, (K, n), elements=finite))
    d = data.draw(hnp.arrays(float, K, elements=finite))
    perm = list(range(K))
    rnd.shuffle(perm)
    a = synthesis_apply(vector(rows), d)
    b = synthesis_apply(vector(rows[perm]), d[perm])
    np.testing.assert_allclose(a, b, rtol=1e-9, atol=1e-6)


@given(st.integers(1, 6), st.integers(1, 5), finite, finite, st.data())
def test_analysis_and_synthesis_linear(K, n, alpha, beta, data):
    rows = data.draw(hnp.arrays(float, (K, n), elements=finite))
    f, g = (data.draw(hnp.arrays(float, n, elements=finite)) for _ in range(2))
    c, d = (data.draw(hnp.arrays(float, K, elements=finite)) for _ in range(2))
    seq = functional(rows)
    np.testing.assert_allclose(analysis_apply(seq, alpha * f + beta * g),
                               alpha * analysis_apply(seq, f) + beta * analysis_apply(seq, g),
                               rtol=1e-9, atol=1e-3)
    np.testing.assert_allclose(synthesis_apply(seq, alpha * c + beta * d),
                               alpha * synthesis_apply(seq, c) + beta * synthesis_apply(seq, d),
                               rtol=1e-9, atol=1e-3)
