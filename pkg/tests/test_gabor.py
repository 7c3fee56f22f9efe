import numpy as np
import pytest

from besselmult import BesselMultError, bessel_bound, frame_bounds
from besselmult.gabor import GaborSystem, apply_mask, gabor_generate, make_window, tight_constant


def test_full_lattice_impulse():
    phi, psi = gabor_generate(4, make_window("impulse", 4), 1, 1)
    assert psi.K == 16
    assert bessel_bound(psi).upper == pytest.approx(2.0, rel=1e-12)
    np.testing.assert_allclose(psi.elements, np.conj(phi.elements))


def test_coarsest_lattice():
    phi, psi = gabor_generate(4, make_window("impulse", 4), 4, 4)
    assert psi.K == 1
    np.testing.assert_array_equal(phi.elements, [[1, 0, 0, 0]])


def test_zero_window():
    _, psi = gabor_generate(4, np.zeros(4), 1, 1)
    assert bessel_bound(psi).upper == 0


def test_element_layout():
    L, a, b = 6, 2, 3
    g = np.arange(1, L + 1, dtype=float)
    system = GaborSystem(L, g, a, b)
    G = system.matrix()
    n = np.arange(L)
    for j in range(system.n_time):
        for k in range(system.n_freq):
            expect = g[(n - j * a) % L] * np.exp(2j * np.pi * k * b * n / L)
            np.testing.assert_allclose(G[j * system.n_freq + k], expect)


def test_non_divisor_rejected():
    with pytest.raises(BesselMultError):
        GaborSystem(6, np.ones(6), 4, 1)
    with pytest.raises(BesselMultError):
        GaborSystem(4, np.ones(3), 1, 1)
    with pytest.raises(BesselMultError):
        make_window("triangle", 4)


@pytest.mark.parametrize("L", [4, 6, 8])
def test_full_lattice_tight(L):
    _, psi = gabor_generate(L, make_window("hann", L), 1, 1)
    c = frame_bounds(psi)
    assert c.A == pytest.approx(np.sqrt(L), rel=1e-9) and c.B == pytest.approx(np.sqrt(L), rel=1e-9)


def test_mask_examples():
    L = 8
    system = GaborSystem(L, make_window("impulse", L), 1, 1)
    rng = np.random.default_rng(0)
    x = rng.standard_normal(L) + 1j * rng.standard_normal(L)
    assert tight_constant(system) == pytest.approx(L)
    np.testing.assert_allclose(apply_mask(system, np.ones(system.K), x), x, atol=1e-10)
    np.testing.assert_array_equal(apply_mask(system, np.zeros(system.K), x), np.zeros(L))
    with pytest.raises(BesselMultError):
        apply_mask(system, np.ones(3), x)


def test_mask_selects_one_tone():
    L = 16
    n = np.arange(L)
    system = GaborSystem(L, make_window("constant", L), 1, 1)
    x = np.cos(2 * np.pi * 2 * n / L) + np.cos(2 * np.pi * 5 * n / L)
    mask = np.zeros((system.n_time, system.n_freq))
    mask[:, [2, L - 2]] = 1.0
    y = apply_mask(system, mask.ravel(), x)
    spectrum = np.fft.fft(y)
    outside = np.ones(L, bool)
    outside[[2, L - 2]] = False
    assert np.sum(np.abs(spectrum[outside]) ** 2) / L < 1e-9
    np.testing.assert_allclose(y, np.cos(2 * np.pi * 2 * n / L), atol=1e-10)
