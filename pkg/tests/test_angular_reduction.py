"""Angular coefficient extraction and the planar convolution residual."""

import numpy as np
import pytest

from fracspec.errors import AliasingError, DomainError
from fracspec.tauberian.angular import (
    angular_decompose,
    angular_resynthesize,
    radial_pair_check,
    rotational_coefficient,
)


def band_limited_samples(count, rng):
    """Random trig polynomial of degree 3 sampled on the angle grid."""
    alphas = 2 * np.pi * np.arange(count) / count
    coeffs = {m: rng.normal() + 1j * rng.normal() for m in range(-3, 4)}
    F = np.zeros(count, dtype=complex)
    for m, c in coeffs.items():
        F += c * np.exp(1j * m * alphas)
    return F, coeffs


def test_decompose_recovers_band_limited_coefficients():
    rng = np.random.default_rng(0)
    F, coeffs = band_limited_samples(16, rng)
    got = angular_decompose(F, range(-3, 4))
    for m, c in coeffs.items():
        assert got[m] == pytest.approx(2 * np.pi * c, abs=1e-12)


def test_round_trip_through_resynthesis():
    rng = np.random.default_rng(1)
    # radial axis of length 5, angular axis of length 12
    alphas = 2 * np.pi * np.arange(12) / 12
    radial = rng.normal(size=(5, 1))
    F = radial * np.exp(2j * alphas) + 0.5 * np.exp(-1j * alphas)
    coeffs = angular_decompose(F, [-1, 0, 1, 2])
    back = angular_resynthesize(coeffs, 12)
    assert back == pytest.approx(F, abs=1e-12)


def test_separable_input_has_single_coefficient():
    z = np.linspace(0.1, 2.0, 7)
    alphas = 2 * np.pi * np.arange(9) / 9
    F = z[:, None] ** 2 * np.exp(3j * alphas)
    got = angular_decompose(F, [0, 1, 2, 3])
    assert got[3] == pytest.approx(2 * np.pi * z**2, abs=1e-12)
    for m in (0, 1, 2):
        assert np.abs(got[m]).max() < 1e-12


def test_aliasing_guard():
    F = np.ones(6)
    with pytest.raises(AliasingError):
        angular_decompose(F, [3])
    angular_decompose(F, [2])  # 6 >= 2*2 + 1
    with pytest.raises(AliasingError):
        angular_resynthesize({4: np.array(1.0)}, 8)
    with pytest.raises(DomainError):
        angular_decompose(np.array(3.0), [0])
    with pytest.raises(DomainError):
        angular_resynthesize({0: np.array(1.0)}, 1)


def test_rotational_coefficient_of_monomial():
    # phi(w) = w^2 rotates as e^(2 i angle) w^2, so only m_shift + m = -2
    # picks up the full circle integral.
    z = np.array([0.5 + 0.25j, 1.0j, -0.75])
    hit = rotational_coefficient(lambda w: w**2, m=-2, z=z, count=16)
    assert hit == pytest.approx(2 * np.pi * z**2, abs=1e-12)
    miss = rotational_coefficient(lambda w: w**2, m=1, z=z, count=16)
    assert np.abs(miss).max() < 1e-12


def test_rotational_coefficient_shift_changes_alias_check():
    z = np.array([1.0 + 0.0j])
    with pytest.raises(AliasingError):
        rotational_coefficient(lambda w: w, m=2, z=z, count=5, m_shift=1)
    rotational_coefficient(lambda w: w, m=2, z=z, count=5, m_shift=-2)


def test_pair_check_detects_spectral_disjointness():
    # Supported on disjoint Fourier cells: the circular convolution is
    # exactly zero, up to roundoff.
    n = 16
    kx, ky = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    fhat = np.where((kx == 1) & (ky == 0), 1.0, 0.0)
    ghat = np.where((kx == 3) & (ky == 2), 1.0, 0.0)
    f = np.fft.ifft2(fhat) * n * n
    g = np.fft.ifft2(ghat) * n * n
    res = radial_pair_check(f, g, cell=0.25)
    # convolution in space multiplies spectra; disjoint support means the
    # product spectrum is identically zero
    assert res.l2 < 1e-8
    assert res.sup < 1e-8
    overlap = radial_pair_check(f, f, cell=0.25)
    assert overlap.l2 > 1e-6


def test_pair_check_matches_direct_convolution():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(8, 8))
    b = rng.normal(size=(8, 8))
    res = radial_pair_check(a, b, cell=0.5)
    direct = np.zeros((8, 8), dtype=complex)
    for i in range(8):
        for j in range(8):
            acc = 0.0
            for p in range(8):
                for q in range(8):
                    acc += a[p, q] * b[(i - p) % 8, (j - q) % 8]
            direct[i, j] = acc * 0.5**2
    assert res.sup == pytest.approx(np.abs(direct).max(), rel=1e-10)
    assert res.l2 == pytest.approx(np.sqrt((np.abs(direct) ** 2).sum()) * 0.5, rel=1e-10)


def test_pair_check_validation():
    with pytest.raises(DomainError):
        radial_pair_check(np.ones((4, 4)), np.ones((4, 5)), cell=1.0)
    with pytest.raises(DomainError):
        radial_pair_check(np.ones(4), np.ones(4), cell=1.0)
    with pytest.raises(DomainError):
        radial_pair_check(np.ones((4, 4)), np.ones((4, 4)), cell=0.0)
