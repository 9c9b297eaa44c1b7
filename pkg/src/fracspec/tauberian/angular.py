"""Angular Fourier reduction for functions on the plane times a circle.

The plane-motion analysis reduces two-variable functions F(z, angle) to
the family of angular coefficients f_m(z); the pair condition that
matters downstream is that f_m convolved with the matched test
coefficient vanishes.  Angular integrals use the uniform-grid rule with
the unnormalized d(angle) convention on [0, 2pi), which is exact for
band-limited integrands as long as the grid beats the Nyquist count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Sequence

import numpy as np

from ..errors import AliasingError, DomainError


def _angles(count: int) -> np.ndarray:
    return 2 * np.pi * np.arange(count) / count


def _check_band(count: int, m_values) -> None:
    need = 2 * max(abs(int(m)) for m in m_values) + 1
    if count < need:
        raise AliasingError(
            f"angular grid of {count} samples aliases |m| <= {max(abs(int(m)) for m in m_values)}; "
            f"need at least {need}"
        )


def angular_decompose(F: np.ndarray, m_values: Sequence[int]) -> Dict[int, np.ndarray]:
    """f_m = integral of F(..., angle) e^(-i m angle) d(angle), per m.

    F's last axis holds uniform angle samples on [0, 2pi).
    """
    F = np.asarray(F)
    if F.ndim < 1 or F.shape[-1] < 2:
        raise DomainError("need an angular axis with at least 2 samples")
    count = F.shape[-1]
    _check_band(count, m_values)
    alphas = _angles(count)
    out = {}
    for m in m_values:
        phases = np.exp(-1j * int(m) * alphas)
        out[int(m)] = (2 * np.pi / count) * (F * phases).sum(axis=-1)
    return out


def angular_resynthesize(coeffs: Dict[int, np.ndarray], count: int) -> np.ndarray:
    """Inverse of angular_decompose on the same grid."""
    if count < 2:
        raise DomainError("need at least 2 angle samples")
    _check_band(count, coeffs.keys())
    alphas = _angles(count)
    first = next(iter(coeffs.values()))
    F = np.zeros(np.shape(first) + (count,), dtype=complex)
    for m, f_m in coeffs.items():
        F += np.asarray(f_m)[..., None] * np.exp(1j * m * alphas) / (2 * np.pi)
    return F


def rotational_coefficient(
    phi: Callable,
    m: int,
    z: np.ndarray,
    count: int,
    m_shift: int = 0,
) -> np.ndarray:
    """integral of phi(e^(i angle) z) e^(i (m_shift + m) angle) d(angle).

    phi maps complex arrays to values; z is a complex array of sample
    points.  The angular rate that matters for aliasing is m_shift + m.
    """
    _check_band(count, [m_shift + m])
    z = np.asarray(z, dtype=complex)
    alphas = _angles(count)
    total = np.zeros(z.shape, dtype=complex)
    for a in alphas:
        total += np.asarray(phi(np.exp(1j * a) * z)) * np.exp(1j * (m_shift + m) * a)
    return (2 * np.pi / count) * total


@dataclass(frozen=True)
class ConvolutionResidual:
    l2: float
    sup: float


def radial_pair_check(f_m: np.ndarray, phi_m: np.ndarray, cell: float) -> ConvolutionResidual:
    """Size of the planar circular convolution f_m (*) phi_m on the grid.

    Both inputs are same-shape 2-D samples with square cells of side
    `cell`; the convolution carries a cell**2 factor so the numbers
    approximate the continuous convolution on the torus of the grid.
    """
    f_m = np.asarray(f_m, dtype=complex)
    phi_m = np.asarray(phi_m, dtype=complex)
    if f_m.ndim != 2 or f_m.shape != phi_m.shape:
        raise DomainError("need two same-shape 2-D grids")
    if not cell > 0:
        raise DomainError("cell must be positive")
    conv = np.fft.ifft2(np.fft.fft2(f_m) * np.fft.fft2(phi_m)) * cell**2
    l2 = float(np.sqrt((np.abs(conv) ** 2).sum()) * cell)
    return ConvolutionResidual(l2=l2, sup=float(np.abs(conv).max()))
