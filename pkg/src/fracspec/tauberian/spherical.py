"""Radial zero scans on the 2-D frequency lattice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DomainError
from .grid import GridFunction, default_tol, dft


@dataclass(frozen=True)
class SphericalZeroSet:
    """Radii whose whole lattice shell has transform modulus below tol.

    gaps lists scanned radii whose shell contained no lattice point at
    all: those carry no evidence either way and are flagged instead of
    being reported as zeros.
    """

    radii: tuple
    gaps: tuple
    tol: float
    shell_width: float

    def __post_init__(self):
        if any(not r > 0 for r in self.radii):
            raise DomainError("radii must be positive")
        if list(self.radii) != sorted(self.radii):
            raise DomainError("radii must be sorted")


def centered_frequencies(m: int) -> np.ndarray:
    """Integer frequency coordinates with 0 centered (fftfreq * m)."""
    return np.fft.fftfreq(m, d=1.0 / m)


def spherical_zero_radii(
    f: GridFunction,
    tol: Optional[float] = None,
    shell_width: float = 1.0,
) -> SphericalZeroSet:
    """Scan shells r - w/2 <= |k| < r + w/2 at radii r = w, 2w, 3w, ...

    up to the largest lattice radius.  The lattice spacing is 1 in
    frequency units, so shells thinner than that may be empty; the
    scan flags such radii as gaps rather than zeros.
    """
    if f.n != 2:
        raise DomainError("spherical scans need a 2-D grid")
    if shell_width < 1.0:
        raise DomainError("shell width below the lattice spacing (1) is unresolvable")
    fhat = dft(f)
    if tol is None:
        tol = default_tol(fhat)
    freqs = centered_frequencies(f.m)
    kx, ky = np.meshgrid(freqs, freqs, indexing="ij")
    norms = np.sqrt(kx**2 + ky**2).ravel()
    mags = np.abs(fhat).ravel()
    r_max = float(norms.max())
    radii, gaps = [], []
    t = 1
    while t * shell_width <= r_max:
        r = t * shell_width
        mask = (norms >= r - shell_width / 2) & (norms < r + shell_width / 2)
        if not mask.any():
            gaps.append(r)
        elif float(mags[mask].max()) < tol:
            radii.append(r)
        t += 1
    return SphericalZeroSet(
        radii=tuple(radii), gaps=tuple(gaps), tol=float(tol), shell_width=shell_width
    )


def mask_spectrum_on_radii(
    f: GridFunction, radii, band: float
) -> GridFunction:
    """Zero the transform on all lattice points within band of any radius.

    Round-trip helper for building test functions whose radial zero set
    is known by construction; returns the function with the masked
    spectrum (inverse transform of the masked transform).
    """
    if f.n != 2:
        raise DomainError("spectral masking needs a 2-D grid")
    fhat = dft(f)
    freqs = centered_frequencies(f.m)
    kx, ky = np.meshgrid(freqs, freqs, indexing="ij")
    norms = np.sqrt(kx**2 + ky**2)
    mask = np.zeros_like(norms, dtype=bool)
    for r in radii:
        mask |= np.abs(norms - float(r)) <= band
    fhat = np.where(mask, 0.0, fhat)
    return GridFunction(np.fft.ifft2(fhat, norm="ortho"), f.cell)
