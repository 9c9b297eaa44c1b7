"""Exact translation-span oracles on the cyclic group Z_m.

The span of all translates of f diagonalizes in the character basis, so
its dimension is the number of nonvanishing transform coefficients.
The circulant-matrix rank gives the same number through generic linear
algebra; keeping both routes makes each an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DomainError
from .grid import GridFunction, default_tol, dft


def _require_1d(f: GridFunction) -> None:
    if f.n != 1:
        raise DomainError("span oracles are defined on the 1-D torus")


def span_dimension_oracle(f: GridFunction, tol: Optional[float] = None) -> int:
    """Dimension of span{translates of f} = #{k : |fhat(k)| >= tol}."""
    _require_1d(f)
    fhat = dft(f)
    if tol is None:
        tol = default_tol(fhat)
    return int(np.count_nonzero(np.abs(fhat) >= tol)) if tol > 0 else f.m


def circulant_matrix(f: GridFunction) -> np.ndarray:
    """Row k is the k-step cyclic translate of f."""
    _require_1d(f)
    return np.stack([np.roll(f.values, k) for k in range(f.m)])


def circulant_rank(f: GridFunction, tol: Optional[float] = None) -> int:
    """Numerical rank of the translate matrix.

    The singular values of a circulant are sqrt(m) times the unitary
    transform moduli, so the rank cutoff is aligned to the same tol the
    zero set uses; without that alignment the two counts could disagree
    on borderline coefficients.
    """
    _require_1d(f)
    mat = circulant_matrix(f)
    if tol is None:
        tol = default_tol(dft(f))
    return int(np.linalg.matrix_rank(mat, tol=np.sqrt(f.m) * tol))


@dataclass(frozen=True)
class AnnihilatorResult:
    """min over unit-norm h of ||h (*) f||_2 / sqrt(m), and who attains it.

    The minimum over all unit vectors equals the smallest transform
    modulus, attained by the character at the minimizing frequency.
    The witness is reported whenever the residual clears the zero tol.
    """

    residual: float
    frequency: int
    witness: Optional[np.ndarray]
    tol: float


def annihilator_residual(f: GridFunction, tol: Optional[float] = None) -> AnnihilatorResult:
    _require_1d(f)
    fhat = dft(f)
    if tol is None:
        tol = default_tol(fhat)
    mags = np.abs(fhat)
    k = int(np.argmin(mags))
    residual = float(mags[k])
    witness = None
    if residual < tol or residual == 0.0:
        m = f.m
        witness = np.exp(2j * np.pi * k * np.arange(m) / m) / np.sqrt(m)
    return AnnihilatorResult(residual=residual, frequency=k, witness=witness, tol=float(tol))


def circular_convolve(h: np.ndarray, f: GridFunction) -> np.ndarray:
    """(h (*) f)(x) = sum_y h(y) f(x - y) on Z_m."""
    _require_1d(f)
    h = np.asarray(h, dtype=complex)
    if h.shape != (f.m,):
        raise DomainError("convolver must live on the same lattice")
    return np.fft.ifft(np.fft.fft(h) * np.fft.fft(f.values))
