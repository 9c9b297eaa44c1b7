"""Functions on finite torus lattices and their transform zero sets."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..errors import ConfigError, DomainError

DEFAULT_TOL_FACTOR = 1e-9


@dataclass(frozen=True)
class GridFunction:
    """Complex values on Z_m (shape (m,)) or Z_m x Z_m (shape (m, m))."""

    values: np.ndarray
    cell: float = 1.0

    def __post_init__(self):
        vals = np.asarray(self.values)
        if vals.ndim not in (1, 2):
            raise DomainError("grid functions live on 1-D or 2-D lattices")
        if vals.ndim == 2 and vals.shape[0] != vals.shape[1]:
            raise DomainError("2-D grids must be square")
        if vals.shape[0] < 2:
            raise DomainError("need m >= 2")
        if not np.all(np.isfinite(vals.real)) or not np.all(np.isfinite(vals.imag)):
            raise DomainError("grid values must be finite")
        if not self.cell > 0:
            raise DomainError("cell size must be positive")
        object.__setattr__(self, "values", np.asarray(vals, dtype=complex))

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.ndim


def dft(f: GridFunction) -> np.ndarray:
    """Unitary discrete transform (Parseval holds with constant 1)."""
    if f.n == 1:
        return np.fft.fft(f.values, norm="ortho")
    return np.fft.fft2(f.values, norm="ortho")


def default_tol(fhat: np.ndarray) -> float:
    peak = float(np.abs(fhat).max())
    return DEFAULT_TOL_FACTOR * peak if peak > 0 else 0.0


@dataclass(frozen=True)
class ZeroSet:
    """Frequency indices where the transform modulus falls below tol."""

    indices: tuple
    tol: float
    m: int
    n: int

    def __post_init__(self):
        if self.tol < 0:
            raise DomainError("tol must be nonnegative")

    @property
    def count(self) -> int:
        return len(self.indices)

    def is_empty(self) -> bool:
        return not self.indices


def dft_zero_set(f: GridFunction, tol: Optional[float] = None) -> ZeroSet:
    """Thresholded zero set of the transform.

    Default tol is 1e-9 times the peak modulus (scale-free).  The zero
    convention is strict inequality |fhat| < tol, so the identically
    zero function needs special handling: everything is a zero.
    """
    fhat = dft(f)
    mags = np.abs(fhat)
    if tol is None:
        tol = default_tol(fhat)
    if mags.max() == 0:
        idx = np.argwhere(np.ones_like(mags, dtype=bool))
    else:
        idx = np.argwhere(mags < tol)
    if f.n == 1:
        indices = tuple(int(i[0]) for i in idx)
    else:
        indices = tuple((int(i), int(j)) for i, j in idx)
    return ZeroSet(indices=indices, tol=float(tol), m=f.m, n=f.n)


def write_grid_function(f: GridFunction, csv_path, header_path) -> None:
    """CSV of (index, re, im) rows plus a JSON sidecar with the geometry."""
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "re", "im"])
        if f.n == 1:
            for i, v in enumerate(f.values):
                writer.writerow([i, format(v.real, ".17g"), format(v.imag, ".17g")])
        else:
            for i in range(f.m):
                for j in range(f.m):
                    v = f.values[i, j]
                    writer.writerow(
                        [f"{i},{j}", format(v.real, ".17g"), format(v.imag, ".17g")]
                    )
    Path(header_path).write_text(
        json.dumps({"m": f.m, "n": f.n, "cell": f.cell}, sort_keys=True) + "\n"
    )


def read_grid_function(csv_path, header_path) -> GridFunction:
    try:
        header = json.loads(Path(header_path).read_text())
        m, n, cell = int(header["m"]), int(header["n"]), float(header["cell"])
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        raise ConfigError(f"bad grid header {header_path}: {exc}") from exc
    shape = (m,) if n == 1 else (m, m)
    values = np.zeros(shape, dtype=complex)
    with open(csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            v = complex(float(row["re"]), float(row["im"]))
            if n == 1:
                values[int(row["index"])] = v
            else:
                i, j = row["index"].split(",")
                values[int(i), int(j)] = v
    return GridFunction(values, cell)
