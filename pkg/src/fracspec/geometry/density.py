"""Ball-mass densities and Ahlfors-regularity diagnostics for atomic measures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DomainError
from .sweeps import ScaleSweep

TOTAL_MASS_RTOL = 1e-12


@dataclass(frozen=True)
class WeightedMeasure:
    """A finite atomic measure: atoms with strictly positive weights."""

    atoms: tuple
    weights: tuple
    n: int
    total: float

    @classmethod
    def from_atoms(cls, atoms, weights) -> "WeightedMeasure":
        at = []
        for p in atoms:
            if isinstance(p, (int, float)):
                p = (p,)
            at.append(tuple(float(c) for c in p))
        w = [float(x) for x in weights]
        if not at:
            raise DomainError("measure needs at least one atom")
        if len(at) != len(w):
            raise DomainError("atoms and weights must align")
        if any(x <= 0 for x in w):
            raise DomainError("weights must be strictly positive")
        n = len(at[0])
        if any(len(p) != n for p in at):
            raise DomainError("atoms must share a dimension")
        total = float(np.sum(np.asarray(w)))
        return cls(tuple(at), tuple(w), n, total)

    def atom_array(self) -> np.ndarray:
        return np.asarray(self.atoms, dtype=float)

    def weight_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def check_total(self, declared: float) -> bool:
        return math.isclose(self.total, declared, rel_tol=TOTAL_MASS_RTOL)


def ball_mass(measure: WeightedMeasure, x, r: float) -> float:
    """Mass of the closed ball of radius r around x."""
    if isinstance(x, (int, float)):
        x = (x,)
    pts = measure.atom_array()
    d2 = ((pts - np.asarray(x, dtype=float)) ** 2).sum(axis=1)
    return float(measure.weight_array()[d2 <= r * r].sum())


@dataclass(frozen=True)
class DensityEstimate:
    sup_ratio: float
    rows: tuple  # (r, mass, ratio)
    alpha: float
    x: tuple


def upper_density_estimate(measure: WeightedMeasure, x, alpha: float, sweep: ScaleSweep) -> DensityEstimate:
    """sup over the sweep of (2r)**(-alpha) * mass(closed ball B_r(x))."""
    if measure.total <= 0:
        raise DomainError("measure must have positive total mass")
    if not (0 <= alpha <= measure.n):
        # alpha == n is allowed: full-dimensional reference measures are
        # a legitimate calibration input
        raise DomainError(f"alpha must lie in [0, {measure.n}]")
    if isinstance(x, (int, float)):
        x = (x,)
    rows = []
    for r in sweep.scales():
        rf = float(r)
        m = ball_mass(measure, x, rf)
        ratio = m * (2.0 * rf) ** (-alpha)
        rows.append((rf, m, ratio))
    sup = max(row[2] for row in rows)
    return DensityEstimate(sup, tuple(rows), alpha, tuple(float(c) for c in x))


@dataclass(frozen=True)
class RegularityReport:
    """Extremes of mass(B_r(x)) / r**alpha over sampled centers and radii.

    certificate is the honest claim this check can make: every sampled
    ratio was strictly positive.  spread_flag marks b_est/a_est above the
    threshold, the numerical signature of a measure that is not
    Ahlfors-regular at exponent alpha on the sampled range.
    """

    a_est: float
    b_est: float
    certificate: bool
    spread_flag: bool
    spread_threshold: float
    samples: int


def ad_regularity_check(
    measure: WeightedMeasure,
    alpha: float,
    sample_points: Sequence,
    radii: Sequence[float],
    spread_threshold: float = 10.0,
) -> RegularityReport:
    if not sample_points:
        raise DomainError("need at least one sample point")
    if not radii or any(not r > 0 for r in radii):
        raise DomainError("radii must be positive")
    ratios = []
    for x in sample_points:
        for r in radii:
            rf = float(r)
            ratios.append(ball_mass(measure, x, rf) / rf**alpha)
    a_est, b_est = min(ratios), max(ratios)
    cert = a_est > 0
    spread = (b_est / a_est > spread_threshold) if cert else True
    return RegularityReport(
        a_est=a_est,
        b_est=b_est,
        certificate=cert,
        spread_flag=spread,
        spread_threshold=spread_threshold,
        samples=len(ratios),
    )
