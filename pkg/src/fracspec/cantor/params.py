"""Parameter sets for branching interval constructions on [0, 1].

A construction is described by a branch count N >= 2, a contraction
ratio eta with N * eta < 1, and per-branch offsets a_1 < ... < a_N in
[0, 1 - eta] whose consecutive gaps exceed eta (children stay disjoint
with room to spare).  The similarity dimension beta solves
N * eta**beta = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..errors import DomainError
from ..numeric import LogRatio, as_fraction

DIMENSION_RTOL = 1e-12

ETA_RULES = ("constant", "tapered", "custom")


def tapered_eta(eta: Fraction, j: int) -> Fraction:
    """Level-dependent ratio eta_j = eta * (1 - 1/(j+1)**2), j >= 1."""
    if j < 1:
        raise DomainError("levels are indexed from 1")
    return eta * (1 - Fraction(1, (j + 1) ** 2))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def require(self) -> None:
        if not self.ok:
            raise DomainError("; ".join(self.violations))


@dataclass(frozen=True)
class CantorParams:
    """Validated parameters for a branching construction.

    offsets are exact rationals; dimension is the float solution of
    N * eta**beta = 1.  eta_rule selects how the per-level ratio varies:
    "constant" uses eta at every level, "tapered" shrinks it by the
    factor 1 - 1/(j+1)**2, "custom" defers to custom_etas.
    """

    branches: int
    ratio: Fraction
    offsets: tuple
    dimension: float
    eta_rule: str = "constant"
    custom_etas: Optional[tuple] = None
    seed: Optional[int] = None

    @classmethod
    def create(
        cls,
        branches: int,
        ratio,
        offsets: Sequence,
        eta_rule: str = "constant",
        custom_etas: Optional[Sequence] = None,
        seed: Optional[int] = None,
        declared_dimension: Optional[float] = None,
    ) -> "CantorParams":
        ratio = as_fraction(ratio)
        offsets = tuple(as_fraction(a) for a in offsets)
        report = validate_params(
            branches, ratio, offsets, eta_rule, custom_etas, declared_dimension
        )
        report.require()
        if custom_etas is not None:
            custom_etas = tuple(as_fraction(e) for e in custom_etas)
        dim = similarity_dimension(branches, ratio)
        return cls(branches, ratio, offsets, dim, eta_rule, custom_etas, seed)

    def eta_at(self, level: int) -> Fraction:
        """Contraction ratio used when refining level level-1 into level."""
        if level < 1:
            raise DomainError("levels are indexed from 1")
        if self.eta_rule == "constant":
            return self.ratio
        if self.eta_rule == "tapered":
            return tapered_eta(self.ratio, level)
        assert self.custom_etas is not None
        if level > len(self.custom_etas):
            raise DomainError(
                f"custom eta list has {len(self.custom_etas)} entries, "
                f"level {level} requested"
            )
        return self.custom_etas[level - 1]

    def level_length(self, level: int) -> Fraction:
        """Exact length of one level-`level` interval: prod of eta_1..eta_level."""
        out = Fraction(1)
        for j in range(1, level + 1):
            out *= self.eta_at(j)
        return out

    def dimension_log_ratio(self) -> LogRatio:
        """Exact-form dimension log(N)/log(1/eta) when eta is 1/q for integer q."""
        inv = 1 / self.ratio
        if inv.denominator != 1:
            raise DomainError("exact form needs eta = 1/q with integer q")
        return LogRatio(self.branches, int(inv))


def similarity_dimension(branches: int, ratio: Fraction) -> float:
    """The beta with branches * ratio**beta == 1."""
    beta = math.log(branches) / math.log(1 / float(ratio))
    check = branches * float(ratio) ** beta
    if not math.isclose(check, 1.0, rel_tol=DIMENSION_RTOL):
        raise DomainError(f"dimension solve drifted: N*eta^beta = {check!r}")
    return beta


def validate_params(
    branches: int,
    ratio,
    offsets: Sequence,
    eta_rule: str = "constant",
    custom_etas: Optional[Sequence] = None,
    declared_dimension: Optional[float] = None,
) -> ValidationReport:
    """Collect all violations instead of stopping at the first."""
    problems = []
    if not isinstance(branches, int) or branches < 2:
        problems.append(f"branches must be an integer >= 2, got {branches!r}")
        return ValidationReport(False, tuple(problems))
    ratio = as_fraction(ratio)
    offsets = tuple(as_fraction(a) for a in offsets)
    if not (0 < ratio < 1):
        problems.append(f"ratio must lie in (0, 1), got {ratio}")
    if branches * ratio >= 1:
        problems.append(
            f"open-set room requires branches * ratio < 1, got {branches * ratio}"
        )
    if len(offsets) != branches:
        problems.append(f"need exactly {branches} offsets, got {len(offsets)}")
    if 0 < ratio < 1:
        for i, a in enumerate(offsets):
            if not (0 <= a <= 1 - ratio):
                problems.append(f"offset[{i}] = {a} leaves [0, {1 - ratio}]")
        for i in range(len(offsets) - 1):
            if not (offsets[i + 1] - offsets[i] > ratio):
                problems.append(
                    f"gap offsets[{i + 1}] - offsets[{i}] = "
                    f"{offsets[i + 1] - offsets[i]} must exceed ratio {ratio}"
                )
    if eta_rule not in ETA_RULES:
        problems.append(f"eta_rule must be one of {ETA_RULES}, got {eta_rule!r}")
    if eta_rule == "custom":
        if not custom_etas:
            problems.append("custom eta_rule needs a nonempty custom_etas list")
        elif 0 < ratio < 1:
            etas = [as_fraction(e) for e in custom_etas]
            for j, e in enumerate(etas, start=1):
                floor_j = tapered_eta(ratio, j)
                if not (floor_j <= e <= ratio):
                    problems.append(
                        f"custom eta at level {j} = {e} leaves "
                        f"[{floor_j}, {ratio}]"
                    )
            for j in range(len(etas) - 1):
                if etas[j + 1] < etas[j]:
                    problems.append(
                        f"custom etas must be non-decreasing; level {j + 2} "
                        f"drops to {etas[j + 1]} from {etas[j]}"
                    )
    elif custom_etas is not None:
        problems.append("custom_etas given but eta_rule is not 'custom'")
    if declared_dimension is not None and not problems:
        if not (0 < declared_dimension < 1):
            problems.append(
                f"declared dimension {declared_dimension} leaves (0, 1)"
            )
        else:
            beta = similarity_dimension(branches, ratio)
            if abs(beta - declared_dimension) > DIMENSION_RTOL:
                problems.append(
                    f"declared dimension {declared_dimension} disagrees with "
                    f"recomputed {beta}"
                )
    return ValidationReport(not problems, tuple(problems))


def middle_thirds_params() -> CantorParams:
    """N=2, eta=1/3, offsets {0, 2/3}: the classical ternary construction."""
    return CantorParams.create(2, Fraction(1, 3), (Fraction(0), Fraction(2, 3)))
