"""Guaranteed-dense p-intervals from measured zero-set dimensions.

Nothing here proves density in any continuous space.  The rows report
what the density results guarantee GIVEN a dimension estimate for the
transform's zero set, with the estimate's confidence interval pushed
through the (monotone) interval-endpoint formulas.  Rows restating
previously known results are labeled status "prior-result" and are
informational only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..errors import DomainError
from .grid import ZeroSet
from .spherical import SphericalZeroSet

RULE_MOTION_RADIAL = "motion-span-radial"
RULE_TRANSLATE_FULL = "translate-span-full"
RULE_TRANSLATE_CONJUGATE = "translate-span-conjugate"

STATUS_DENSE = "guaranteed-dense"
STATUS_PRIOR = "prior-result"
STATUS_NONE = "no-conclusion"

NO_CONCLUSION_NOTE = "no conclusion from these density rules"


@dataclass(frozen=True)
class VerdictRow:
    rule: str
    status: str
    p_lo: float
    p_hi: float
    p_lo_ci: Optional[tuple]
    formula: str
    notes: tuple = ()

    def __post_init__(self):
        if self.status != STATUS_NONE and not (1.0 <= self.p_lo <= self.p_hi):
            raise DomainError("p-interval must sit inside [1, inf)")

    def contains(self, p: float) -> bool:
        return self.p_lo <= p <= self.p_hi

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "status": self.status,
            "p_lo": self.p_lo,
            "p_hi": None if math.isinf(self.p_hi) else self.p_hi,
            "p_lo_ci": list(self.p_lo_ci) if self.p_lo_ci else None,
            "formula": self.formula,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class DensityVerdict:
    ambient_dim: int
    zero_kind: str  # "radial" | "full"
    dim_estimate: float
    dim_ci: Optional[tuple]
    rows: tuple

    def guaranteed_rows(self) -> tuple:
        return tuple(r for r in self.rows if r.status == STATUS_DENSE)

    def as_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "zero_kind": self.zero_kind,
            "dim_estimate": self.dim_estimate,
            "dim_ci": list(self.dim_ci) if self.dim_ci else None,
            "rows": [r.as_dict() for r in self.rows],
        }


def motion_p_lower(n: int, beta: float) -> float:
    """Left endpoint 2n/(n+1-beta) for radial zero sets; increasing in beta."""
    if not (0 <= beta < 1):
        raise DomainError("beta must lie in [0, 1)")
    return 2 * n / (n + 1 - beta)


def translate_p_lower(n: int, alpha: float) -> float:
    """Left endpoint 2n/(2n-alpha) for full zero sets; increasing in alpha."""
    if not (0 <= alpha < n):
        raise DomainError(f"alpha must lie in [0, {n})")
    return 2 * n / (2 * n - alpha)


def _ci_map(formula, n: int, ci: Optional[tuple], cap: float) -> tuple[Optional[tuple], tuple]:
    if ci is None:
        return None, ()
    lo, hi = ci
    notes = []
    if hi >= cap:
        hi = math.nextafter(cap, 0.0)
        notes.append("CI upper end exceeds the rule's range; truncated")
    lo = max(0.0, lo)
    return (formula(n, lo), formula(n, hi)), tuple(notes)


def _prior_rows(n: int, zero_set_empty: bool) -> list[VerdictRow]:
    """Informational restatements of the earlier motion-group results."""
    empty_note = f"radial zero set is {'empty' if zero_set_empty else 'nonempty'} on this grid"
    rows = [
        VerdictRow(
            rule="prior-l1",
            status=STATUS_PRIOR,
            p_lo=1.0,
            p_hi=1.0,
            p_lo_ci=None,
            formula="p = 1: dense iff no zero radii and nonzero mean",
            notes=(empty_note,),
        ),
        VerdictRow(
            rule="prior-small-p",
            status=STATUS_PRIOR,
            p_lo=1.0,
            p_hi=2 * n / (n + 1),
            p_lo_ci=None,
            formula="1 < p < 2n/(n+1): dense iff no zero radii",
            notes=(empty_note,),
        ),
        VerdictRow(
            rule="prior-mid-p",
            status=STATUS_PRIOR,
            p_lo=2.0,
            p_hi=2 * n / (n - 1) if n > 1 else math.inf,
            p_lo_ci=None,
            formula="2 <= p <= 2n/(n-1): dense when zero radii have zero length",
            notes=(),
        ),
        VerdictRow(
            rule="prior-large-p",
            status=STATUS_PRIOR,
            p_lo=2 * n / (n - 1) if n > 1 else math.inf,
            p_hi=math.inf,
            p_lo_ci=None,
            formula="2n/(n-1) < p: dense iff zero radii nowhere dense",
            notes=(),
        ),
    ]
    return [r for r in rows if math.isfinite(r.p_lo)]


def verdict(
    zero_data,
    dim_estimate,
    n: int,
    ci: Optional[tuple] = None,
) -> DensityVerdict:
    """Build the verdict table for a measured zero set.

    zero_data selects the applicable rules: a SphericalZeroSet engages
    the rigid-motion rule (plus prior-result reference rows); a full
    ZeroSet engages the translation rules.  dim_estimate is the packing
    dimension estimate for the zero set (float, or anything with a
    .slope attribute).
    """
    if n < 1:
        raise DomainError("ambient dimension must be >= 1")
    dim = float(getattr(dim_estimate, "slope", dim_estimate))
    if dim < 0:
        raise DomainError("dimension estimate must be nonnegative")
    rows: list[VerdictRow] = []
    if isinstance(zero_data, SphericalZeroSet):
        if n < 2:
            raise DomainError("radial verdicts need ambient dimension >= 2")
        kind = "radial"
        if dim >= 1:
            rows.append(
                VerdictRow(RULE_MOTION_RADIAL, STATUS_NONE, math.nan, math.nan, None,
                           "p_lo = 2n/(n+1-beta)", (NO_CONCLUSION_NOTE,))
            )
        else:
            p_ci, notes = _ci_map(motion_p_lower, n, ci, 1.0)
            rows.append(
                VerdictRow(
                    RULE_MOTION_RADIAL,
                    STATUS_DENSE,
                    motion_p_lower(n, dim),
                    2.0,
                    p_ci,
                    "p_lo = 2n/(n+1-beta)",
                    notes,
                )
            )
        rows.extend(_prior_rows(n, zero_set_empty=not zero_data.radii))
    elif isinstance(zero_data, ZeroSet):
        kind = "full"
        if dim >= n:
            rows.append(
                VerdictRow(RULE_TRANSLATE_FULL, STATUS_NONE, math.nan, math.nan, None,
                           "p_lo = 2n/(2n-alpha)", (NO_CONCLUSION_NOTE,))
            )
        else:
            p_ci, notes = _ci_map(translate_p_lower, n, ci, float(n))
            rows.append(
                VerdictRow(
                    RULE_TRANSLATE_FULL,
                    STATUS_DENSE,
                    translate_p_lower(n, dim),
                    math.inf,
                    p_ci,
                    "p_lo = 2n/(2n-alpha)",
                    notes,
                )
            )
            rows.append(
                VerdictRow(
                    RULE_TRANSLATE_CONJUGATE,
                    STATUS_DENSE,
                    translate_p_lower(n, dim),
                    math.inf,
                    p_ci,
                    "alpha <= 2n/q with 1/p + 1/q = 1",
                    ("conjugate-exponent restatement of the same endpoint",),
                )
            )
    else:
        raise DomainError(f"unsupported zero data {type(zero_data).__name__}")
    return DensityVerdict(
        ambient_dim=n,
        zero_kind=kind,
        dim_estimate=dim,
        dim_ci=tuple(ci) if ci else None,
        rows=tuple(rows),
    )
