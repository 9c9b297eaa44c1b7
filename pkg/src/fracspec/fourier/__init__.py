"""Transforms of construction measures, octave diagnostics, and mollifiers."""

from .annuli import (
    MIN_OCTAVES,
    RATIO_THRESHOLD,
    OctaveDiagnostics,
    OctaveRow,
    SpectralGrid,
    lq_annulus_diagnostics,
)
from .bump import (
    SUP_METADATA,
    BumpFunction,
    DyadicProfile,
    annulus_sup_squared,
    bump_profile,
)
from .mollifier import (
    MollifierRow,
    MollifierSweep,
    PairingResult,
    RadialProfile,
    bessel_tail_profile,
    mollified_pairing,
    mollifier_sum,
)
from .transforms import (
    TransformValue,
    cantor_fourier,
    cantor_fourier_grid,
    product_measure_fourier,
    product_measure_fourier_grid,
)

__all__ = [
    "MIN_OCTAVES",
    "RATIO_THRESHOLD",
    "SUP_METADATA",
    "BumpFunction",
    "DyadicProfile",
    "MollifierRow",
    "MollifierSweep",
    "OctaveDiagnostics",
    "OctaveRow",
    "PairingResult",
    "RadialProfile",
    "SpectralGrid",
    "TransformValue",
    "annulus_sup_squared",
    "bessel_tail_profile",
    "bump_profile",
    "cantor_fourier",
    "cantor_fourier_grid",
    "lq_annulus_diagnostics",
    "mollified_pairing",
    "mollifier_sum",
    "product_measure_fourier",
    "product_measure_fourier_grid",
]
