"""Fractal constructions, their Fourier transforms, and density verdicts.

The package splits into five layers:

* ``geometry``: covering/packing counts, neighborhood volumes, box
  dimension, ball-mass densities, all exact where the inputs allow;
* ``cantor``: parametrized Cantor-type interval constructions, their
  natural measures, products, and random offset draws;
* ``fourier``: transforms of those measures, octave diagnostics, bump
  mollifiers, and weighted shell sums;
* ``tauberian``: cyclic-grid span/rank certificates, spherical zero
  scans, and the density verdict table;
* ``experiments`` / ``cli``: reproducible experiment runs and the
  acceptance suite behind ``fracspec verify``.
"""

from .errors import (
    AliasingError,
    ConfigError,
    DomainError,
    RejectionBudgetError,
    SizeError,
)
from .numeric import LogRatio, as_fraction, parse_rational

__version__ = "0.1.0"

__all__ = [
    "AliasingError",
    "ConfigError",
    "DomainError",
    "LogRatio",
    "RejectionBudgetError",
    "SizeError",
    "as_fraction",
    "parse_rational",
    "__version__",
]
