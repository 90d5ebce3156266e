"""Certified plane-partition counting.

Exact values come from the big-integer divisor-sum recurrence; asymptotic
enclosures carry rigorous ball-arithmetic error radii; log-concavity and
higher Turan properties are certified by exact Sturm-chain checks combined
with analytic bounds.  Big integers cross the boundary as decimal strings,
ball midpoints as decimal strings with a separate radius field.
"""

from ._plancert import (
    closed_form,
    constants_report,
    estimate,
    hermite_coeffs,
    hermite_distance,
    jensen_coeffs,
    logconcave,
    oracle_residual,
    pl,
    sigma2,
    turan_holds,
)

__all__ = [
    "closed_form",
    "constants_report",
    "estimate",
    "hermite_coeffs",
    "hermite_distance",
    "jensen_coeffs",
    "logconcave",
    "oracle_residual",
    "pl",
    "sigma2",
    "turan_holds",
]
