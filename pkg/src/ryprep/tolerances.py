"""Numerical tolerances shared across the package.

``NORM_ATOL`` bounds roundoff in algebraic identities (unit norms, codec
round-trips, simulator equivalences).  ``VERIFY_ATOL`` is the looser default
for end-to-end checks that a synthesized circuit prepares its target state.
"""

NORM_ATOL = 1e-12
VERIFY_ATOL = 1e-9
