"""Numerically stable special-function primitives.

Every closed form in this package is a ratio of Gamma-function values whose
magnitudes diverge quickly with the monomial degree.  All such ratios are
therefore assembled in log space and exponentiated once.
"""

from __future__ import annotations

import math

__all__ = ["log_gamma", "pochhammer", "binomial", "gamma_ratio"]

# Above this order the rising factorial is evaluated as a log-gamma
# difference; below it the direct product is exact for integer inputs.
_POCHHAMMER_PRODUCT_MAX = 64


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError(f"log_gamma requires a positive argument, got {x}")
    return math.lgamma(x)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Valid for any real a.  Small orders use the direct product (exact for
    integer arguments); large orders with a > 0 fall back to a log-gamma
    difference.
    """
    if k < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {k}")
    if k <= _POCHHAMMER_PRODUCT_MAX or a <= 0.0:
        result = 1.0
        for j in range(k):
            result *= a + j
        return result
    return math.exp(math.lgamma(a + k) - math.lgamma(a))


def binomial(n: int, d: int) -> int:
    """Exact binomial coefficient C(n, d) for 0 <= d <= n."""
    if d < 0 or d > n:
        raise ValueError(f"binomial requires 0 <= d <= n, got n={n}, d={d}")
    return math.comb(n, d)


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b) for positive a, b, evaluated in log space."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"gamma_ratio requires positive arguments, got a={a}, b={b}")
    return math.exp(math.lgamma(a) - math.lgamma(b))
