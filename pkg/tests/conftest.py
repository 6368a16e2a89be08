import math

import mpmath


def agree_digits(a, b):
    """Pairwise significant-digit agreement of two floats (99 means identical)."""
    if a == b:
        return 99.0
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 99.0
    return -math.log10(abs(a - b) / scale)


def agree_digits_mp(a, b):
    """Digit agreement for mpf (or mixed) values, at the current precision."""
    if a == b:
        return 9999.0
    scale = max(abs(a), abs(b))
    return float(-mpmath.log10(abs(a - b) / scale))
