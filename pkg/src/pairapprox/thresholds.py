"""Exact threshold arithmetic for the dispatch rules.

``eps`` is always carried as a :class:`~fractions.Fraction`; powers such as
``n ** (1 - eps)`` are compared through integer arithmetic, so a decision at
the boundary never depends on float rounding.
"""

from __future__ import annotations

import math
from fractions import Fraction


def as_fraction(eps) -> Fraction:
    """Parse ``"1/4"``, ``"0.25"``, ``0.25`` or a Fraction exactly.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(eps, Fraction):
        return eps
    if isinstance(eps, float):
        if not math.isfinite(eps):
            raise ValueError(f"eps must be finite, got {eps}")
        return Fraction(repr(eps))
    if isinstance(eps, int):
        return Fraction(eps)
    try:
        return Fraction(str(eps).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse eps={eps!r} as a rational number") from None


def require_open_unit(eps, upper=Fraction(1)) -> Fraction:
    e = as_fraction(eps)
    if not 0 < e < upper:
        raise ValueError(f"eps must lie strictly between 0 and {upper}, got {e}")
    return e


def require_positive(eps) -> Fraction:
    e = as_fraction(eps)
    if e <= 0:
        raise ValueError(f"eps must be positive, got {e}")
    return e


def ceil_power(n: int, exponent: Fraction) -> int:
    """Smallest integer ``T`` with ``T >= n ** exponent`` for ``n >= 1`` and
    ``0 <= exponent``.

    Because callers compare integers against the threshold, ``k >= n**e`` is
    equivalent to ``k >= ceil_power(n, e)``.
    """
    exponent = as_fraction(exponent)
    if n < 1:
        raise ValueError("n must be positive")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    a, q = exponent.numerator, exponent.denominator
    target = n ** a  # want smallest T with T**q >= target
    t = max(1, int(round(float(n) ** float(exponent))))
    while t ** q < target:
        t += 1
    while t > 1 and (t - 1) ** q >= target:
        t -= 1
    return t
