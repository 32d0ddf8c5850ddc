"""Exact rational scalars shared by every other module.

The scalar type is the standard library ``fractions.Fraction``: an
arbitrary-precision rational kept in canonical reduced form after every
operation (denominator > 0, gcd(|numerator|, denominator) == 1, zero
stored as 0/1). Equal values therefore have identical representations,
which the rest of the library relies on for exact ``==`` comparisons.

Values are immutable, so they are safe to share between threads.

Textual form: ``"num/den"`` with the denominator omitted when it is 1
(``"5"``, ``"-3/4"``). This is exactly ``str()`` of a Fraction and is
used bit-for-bit in CLI input and JSON output.
"""

from __future__ import annotations

from fractions import Fraction

ExactScalar = Fraction

ZERO = ExactScalar(0)
ONE = ExactScalar(1)


def as_scalar(value: ExactScalar | int | str) -> ExactScalar:
    """Coerce an int, a ``"num/den"`` string, or a scalar to ExactScalar.

    Division by zero (``Fraction(1, 0)`` or ``x / 0``) raises
    ZeroDivisionError, the one forbidden operation.
    """
    return ExactScalar(value)
