"""Power sums of roots from signed coefficients, and back.

A power-sum sequence is a plain list ``sums`` with ``sums[k]`` holding
p_k, the sum of the k-th powers of all roots, starting at p_0 = n (every
root contributes 1). All arithmetic is exact, so equality checks between
the routes in this package need no tolerance.

Newton's identities come in two regimes. Writing a_1, a_2, ... for the
signed coefficients (a_i is the i-th elementary symmetric function):

* short regime, k <= n:
    p_k = a_1*p_(k-1) - a_2*p_(k-2) + ... ± k*a_k
  (the window of previous sums stops at p_1 and a bare k*a_k closes it);

* full-window regime, k > n:
    p_k = a_1*p_(k-1) - a_2*p_(k-2) + ... ± a_n*p_(k-n)
  (the full window of n previous sums, no bare term).

At k = n the two coincide because p_0 = n turns a_n*p_0 into n*a_n;
``power_sums_from_coeffs`` evaluates both there and asserts it rather
than trusting it.
"""

from __future__ import annotations

from typing import Sequence

from .scalar import ZERO, ExactScalar
from .polynomial import SignedCoefficients, from_signed, reciprocal_poly, to_signed


def _window(values: Sequence[ExactScalar], sums: Sequence[ExactScalar], k: int, width: int) -> ExactScalar:
    """Alternating sum a_1*p_(k-1) - a_2*p_(k-2) + ... over i = 1..width."""
    acc = ZERO
    for i in range(1, width + 1):
        term = values[i - 1] * sums[k - i]
        acc = acc + term if i % 2 == 1 else acc - term
    return acc


def power_sums_from_coeffs(signed: SignedCoefficients, k_max: int) -> list[ExactScalar]:
    """p_0..p_k_max of the roots of the polynomial with these coefficients.

    Picks the short regime for k <= n and the full-window regime for
    k > n. Degree 0 (no roots) gives all zeros.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    n = signed.degree
    sums: list[ExactScalar] = [ExactScalar(n)]
    for k in range(1, k_max + 1):
        if k <= n:
            tail = k * signed.values[k - 1]
            value = _window(signed.values, sums, k, k - 1)
            value = value + tail if k % 2 == 1 else value - tail
            if k == n:
                # Regime boundary: the full window must give the same number.
                assert value == _window(signed.values, sums, k, n), (
                    "short and full-window recurrences disagree at k == n"
                )
        else:
            value = _window(signed.values, sums, k, n)
        sums.append(value)
    return sums


def coeffs_from_power_sums(power_sums: Sequence[ExactScalar], degree: int) -> SignedCoefficients:
    """Recover the signed coefficients from p_0..p_degree.

    Inverts the short regime one coefficient at a time; step k divides
    by k, which is exact over the rationals:

        a_k = ±(p_k - a_1*p_(k-1) + a_2*p_(k-2) - ...) / k

    ``power_sums[0]`` must equal ``degree`` (it is p_0); entries past
    p_degree are ignored.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if len(power_sums) < degree + 1:
        raise ValueError(
            f"need power sums p_0..p_{degree}, got only {len(power_sums)} values"
        )
    sums = [ExactScalar(v) for v in power_sums[: degree + 1]]
    if sums[0] != degree:
        raise ValueError(f"p_0 is {sums[0]} but must equal the degree {degree}")
    values: list[ExactScalar] = []
    for k in range(1, degree + 1):
        acc = sums[k] - _window(values, sums, k, k - 1)
        values.append(acc / k if k % 2 == 1 else -acc / k)
    return SignedCoefficients(degree, tuple(values))


def negative_power_sums(signed: SignedCoefficients, k_max: int) -> list[ExactScalar]:
    """q_0..q_k_max with q_k the sum of the (-k)-th powers of the roots.

    Realized as the ordinary power sums of the reciprocal polynomial,
    whose roots are the reciprocals of the original's. Requires a
    nonzero product of roots (last signed coefficient), i.e. no zero
    root; q_0 = n as usual.
    """
    flipped = reciprocal_poly(from_signed(signed))
    return power_sums_from_coeffs(to_signed(flipped), k_max)
