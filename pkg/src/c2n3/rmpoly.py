"""Riley-Mednykh polynomials P_2n(x, M) of the two-bridge knots C(2n,3).

Each P_2n is built along two independent routes: a closed-form finite sum
over zero-extended binomials, and a three-term recursion driven by a fixed
cubic Q.  Route agreement is a test-level identity, not an implementation
shortcut.  x is the trace-like variable of the representation and M the
meridian eigenvalue; the n = 0 value is the constant 1 (the start of the
upward branch).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import LaurentPoly, ONE, ZERO, mono


def binom_z(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), extended by zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# M^2 + M^-2 + x - 1, the quantity the closed form raises to powers.
_BASE = mono(1, m=2) + mono(1, m=-2) + mono(1, x=1) - 1

# Q = -M^4 x^3 + (-2M^6 + 2M^4 - 2M^2) x^2 + (-M^8 + 2M^6 - 3M^4 + 2M^2 - 1) x + 2M^4
_Q = (
    mono(-1, m=4, x=3)
    + mono(-2, m=6, x=2)
    + mono(2, m=4, x=2)
    + mono(-2, m=2, x=2)
    + mono(-1, m=8, x=1)
    + mono(2, m=6, x=1)
    + mono(-3, m=4, x=1)
    + mono(2, m=2, x=1)
    + mono(-1, x=1)
    + mono(2, m=4)
)

# P_2 = -M^4 x^3 + (-2M^6 + M^4 - 2M^2) x^2 + (-M^8 + M^6 - 2M^4 + M^2 - 1) x + M^4
_P_PLUS2 = (
    mono(-1, m=4, x=3)
    + mono(-2, m=6, x=2)
    + mono(1, m=4, x=2)
    + mono(-2, m=2, x=2)
    + mono(-1, m=8, x=1)
    + mono(1, m=6, x=1)
    + mono(-2, m=4, x=1)
    + mono(1, m=2, x=1)
    + mono(-1, x=1)
    + mono(1, m=4)
)

# P_-2 = M^2 x^2 + (M^4 - M^2 + 1) x + M^2
_P_MINUS2 = (
    mono(1, m=2, x=2)
    + mono(1, m=4, x=1)
    + mono(-1, m=2, x=1)
    + mono(1, x=1)
    + mono(1, m=2)
)

_P0_UP = ONE
_P0_DOWN = mono(1, m=-2)


def q_poly() -> LaurentPoly:
    """The cubic Q(x, M) driving the recursion; equals M^4 * (2 - x*(M^2 + M^-2 + x - 1)^2)."""
    return _Q


@dataclass(frozen=True)
class RMResult:
    """A Riley-Mednykh polynomial together with the route that produced it."""

    n: int
    poly: LaurentPoly
    path: str


def rm_recursive(n: int) -> RMResult:
    """P_2n by the recursion P_2k = Q*P_2(k-1) - M^8*P_2(k-2), run away from 0.

    Upward from P_0 = 1 and the explicit P_2 for n >= 0; downward from
    P_0 = M^-2 and the explicit P_-2 for n < 0 (with k-1, k-2 replaced by
    k+1, k+2).  Only two values are carried, so the cost is linear in |n|.
    """
    m8 = mono(1, m=8)
    if n == 0:
        return RMResult(0, _P0_UP, "recursive")
    if n > 0:
        prev, cur = _P0_UP, _P_PLUS2
    else:
        prev, cur = _P0_DOWN, _P_MINUS2
    for _ in range(abs(n) - 1):
        prev, cur = cur, _Q * cur - m8 * prev
    return RMResult(n, cur, "recursive")


def rm_closed(n: int) -> RMResult:
    """P_2n by the closed-form finite sum.

    For n >= 0 the summand at index i is
        C(n + floor(i/2), i) * M^(4n) * (M^2 + M^-2 + x - 1)^i * (-x)^floor((1+i)/2),
    summed over 0 <= i <= 2n; for n < 0 the base is negated, the prefactor is
    M^(-4n-2), the binomial is C(-n + floor((i-1)/2), i), and i runs to
    -2n - 1.  Out-of-range binomials vanish via binom_z.
    """
    acc = ZERO
    if n >= 0:
        power = ONE
        for i in range(2 * n + 1):
            j = (1 + i) // 2
            c = binom_z(n + i // 2, i) * (-1) ** j
            acc = acc + mono(c, m=4 * n, x=j) * power
            power = power * _BASE
    else:
        negated = -_BASE
        power = ONE
        for i in range(-2 * n):
            j = (1 + i) // 2
            c = binom_z(-n + (i - 1) // 2, i) * (-1) ** j
            acc = acc + mono(c, m=-4 * n - 2, x=j) * power
            power = power * negated
    return RMResult(n, acc, "closed")
