"""The Chebyshev-like sequence S_j(t) for every integer index j.

The sequence is defined by S_0(t) = 1, S_1(t) = t and the two-sided
recurrence S_{j+1}(t) = t*S_j(t) - S_{j-1}(t).  Negative indices follow
from the same recurrence and satisfy S_{-j}(t) = -S_{j-2}(t).  Writing
t = s + 1/s with s not in {0, +1, -1} gives the closed form

    S_j(t) = (s^(j+1) - s^(-j-1)) / (s - 1/s).

Evaluation is generic over the scalar: exact rationals stay exact via the
recurrence, while float inputs far outside [-2, 2] at large |j| switch to
the closed form with sigma = (t + sqrt(t^2-4))/2, since the recurrence
amplifies rounding exponentially in that regime.
"""

from __future__ import annotations

import math

from .numeric import DomainError

# Past this index the float recurrence has lost too many bits for |t| > 2.
_FLOAT_CLOSED_FORM_MIN_J = 64

_SDIFF_ROOT_TOL = 1e-10


def cheb(j: int, t):
    """Evaluate S_j(t) for any integer j and any field scalar t."""
    if isinstance(t, float) and abs(t) > 2 and abs(j) > _FLOAT_CLOSED_FORM_MIN_J:
        return _cheb_float_closed(j, t)
    if j == -1:
        return 0 * t
    if j < 0:
        return -cheb(-j - 2, t)
    s_prev = 0 * t  # S_{-1}
    s_cur = 1 + 0 * t  # S_0, in t's scalar type
    for _ in range(j):
        s_prev, s_cur = s_cur, t * s_cur - s_prev
    return s_cur


def _cheb_float_closed(j: int, t: float) -> float:
    sigma = (t + math.sqrt(t * t - 4)) / 2
    return (sigma ** (j + 1) - sigma ** (-j - 1)) / (sigma - 1 / sigma)


def sdiff_roots(n: int) -> list:
    """All real roots of S_{n-1}(t) - S_{n-2}(t), for n >= 3.

    There are exactly n-1 of them, t = 2*cos((2j-1)*pi/(2n-1)) for
    j = 1..n-1, returned in that j order (decreasing value).  Each returned
    root is validated against the recurrence before being handed back.
    """
    if n < 3:
        raise DomainError(f"sdiff_roots needs n >= 3, got {n}")
    roots = [2 * math.cos((2 * j - 1) * math.pi / (2 * n - 1)) for j in range(1, n)]
    for r in roots:
        if abs(cheb(n - 1, r) - cheb(n - 2, r)) > _SDIFF_ROOT_TOL:
            raise ArithmeticError(f"root {r} of S_{n-1}-S_{n-2} failed residual check")
    return roots
