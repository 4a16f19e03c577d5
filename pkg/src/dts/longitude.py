"""Longitude holonomy eigenvalue of J(2m, 2n).

In the upper-triangular normal form the canonical longitude maps to
[[L, *], [0, 1/L]] with

    L = - Wtilde_12 / W_12,

where W_12 is the (1,2) entry of the image of the conjugating word and
Wtilde_12 is the same polynomial with M replaced by 1/M.  Concretely

    W_12 = S_{m-1}(y) [ x S_{m-1}(y) - (M - 1/M) S_{m-2}(y) - (y/M) S_{m-1}(y) ]

with x = M + 1/M.  The entry is a polynomial in M, 1/M and y, so the
substitution M -> 1/M commutes with evaluation; as a cross-check the same
entry can be recomputed from an explicit matrix product.  For m = 1 the
ratio collapses to L = (1 - (y-1) M^2) / (y - 1 - M^2).

Only the eigenvalue is modeled; the unconstrained upper-right entry of the
longitude image and the longitude as a group word are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import cheb
from .knots import w_word_reversed
from .mat2 import Mat2, eval_word

_SINGULAR_TOL = 1e-14


class SingularLongitude(ZeroDivisionError):
    """W_12 vanishes, so the eigenvalue ratio is undefined."""


@dataclass(frozen=True)
class HolonomyPair:
    """Meridian and longitude eigenvalues of one representation."""

    M: object
    L: object

    def __post_init__(self) -> None:
        if self.M == 0 or self.M == 1 or self.M == -1:
            raise ValueError(f"meridian eigenvalue must avoid 0, +1, -1, got {self.M}")
        if self.L == 0:
            raise ValueError("longitude eigenvalue must be nonzero")


def w12(m: int, big_m, y):
    """The (1,2) holonomy entry W_12 as a polynomial in M, 1/M, y."""
    x = big_m + 1 / big_m
    s1 = cheb(m - 1, y)
    s2 = cheb(m - 2, y)
    return s1 * (x * s1 - (big_m - 1 / big_m) * s2 - y / big_m * s1)


def w12_from_word(m: int, big_m, y):
    """W_12 recomputed as an explicit matrix product (cross-check route).

    The word is evaluated in the right-to-left reading the holonomy
    formula is stated for; see ``knots.w_word_reversed``.
    """
    one = 1 + 0 * big_m
    a = Mat2(big_m, 0 * big_m, 2 - y, one / big_m)
    b = Mat2(big_m, one, 0 * big_m, one / big_m)
    return eval_word(w_word_reversed(m), {"a": a, "b": b}).a12


def longitude_eig(m: int, n: int, big_m, y, *, check: bool = False):
    """The longitude eigenvalue L = -Wtilde_12 / W_12.

    The value depends on n only through the variety membership of (M, y);
    the formula itself involves m alone.  With ``check=True`` both entries
    are recomputed by matrix products and must agree.
    """
    denom = w12(m, big_m, y)
    if _is_negligible(denom):
        raise SingularLongitude(f"W_12 = {denom} at M={big_m}, y={y}")
    numer = w12(m, 1 / big_m, y)
    if check:
        for entry, mm in ((denom, big_m), (numer, 1 / big_m)):
            word_entry = w12_from_word(m, mm, y)
            diff = abs(entry - word_entry)
            scale = max(1, abs(entry))
            if isinstance(diff, (int, Fraction)):
                if diff != 0:
                    raise ArithmeticError(f"W_12 cross-check failed exactly: {entry} vs {word_entry}")
            elif not diff <= 1e-9 * scale:
                raise ArithmeticError(f"W_12 cross-check failed: {entry} vs {word_entry}")
    return -numer / denom


def _is_negligible(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    return abs(v) < _SINGULAR_TOL
