"""Exact rational scalars and certified sign-change bisection.

``Rat`` is the exact rational scalar used throughout the identity-testing
code.  It is the standard library ``fractions.Fraction``: arbitrary
precision, denominator always positive, and fully reduced after every
operation, which is exactly the contract the rest of the package needs.

``bisect`` is the one root-finder everything else is built on.  It only
assumes a sign change on the input bracket, so every root it returns is
certified by the intermediate value theorem (up to the requested
tolerance).  No derivative-based refinement is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath as mp

Rat = Fraction

# decimal digits used by certified root solving and residual evaluation
WORK_DPS = 50


def to_mpf(v) -> "mp.mpf":
    """Convert a float, int, string or exact rational to mpmath's real type."""
    if isinstance(v, mp.mpf):
        return v
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpf(v)


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoSignChange(ValueError):
    """The bracket endpoints do not straddle a root (f(lo)*f(hi) >= 0)."""


class MaxIterExceeded(ArithmeticError):
    """Bisection failed to meet its tolerance within max_iter steps."""


@dataclass(frozen=True)
class Tol:
    """Stopping tolerances for iterative solvers.

    abs_eps   -- absolute residual target, |f(x)| <= abs_eps counts as done
    rel_eps   -- optional extra stop on relative bracket width (0 disables)
    max_iter  -- hard iteration cap
    """

    abs_eps: float = 1e-12
    rel_eps: float = 0.0
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not self.abs_eps > 0:
            raise ValueError("abs_eps must be positive")
        if self.rel_eps < 0:
            raise ValueError("rel_eps must be nonnegative")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


DEFAULT_TOL = Tol()


def bisect(f: Callable, lo, hi, tol: Tol = DEFAULT_TOL, *, width_stop: bool = True):
    """Find a root of ``f`` on the sign-changing bracket ``(lo, hi)``.

    Returns x strictly inside (lo, hi) with |f(x)| <= tol.abs_eps, or, when
    ``width_stop`` is enabled, with bracket width <= tol.abs_eps*max(1,|x|).
    Callers that need the residual condition unconditionally (e.g. root
    polishing at high precision) pass ``width_stop=False``.

    The arithmetic is generic: lo/hi may be floats, ``mpmath.mpf`` values or
    exact rationals, and f must map that scalar type to a comparable one.

    Raises NoSignChange if f(lo)*f(hi) >= 0 and MaxIterExceeded if neither
    stopping rule fires within tol.max_iter steps.
    """
    if not lo < hi:
        raise DomainError(f"bisect needs lo < hi, got [{lo}, {hi}]")
    flo = f(lo)
    fhi = f(hi)
    if not flo * fhi < 0:
        raise NoSignChange(f"f({lo})={flo} and f({hi})={fhi} do not change sign")
    lo_neg = flo < 0
    mid = lo
    for _ in range(tol.max_iter):
        mid = (lo + hi) / 2
        fm = f(mid)
        if abs(fm) <= tol.abs_eps:
            return mid
        scale = abs(mid)
        if scale < 1:
            scale = 1
        width = hi - lo
        if width_stop and width <= tol.abs_eps * scale:
            return mid
        if tol.rel_eps > 0 and width <= tol.rel_eps * scale:
            return mid
        if (fm < 0) == lo_neg:
            lo = mid
        else:
            hi = mid
    raise MaxIterExceeded(
        f"no convergence in {tol.max_iter} steps; bracket [{lo}, {hi}], f(mid)={f(mid)}"
    )
