"""Representation families, slope intervals, witnesses and parameter sweeps.

Five one-parameter families of irreducible SL2(R) representations of the
group of J(2m, 2n) are sampled here, each recording the meridian and
longitude eigenvalues (M, L) and the slope function

    r = -log|L| / log M,    M > 1.

F0  : any m >= 1, |n| >= 2; parameter s > 1, y = s + 1/s, x a certified
      Riley root.  L > 1, image of r covers (-4m, 0).
F1  : m = 1, n >= 2; parameter s > s_0(n) where s_0 solves
      (s^(2n-1) - s^(-2n))(s - 1) = 4.  L < -1; r covers the deep window
      below -(4(2n-1)/omega_n + 4) down to -(4n+2).
F2  : m = 1, n >= 2; parameter theta in (pi/(2(2n-1)), pi/(2n)) -- the
      unit-circle section.  L > 1, r covers (-4, 0).
F3  : m = 1, n = -l <= -1; parameter s > 1.  0 < L < 1, r covers (0, 4l).
F4  : m = 1, n = -l <= -1; parameter theta in (0, pi/(2(2l+1))).  L > 1,
      r covers (-4, 0).

``theorem_intervals`` assembles from those guarantees the certified set of
left-orderable surgery slopes for J(2m, 2n), and ``find_witness`` produces
a concrete representation whose eigenvalues satisfy the scalar surgery
condition p*log M + q*log|L| = 0 for a requested slope p/q in that set.

All construction runs in mpmath arithmetic; public records carry floats.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath as mp

from .chebyshev import cheb
from .knots import DoubleTwistKnot, relation_residual
from .longitude import HolonomyPair, SingularLongitude, longitude_eig
from .numeric import (DEFAULT_TOL, WORK_DPS, DomainError, MaxIterExceeded,
                      NoSignChange, Tol, bisect, to_mpf)
from .riley import BracketFailure, RepParamsXY, build_rep_xy, solve_x

__all__ = [
    "Family", "SlopeSample", "Interval", "IntervalSet", "Witness", "SweepResult",
    "family_sample", "solve_s0", "solve_te", "omega", "theorem_intervals",
    "remark_b_intervals", "find_witness", "sweep", "default_grid",
    "ConstraintViolation", "TrefoilExcluded", "SlopeNotCertified", "SearchFailure",
    "KIND_REPRESENTATION", "KIND_ZERO_SLOPE",
]


class ConstraintViolation(ArithmeticError):
    """A family sample violated its guaranteed sign constraint (a bug)."""


class TrefoilExcluded(DomainError):
    """(m, n) = (1, 1) is the trefoil and carries no certified interval."""


class SlopeNotCertified(DomainError):
    """The requested slope lies outside the certified interval set."""


class SearchFailure(ArithmeticError):
    """No parameter bracket for the requested slope on the scan grid."""


class Family(str, Enum):
    F0 = "f0"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"


KIND_REPRESENTATION = "representation"
KIND_ZERO_SLOPE = "zero_slope"

# Sign of L guaranteed per family: (lower, upper) bounds on L, open.
_L_RANGE = {
    Family.F0: (1, None),
    Family.F1: (None, -1),
    Family.F2: (1, None),
    Family.F3: (0, 1),
    Family.F4: (1, None),
}


@dataclass(frozen=True)
class SlopeSample:
    """One certified point of a representation family."""

    family: Family
    m: int
    n: int
    param: float
    M: float
    L: float
    r: float
    relation_residual: float


@dataclass(frozen=True)
class Interval:
    """An interval of slopes with individually open or closed endpoints."""

    lo: float
    hi: float
    lo_open: bool = True
    hi_open: bool = True

    @property
    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    def contains(self, v) -> bool:
        if self.is_empty:
            return False
        above = v > self.lo or (v == self.lo and not self.lo_open)
        below = v < self.hi or (v == self.hi and not self.hi_open)
        return above and below

    def negated(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.hi_open, self.lo_open)

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo:g}, {self.hi:g}{right}"


@dataclass(frozen=True)
class IntervalSet:
    """A sorted union of pairwise disjoint nonempty intervals."""

    intervals: tuple = ()

    @classmethod
    def from_intervals(cls, items: Iterable[Interval]) -> "IntervalSet":
        live = sorted((i for i in items if not i.is_empty),
                      key=lambda i: (i.lo, i.lo_open))
        merged: list = []
        for iv in live:
            if merged and _touches(merged[-1], iv):
                merged[-1] = _join(merged[-1], iv)
            else:
                merged.append(iv)
        return cls(tuple(merged))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, v) -> bool:
        return any(iv.contains(v) for iv in self.intervals)

    def negated(self) -> "IntervalSet":
        return IntervalSet.from_intervals(iv.negated() for iv in self.intervals)

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " U ".join(str(iv) for iv in self.intervals)


def _touches(a: Interval, b: Interval) -> bool:
    if b.lo < a.hi:
        return True
    return b.lo == a.hi and not (b.lo_open and a.hi_open)


def _join(a: Interval, b: Interval) -> Interval:
    if b.hi > a.hi or (b.hi == a.hi and not b.hi_open):
        return Interval(a.lo, b.hi, a.lo_open, b.hi_open)
    return a


@dataclass(frozen=True)
class Witness:
    """Certification record for one surgery slope p/q.

    kind "representation" carries a family sample whose eigenvalues satisfy
    |p log M + q log|L|| <= the requested tolerance; kind "zero_slope"
    marks slopes certified without constructing a representation.
    """

    p: int
    q: int
    kind: str
    scalar_residual: float
    sample: Optional[SlopeSample] = None
    note: str = ""


@dataclass(frozen=True)
class SweepResult:
    samples: tuple
    errors: tuple  # (param, repr(exception)) pairs, in grid order


# --------------------------------------------------------------------------
# family evaluation
# --------------------------------------------------------------------------

def _m_from_x2(x2):
    x = mp.sqrt(x2)
    return (x + mp.sqrt(x2 - 4)) / 2


def _f0_point(m: int, n: int, s):
    y = s + 1 / s
    s1 = cheb(m - 1, y)
    # uniform accuracy in x across parameter scales: |phi| tolerance is
    # proportional to the local slope of phi in x
    slope_est = float(2 * mp.sqrt(y + 2) * (y - 2) * s1 * s1)
    tol = Tol(abs_eps=1e-24 * max(1.0, abs(slope_est)), max_iter=600)
    p = solve_x(m, n, y, tol=tol)
    big_l = longitude_eig(m, n, p.M, y)
    return p.M, big_l, y


def _f1_point(n: int, s):
    x2 = (2 + s + 1 / s) * (s ** (4 * n - 1) - 1) / ((s ** (2 * n) - 1) * (s ** (2 * n - 1) + 1))
    y = 1 + (s ** (2 * n + 1) + 1) / (s ** (2 * n) + s)
    big_m = _m_from_x2(x2)
    return big_m, longitude_eig(1, n, big_m, y), y


def _f2_point(n: int, th):
    x2 = 4 * mp.cos(th) ** 2 * mp.sin((4 * n - 1) * th) / (2 * mp.sin(2 * n * th) * mp.cos((2 * n - 1) * th))
    y = 1 + mp.cos((2 * n + 1) * th) / mp.cos((2 * n - 1) * th)
    big_m = _m_from_x2(x2)
    return big_m, longitude_eig(1, n, big_m, y), y


def _f3_point(ell: int, s):
    x2 = (2 + s + 1 / s) * (s ** (4 * ell + 1) - 1) / ((s ** (2 * ell + 1) + 1) * (s ** (2 * ell) - 1))
    y = 1 + (s ** (2 * ell) + s) / (s ** (2 * ell + 1) + 1)
    big_m = _m_from_x2(x2)
    return big_m, longitude_eig(1, -ell, big_m, y), y


def _f4_point(ell: int, th):
    x2 = 4 * mp.cos(th) ** 2 * mp.sin((4 * ell + 1) * th) / (2 * mp.cos((2 * ell + 1) * th) * mp.sin(2 * ell * th))
    y = 1 + mp.cos((2 * ell - 1) * th) / mp.cos((2 * ell + 1) * th)
    big_m = _m_from_x2(x2)
    return big_m, longitude_eig(1, -ell, big_m, y), y


def _validate_domain(family: Family, m: int, n: int, param) -> None:
    if family is Family.F0:
        if m < 1 or abs(n) < 2:
            raise DomainError(f"F0 needs m >= 1 and |n| >= 2, got (m, n) = ({m}, {n})")
        if not param > 1:
            raise DomainError(f"F0 needs s > 1, got {param}")
        return
    if m != 1:
        raise DomainError(f"{family.value} is a twist-knot family (m = 1), got m = {m}")
    if family in (Family.F1, Family.F2):
        if n < 2:
            raise DomainError(f"{family.value} needs n >= 2, got n = {n}")
        if family is Family.F1 and not param > solve_s0(n):
            raise DomainError(f"F1 needs s > s0(n) = {solve_s0(n)!r}, got {param}")
        if family is Family.F2:
            lo, hi = math.pi / (2 * (2 * n - 1)), math.pi / (2 * n)
            if not lo < param < hi:
                raise DomainError(f"F2 needs theta in ({lo}, {hi}), got {param}")
        return
    # F3 / F4
    if n > -1:
        raise DomainError(f"{family.value} needs n <= -1, got n = {n}")
    ell = -n
    if family is Family.F3:
        if not param > 1:
            raise DomainError(f"F3 needs s > 1, got {param}")
    else:
        hi = math.pi / (2 * (2 * ell + 1))
        if not 0 < param < hi:
            raise DomainError(f"F4 needs theta in (0, {hi}), got {param}")


def _point(family: Family, m: int, n: int, pm):
    if family is Family.F0:
        return _f0_point(m, n, pm)
    if family is Family.F1:
        return _f1_point(n, pm)
    if family is Family.F2:
        return _f2_point(n, pm)
    if family is Family.F3:
        return _f3_point(-n, pm)
    return _f4_point(-n, pm)


def _check_sign(family: Family, big_l) -> None:
    lo, hi = _L_RANGE[family]
    if lo is not None and not big_l > lo:
        raise ConstraintViolation(f"{family.value} sample has L = {big_l}, expected L > {lo}")
    if hi is not None and not big_l < hi:
        raise ConstraintViolation(f"{family.value} sample has L = {big_l}, expected L < {hi}")


def _sample_full(family: Family, m: int, n: int, param):
    """Build a sample; returns (SlopeSample, M, L, r) with mpf working values."""
    _validate_domain(family, m, n, param)
    with mp.workdps(WORK_DPS):
        pm = to_mpf(param)
        big_m, big_l, y = _point(family, m, n, pm)
        _check_sign(family, big_l)
        r = -mp.log(abs(big_l)) / mp.log(big_m)
        rep = RepParamsXY(m=m, n=n, x=big_m + 1 / big_m, y=y, M=big_m, on_variety=True)
        a_mat, b_mat = build_rep_xy(rep)
        resid = relation_residual(DoubleTwistKnot(m, n), a_mat, b_mat)
        pair = HolonomyPair(M=float(big_m), L=float(big_l))
    sample = SlopeSample(family=family, m=m, n=n, param=float(pm),
                         M=pair.M, L=pair.L, r=float(r),
                         relation_residual=float(resid))
    return sample, big_m, big_l, r


def family_sample(family: Family, m: int, n: int, param) -> SlopeSample:
    """Evaluate one family member at the given parameter.

    Raises DomainError when the parameter or (m, n) is outside the family
    domain and ConstraintViolation when a guaranteed sign fails.
    """
    return _sample_full(Family(family), m, n, param)[0]


# --------------------------------------------------------------------------
# scalar solvers
# --------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def solve_s0(n: int, tol: Tol = DEFAULT_TOL) -> float:
    """The unique s > 1 with (s^(2n-1) - s^(-2n))(s - 1) = 4, for n >= 2.

    The left side is strictly increasing on (1, oo); a coarse grid re-checks
    that before the bisection result is trusted.
    """
    if n < 2:
        raise DomainError(f"solve_s0 needs n >= 2, got {n}")

    def lhs(s):
        return (s ** (2 * n - 1) - s ** (-2 * n)) * (s - 1)

    grid = [1 + (9.0 * k + 1) / 32 for k in range(33)]
    vals = [lhs(v) for v in grid]
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise ArithmeticError("monotonicity spot-check failed for the s0 equation")
    with mp.workdps(WORK_DPS):
        root = bisect(lambda s: lhs(s) - 4, mp.mpf(1) + mp.mpf("1e-12"), mp.mpf(3),
                      Tol(abs_eps=min(tol.abs_eps, 1e-20), max_iter=400),
                      width_stop=False)
    return float(root)


def solve_te(c, tol: Tol = DEFAULT_TOL) -> float:
    """The unique real t with t * e^t = c, for c > 0."""
    if not c > 0:
        raise DomainError(f"solve_te needs c > 0, got {c}")
    with mp.workdps(WORK_DPS):
        cm = to_mpf(c)
        hi = max(mp.mpf(2), mp.log(cm) + 1)
        root = bisect(lambda t: t * mp.exp(t) - cm, mp.mpf("1e-30"), hi,
                      Tol(abs_eps=min(tol.abs_eps, 1e-20), max_iter=400),
                      width_stop=False)
    return float(root)


@functools.lru_cache(maxsize=None)
def omega(k: int) -> float:
    """The unique real solution of t * e^t = 4(2k - 1), for k >= 2."""
    if k < 2:
        raise DomainError(f"omega needs k >= 2, got {k}")
    return solve_te(4 * (2 * k - 1))


# --------------------------------------------------------------------------
# certified interval assembly
# --------------------------------------------------------------------------

def theorem_intervals(m: int, n: int, *, include_proof_endpoint: bool = False) -> IntervalSet:
    """The certified left-orderable surgery-slope set of J(2m, 2n).

    Cases (m >= 1, n != 0, trefoil (1,1) excluded):

        n >= 2, m >= 2 : (-max(4m, 4n), 0]
        n >= 2, m  = 1 : (-(4n+2), -(4(2n-1)/omega_n + 4)) U [-4, 0]
        n  = 1, m >= 2 : (-(4m+2), -(4(2m-1)/omega_m + 4)) U [-4, 0]
        n <= -1        : (-4m, -4n)

    Inverted deep windows (possible for small n) come back empty rather
    than reversed.  ``include_proof_endpoint`` additionally closes the
    right endpoint for n = -1, m >= 2, giving (-4m, 4]: that endpoint is
    supported by the proof route but not by the headline statement, so it
    is opt-in.
    """
    knot = DoubleTwistKnot(m, n)
    if knot.is_excluded_from_theorem:
        raise TrefoilExcluded("J(2, 2) is the trefoil; no certified interval")
    if n >= 2 and m >= 2:
        return IntervalSet.from_intervals([
            Interval(-max(4 * m, 4 * n), 0, True, False),
        ])
    if n >= 2 or (n == 1 and m >= 2):
        k = n if n >= 2 else m
        deep = Interval(-(4 * k + 2), -(4 * (2 * k - 1) / omega(k) + 4), True, True)
        return IntervalSet.from_intervals([deep, Interval(-4, 0, False, False)])
    # n <= -1
    hi_closed = include_proof_endpoint and n == -1 and m >= 2
    return IntervalSet.from_intervals([
        Interval(-4 * m, -4 * n, True, not hi_closed),
    ])


def remark_b_intervals(m: int, n: int) -> IntervalSet:
    """The mirrored slope table for J(-2m, -2n); negate to recover
    ``theorem_intervals(m, n)``."""
    knot = DoubleTwistKnot(m, n)
    if knot.is_excluded_from_theorem:
        raise TrefoilExcluded("J(-2, -2) is the mirror trefoil; no certified interval")
    if n >= 2 and m >= 2:
        return IntervalSet.from_intervals([
            Interval(0, max(4 * m, 4 * n), False, True),
        ])
    if n >= 2 or (n == 1 and m >= 2):
        k = n if n >= 2 else m
        deep = Interval(4 * (2 * k - 1) / omega(k) + 4, 4 * k + 2, True, True)
        return IntervalSet.from_intervals([Interval(0, 4, False, False), deep])
    return IntervalSet.from_intervals([
        Interval(4 * n, 4 * m, True, True),
    ])


# --------------------------------------------------------------------------
# parameter grids, sweeps, witness search
# --------------------------------------------------------------------------

def default_grid(family: Family, m: int, n: int, points: int = 512) -> list:
    """The scan grid used by sweeps and the witness search.

    s-families use log-spaced offsets above their left endpoint (1, or s_0
    for F1); theta-families use a uniform interior grid.
    """
    family = Family(family)
    if points < 2:
        raise DomainError("a grid needs at least 2 points")
    if family in (Family.F0, Family.F3):
        return [1 + 10 ** (-6 + 12 * k / (points - 1)) for k in range(points)]
    if family is Family.F1:
        s0 = solve_s0(n)
        return [s0 + 10 ** (-9 + 15 * k / (points - 1)) for k in range(points)]
    if family is Family.F2:
        lo, hi = math.pi / (2 * (2 * n - 1)), math.pi / (2 * n)
        width = hi - lo
        return [lo + width * (k + 1) / (points + 1) for k in range(points)]
    ell = -n
    hi = math.pi / (2 * (2 * ell + 1))
    return [hi * (k + 1) / (points + 1) for k in range(points)]


_SWEEP_ERRORS = (DomainError, ConstraintViolation, SingularLongitude,
                 BracketFailure, NoSignChange, MaxIterExceeded,
                 ZeroDivisionError, ValueError)


def sweep(family: Family, m: int, n: int,
          params: Optional[Sequence] = None, *, points: int = 512) -> SweepResult:
    """Sample a family along a grid, collecting per-point errors non-fatally."""
    family = Family(family)
    grid = list(params) if params is not None else default_grid(family, m, n, points)
    samples: list = []
    errors: list = []
    for g in grid:
        try:
            samples.append(family_sample(family, m, n, g))
        except _SWEEP_ERRORS as exc:
            errors.append((float(g), repr(exc)))
    return SweepResult(tuple(samples), tuple(errors))


def _route(m: int, n: int, r: Fraction):
    """Pick (family, fam_m, fam_n, sign) so the family's guaranteed image
    contains sign * r; the sample then certifies slope r on J(2m, 2n) via
    the mirror and index-swap symmetries."""
    if n == 1:
        return _route(1, m, r)  # J(2m, 2) and J(2, 2m) present the same knot
    if n >= 2:
        if m == 1:
            if -4 < r < 0:
                return Family.F2, 1, n, 1
            return Family.F1, 1, n, 1
        if -4 * m < r < 0:
            return Family.F0, m, n, 1
        return Family.F0, n, m, 1  # swapped presentation of the same knot
    ell = -n
    if m == 1:
        if r < 0:
            return Family.F4, 1, n, 1
        return Family.F3, 1, n, 1
    if n == -1:
        # mirror image is the twist knot J(2, -2m); slopes negate
        if r < 0:
            return Family.F3, 1, -m, -1
        return Family.F4, 1, -m, -1
    if r < 0:
        return Family.F0, m, n, 1
    return Family.F0, -n, -m, -1  # mirror of the swapped presentation


def find_witness(m: int, n: int, p: int, q: int, tol: float = 1e-9, *,
                 points: int = 512) -> Witness:
    """Certify the slope r = p/q for J(2m, 2n) at the requested tolerance.

    For r = 0 (and the literature-backed endpoint r = -4 of the twist-knot
    cases) the certificate carries no representation.  Otherwise the family
    covering r is scanned for a sign change of (sample slope - r), the
    parameter is bisected, and the witness reports

        scalar_residual = |p log M + q log|L||

    together with the sample's relation residual, both <= tol.
    """
    if q < 1:
        raise DomainError(f"q must be a positive integer, got {q}")
    if math.gcd(abs(p), q) != 1:
        raise DomainError(f"p/q must be reduced, got {p}/{q}")
    certified = theorem_intervals(m, n)
    r = Fraction(p, q)
    if not certified.contains(r):
        raise SlopeNotCertified(f"slope {p}/{q} is outside the certified set {certified}")
    if r == 0:
        return Witness(p=p, q=q, kind=KIND_ZERO_SLOPE, scalar_residual=0.0,
                       note="0-surgery yields positive first Betti number; "
                            "no representation is needed")
    if r == -4 and (m == 1 or n == 1):
        return Witness(p=p, q=q, kind=KIND_ZERO_SLOPE, scalar_residual=0.0,
                       note="slope -4 on a twist knot is covered by prior "
                            "results; no representation is constructed")
    family, fam_m, fam_n, sign = _route(m, n, r)
    target = Fraction(sign) * r
    p_eff = sign * p

    grid = default_grid(family, fam_m, fam_n, points)
    with mp.workdps(WORK_DPS):
        target_m = to_mpf(target)
        bracket = _scan(family, fam_m, fam_n, grid, target_m)
        if bracket is None:
            raise SearchFailure(
                f"no sign change of r - ({target}) for {family.value} on the "
                f"default grid [{grid[0]:.6g} .. {grid[-1]:.6g}] ({points} points)")
        lo, hi = bracket
        if lo != hi:
            param = bisect(
                lambda t: _sample_full(family, fam_m, fam_n, t)[3] - target_m,
                lo, hi, Tol(abs_eps=1e-30, max_iter=300), width_stop=False)
        else:
            param = lo
        sample, big_m, big_l, _ = _sample_full(family, fam_m, fam_n, param)
        scalar = abs(p_eff * mp.log(big_m) + q * mp.log(abs(big_l)))
    if not (scalar <= tol and sample.relation_residual <= tol):
        raise SearchFailure(
            f"refinement did not certify {p}/{q}: scalar residual {float(scalar)}, "
            f"relation residual {sample.relation_residual}")
    return Witness(p=p, q=q, kind=KIND_REPRESENTATION,
                   scalar_residual=float(scalar), sample=sample)


def _scan(family: Family, m: int, n: int, grid, target):
    prev = None
    for g in grid:
        try:
            r = _sample_full(family, m, n, g)[3]
        except _SWEEP_ERRORS:
            prev = None
            continue
        d = r - target
        if d == 0:
            return to_mpf(g), to_mpf(g)
        if prev is not None and (prev[1] < 0) != (d < 0):
            return prev[0], to_mpf(g)
        prev = (to_mpf(g), d)
    return None
