"""Riley polynomial of J(2m, 2n), its twist-knot variant, and root solving.

With x = tr(A) = tr(B) = M + 1/M and y = tr(A B^-1), the pair of matrices

    A = [[M, 0], [2-y, 1/M]],    B = [[M, 1], [0, 1/M]]

defines a representation of the knot group exactly when phi(x, y) = 0,
where

    phi = alpha_m * S_{n-1}(beta_m) - S_{n-2}(beta_m),
    beta_m  = 2 + (y-2) (y+2-x^2) S_{m-1}(y)^2,
    alpha_m = 1 - (y+2-x^2) S_{m-1}(y) (S_{m-1}(y) - S_{m-2}(y)).

For the twist knots (m = 1) the (b, c) presentation gives the analogous
condition gamma_n(x, z) = 0 in z = tr(B C^-1), and a trace bridge
expressing y in terms of (x, z).

All polynomials depend on x only through x^2, so each has an ``*_x2``
twin taking x^2 directly; the exact identity suite relies on that, since
the interesting points often have rational x^2 but irrational x.

For every real y > 2 and |n| >= 2 the polynomial phi has a root with

    x in ( sqrt(y+2+d1/((y-2)S^2)), sqrt(y+2+d2/((y-2)S^2)) ),
    S = S_{m-1}(y),

where 0 < d1 < d2 < 4 are explicit cosine values depending on n.
``bracket_x`` produces that bracket and ``solve_x`` bisects it.  Root
polishing runs in mpmath arithmetic: near steep parameter regimes the
residual target |phi| <= 1e-12 sits below what float64 granularity in x
can express.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .chebyshev import cheb
from .mat2 import Mat2
from .numeric import (DEFAULT_TOL, WORK_DPS, DomainError, MaxIterExceeded,
                      Tol, bisect, to_mpf)

class BracketFailure(ArithmeticError):
    """The guaranteed sign change was not observed numerically."""


@dataclass(frozen=True)
class RepParamsXY:
    """A point of the (x, y) representation variety of J(2m, 2n).

    x = M + 1/M holds by construction; ``on_variety`` marks outputs of the
    root solver, for which |phi(x, y)| <= the solver tolerance.
    """

    m: int
    n: int
    x: object
    y: object
    M: object
    on_variety: bool = False


@dataclass(frozen=True)
class RepParamsXZ:
    """A point of the (x, z) twist-knot variety of J(2, 2n)."""

    n: int
    x: object
    z: object
    M: object
    on_variety: bool = False


def beta_x2(m: int, x2, y):
    s = cheb(m - 1, y)
    return 2 + (y - 2) * (y + 2 - x2) * s * s


def alpha_x2(m: int, x2, y):
    s1 = cheb(m - 1, y)
    s2 = cheb(m - 2, y)
    return 1 - (y + 2 - x2) * s1 * (s1 - s2)


def beta(m: int, x, y):
    return beta_x2(m, x * x, y)


def alpha(m: int, x, y):
    return alpha_x2(m, x * x, y)


def phi_x2(m: int, n: int, x2, y):
    b = beta_x2(m, x2, y)
    return alpha_x2(m, x2, y) * cheb(n - 1, b) - cheb(n - 2, b)


def phi(m: int, n: int, x, y):
    """The Riley polynomial phi(x, y) of J(2m, 2n)."""
    return phi_x2(m, n, x * x, y)


def gamma_x2(n: int, x2, z):
    s1 = cheb(n - 1, z)
    s2 = cheb(n - 2, z)
    return -(z + 1) * s1 * s1 + s2 * s2 + 2 * s1 * s2 + x2 * s1 * (s1 - s2)


def gamma(n: int, x, z):
    """The twist-knot representation polynomial gamma_n(x, z) of J(2, 2n)."""
    return gamma_x2(n, x * x, z)


def y_from_xz_x2(n: int, x2, z):
    s1 = cheb(n - 1, z)
    s2 = cheb(n - 2, z)
    return (z * z - 2) * s1 * s1 + 2 * s2 * s2 - 2 * z * s1 * s2 - x2 * (z - 2) * s1 * s1


def y_from_xz(n: int, x, z):
    """tr(A B^-1) expressed through x and z = tr(B C^-1)."""
    return y_from_xz_x2(n, x * x, z)


def _bracket_deltas(n: int):
    """The (d1, d2) pair with 0 < d1 < d2 < 4 for the first sign change."""
    if n == 2:
        return mp.mpf(1), mp.mpf(2)
    if n > 2:
        return (2 - 2 * mp.cos(mp.pi / (2 * n - 1)),
                2 - 2 * mp.cos(3 * mp.pi / (2 * n - 1)))
    ell = -n
    return (2 - 2 * mp.cos(mp.pi / (2 * ell + 1)),
            2 - 2 * mp.cos(3 * mp.pi / (2 * ell + 1)))


def bracket_x(m: int, n: int, y):
    """Sign-changing bracket (x_lo, x_hi) for phi at fixed y > 2, |n| >= 2.

    The bracket has phi of opposite signs at its endpoints; if rounding
    hides the sign change, the bracket is subdivided once before failing.
    """
    if abs(n) < 2:
        raise DomainError(f"bracket_x needs |n| >= 2, got n={n}")
    ym = to_mpf(y)
    if not ym > 2:
        raise DomainError(f"bracket_x needs y > 2, got y={y}")
    d1, d2 = _bracket_deltas(n)
    s = cheb(m - 1, ym)
    denom = (ym - 2) * s * s
    x_lo = mp.sqrt(ym + 2 + d1 / denom)
    x_hi = mp.sqrt(ym + 2 + d2 / denom)
    f_lo = phi(m, n, x_lo, ym)
    f_hi = phi(m, n, x_hi, ym)
    if f_lo * f_hi < 0:
        return x_lo, x_hi
    # one interior subdivision guards rounding right at the endpoints
    mid = (x_lo + x_hi) / 2
    f_mid = phi(m, n, mid, ym)
    if f_lo * f_mid < 0:
        return x_lo, mid
    if f_mid * f_hi < 0:
        return mid, x_hi
    raise BracketFailure(
        f"no sign change of phi on bracket for m={m}, n={n}, y={y}"
    )


def solve_x(m: int, n: int, y, tol: Tol = DEFAULT_TOL, *, dps: int = WORK_DPS) -> RepParamsXY:
    """Solve phi(x, y) = 0 on the bracket of ``bracket_x``.

    Returns the variety point with M the root > 1 of M + 1/M = x.  The
    residual |phi(x, y)| <= tol.abs_eps holds at the returned (mpmath)
    values; evaluate at comparable precision when checking it.
    """
    with mp.workdps(dps):
        ym = to_mpf(y)
        x_lo, x_hi = bracket_x(m, n, ym)
        f = lambda xv: phi(m, n, xv, ym)
        max_iter = max(tol.max_iter, 400)
        try:
            # polish far past the requested residual: downstream quantities
            # (relation residuals, eigenvalues) amplify the root error
            x = bisect(f, x_lo, x_hi, Tol(abs_eps=tol.abs_eps * 1e-8, max_iter=max_iter),
                       width_stop=False)
        except MaxIterExceeded:
            x = bisect(f, x_lo, x_hi, Tol(abs_eps=tol.abs_eps, max_iter=max_iter),
                       width_stop=False)
        big_m = (x + mp.sqrt(x * x - 4)) / 2
    return RepParamsXY(m=m, n=n, x=x, y=ym, M=big_m, on_variety=True)


def phi_residual(p: RepParamsXY, *, dps: int = WORK_DPS):
    """|phi| at a variety point, evaluated at full working precision."""
    with mp.workdps(dps):
        return abs(phi(p.m, p.n, to_mpf(p.x), to_mpf(p.y)))


def build_rep_xy(p: RepParamsXY) -> tuple:
    """The meridian matrices A = [[M,0],[2-y,1/M]], B = [[M,1],[0,1/M]]."""
    big_m, y = p.M, p.y
    one = 1 + 0 * big_m
    a = Mat2(big_m, 0 * big_m, 2 - y, one / big_m)
    b = Mat2(big_m, one, 0 * big_m, one / big_m)
    return a, b


def build_rep_xz(n: int, big_m, z) -> tuple:
    """The twist-presentation matrices B = [[M,1],[0,1/M]], C = [[M,0],[2-z,1/M]].

    The entries do not involve n; it is accepted so call sites carry the
    full variety datum (n, M, z) in one place.
    """
    one = 1 + 0 * big_m
    b = Mat2(big_m, one, 0 * big_m, one / big_m)
    c = Mat2(big_m, 0 * big_m, 2 - z, one / big_m)
    return b, c
