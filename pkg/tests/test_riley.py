import math
import random
from fractions import Fraction

import mpmath as mp
import pytest

from dts.chebyshev import cheb
from dts.knots import DoubleTwistKnot, relation_residual, u_word
from dts.mat2 import Word, eval_word
from dts.numeric import DomainError, Tol
from dts.riley import (RepParamsXY, beta_x2, bracket_x, build_rep_xy,
                       build_rep_xz, gamma, gamma_x2, phi, phi_residual,
                       phi_x2, solve_x, y_from_xz, y_from_xz_x2)


def test_phi_m1_closed_forms():
    rng = random.Random(61)
    for _ in range(20):
        x2 = Fraction(rng.randint(1, 400), rng.randint(1, 40))
        y = Fraction(rng.randint(-200, 200), rng.randint(1, 40))
        assert phi_x2(1, 1, x2, y) == x2 - y - 1
        assert phi_x2(1, -1, x2, y) == 1 + (y + 2 - x2) * (y - 1)


def test_beta_vanishes_on_the_stated_section():
    m, y = 2, Fraction(5, 2)
    s = cheb(m - 1, y)
    x2 = y + 2 + 2 / ((y - 2) * s * s)
    assert beta_x2(m, x2, y) == 0


def test_gamma_small_n():
    assert gamma_x2(0, Fraction(7), Fraction(3)) == 1
    assert gamma_x2(1, Fraction(7), Fraction(3)) == 7 - 3 - 1
    assert gamma(1, Fraction(2), Fraction(3)) == 4 - 3 - 1


def test_gamma_vanishes_on_symmetric_section():
    s, n = Fraction(3, 2), 2
    z = s + 1 / s
    x2 = (2 + s + 1 / s) * (s ** (4 * n - 1) - 1) / (
        (s ** (2 * n) - 1) * (s ** (2 * n - 1) + 1))
    assert gamma_x2(n, x2, z) == 0


def test_y_from_xz_small_n():
    assert y_from_xz_x2(0, Fraction(7), Fraction(3)) == 2
    z, x2 = Fraction(3), Fraction(7)
    assert y_from_xz_x2(1, x2, z) == z * z - 2 - x2 * (z - 2)
    assert y_from_xz(1, 2, z) == z * z - 2 - 4 * (z - 2)


def test_y_from_xz_matches_matrix_trace():
    rng = random.Random(67)
    for n in (-3, -2, -1, 1, 2, 3):
        for _ in range(3):
            big_m = Fraction(rng.randint(2, 60), rng.randint(1, 30))
            if big_m == 1:
                continue
            z = Fraction(rng.randint(-60, 60), rng.randint(1, 30))
            b, c = build_rep_xz(n, big_m, z)
            bc = Word.gen("b", -1) * Word.gen("c")
            a = eval_word(bc**n * Word.gen("b") * bc**-n, {"b": b, "c": c})
            x2 = (big_m + 1 / big_m) ** 2
            assert (a * b.inverse()).trace() == y_from_xz_x2(n, x2, z)


def test_trefoil_correspondence():
    rng = random.Random(71)
    for _ in range(20):
        x2 = Fraction(rng.randint(1, 300), rng.randint(1, 30))
        t = Fraction(rng.randint(-150, 150), rng.randint(1, 30))
        assert phi_x2(1, 1, x2, t) == gamma_x2(1, x2, t)


def test_bracket_n2():
    lo, hi = bracket_x(1, 2, 3)
    assert abs(lo - math.sqrt(6)) < 1e-12
    assert abs(hi - math.sqrt(7)) < 1e-12
    assert phi(1, 2, lo, mp.mpf(3)) * phi(1, 2, hi, mp.mpf(3)) < 0


def test_bracket_n3_cosine_deltas():
    lo, hi = bracket_x(1, 3, 3)
    d1 = 2 - 2 * math.cos(math.pi / 5)
    d2 = 2 - 2 * math.cos(3 * math.pi / 5)
    assert abs(lo - math.sqrt(5 + d1)) < 1e-12
    assert abs(hi - math.sqrt(5 + d2)) < 1e-12


def test_bracket_negative_n():
    lo, hi = bracket_x(1, -2, 3)
    d1 = 2 - 2 * math.cos(math.pi / 5)  # 2l + 1 = 5
    d2 = 2 - 2 * math.cos(3 * math.pi / 5)
    assert abs(lo - math.sqrt(5 + d1)) < 1e-12
    assert abs(hi - math.sqrt(5 + d2)) < 1e-12


def test_bracket_domain_errors():
    with pytest.raises(DomainError):
        bracket_x(1, 1, 3)
    with pytest.raises(DomainError):
        bracket_x(1, 2, 2)


def test_solve_x_basic():
    p = solve_x(1, 2, 3)
    assert math.sqrt(6) < p.x < math.sqrt(7)
    assert phi_residual(p) <= 1e-12
    assert p.on_variety
    # sign of phi flips across the root
    with mp.workdps(50):
        left = phi(1, 2, p.x - mp.mpf("1e-6"), p.y)
        right = phi(1, 2, p.x + mp.mpf("1e-6"), p.y)
    assert left * right < 0


def test_solve_x_m2_bracket_from_case_formula():
    p = solve_x(2, 2, 3)
    s1 = 3  # S_1(3)
    lo2 = 3 + 2 + 1 / ((3 - 2) * s1 * s1)
    hi2 = 3 + 2 + 2 / ((3 - 2) * s1 * s1)
    assert lo2 < float(p.x) ** 2 < hi2


def test_solve_x_m_equals_x_invariant():
    for (m, n, y) in [(1, 2, 2.5), (2, 3, 3.0), (3, -2, 10.0)]:
        p = solve_x(m, n, y)
        with mp.workdps(50):
            assert abs(p.M + 1 / p.M - p.x) < mp.mpf("1e-40")
        assert p.M > 1


def test_solve_x_envelope():
    # x^2 stays inside the open envelope (y+2, y+2+4/((y-2) S^2))
    for (m, n) in [(1, 2), (1, -3), (2, 2), (3, 4)]:
        for y in (2.2, 3.0, 7.5):
            p = solve_x(m, n, y)
            s = cheb(m - 1, mp.mpf(y))
            hi = y + 2 + 4 / ((y - 2) * s * s)
            assert y + 2 < float(p.x) ** 2 < float(hi)


def test_solve_x_residual_cross_module():
    p = solve_x(1, 2, 3)
    a, b = build_rep_xy(p)
    assert relation_residual(DoubleTwistKnot(1, 2), a, b) <= 1e-9


def test_build_rep_xy_shapes():
    p = RepParamsXY(m=1, n=2, x=Fraction(5, 2), y=Fraction(2), M=Fraction(2))
    a, b = build_rep_xy(p)
    assert a.a21 == 0  # y = 2 degenerates to the abelian pair
    assert a.a12 == 0
    assert a.trace() == b.trace() == Fraction(5, 2)
    assert a.det() == b.det() == 1


def test_build_rep_xy_trace_ab_inverse():
    rng = random.Random(73)
    for _ in range(20):
        big_m = Fraction(rng.randint(2, 90), rng.randint(1, 30))
        y = Fraction(rng.randint(-90, 90), rng.randint(1, 30))
        p = RepParamsXY(m=1, n=2, x=big_m + 1 / big_m, y=y, M=big_m)
        a, b = build_rep_xy(p)
        assert (a * b.inverse()).trace() == y


def test_build_rep_xz_traces():
    rng = random.Random(79)
    for _ in range(20):
        big_m = Fraction(rng.randint(2, 90), rng.randint(1, 30))
        z = Fraction(rng.randint(-90, 90), rng.randint(1, 30))
        b, c = build_rep_xz(2, big_m, z)
        assert (b * c.inverse()).trace() == z
        assert b.det() == c.det() == 1
    b, c = build_rep_xz(1, Fraction(3), Fraction(2))
    assert c.a21 == 0  # z = 2 gives the abelian-compatible pair


def test_build_rep_xz_twist_relation_residual():
    # gamma_2 root at rational z; BU - UC vanishes there
    z = Fraction(9, 4)
    x2 = ((z + 1) * z * z - 1 - 2 * z) / (z * (z - 1))
    assert gamma_x2(2, x2, z) == 0
    with mp.workdps(50):
        x = mp.sqrt(mp.mpf(x2.numerator) / x2.denominator)
        big_m = (x + mp.sqrt(x * x - 4)) / 2
        b, c = build_rep_xz(2, big_m, mp.mpf(z.numerator) / z.denominator)
        u = eval_word(u_word(2), {"b": b, "c": c})
        assert (b * u - u * c).max_abs() <= 1e-9


def test_solve_x_custom_tolerance():
    p = solve_x(2, 3, 4.0, tol=Tol(abs_eps=1e-20, max_iter=500))
    assert phi_residual(p) <= 1e-20
