import random
from fractions import Fraction

import mpmath as mp
import pytest

from dts.longitude import (HolonomyPair, SingularLongitude, longitude_eig,
                           w12, w12_from_word)
from dts.slopes import Family, family_sample, solve_s0


def _rand_m_y(rng):
    big_m = Fraction(rng.randint(2, 10**4), rng.randint(1, 10**4))
    if big_m == 1:
        big_m += 1
    y = Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4))
    return big_m, y


def test_w12_m1_form():
    rng = random.Random(83)
    for _ in range(20):
        big_m, y = _rand_m_y(rng)
        assert w12(1, big_m, y) == big_m + 1 / big_m - y / big_m


def test_w12_matches_word_entry():
    rng = random.Random(89)
    for m in (1, 2, 3):
        for _ in range(10):
            big_m, y = _rand_m_y(rng)
            assert w12(m, big_m, y) == w12_from_word(m, big_m, y)


def test_w12_plug_in_value():
    # m=2 at (M, y) = (2, 2): S_1(2) = 2, S_0 = 1
    assert w12(2, Fraction(2), Fraction(2)) == 3


def test_longitude_m1_closed_form():
    rng = random.Random(97)
    count = 0
    while count < 20:
        big_m, y = _rand_m_y(rng)
        try:
            got = longitude_eig(1, 2, big_m, y)
            want = (1 - (y - 1) * big_m**2) / (y - 1 - big_m**2)
        except (SingularLongitude, ZeroDivisionError):
            continue
        assert got == want
        count += 1


def test_longitude_symmetric_parameter_form():
    rng = random.Random(101)
    for m in (1, 2, 3):
        count = 0
        while count < 8:
            big_m, _ = _rand_m_y(rng)
            s = Fraction(rng.randint(2, 10**4), rng.randint(1, 10**4))
            if s == 1:
                continue
            y = s + 1 / s
            try:
                got = longitude_eig(m, 2, big_m, y)
            except (SingularLongitude, ZeroDivisionError):
                continue
            m2 = big_m**2
            want = (m2 - s - s ** (2 * m) + m2 * s ** (1 + 2 * m)) / (
                -1 + m2 * s + m2 * s ** (2 * m) - s ** (1 + 2 * m))
            assert got == want
            count += 1


def test_longitude_near_abelian_limit():
    for m in (1, 2):
        L = longitude_eig(m, 2, 1.7, 2 + 1e-9)
        assert abs(L - 1) < 1e-6


def test_longitude_inversion_symmetry():
    rng = random.Random(103)
    count = 0
    while count < 20:
        big_m, y = _rand_m_y(rng)
        try:
            l1 = longitude_eig(2, 3, big_m, y)
            l2 = longitude_eig(2, 3, 1 / big_m, y)
        except (SingularLongitude, ZeroDivisionError):
            continue
        assert l1 * l2 == 1
        count += 1


def test_singular_longitude():
    # m = 1: W_12 = x - y/M vanishes when y = M^2 + 1
    with pytest.raises(SingularLongitude):
        longitude_eig(1, 2, Fraction(2), Fraction(5))


def test_matrix_cross_check_flag():
    val = longitude_eig(2, 2, Fraction(3, 2), Fraction(7, 3), check=True)
    assert val == longitude_eig(2, 2, Fraction(3, 2), Fraction(7, 3))


def test_holonomy_pair_validation():
    with pytest.raises(ValueError):
        HolonomyPair(M=1, L=2.0)
    with pytest.raises(ValueError):
        HolonomyPair(M=2.0, L=0)
    HolonomyPair(M=2.0, L=-3.0)


def test_sign_lemma_deep_family():
    # y - 1 > M^2 > 1 forces L < -1 on the deep twist-knot branch
    for n in (2, 3):
        s = solve_s0(n) + 1.0
        sample = family_sample(Family.F1, 1, n, s)
        assert sample.L < -1
        y1 = (s ** (2 * n + 1) + 1) / (s ** (2 * n) + s)
        assert y1 > sample.M**2 > 1


def test_sign_lemma_circle_families():
    # M^2 > y - 1 > 1 forces L > 1 on the circle-section branches
    import math

    n = 2
    th = (math.pi / 6 + math.pi / 4) / 2
    sample = family_sample(Family.F2, 1, n, th)
    y1 = math.cos(5 * th) / math.cos(3 * th)
    assert sample.L > 1
    assert sample.M**2 > y1 > 1

    ell = 1
    th = math.pi / 12
    sample = family_sample(Family.F4, 1, -ell, th)
    y1 = math.cos(th) / math.cos(3 * th)
    assert sample.L > 1
    assert sample.M**2 > y1 > 1
