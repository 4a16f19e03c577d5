import random
from fractions import Fraction

import pytest

from dts.mat2 import (DetError, Mat2, UnboundGenerator, Word, eval_word,
                      pow_cheb)


def _rand_det_one(rng) -> Mat2:
    a = Fraction(rng.randint(1, 50), rng.randint(1, 50))
    b = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
    c = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
    return Mat2(a, b, c, (1 + b * c) / a)


def test_identity_and_inverse():
    rng = random.Random(3)
    i = Mat2.identity()
    for _ in range(20):
        d = _rand_det_one(rng)
        assert d.det() == 1
        assert d * d.inverse() == Mat2(1, 0, 0, 1) * i
        assert d.inverse() * d == i * Mat2(1, 0, 0, 1)


def test_pow_cheb_zero_and_inverse():
    rng = random.Random(5)
    d = _rand_det_one(rng)
    assert pow_cheb(d, 0) == Mat2(1, 0, 0, 1)
    assert pow_cheb(d, -1) == Mat2(d.a22, -d.a12, -d.a21, d.a11)


def test_pow_cheb_vs_repeated_multiplication():
    rng = random.Random(8)
    for _ in range(10):
        d = _rand_det_one(rng)
        acc = Mat2.identity()
        for _ in range(6):
            acc = acc * d
        assert pow_cheb(d, 6) == acc
        inv = d.inverse()
        acc = Mat2.identity()
        for _ in range(4):
            acc = acc * inv
        assert pow_cheb(d, -4) == acc


def test_pow_cheb_rejects_bad_det():
    with pytest.raises(DetError):
        pow_cheb(Mat2(Fraction(2), Fraction(0), Fraction(0), Fraction(2)), 3)
    with pytest.raises(DetError):
        pow_cheb(Mat2(1.0, 0.0, 0.0, 1.0 + 1e-6), 2)


def test_word_normalization():
    a, b = Word.gen("a"), Word.gen("b")
    assert (a * a.inverse()) == Word.empty()
    w = a * b.inverse() * b * a  # cancels to a^2
    assert w.letters == (("a", 2),)
    assert w.length() == 2
    assert (a ** 3 * a ** -3) == Word.empty()
    assert Word.gen("a", 0) == Word.empty()


def test_word_inverse_and_power():
    a, b = Word.gen("a"), Word.gen("b")
    w = a * b ** -2
    assert w.inverse().letters == (("b", 2), ("a", -1))
    assert (w ** 2).letters == (("a", 1), ("b", -2), ("a", 1), ("b", -2))
    assert (w ** -1) == w.inverse()
    assert w.exponent_sum() == -1
    assert w.generators() == {"a", "b"}


def test_eval_word_empty_is_identity():
    assert eval_word(Word.empty(), {}) == Mat2.identity()


def test_eval_word_cancellation():
    rng = random.Random(21)
    a = _rand_det_one(rng)
    w = Word.gen("a") * Word.gen("a", -1)
    assert eval_word(w, {"a": a}) == Mat2.identity()


def test_eval_word_four_factor_product():
    rng = random.Random(23)
    a, b = _rand_det_one(rng), _rand_det_one(rng)
    w = (Word.gen("a") * Word.gen("b", -1)) * (Word.gen("a", -1) * Word.gen("b"))
    got = eval_word(w, {"a": a, "b": b})
    want = a * b.inverse() * a.inverse() * b
    assert got == want


def test_eval_word_unbound_generator():
    with pytest.raises(UnboundGenerator):
        eval_word(Word.gen("z"), {"a": Mat2.identity()})


def test_eval_word_det_and_concatenation():
    rng = random.Random(31)
    gens = ["a", "b"]
    for _ in range(20):
        assign = {g: _rand_det_one(rng) for g in gens}
        letters1 = [(rng.choice(gens), rng.choice([-2, -1, 1, 2])) for _ in range(4)]
        letters2 = [(rng.choice(gens), rng.choice([-2, -1, 1, 2])) for _ in range(4)]
        w1 = Word.from_letters(letters1)
        w2 = Word.from_letters(letters2)
        m1 = eval_word(w1, assign)
        m2 = eval_word(w2, assign)
        assert m1.det() == 1
        assert eval_word(w1 * w2, assign) == m1 * m2


def test_trace_commutativity():
    rng = random.Random(37)
    for _ in range(20):
        x, y = _rand_det_one(rng), _rand_det_one(rng)
        assert (x * y).trace() == (y * x).trace()
