"""2x2 matrices over a generic field scalar, and free-group words.

Everything is written once against the field operations (+, -, *, /,
equality) so the same code runs over exact rationals (for identity
testing), floats, and mpmath reals (for certified numerics).

``pow_cheb`` raises a determinant-1 matrix to any integer power through
the trace recurrence: since D^{j+1} = tr(D)*D^j - D^{j-1} by
Cayley-Hamilton, the powers satisfy the Chebyshev recurrence and

    D^j = S_{j-1}(tr D) * D - S_{j-2}(tr D) * I.

This is both the identity the rest of the package leans on and the
numerically stable way to form high powers of matrices with bounded trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .chebyshev import cheb

_DET_TOL = 1e-12


class DetError(ArithmeticError):
    """A matrix that must be unimodular has determinant away from 1."""


class UnboundGenerator(KeyError):
    """A word uses a generator with no assigned matrix."""


@dataclass(frozen=True)
class Mat2:
    a11: object
    a12: object
    a21: object
    a22: object

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 - other.a11, self.a12 - other.a12,
                    self.a21 - other.a21, self.a22 - other.a22)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __rmul__(self, k) -> "Mat2":
        return Mat2(k * self.a11, k * self.a12, k * self.a21, k * self.a22)

    def trace(self):
        return self.a11 + self.a22

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> "Mat2":
        """Exact inverse via the adjugate; for det 1 this is the adjugate."""
        d = self.det()
        return Mat2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def max_abs(self):
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))

    def entries(self) -> tuple:
        return (self.a11, self.a12, self.a21, self.a22)


def require_det_one(mat: Mat2, *, tol: float = _DET_TOL, what: str = "matrix") -> None:
    """Raise DetError unless det(mat) = 1 (exactly, or within tol for reals)."""
    d = mat.det()
    if isinstance(d, (int, Fraction)):
        if d != 1:
            raise DetError(f"{what} has determinant {d}, expected exactly 1")
    elif not abs(d - 1) <= tol:
        raise DetError(f"{what} has determinant {d}, |det-1| > {tol}")


def pow_cheb(d: Mat2, j: int, *, det_tol: float = _DET_TOL) -> Mat2:
    """d**j for unimodular d, via D^j = S_{j-1}(tr D) D - S_{j-2}(tr D) I."""
    require_det_one(d, tol=det_tol)
    t = d.trace()
    s1 = cheb(j - 1, t)
    s2 = cheb(j - 2, t)
    return Mat2(s1 * d.a11 - s2, s1 * d.a12, s1 * d.a21, s1 * d.a22 - s2)


@dataclass(frozen=True)
class Word:
    """A freely reduced word: letters are (generator, nonzero exponent).

    Adjacent letters always carry distinct generators; construction through
    the public operations keeps that normal form.
    """

    letters: tuple = ()

    @classmethod
    def empty(cls) -> "Word":
        return cls(())

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        if exp == 0:
            return cls(())
        return cls(((name, exp),))

    @classmethod
    def from_letters(cls, letters: Iterable[tuple]) -> "Word":
        return cls(_reduce(letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out: tuple = ()
        for _ in range(k):
            out = out + self.letters
        return Word(_reduce(out))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def length(self) -> int:
        """Letter count with multiplicity (sum of |exponent|)."""
        return sum(abs(e) for _, e in self.letters)

    def exponent_sum(self) -> int:
        """Total exponent sum over all generators (image in H_1 when all
        generators are conjugate meridians)."""
        return sum(e for _, e in self.letters)

    def generators(self) -> set:
        return {g for g, _ in self.letters}


def _reduce(letters: Iterable[tuple]) -> tuple:
    stack: list = []
    for g, e in letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = stack[-1][1] + e
            stack.pop()
            if merged != 0:
                stack.append((g, merged))
        else:
            stack.append((g, e))
    return tuple(stack)


def eval_word(word: Word, assign: Mapping[str, Mat2], *, det_tol: float = _DET_TOL) -> Mat2:
    """Ordered product of the assigned matrices along the word.

    Positive exponents multiply out directly; negative exponents go through
    pow_cheb (the assigned matrices must be unimodular for that to be the
    inverse power).
    """
    acc = Mat2.identity()
    for g, e in word.letters:
        try:
            m = assign[g]
        except KeyError:
            raise UnboundGenerator(f"generator {g!r} has no assigned matrix") from None
        if e > 0:
            for _ in range(e):
                acc = acc * m
        else:
            acc = acc * pow_cheb(m, e, det_tol=det_tol)
    return acc
