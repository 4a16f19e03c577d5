"""Double twist knots J(2m, 2n): presentations and the defining relation.

J(2m, 2n) is the two-bridge knot with two twist boxes holding 2m and 2n
half twists.  Its group has the two-generator presentation

    < a, b | a w^n = w^n b >,   w = (a b^-1)^m (a^-1 b)^m,

with a, b meridians.  For the twist knots (m = 1) there is an equivalent
presentation < b, c | b u = u c > with u = (b^-1 c)^n c (b^-1 c)^-n.

``relation_residual`` measures how far a pair of candidate meridian
matrices is from satisfying the defining relation; it vanishes exactly on
the representation variety.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .mat2 import Mat2, Word, eval_word, pow_cheb, require_det_one
from .numeric import WORK_DPS


@dataclass(frozen=True)
class DoubleTwistKnot:
    """The pair (m, n) with m >= 1 and n != 0 labelling J(2m, 2n)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n == 0:
            raise ValueError("n must be nonzero (J(2m, 0) is trivial)")

    @property
    def is_trefoil(self) -> bool:
        return self.m == 1 and self.n == 1

    @property
    def is_excluded_from_theorem(self) -> bool:
        return self.is_trefoil


@dataclass(frozen=True)
class Presentation:
    """A two-generator one-relator presentation, relator g1 * c^n * g2^-1 * c^-n."""

    generators: tuple
    relator: Word
    core_word: Word  # the conjugating word (w for J(2m,2n), u for twist form)


def w_word(m: int) -> Word:
    """The word w = (a b^-1)^m (a^-1 b)^m."""
    ab = Word.gen("a") * Word.gen("b", -1)
    a_b = Word.gen("a", -1) * Word.gen("b")
    return ab**m * a_b**m


def w_word_reversed(m: int) -> Word:
    """w read right to left: (b a^-1)^m (b^-1 a)^m.

    Holonomy formulas inherited from the two-bridge literature evaluate
    words in this reading; its image has the same trace as w and its
    (1,2) entry is the one the longitude formula is stated for.
    """
    ba = Word.gen("b") * Word.gen("a", -1)
    b_a = Word.gen("b", -1) * Word.gen("a")
    return ba**m * b_a**m


def u_word(n: int) -> Word:
    """The word u = (b^-1 c)^n c (b^-1 c)^-n."""
    bc = Word.gen("b", -1) * Word.gen("c")
    return bc**n * Word.gen("c") * bc**-n


def presentation(knot: DoubleTwistKnot) -> Presentation:
    """The presentation < a, b | a w^n = w^n b > as a single relator.

    The relator is a * w^n * b^-1 * w^-n; before free reduction it has
    2 + 8*m*|n| letters.
    """
    w = w_word(knot.m)
    wn = w**knot.n
    relator = Word.gen("a") * wn * Word.gen("b", -1) * wn.inverse()
    return Presentation(("a", "b"), relator, w)


def twist_presentation(n: int) -> Presentation:
    """The twist-knot presentation < b, c | b u = u c > of J(2, 2n)."""
    if n == 0:
        raise ValueError("n must be nonzero")
    u = u_word(n)
    relator = Word.gen("b") * u * Word.gen("c", -1) * u.inverse()
    return Presentation(("b", "c"), relator, u)


def relation_residual(knot: DoubleTwistKnot, a_mat: Mat2, b_mat: Mat2,
                      *, det_tol: float = 1e-12):
    """Max-abs entry of A W^n - W^n B with W the image of w.

    Zero exactly when (A, B) define a representation of the knot group.
    W^n is formed through the trace recurrence, which keeps the residual
    well conditioned even when the entries of W are large.
    """
    # high-precision inputs must not be degraded by the ambient mpmath
    # context (floats and rationals never touch it)
    with mp.workdps(max(mp.mp.dps, WORK_DPS)):
        require_det_one(a_mat, tol=det_tol, what="A")
        require_det_one(b_mat, tol=det_tol, what="B")
        w_mat = eval_word(w_word(knot.m), {"a": a_mat, "b": b_mat}, det_tol=det_tol)
        # det(W) = 1 by construction; its computed value drifts with the
        # entry scale, so the unimodularity sanity check is scale-relative.
        wn_tol = det_tol * (1 + float(w_mat.max_abs()) ** 2)
        wn = pow_cheb(w_mat, knot.n, det_tol=wn_tol)
        diff = a_mat * wn - wn * b_mat
        return diff.max_abs()
