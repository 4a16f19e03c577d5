"""Non-abelian SL2(R) representation families of the double twist knots
J(2m, 2n), their meridian/longitude holonomy eigenvalues, certified
left-orderable surgery-slope intervals, and an exact-arithmetic suite
verifying every algebraic identity the machinery rests on."""

from .chebyshev import cheb, sdiff_roots
from .knots import DoubleTwistKnot, presentation, relation_residual, twist_presentation
from .longitude import HolonomyPair, SingularLongitude, longitude_eig, w12
from .mat2 import DetError, Mat2, UnboundGenerator, Word, eval_word, pow_cheb
from .numeric import (DEFAULT_TOL, DomainError, MaxIterExceeded, NoSignChange,
                      Rat, Tol, bisect)
from .riley import (BracketFailure, RepParamsXY, RepParamsXZ, alpha, beta,
                    bracket_x, build_rep_xy, build_rep_xz, gamma, phi,
                    phi_residual, solve_x, y_from_xz)
from .slopes import (ConstraintViolation, Family, Interval, IntervalSet,
                     SearchFailure, SlopeNotCertified, SlopeSample, SweepResult,
                     TrefoilExcluded, Witness, family_sample, find_witness,
                     omega, remark_b_intervals, solve_s0, solve_te, sweep,
                     theorem_intervals)
from .verify import IdentityId, IdentityReport, run_all, run_identity

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL", "BracketFailure", "ConstraintViolation", "DetError",
    "DomainError", "DoubleTwistKnot", "Family", "HolonomyPair", "IdentityId",
    "IdentityReport", "Interval", "IntervalSet", "Mat2", "MaxIterExceeded",
    "NoSignChange", "Rat", "RepParamsXY", "RepParamsXZ", "SearchFailure",
    "SingularLongitude", "SlopeNotCertified", "SlopeSample", "SweepResult",
    "Tol", "TrefoilExcluded", "UnboundGenerator", "Witness", "Word",
    "alpha", "beta", "bisect", "bracket_x", "build_rep_xy", "build_rep_xz",
    "cheb", "eval_word", "family_sample", "find_witness", "gamma",
    "longitude_eig", "omega", "phi", "phi_residual", "pow_cheb",
    "presentation", "relation_residual", "remark_b_intervals", "run_all",
    "run_identity", "sdiff_roots", "solve_s0", "solve_te", "solve_x", "sweep",
    "theorem_intervals", "twist_presentation", "w12", "y_from_xz",
]
