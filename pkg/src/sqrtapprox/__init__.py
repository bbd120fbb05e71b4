"""Exact rational approximation of square roots by classical iterations.

Side and diagonal numbers, Heron's rule, the arithmetic-harmonic mean,
continued fractions and Pell equations, all in :class:`fractions.Fraction`.
"""

__version__ = "0.1.0"

from .ratcore import (
    DomainError,
    Ordering,
    SexagesimalDigits,
    Surd,
    cmp_sqrt,
    eval_sexagesimal,
    is_perfect_square,
    isqrt,
    reduce,
    residue,
    to_decimal,
)
from .theon import (
    Convergent,
    EnclosureChain,
    Side,
    SideDiagonalState,
    contraction_identity_check,
    enclosure_chain,
    error_certificate,
    fixed_point_check,
    ratio,
    residue_recurrence_check,
    theon_sequence,
    theon_step,
    verify_archimedes,
)
from .classical import AhmState, ahm_enclosure, ahm_step, heron_sequence, heron_step
from .cfrac import CFExpansion, cf_expand, convergents, semiconvergent_equals_theon
from .pell import PellSolution, brute_force_pell, proclus_step, solve_pell
from .pythag import (
    Triple,
    pythagoras_family,
    square_from_positive_solution,
    triple_from_negative_solution,
)
