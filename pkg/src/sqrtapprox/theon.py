"""Side and diagonal numbers, generalised to the square root of any non-square A.

Starting from a side ``x`` and diagonal ``y`` the step is::

    x' = x + y
    y' = y + A*x

and the ratio ``y/x`` approaches sqrt(A) from alternating sides.  For A = 2 this
is the classical 1, 3/2, 7/5, 17/12, ... table; for A = 3 it reaches the bounds
265/153 and 1351/780 at indices 8 and 11.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional

from .ratcore import (
    DomainError,
    Ordering,
    RationalLike,
    Surd,
    cmp_sqrt,
    is_perfect_square,
    reduce,
    residue,
)


class Side(enum.Enum):
    BELOW = "below"
    ABOVE = "above"
    EXACT = "exact"

    @classmethod
    def of(cls, r: RationalLike, A: int) -> "Side":
        return {
            Ordering.LESS: cls.BELOW,
            Ordering.EQUAL: cls.EXACT,
            Ordering.GREATER: cls.ABOVE,
        }[cmp_sqrt(r, A)]


def check_iterable_radicand(A: int) -> None:
    """Reject radicands for which the iteration is degenerate."""
    if A < 2:
        raise DomainError(f"radicand must be >= 2, got {A}")
    a = is_perfect_square(A)
    if a is not None:
        raise DomainError(f"A = {A} is a perfect square; the step map has fixed point {a}")


@dataclass(frozen=True)
class SideDiagonalState:
    A: int
    n: int
    x: int
    y: int

    def __post_init__(self):
        check_iterable_radicand(self.A)
        if self.x < 1 or self.y < 1:
            raise DomainError(f"side and diagonal must be >= 1, got x={self.x}, y={self.y}")
        if self.n < 0:
            raise DomainError("step index must be non-negative")

    @property
    def raw_residue(self) -> int:
        """``y**2 - A*x**2`` on the unreduced pair."""
        return self.y * self.y - self.A * self.x * self.x


@dataclass(frozen=True)
class Convergent:
    value: Fraction
    index: int
    side: Side
    residue: int


@dataclass(frozen=True)
class EnclosureChain:
    A: int
    below: List[Convergent] = field(default_factory=list)
    above: List[Convergent] = field(default_factory=list)

    @property
    def lower(self) -> Optional[Fraction]:
        return self.below[-1].value if self.below else None

    @property
    def upper(self) -> Optional[Fraction]:
        return self.above[-1].value if self.above else None


def theon_step(s: SideDiagonalState) -> SideDiagonalState:
    return SideDiagonalState(s.A, s.n + 1, s.x + s.y, s.y + s.A * s.x)


def ratio(s: SideDiagonalState) -> Convergent:
    """Reduced ``y/x`` of a state, tagged with its side of sqrt(A) and residue."""
    value = reduce(s.y, s.x)
    return Convergent(value, s.n, Side.of(value, s.A), residue(value, s.A))


def iter_states(A: int, x0: int = 1, y0: int = 1) -> Iterator[SideDiagonalState]:
    """Endless stream of raw states starting at ``(x0, y0)``."""
    s = SideDiagonalState(A, 0, x0, y0)
    while True:
        yield s
        s = theon_step(s)


def theon_sequence(A: int, count: int, x0: int = 1, y0: int = 1) -> List[Convergent]:
    """The first ``count`` reduced convergents y_n/x_n, n = 0, 1, ..."""
    if count < 1:
        raise DomainError("count must be >= 1")
    out = []
    for s in iter_states(A, x0, y0):
        out.append(ratio(s))
        if len(out) == count:
            return out


def step_map(r: RationalLike, A: int) -> Fraction:
    """The ratio form of one step, ``r -> (r + A)/(r + 1)``."""
    r = Fraction(r)
    if r == -1:
        raise DomainError("r = -1 is a pole of the step map")
    return (r + A) / (r + 1)


def fixed_point_check(A: int) -> Optional[Fraction]:
    """For a perfect square ``A = a*a`` return ``a`` (a fixed point of the step map)."""
    a = is_perfect_square(A)
    if a is None:
        return None
    a = Fraction(a)
    assert step_map(a, A) == a
    return a


def enclosure_chain(A: int, depth: int, x0: int = 1, y0: int = 1) -> EnclosureChain:
    """Split the first ``depth`` convergents into lower and upper bounds of sqrt(A).

    The lower bounds come out strictly increasing, the upper bounds strictly
    decreasing, and every lower bound is below every upper bound; each of these
    facts is checked exactly before returning.
    """
    below, above = [], []
    for c in theon_sequence(A, depth, x0, y0):
        if c.side is Side.BELOW:
            below.append(c)
        elif c.side is Side.ABOVE:
            above.append(c)
        else:
            raise AssertionError("rational equal to sqrt of a non-square")
    lo = [c.value for c in below]
    hi = [c.value for c in above]
    if any(a >= b for a, b in zip(lo, lo[1:])):
        raise AssertionError(f"lower chain not increasing for A={A}")
    if any(a <= b for a, b in zip(hi, hi[1:])):
        raise AssertionError(f"upper chain not decreasing for A={A}")
    if lo and hi and lo[-1] >= hi[-1]:
        raise AssertionError("lower and upper chains overlap")
    return EnclosureChain(A, below, above)


def residue_recurrence_check(s: SideDiagonalState) -> bool:
    """True when one step multiplies the raw residue by ``-(A - 1)``."""
    return theon_step(s).raw_residue == -(s.A - 1) * s.raw_residue


def error_certificate(A: int, n: int, r_n: RationalLike) -> bool:
    """Exactly decide ``|r_n - sqrt(A)| < (1/2)**n * (sqrt(A) - 1)``.

    The halving bound is only claimed for A = 2 and A = 3.  At n = 0 the
    inequality degenerates to an equality for r_0 = 1, so n must be >= 1.
    """
    if A not in (2, 3):
        raise DomainError(f"the halving error bound is only asserted for A in {{2, 3}}, got {A}")
    if n < 1:
        raise DomainError("error certificate needs n >= 1")
    half_n = Fraction(1, 2**n)
    root = Surd.root(A)
    err = abs(Fraction(r_n) - root)
    bound = half_n * (root - 1)
    return (bound - err).sign() > 0


def contraction_identity_check(A: int, r: RationalLike) -> bool:
    """Check ``step(r) - sqrt(A) == (sqrt(A) - 1)(sqrt(A) - r)/(r + 1)`` in Q(sqrt(A))."""
    r = Fraction(r)
    if r == -1:
        raise DomainError("r = -1 is a pole of the step map")
    root = Surd.root(A)
    lhs = step_map(r, A) - root
    rhs = (root - 1) * (root - r) / (r + 1)
    return (lhs - rhs).sign() == 0


ARCHIMEDES_LOWER = Fraction(265, 153)
ARCHIMEDES_UPPER = Fraction(1351, 780)


def verify_archimedes(lower: RationalLike = ARCHIMEDES_LOWER,
                      upper: RationalLike = ARCHIMEDES_UPPER) -> dict:
    """Check ``lower < sqrt(3) < upper`` and the scaled form with 26 - 1/51, 26 - 1/52.

    With the default bounds, ``15*lower == 26 - 1/51`` and ``15*upper == 26 - 1/52``,
    so the pair is the same statement as ``26 - 1/51 < 15*sqrt(3) < 26 - 1/52``.
    The returned report carries every integer comparison it made.
    """
    lower, upper = Fraction(lower), Fraction(upper)
    scaled_lower = 26 - Fraction(1, 51)
    scaled_upper = 26 - Fraction(1, 52)
    checks = {
        "lower": {
            "num_sq": lower.numerator ** 2,
            "three_den_sq": 3 * lower.denominator ** 2,
        },
        "upper": {
            "num_sq": upper.numerator ** 2,
            "three_den_sq": 3 * upper.denominator ** 2,
        },
    }
    lower_ok = cmp_sqrt(lower, 3) is Ordering.LESS
    upper_ok = cmp_sqrt(upper, 3) is Ordering.GREATER
    # 15*sqrt(3) = sqrt(675)
    scaled_ok = (cmp_sqrt(scaled_lower, 675) is Ordering.LESS
                 and cmp_sqrt(scaled_upper, 675) is Ordering.GREATER)
    equivalence_ok = scaled_lower / 15 == lower and scaled_upper / 15 == upper
    return {
        "lower": f"{lower.numerator}/{lower.denominator}",
        "upper": f"{upper.numerator}/{upper.denominator}",
        "checks": checks,
        "lower_ok": lower_ok,
        "upper_ok": upper_ok,
        "scaled_ok": scaled_ok,
        "equivalence_ok": equivalence_ok,
        "passed": lower_ok and upper_ok and scaled_ok and equivalence_ok,
    }
