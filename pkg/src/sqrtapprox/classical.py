"""Heron's iteration and the arithmetic-harmonic mean, in exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .ratcore import DomainError, RationalLike, isqrt


def heron_step(x: RationalLike, A: int) -> Fraction:
    """Average of ``x`` and ``A/x``.

    >>> heron_step(2, 3)
    Fraction(7, 4)
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"Heron iterate must be positive, got {x}")
    if A < 1:
        raise DomainError(f"radicand must be >= 1, got {A}")
    return (x + A / x) / 2


def default_heron_seed(A: int) -> Fraction:
    return Fraction(isqrt(A) + 1)


def heron_sequence(A: int, x0: Optional[RationalLike] = None, count: int = 1) -> List[Fraction]:
    """``count`` Heron iterates, the seed included as the first entry.

    Without a seed the start is floor(sqrt(A)) + 1, which lies above sqrt(A).
    No rounding is ever applied: numerator and denominator roughly double in
    length per step.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    x = default_heron_seed(A) if x0 is None else Fraction(x0)
    if x <= 0:
        raise DomainError(f"Heron seed must be positive, got {x}")
    out = [x]
    for _ in range(count - 1):
        x = heron_step(x, A)
        out.append(x)
    return out


@dataclass(frozen=True)
class AhmState:
    """Upper/lower pair of the arithmetic-harmonic mean iteration.

    Inputs are sorted on construction so that ``b <= a`` always holds.
    """

    n: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a <= 0 or b <= 0:
            raise DomainError(f"AHM terms must be positive, got a={a}, b={b}")
        if b > a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def product(self) -> Fraction:
        return self.a * self.b


def ahm_step(s: AhmState) -> AhmState:
    a, b = s.a, s.b
    arith = (a + b) / 2
    harm = 2 * a * b / (a + b)
    nxt = AhmState(s.n + 1, arith, harm)
    assert b <= nxt.b <= nxt.a <= a
    assert nxt.product == s.product
    return nxt


def _contains_root(lo: Fraction, hi: Fraction, P: Fraction) -> bool:
    # lo <= sqrt(P) <= hi, by squaring (all positive)
    return lo * lo <= P <= hi * hi


def ahm_enclosure(a0: RationalLike, b0: RationalLike, count: int) -> List[Tuple[Fraction, Fraction]]:
    """Intervals ``(lower, upper)`` after each of ``count`` AHM steps.

    Every interval contains sqrt(a0*b0) and is contained in its predecessor;
    both facts are checked exactly.
    """
    s = AhmState(0, Fraction(a0), Fraction(b0))
    P = s.product
    out = []
    prev = (s.b, s.a)
    for _ in range(count):
        s = ahm_step(s)
        cur = (s.b, s.a)
        if not (prev[0] <= cur[0] and cur[1] <= prev[1]):
            raise AssertionError("AHM intervals failed to nest")
        if not _contains_root(cur[0], cur[1], P):
            raise AssertionError("AHM interval lost the square root")
        out.append(cur)
        prev = cur
    return out
