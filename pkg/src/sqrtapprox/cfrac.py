"""Periodic continued fraction of sqrt(A) and its convergents."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, List, Tuple

from .ratcore import DomainError, isqrt
from .theon import check_iterable_radicand, theon_sequence

MAX_PERIOD_STEPS = 10**6


@dataclass(frozen=True)
class CFExpansion:
    A: int
    a0: int
    period: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(self.period))

    def partial_quotients(self) -> Iterator[int]:
        """a0, a1, a2, ... without end."""
        yield self.a0
        while True:
            yield from self.period

    def __str__(self):
        return f"[{self.a0}; (" + ", ".join(map(str, self.period)) + ")]"


def cf_expand(A: int) -> CFExpansion:
    """Expand sqrt(A) with the integer (m, d, a) recurrence.

    The period closes at the first partial quotient equal to ``2*a0``.
    """
    check_iterable_radicand(A)
    a0 = isqrt(A)
    m, d, a = 0, 1, a0
    period = []
    for _ in range(MAX_PERIOD_STEPS):
        m = d * a - m
        rem = A - m * m
        assert rem % d == 0, "d must divide A - m**2"
        d = rem // d
        a = (a0 + m) // d
        period.append(a)
        if a == 2 * a0:
            return CFExpansion(A, a0, tuple(period))
    raise RuntimeError(f"period of sqrt({A}) not closed after {MAX_PERIOD_STEPS} steps")


def iter_convergent_pairs(cf: CFExpansion) -> Iterator[Tuple[int, int]]:
    """Endless ``(p_k, q_k)`` stream, k = 0, 1, ..."""
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    yield p, q
    quotients = cf.partial_quotients()
    next(quotients)
    for a in quotients:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield p, q


def convergents(cf: CFExpansion, count: int) -> List[Fraction]:
    if count < 1:
        raise DomainError("count must be >= 1")
    out = []
    for p, q in iter_convergent_pairs(cf):
        assert gcd(p, q) == 1
        out.append(Fraction(p, q))
        if len(out) == count:
            return out


def semiconvergent_equals_theon(A: int, N: int) -> bool:
    """Whether the first ``N`` CF convergents of sqrt(A) equal the reduced side/diagonal ratios.

    Only claimed for A = 2 and A = 3 (it already fails for A = 5).
    """
    if A not in (2, 3):
        raise DomainError(f"coincidence only claimed for A in {{2, 3}}, got {A}")
    if not 1 <= N <= 20:
        raise DomainError("N must be in [1, 20]")
    cf_vals = convergents(cf_expand(A), N)
    theon_vals = [c.value for c in theon_sequence(A, N)]
    return cf_vals == theon_vals
