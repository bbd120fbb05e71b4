"""Solutions of x**2 - A*y**2 = m for m in {+1, -1, -2}.

``x`` is always the numerator (diagonal) role and ``y`` the denominator (side)
role, so a solution (x, y) corresponds to the approximation x/y of sqrt(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Set, Tuple

from .cfrac import cf_expand, iter_convergent_pairs
from .ratcore import DomainError, is_perfect_square, isqrt
from .theon import check_iterable_radicand

SUPPORTED_RESIDUES = (1, -1, -2)


@dataclass(frozen=True)
class PellSolution:
    A: int
    x: int
    y: int
    m: int

    def __post_init__(self):
        if self.x * self.x - self.A * self.y * self.y != self.m:
            raise DomainError(f"({self.x}, {self.y}) does not solve x^2 - {self.A}y^2 = {self.m}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.x, self.y)


def proclus_step(s: PellSolution) -> PellSolution:
    """(x, y) -> (x + 2y, x + y), flipping the sign of the residue +-1."""
    if s.A != 2:
        raise DomainError(f"the Proclus step is defined for A = 2, got {s.A}")
    if s.m not in (1, -1):
        raise DomainError(f"the Proclus step needs residue +-1, got {s.m}")
    return PellSolution(2, s.x + 2 * s.y, s.x + s.y, -s.m)


def brute_force_pell(A: int, m: int, y_bound: int) -> List[PellSolution]:
    """Every (x >= 0, 1 <= y <= y_bound) with x**2 - A*y**2 = m, by exhaustion."""
    if y_bound > 10**6:
        raise DomainError("y_bound is capped at 10**6")
    out = []
    for y in range(1, y_bound + 1):
        x = is_perfect_square(A * y * y + m)
        if x is not None:
            out.append(PellSolution(A, x, y, m))
    return out


def fundamental_unit(A: int) -> Tuple[int, int]:
    """Smallest (x, y), y >= 1, with x**2 - A*y**2 = 1."""
    for p, q in iter_convergent_pairs(cf_expand(A)):
        if p * p - A * q * q == 1:
            return p, q


def _check_args(A: int, m: int, count: int) -> None:
    check_iterable_radicand(A)
    if m not in SUPPORTED_RESIDUES:
        raise DomainError(f"residue {m} not supported; use one of {SUPPORTED_RESIDUES}")
    if count < 0:
        raise DomainError("count must be non-negative")


def _from_convergents(A: int, m: int, count: int) -> List[Tuple[int, int]]:
    # valid when m*m < A: every solution is then a convergent
    cf = cf_expand(A)
    if m == -1 and len(cf.period) % 2 == 0:
        return []
    # convergent residues repeat with period len(period) up to sign
    scan = 2 * len(cf.period) + 2
    out = []
    for k, (p, q) in enumerate(iter_convergent_pairs(cf)):
        if p * p - A * q * q == m:
            out.append((p, q))
            if len(out) >= count:
                break
        elif k >= scan and not out:
            break
    return out


def _class_representatives(A: int, m: int, x1: int, y1: int) -> List[Tuple[int, int]]:
    # Nagell's bounds: each solution class has a member with y in this range
    if m > 0:
        y_hi_sq = Fraction(y1 * y1 * m, 2 * (x1 + 1))
    else:
        y_hi_sq = Fraction(y1 * y1 * -m, 2 * (x1 - 1))
    y_hi = isqrt(y_hi_sq.numerator // y_hi_sq.denominator)
    reps = []
    for y in range(0, y_hi + 1):
        x = is_perfect_square(A * y * y + m)
        if x is not None:
            reps.append((x, y))
            if y:
                reps.append((x, -y))
    return reps


def _from_classes(A: int, m: int, count: int) -> List[Tuple[int, int]]:
    x1, y1 = fundamental_unit(A)
    reps = _class_representatives(A, m, x1, y1)
    if not reps:
        return []
    found: Set[Tuple[int, int]] = set()
    current = list(reps)
    last_y = [None] * len(reps)
    k = 0
    while True:
        grew = True
        for i, (X, Y) in enumerate(current):
            sol = (abs(X), abs(Y))
            if sol[1] >= 1:
                found.add(sol)
            if last_y[i] is not None and abs(Y) <= last_y[i]:
                grew = False
            last_y[i] = abs(Y)
        if k >= 2 and grew and len(found) >= count:
            cutoff = sorted(y for _, y in found)[count - 1] if count else 0
            if all(abs(Y) > cutoff for _, Y in current):
                break
        current = [(X * x1 + A * Y * y1, X * y1 + Y * x1) for X, Y in current]
        k += 1
    return sorted(found, key=lambda s: s[1])[:count]


def solve_pell(A: int, m: int, count: int) -> List[PellSolution]:
    """The first ``count`` solutions (x >= 0, y >= 1) of x**2 - A*y**2 = m, by increasing y.

    When m*m < A every solution appears among the continued-fraction
    convergents of sqrt(A), which are scanned directly.  Otherwise (A = 2 or
    3 with m = -2) solutions are grown from the finitely many class
    representatives by powers of the fundamental unit.  An empty list means
    the equation has no solution at all.
    """
    _check_args(A, m, count)
    if count == 0:
        return []
    if m * m < A:
        pairs = _from_convergents(A, m, count)
    else:
        pairs = _from_classes(A, m, count)
    return [PellSolution(A, x, y, m) for x, y in pairs]
