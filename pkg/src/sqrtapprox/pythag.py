"""Pythagorean triples attached to solutions of x**2 - 2*y**2 = +-1."""

from __future__ import annotations

from typing import NamedTuple

from .ratcore import DomainError


class Triple(NamedTuple):
    a: int
    b: int
    c: int

    def is_valid(self) -> bool:
        return self.a * self.a + self.b * self.b == self.c * self.c


def triple_from_negative_solution(x: int, y: int) -> Triple:
    """From x**2 - 2*y**2 = -1 build ((x-1)/2, (x+1)/2, y).

    x is necessarily odd.  The starting pair (1, 1) gives the degenerate
    triple (0, 1, 1), which is accepted.
    """
    if x < 1 or y < 1 or x * x - 2 * y * y != -1:
        raise DomainError(f"({x}, {y}) does not satisfy x^2 - 2y^2 = -1")
    t = Triple((x - 1) // 2, (x + 1) // 2, y)
    assert t.is_valid()
    return t


def square_from_positive_solution(x: int, y: int) -> int:
    """From x**2 - 2*y**2 = 1 return (x**2 - 1)/2, which equals y**2."""
    if x < 1 or y < 1 or x * x - 2 * y * y != 1:
        raise DomainError(f"({x}, {y}) does not satisfy x^2 - 2y^2 = 1")
    sq = (x * x - 1) // 2
    assert sq == y * y
    return sq


def pythagoras_family(n: int) -> Triple:
    """(2n + 1, 2n^2 + 2n, 2n^2 + 2n + 1) for n >= 1."""
    if n < 1:
        raise DomainError("pythagoras_family needs n >= 1")
    b = 2 * n * n + 2 * n
    t = Triple(2 * n + 1, b, b + 1)
    assert t.is_valid()
    return t
