"""Exact rational helpers: reduction, comparison against square roots, base-60 values.

Every value in the package is a :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing here ever takes a floating-point square root; comparisons
against sqrt(A) are done by cross-multiplying integers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an argument is outside the domain an operation is defined on."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def reduce(num: int, den: int) -> Fraction:
    """Return num/den in lowest terms with a positive denominator.

    >>> reduce(52, 30)
    Fraction(26, 15)
    """
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def _check_radicand(A: int) -> None:
    if A < 0:
        raise DomainError(f"radicand must be non-negative, got {A}")


def cmp_sqrt(r: RationalLike, A: int) -> Ordering:
    """Sign of ``r - sqrt(A)``, decided by comparing num**2 with A*den**2."""
    r = Fraction(r)
    _check_radicand(A)
    if r < 0:
        raise DomainError(f"cmp_sqrt needs r >= 0, got {r}")
    lhs = r.numerator * r.numerator
    rhs = A * r.denominator * r.denominator
    return Ordering((lhs > rhs) - (lhs < rhs))


def isqrt(N: int) -> int:
    """Floor of the square root of a non-negative integer (any size)."""
    if N < 0:
        raise DomainError(f"isqrt needs N >= 0, got {N}")
    return math.isqrt(N)


def is_perfect_square(A: int) -> Optional[int]:
    """Return ``a`` when ``A == a*a``, else ``None``."""
    if A < 0:
        return None
    a = math.isqrt(A)
    return a if a * a == A else None


def residue(r: RationalLike, A: int) -> int:
    """``num**2 - A*den**2`` of the reduced fraction ``r``."""
    r = Fraction(r)
    return r.numerator * r.numerator - A * r.denominator * r.denominator


@dataclass(frozen=True)
class SexagesimalDigits:
    integer_part: int
    fraction_digits: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fraction_digits", tuple(self.fraction_digits))
        if self.integer_part < 0:
            raise DomainError("integer part must be non-negative")
        for d in self.fraction_digits:
            if not 0 <= d < 60:
                raise DomainError(f"sexagesimal digit out of range [0, 59]: {d}")

    @classmethod
    def parse(cls, text: str) -> "SexagesimalDigits":
        """Parse the usual ``"1;24,51,10"`` notation."""
        head, _, tail = text.strip().partition(";")
        try:
            integer_part = int(head)
            digits = [int(t) for t in tail.split(",")] if tail.strip() else []
        except ValueError as exc:
            raise DomainError(f"malformed sexagesimal literal {text!r}") from exc
        return cls(integer_part, tuple(digits))

    def __str__(self):
        if not self.fraction_digits:
            return str(self.integer_part)
        return f"{self.integer_part};" + ",".join(str(d) for d in self.fraction_digits)


def eval_sexagesimal(d: Union[SexagesimalDigits, Sequence[int]]) -> Fraction:
    """Exact value of a base-60 expansion.

    Accepts either a :class:`SexagesimalDigits` or a plain sequence whose first
    entry is the integer part.

    >>> eval_sexagesimal([1, 24, 51, 10])
    Fraction(30547, 21600)
    """
    if not isinstance(d, SexagesimalDigits):
        d = SexagesimalDigits(d[0], tuple(d[1:]))
    num, den = d.integer_part, 1
    for digit in d.fraction_digits:
        num = num * 60 + digit
        den *= 60
    return reduce(num, den)


def to_decimal(r: RationalLike, digits: int = 12) -> str:
    """Render ``r`` with ``digits`` places after the point, correctly rounded.

    Rounding is round-half-even on the exact rational; no float is involved.
    """
    if digits < 0:
        raise DomainError("digits must be non-negative")
    r = Fraction(r)
    scaled = round(r * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class Surd:
    """The number ``p + q*sqrt(A)`` with rational ``p`` and ``q``.

    Enough field arithmetic to state error bounds and the step-map identity
    exactly; :meth:`sign` needs at most one squaring.
    """

    p: Fraction
    q: Fraction
    A: int

    def __post_init__(self):
        _check_radicand(self.A)
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def root(cls, A: int) -> "Surd":
        return cls(Fraction(0), Fraction(1), A)

    def _coerce(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.A != self.A:
                raise DomainError("surds over different radicands")
            return other
        return Surd(Fraction(other), Fraction(0), self.A)

    def __add__(self, other):
        o = self._coerce(other)
        return Surd(self.p + o.p, self.q + o.q, self.A)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.p, -self.q, self.A)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Surd(self.p * o.p + self.A * self.q * o.q, self.p * o.q + self.q * o.p, self.A)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.p, -self.q, self.A)

    def norm(self) -> Fraction:
        return self.p * self.p - self.A * self.q * self.q

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.q == 0:
            if o.p == 0:
                raise ZeroDivisionError("division by zero surd")
            return Surd(self.p / o.p, self.q / o.p, self.A)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("divisor has zero norm")
        num = self * o.conjugate()
        return Surd(num.p / n, num.q / n, self.A)

    def sign(self) -> int:
        """Exact sign of ``p + q*sqrt(A)``."""
        ps = (self.p > 0) - (self.p < 0)
        qs = (self.q > 0) - (self.q < 0)
        if qs == 0 or self.A == 0:
            return ps
        if ps == 0 or ps == qs:
            return qs
        # opposite signs: the larger square wins
        d = self.p * self.p - self.A * self.q * self.q
        dom = (d > 0) - (d < 0)
        return ps * dom if dom else 0

    def __abs__(self):
        return -self if self.sign() < 0 else self
