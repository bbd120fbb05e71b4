from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from sqrtapprox.cfrac import cf_expand, convergents
from sqrtapprox.ratcore import DomainError, Ordering, cmp_sqrt, is_perfect_square
from sqrtapprox.theon import (
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

F = Fraction
SQRT2_TABLE = [F(1), F(3, 2), F(7, 5), F(17, 12), F(41, 29), F(99, 70), F(239, 169)]
SQRT3_TABLE = [F(1), F(2), F(5, 3), F(7, 4), F(19, 11), F(26, 15), F(71, 41), F(97, 56),
               F(265, 153), F(362, 209), F(989, 571), F(1351, 780)]


def _raw_ratios(A, count):
    # plain integer loop, kept apart from the library's state objects
    x, y, out = 1, 1, []
    for _ in range(count):
        out.append(F(y, x))
        x, y = x + y, y + A * x
    return out


@pytest.mark.parametrize("A, x, y, nx, ny", [
    (2, 1, 1, 2, 3),
    (2, 2, 3, 5, 7),
    (3, 1, 1, 2, 4),
])
def test_theon_step(A, x, y, nx, ny):
    s = theon_step(SideDiagonalState(A, 0, x, y))
    assert (s.x, s.y, s.n) == (nx, ny, 1)


@pytest.mark.parametrize("A, x, y, value, side, res", [
    (2, 5, 7, F(7, 5), Side.BELOW, -1),
    (2, 12, 17, F(17, 12), Side.ABOVE, 1),
    (3, 3, 5, F(5, 3), Side.BELOW, -2),
])
def test_ratio(A, x, y, value, side, res):
    c = ratio(SideDiagonalState(A, 0, x, y))
    assert (c.value, c.side, c.residue) == (value, side, res)


def test_sequences_match_tables():
    assert [c.value for c in theon_sequence(2, 7)] == SQRT2_TABLE
    assert [c.value for c in theon_sequence(3, 12)] == SQRT3_TABLE
    assert [c.value for c in theon_sequence(2, 1)] == [F(1)]
    assert SQRT3_TABLE == _raw_ratios(3, 12)


def test_sqrt3_archimedes_indices():
    seq = theon_sequence(3, 12)
    assert seq[8].value == F(265, 153) and seq[8].index == 8
    assert seq[11].value == F(1351, 780) and seq[11].index == 11


@pytest.mark.parametrize("A", [0, 1, 4, 9, 16])
def test_sequence_rejects_degenerate_radicand(A):
    with pytest.raises(DomainError):
        theon_sequence(A, 3)


def test_custom_seed():
    seq = theon_sequence(2, 3, x0=2, y0=3)
    assert [c.value for c in seq] == [F(3, 2), F(7, 5), F(17, 12)]


def test_fixed_point_check():
    assert fixed_point_check(4) == 2
    assert (F(2) + 4) / (F(2) + 1) == 2
    assert fixed_point_check(9) == 3
    assert fixed_point_check(3) is None


def test_enclosure_chain_sqrt3():
    ch = enclosure_chain(3, 12)
    assert [c.value for c in ch.below] == [F(1), F(5, 3), F(19, 11), F(71, 41), F(265, 153), F(989, 571)]
    assert [c.value for c in ch.above] == [F(2), F(7, 4), F(26, 15), F(97, 56), F(362, 209), F(1351, 780)]


def test_enclosure_chain_sqrt2():
    ch = enclosure_chain(2, 8)
    assert [c.value for c in ch.below] == [F(1), F(7, 5), F(41, 29), F(239, 169)]
    assert [c.value for c in ch.above][:3] == [F(3, 2), F(17, 12), F(99, 70)]
    one = enclosure_chain(2, 1)
    assert [c.value for c in one.below] == [F(1)] and one.above == []


@pytest.mark.parametrize("A", [2, 3, 5, 6, 7, 8, 10])
def test_alternation_and_squeezing(A):
    seq = theon_sequence(A, 51)
    for a, b in zip(seq, seq[1:]):
        assert a.side is not b.side
    ch = enclosure_chain(A, 51)
    for lo in ch.below:
        for hi in ch.above:
            assert lo.value < hi.value
    for c in seq:
        assert (c.residue < 0) == (c.side is Side.BELOW)
        assert (c.side is Side.BELOW) == (cmp_sqrt(c.value, A) is Ordering.LESS)


@pytest.mark.parametrize("A, x, y", [(2, 1, 1), (3, 1, 1), (3, 2, 4)])
def test_residue_recurrence_examples(A, x, y):
    assert residue_recurrence_check(SideDiagonalState(A, 0, x, y))


def test_residue_recurrence_values():
    s = SideDiagonalState(3, 0, 1, 1)
    assert s.raw_residue == -2
    assert theon_step(s).raw_residue == 4
    assert theon_step(theon_step(s)).raw_residue == -8


@given(st.integers(2, 200), st.integers(1, 10**6), st.integers(1, 10**6))
def test_residue_recurrence_property(A, x, y):
    assume(is_perfect_square(A) is None)
    assert residue_recurrence_check(SideDiagonalState(A, 0, x, y))


def test_reduced_residue_pattern_sqrt3():
    res = [c.residue for c in theon_sequence(3, 30)][1:]
    assert res == [1, -2] * 14 + [1]


def test_reduced_residue_pattern_sqrt2():
    res = [c.residue for c in theon_sequence(2, 20)]
    assert res == [-1, 1] * 10


def _certificate_oracle(A, n, r):
    # 80-digit evaluation; only used where the margin is far above rounding
    with mpmath.workdps(80):
        root = mpmath.sqrt(A)
        lhs = abs(mpmath.mpf(r.numerator) / r.denominator - root)
        rhs = mpmath.mpf(2) ** -n * (root - 1)
        assert abs(lhs - rhs) > mpmath.mpf(10) ** -60
        return bool(lhs < rhs)


@pytest.mark.parametrize("A, n, r, expected", [
    (2, 1, F(3, 2), True),
    (3, 2, F(5, 3), True),
    (2, 1, F(2), False),
])
def test_error_certificate_examples(A, n, r, expected):
    assert _certificate_oracle(A, n, r) is expected
    assert error_certificate(A, n, r) is expected


@pytest.mark.parametrize("A", [2, 3])
def test_error_certificate_all_indices(A):
    for c in theon_sequence(A, 41)[1:]:
        assert error_certificate(A, c.index, c.value)
        assert _certificate_oracle(A, c.index, c.value)


def test_error_certificate_domain():
    with pytest.raises(DomainError):
        error_certificate(5, 1, F(3))
    with pytest.raises(DomainError):
        error_certificate(2, 0, F(1))


@given(st.integers(1, 60), st.fractions(min_value=F(1, 10), max_value=10))
def test_error_certificate_agrees_with_oracle(n, r):
    for A in (2, 3):
        with mpmath.workdps(80):
            gap = abs(abs(mpmath.mpf(r.numerator) / r.denominator - mpmath.sqrt(A))
                      - mpmath.mpf(2) ** -n * (mpmath.sqrt(A) - 1))
        if gap < mpmath.mpf(10) ** -60:
            continue
        assert error_certificate(A, n, r) == _certificate_oracle(A, n, r)


@pytest.mark.parametrize("A, r", [(2, F(1)), (3, F(2)), (3, F(5, 3)), (7, F(11, 4)), (4, F(3))])
def test_contraction_identity(A, r):
    assert contraction_identity_check(A, r)
    # symbolic oracle
    s, rr = sympy.sqrt(A), sympy.Rational(r.numerator, r.denominator)
    assert sympy.simplify((rr + A) / (rr + 1) - s - (s - 1) * (s - rr) / (rr + 1)) == 0


def test_contraction_identity_pole():
    with pytest.raises(DomainError):
        contraction_identity_check(2, F(-1))


def test_printed_denominator_is_wrong():
    # dividing by r alone (instead of r + 1) does not give the step error
    s, r = sympy.sqrt(3), sympy.Rational(2)
    assert sympy.simplify((r + 3) / (r + 1) - s - (s - 1) * (s - r) / r) != 0


@pytest.mark.parametrize("A", [2, 3])
def test_theon_equals_cf_convergents(A):
    assert [c.value for c in theon_sequence(A, 15)] == convergents(cf_expand(A), 15)


def test_verify_archimedes():
    rep = verify_archimedes()
    assert rep["passed"]
    assert rep["checks"]["lower"] == {"num_sq": 70225, "three_den_sq": 70227}
    assert rep["checks"]["upper"] == {"num_sq": 1825201, "three_den_sq": 1825200}
    assert F(26) - F(1, 51) == 15 * F(265, 153)
    assert F(26) - F(1, 52) == 15 * F(1351, 780)


def test_verify_archimedes_swapped_bounds_fail():
    rep = verify_archimedes(F(1351, 780), F(265, 153))
    assert not rep["passed"]
    assert not rep["lower_ok"] and not rep["upper_ok"] and not rep["equivalence_ok"]
