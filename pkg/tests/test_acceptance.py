"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion is
printed in the terminal summary.  ``python tests/test_acceptance.py`` prints the
same lines without pytest.
"""

import contextlib
import io
import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from sqrtapprox.cfrac import cf_expand, convergents
from sqrtapprox.classical import AhmState, ahm_step, heron_sequence
from sqrtapprox.cli import main
from sqrtapprox.pell import PellSolution, brute_force_pell, proclus_step, solve_pell
from sqrtapprox.pythag import pythagoras_family, triple_from_negative_solution
from sqrtapprox.ratcore import Ordering, cmp_sqrt, eval_sexagesimal, to_decimal
from sqrtapprox.theon import (
    SideDiagonalState,
    error_certificate,
    iter_states,
    residue_recurrence_check,
    theon_sequence,
    verify_archimedes,
)

RESULTS = {}


def c01_sqrt2_table():
    got = [c.value for c in theon_sequence(2, 7, 1, 1)]
    assert got == [F(1), F(3, 2), F(7, 5), F(17, 12), F(41, 29), F(99, 70), F(239, 169)]


def c02_sqrt3_table():
    seq = theon_sequence(3, 12, 1, 1)
    assert seq[8].value == F(265, 153)
    assert seq[11].value == F(1351, 780)
    listed = {F(1), F(2), F(5, 3), F(7, 4), F(19, 11), F(26, 15), F(71, 41), F(97, 56),
              F(265, 153), F(362, 209), F(989, 571), F(1351, 780)}
    assert {c.value for c in seq} == listed


def c03_archimedes():
    assert 265 ** 2 < 3 * 153 ** 2 and 1351 ** 2 > 3 * 780 ** 2
    rep = verify_archimedes()
    assert rep["lower_ok"] and rep["upper_ok"] and rep["scaled_ok"] and rep["equivalence_ok"]
    with contextlib.redirect_stdout(io.StringIO()):
        assert main(["verify-archimedes"]) == 0
    swapped = verify_archimedes(F(1351, 780), F(265, 153))
    assert not swapped["passed"]


def c04_heron():
    assert heron_sequence(3, 2, 3) == [F(2), F(7, 4), F(97, 56)]


def c05_proclus():
    s = PellSolution(2, 1, 1, -1)
    seen = [s]
    for _ in range(10):
        s = proclus_step(s)
        seen.append(s)
    assert [t.m for t in seen] == [-1, 1] * 5 + [-1]
    pairs = [(t.x, t.y, t.m) for t in seen]
    assert (7, 5, -1) in pairs and (17, 12, 1) in pairs


def c06_cf():
    c2, c3 = cf_expand(2), cf_expand(3)
    assert (c2.a0, c2.period) == (1, (2,))
    assert (c3.a0, c3.period) == (1, (1, 2))
    assert convergents(c3, 12) == [c.value for c in theon_sequence(3, 12)]


def c07_error_certificates():
    t0 = time.perf_counter()
    for A in (2, 3):
        seq = theon_sequence(A, 41)
        for n in range(1, 41):
            assert error_certificate(A, n, seq[n].value)
    assert not error_certificate(2, 1, F(2))
    assert time.perf_counter() - t0 < 1.0


def c08_pell_oracle():
    t0 = time.perf_counter()
    for A in (2, 3, 5, 6, 7, 10):
        for m in (1, -1, -2):
            sols = solve_pell(A, m, 40)
            if sols:
                assert sols[-1].y > 1000
            got = {(s.x, s.y) for s in sols if s.y <= 1000}
            want = {(s.x, s.y) for s in brute_force_pell(A, m, 1000)}
            assert got == want, (A, m)
    assert time.perf_counter() - t0 < 10.0


def c09_triples():
    assert triple_from_negative_solution(7, 5) == (3, 4, 5)
    assert triple_from_negative_solution(41, 29) == (20, 21, 29)
    for n in range(1, 11):
        a, b, c = pythagoras_family(n)
        assert a * a + b * b == c * c


def c10_ahm():
    rng = random.Random(20261015)
    for _ in range(30):
        # integer product: a0 = P/b0 with b0 a divisor of P
        b0 = rng.randint(1, 40)
        P = b0 * rng.randint(1, 400)
        s = AhmState(0, F(P, b0), F(b0))
        product = s.product
        assert product == P
        for _ in range(10):
            nxt = ahm_step(s)
            assert nxt.product == product
            assert s.b <= nxt.b <= nxt.a <= s.a
            assert cmp_sqrt(nxt.b, P) is not Ordering.GREATER
            assert cmp_sqrt(nxt.a, P) is not Ordering.LESS
            s = nxt


def c11_sexagesimal():
    v = eval_sexagesimal([1, 24, 51, 10])
    assert v == F(30547, 21600)
    assert to_decimal(v, 8) == "1.41421296"


def c12_residue_recurrence():
    for A in (2, 3, 5, 7):
        states = iter_states(A)
        for _ in range(31):
            s = next(states)
            assert residue_recurrence_check(s)
            nxt = SideDiagonalState(A, s.n + 1, s.x + s.y, s.y + A * s.x)
            assert nxt.raw_residue == -(A - 1) * s.raw_residue


def c13_determinism():
    cmd = [sys.executable, "-m", "sqrtapprox", "compare", "--A", "3", "--iterations", "10",
           "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    json.loads(first)


CRITERIA = [
    ("1  sqrt(2) golden table", c01_sqrt2_table),
    ("2  sqrt(3) golden table", c02_sqrt3_table),
    ("3  Archimedes inequality", c03_archimedes),
    ("4  Heron values", c04_heron),
    ("5  Proclus/Pell alternation", c05_proclus),
    ("6  CF expansions", c06_cf),
    ("7  error-bound certificates", c07_error_certificates),
    ("8  Pell oracle equivalence", c08_pell_oracle),
    ("9  triple identities", c09_triples),
    ("10 AHM invariants", c10_ahm),
    ("11 sexagesimal", c11_sexagesimal),
    ("12 residue recurrence", c12_residue_recurrence),
    ("13 determinism", c13_determinism),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, check):
    try:
        check()
    except BaseException:
        RESULTS[name] = False
        raise
    RESULTS[name] = True


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        try:
            check()
            ok = True
        except AssertionError:
            ok = False
            failed += 1
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    sys.exit(1 if failed else 0)
