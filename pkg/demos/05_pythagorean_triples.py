"""
Pythagorean triples from side and diagonal numbers
==================================================

When x**2 - 2*y**2 = -1, x is odd and ((x-1)/2, (x+1)/2, y) is a Pythagorean
triple with legs differing by one: 7/5 gives (3, 4, 5) and 41/29 gives
(20, 21, 29).  When x**2 - 2*y**2 = +1, (x**2 - 1)/2 is the perfect square y**2.

The family (2n + 1, 2n^2 + 2n, 2n^2 + 2n + 1) has a hypotenuse that exceeds the
even leg by one.

Run:  python demos/05_pythagorean_triples.py
"""

from sqrtapprox import (
    pythagoras_family,
    solve_pell,
    square_from_positive_solution,
    triple_from_negative_solution,
)

print("from x^2 - 2y^2 = -1:")
for s in solve_pell(2, -1, 6):
    print(f"  ({s.x}, {s.y}) -> {tuple(triple_from_negative_solution(s.x, s.y))}")

print("from x^2 - 2y^2 = +1:")
for s in solve_pell(2, 1, 5):
    print(f"  ({s.x}, {s.y}) -> (x^2 - 1)/2 = {square_from_positive_solution(s.x, s.y)} = {s.y}^2")

print("family:")
print("  " + "  ".join(str(tuple(pythagoras_family(n))) for n in range(1, 7)))
