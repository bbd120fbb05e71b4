"""
Continued fractions and Pell equations
======================================

sqrt(2) = [1; 2, 2, 2, ...] and sqrt(3) = [1; 1, 2, 1, 2, ...].  For these two
radicands the continued-fraction convergents are exactly the reduced
side/diagonal ratios.  That coincidence fails for sqrt(5).

Each convergent p/q solves a Pell-type equation p**2 - A*q**2 = m with a small
m.  solve_pell collects the solutions for m in {+1, -1, -2}, and
brute_force_pell checks them by exhaustive search.

Run:  python demos/04_continued_fractions_and_pell.py
"""

from sqrtapprox import (
    brute_force_pell,
    cf_expand,
    convergents,
    semiconvergent_equals_theon,
    solve_pell,
    theon_sequence,
)

for A in (2, 3, 7, 13):
    cf = cf_expand(A)
    print(f"sqrt({A}) = {cf}   first convergents: {', '.join(map(str, convergents(cf, 6)))}")

print()
print("CF convergents == side/diagonal ratios:",
      semiconvergent_equals_theon(2, 20), semiconvergent_equals_theon(3, 20))
print("sqrt(5) differs:", [str(v) for v in convergents(cf_expand(5), 4)],
      [str(c.value) for c in theon_sequence(5, 4)])

print()
for A, m in [(2, -1), (2, 1), (3, 1), (3, -2), (3, -1), (2, -2)]:
    sols = solve_pell(A, m, 5)
    # compare up to the largest y returned (or a fixed bound when there are none)
    bound = sols[-1].y if sols else 5000
    brute = brute_force_pell(A, m, bound)
    shown = ", ".join(f"({s.x},{s.y})" for s in sols) or "none"
    agree = {(s.x, s.y) for s in sols} == {(s.x, s.y) for s in brute}
    print(f"x^2 - {A}y^2 = {m:+d}: {shown}   brute force agrees: {agree}")
