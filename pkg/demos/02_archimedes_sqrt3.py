"""
Archimedes' bounds for sqrt(3)
==============================

The same recurrence with 2 replaced by 3,

    x' = x + y
    y' = y + 3x

gives 1, 2, 5/3, 7/4, 19/11, 26/15, 71/41, 97/56, 265/153, 362/209, 989/571,
1351/780.  Two of these values are the bounds Archimedes used for sqrt(3) in
his measurement of the circle:

    265/153 < sqrt(3) < 1351/780

Both sides are checked by squaring integers: 265**2 = 70225 < 70227 = 3*153**2,
and 1351**2 = 1825201 > 1825200 = 3*780**2.

Run:  python demos/02_archimedes_sqrt3.py
"""

from fractions import Fraction

from sqrtapprox import error_certificate, theon_sequence, verify_archimedes

seq = theon_sequence(3, 12)
for c in seq:
    marker = "  <-- Archimedes" if c.value in (Fraction(265, 153), Fraction(1351, 780)) else ""
    print(f"index {c.index:>2}: {str(c.value):>9}  residue {c.residue:+d}  {c.side.value}{marker}")

report = verify_archimedes()
print()
for key in ("lower_ok", "upper_ok", "scaled_ok", "equivalence_ok"):
    print(f"{key:<15} {report[key]}")

# The bounds can also be written 26 - 1/51 < 15*sqrt(3) < 26 - 1/52.
print(15 * Fraction(265, 153) == 26 - Fraction(1, 51), 15 * Fraction(1351, 780) == 26 - Fraction(1, 52))

# --- a guaranteed error bound ----------------------------------------------
# Every step at least halves the distance to sqrt(3):
#     |r_n - sqrt(3)| < (1/2)**n * (sqrt(3) - 1)
# error_certificate decides this exactly in Q(sqrt(3)).
print()
print("halving bound holds for n = 1..11:",
      all(error_certificate(3, c.index, c.value) for c in seq[1:]))
