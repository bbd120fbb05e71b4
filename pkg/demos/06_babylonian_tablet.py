"""
A base-60 value of sqrt(2)
==========================

A Babylonian clay tablet (YBC 7289) gives sqrt(2) as 1;24,51,10 in base 60:

    1 + 24/60 + 51/60**2 + 10/60**3 = 30547/21600 = 1.41421296...

It is a little below sqrt(2).  The script places it among the side/diagonal
ratios with larger denominators.

Run:  python demos/06_babylonian_tablet.py
"""

from sqrtapprox import SexagesimalDigits, cmp_sqrt, eval_sexagesimal, theon_sequence, to_decimal

tablet = SexagesimalDigits.parse("1;24,51,10")
v = eval_sexagesimal(tablet)
print(f"{tablet} = {v} = {to_decimal(v, 8)}  ({cmp_sqrt(v, 2).name.lower()} than sqrt(2))")
print(f"tablet residue: {v.numerator ** 2 - 2 * v.denominator ** 2} over denominator^2 {v.denominator ** 2}")

# where it sits between the side/diagonal bounds
for c in theon_sequence(2, 12):
    if c.value.denominator > 100:
        rel = "<" if c.value < v else ">"
        print(f"  {str(c.value):>12} {rel} tablet   {to_decimal(c.value, 10)}")
