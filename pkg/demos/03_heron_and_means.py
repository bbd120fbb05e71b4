"""
Heron's rule and the arithmetic-harmonic mean
=============================================

Heron replaces an estimate x of sqrt(A) by the average of x and A/x.  From x = 2
for sqrt(3) this gives 7/4 and then 97/56, both already in the side/diagonal
list.  The number of correct digits roughly doubles every step, and so does
the length of the numerator and denominator.

The arithmetic-harmonic mean starts from a pair (a, b) and replaces it by
((a + b)/2, 2ab/(a + b)).  The product a*b never changes, so both terms squeeze
towards sqrt(a*b).  From (A, 1) the upper term is exactly Heron's iterate
started at A.

Run:  python demos/03_heron_and_means.py
"""

from sqrtapprox import ahm_enclosure, heron_sequence, to_decimal

print("Heron, A = 3, x0 = 2")
for n, x in enumerate(heron_sequence(3, 2, 5)):
    e = x * x - 3
    print(f"  x_{n} = {str(x):<28} x^2 - 3 = {str(e):<30} {to_decimal(x, 20)}")

print()
print("arithmetic-harmonic mean from (3, 1)")
for n, (lo, hi) in enumerate(ahm_enclosure(3, 1, 4), start=1):
    print(f"  step {n}: {to_decimal(lo, 20)} <= sqrt(3) <= {to_decimal(hi, 20)}   product {lo * hi}")
