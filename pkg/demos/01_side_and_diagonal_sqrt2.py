"""
Side and diagonal numbers for sqrt(2)
=====================================

Start with a square whose side and diagonal are both counted as 1.  Grow the
side by the diagonal, and the diagonal by twice the side:

    x' = x + y
    y' = y + 2x

The pairs (x, y) run 1/1, 2/3, 5/7, 12/17, ...  The ratio y/x is a rational
estimate of sqrt(2), and y**2 - 2*x**2 is always +1 or -1, flipping sign every
step.  So the estimates lie alternately below and above sqrt(2).

Run:  python demos/01_side_and_diagonal_sqrt2.py
"""

from sqrtapprox import SideDiagonalState, enclosure_chain, theon_sequence, theon_step, to_decimal

# --- the raw integer pairs -------------------------------------------------
s = SideDiagonalState(A=2, n=0, x=1, y=1)
print("n   side  diag   diag^2 - 2 side^2")
for _ in range(8):
    print(f"{s.n:<3} {s.x:<5} {s.y:<6} {s.raw_residue:+d}")
    s = theon_step(s)

# --- the reduced ratios, each tagged with its side of sqrt(2) --------------
print()
for c in theon_sequence(2, 8):
    print(f"r_{c.index} = {str(c.value):<8} {c.side.value:<6} {to_decimal(c.value, 10)}")

# --- nested bounds ---------------------------------------------------------
# Lower bounds increase, upper bounds decrease, and every check is exact.
chain = enclosure_chain(2, 8)
lows = " < ".join(str(c.value) for c in chain.below)
highs = " < ".join(str(c.value) for c in reversed(chain.above))
print()
print(f"{lows} < sqrt(2) < {highs}")
