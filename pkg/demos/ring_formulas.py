"""
Rings of cliques: two closed forms and a sign
=============================================

A ring R(a_1, ..., a_n) with a unit clique has a short product formula.
Any ring also has a summation formula over k = 0..min(a).  With the sign
taken as printed in the literature, the summation is off by (-1)^n, so it
is right for even n and gives -P for odd n.  The corrected sign drops the
minus inside the product.
"""

from cliquetheta import RingOfCliques, build, chromatic_poly_oracle, ring_general_poly, ring_reduced_poly

for a in [(1, 1, 1), (1, 2, 3, 2), (2, 2, 3), (1, 2, 1, 3, 1)]:
    truth = chromatic_poly_oracle(build(RingOfCliques(a)))
    print(f"R{a}")
    print("  oracle    ", truth)
    if a[0] == 1:
        print("  reduced   ", ring_reduced_poly(a) == truth)
    print("  corrected ", ring_general_poly(a) == truth)
    printed = ring_general_poly(a, sign="printed")
    print("  printed   ", "equal" if printed == truth else "negated" if printed == -truth else "different")
