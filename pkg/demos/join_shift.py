"""
Joining with a clique shifts every root
=======================================

P(G v K_n)(X) = (X)_n P_G(X - n): the n new vertices take n distinct
colours and G sees n fewer.  Chromatic roots of G therefore move right by n.
"""

import numpy as np

from cliquetheta import find_roots, join_complete, shifted_poly_by_join
from cliquetheta.graphs import cycle_graph
from cliquetheta.oracle import chromatic_poly_oracle

g = cycle_graph(5)
p = chromatic_poly_oracle(g)
print("P(C5) =", p)
for n in (1, 2, 3):
    joined = shifted_poly_by_join(p, n)
    assert joined == chromatic_poly_oracle(join_complete(g, n))
    moved = np.sort_complex(find_roots(joined).non_integer)
    print(f"n={n}: non-integer roots {np.round(moved, 6)}")
print("C5 roots + n:", np.round(np.sort_complex(find_roots(p).non_integer), 6))
