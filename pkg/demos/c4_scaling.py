"""
Scaling the roots of the 4-cycle
================================

C4 is the clique-theta T(1, [1], [1], 1).  Its non-integer chromatic roots
are (3 +- i sqrt 3)/2.  Blowing every clique up by a factor p multiplies
those roots by p.
"""

from cliquetheta import CliqueTheta, clique_theta_poly, find_roots, scale_spec, verify_scaling_exact
from cliquetheta.closed_forms import interesting_factor_theta

c4 = CliqueTheta(1, ((1,), (1,)), 1)
print("P(C4)       =", clique_theta_poly(c4))
print("factor F_1  =", interesting_factor_theta(c4))

# exact identity F_p(pX) = p^d F_1(X), with d the degree of F_1
for p in range(1, 5):
    rep = verify_scaling_exact(c4, p)
    print(f"p={p}: F_p = {rep.scaled_factor},  F_p(pX) = {rep.lhs},  holds={rep.holds}")

# the same statement numerically
for p in (1, 2, 3):
    roots = find_roots(clique_theta_poly(scale_spec(c4, p))).non_integer
    print(f"p={p}: roots {[complex(round(z.real, 10), round(z.imag, 10)) for z in roots]}")
