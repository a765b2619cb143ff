"""
Hunting for chromatic roots near a target
=========================================

Roots of generalised theta graphs spread over the plane as the graphs grow.
approximate_root searches uniform thetas (and optionally blow-ups) for the
root closest to a target.  Targets inside |z - 1| < 1 are approached as
w = z - 2 and then shifted back by a join with K_2.

The search is finite, so the error shrinks with the budget but need not
reach any particular eps.  The full candidate cloud is written to
root_cloud.csv for plotting.
"""

from cliquetheta import Budget, approximate_root
from cliquetheta.nalpha import cloud_to_csv

targets = [complex(2.5, 1.0), complex(4.0, -2.0), complex(1.0, 0.3)]
for target in targets:
    print(f"target {target}")
    for size in (2, 4, 8, 12):
        r = approximate_root(target, budget=Budget(size, size))
        n, m = r.witness.n_paths, len(r.witness.S[0]) + 1
        print(f"  n,m <= {size:2d}: error {r.error:.4f} from {n} paths of length {m},"
              f" join {r.join_order}, verified {r.verify()}")

# letting the search blow cliques up reaches scaled roots such as 3 + i sqrt 3
r = approximate_root(complex(3, 3 ** 0.5), budget=Budget(4, 4, p_max=2))
print("3+i sqrt3:", r.error, r.realised_spec())

cloud = []
approximate_root(complex(2.5, 1.0), budget=Budget(8, 8), cloud=cloud)
with open("root_cloud.csv", "w") as fh:
    fh.write(cloud_to_csv(cloud))
print(f"wrote {len(cloud)} candidate roots to root_cloud.csv")
