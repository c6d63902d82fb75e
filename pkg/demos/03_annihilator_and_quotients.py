"""The tensor-space annihilator and the Temperley-Lieb-type quotients.

Run with:  python3 demos/03_annihilator_and_quotients.py
"""

from btalg import annihilator as ann
from btalg import tableaux as tab

# Quotient dimensions by pure counting over the cell poset: the level-2
# quotient dimensions match the published values 29, 334, 5512.
for n in (3, 4, 5):
    print(f"dim PTL_{n} =", ann.ptl_dim(n))

print("\nlevel-3 quotient at n = 4:", ann.etl_dim(4, 3))

# The annihilator of the tensor action, computed two ways per type: the
# predicted count over shapes beyond the column bound, and the brute-force
# kernel of the action matrix at three evaluation points.
n, N = 3, 2
for alpha in tab.partitions_of(n):
    rep = ann.verify_predicted_basis(n, N, alpha)
    print(f"n={n} N={N} alpha={alpha}: predicted={rep.predicted_dim} "
          f"bruteforce={rep.bruteforce_dim} match={rep.match}")

# The same ideal is generated by a single Steinberg relation:
total = sum(ann.steinberg_ideal_dim(n, a) for a in tab.partitions_of(n))
print("\nSteinberg ideal total at n=3:", total)
