"""The cell poset and the two cellular bases.

Run with:  python3 demos/02_cellular_basis.py
"""

from btalg import cell_shapes, standard_cell_tableaux
from btalg import tableaux as tab
from btalg.cellular import m_element, n_element
from btalg.cellposet import super_cell_tableau

n = 3
print(f"cell poset for n = {n}, by type:")
for alpha in tab.partitions_of(n):
    shapes = cell_shapes(n, alpha)
    print(f"  type {alpha}:")
    for shape in shapes:
        std = standard_cell_tableaux(shape)
        print(f"    blam={shape.blam} bmu={shape.bmu}: {len(std)} standard tableaux")

# The basis element of the one-block shape is the q-symmetrizer times the
# interval idempotent; its dual replaces q-powers by signed inverse powers.
shape = cell_shapes(3, (3,))[0]
top = super_cell_tableau(shape)
print("\nshape", shape)
print("m =", m_element(shape, top, top))
print("n =", n_element(shape, top, top))

# Applying the star anti-automorphism transposes the two tableau indices.
std = standard_cell_tableaux(cell_shapes(3, (2, 1))[0])
sh = cell_shapes(3, (2, 1))[0]
s, t = std[0], std[-1]
print("\nstar(m_st) == m_ts:",
      m_element(sh, s, t).star() == m_element(sh, t, s))
