"""Tour of the normal form: generators, relations, dimensions.

Run with:  python3 demos/01_dimensions_and_normal_form.py
"""

import math

from btalg import Element, gen_e, gen_g, gen_g_inv
from btalg import setpartitions as sp

# The algebra on n strands has a basis of symbols E_A g_w with A a set
# partition and w a permutation, so its dimension is (Bell number) * n!.
for n in range(1, 6):
    dim = sp.bell_number(n) * math.factorial(n)
    print(f"n = {n}: dimension {dim}")

# The braid generator is invertible, the tie generator idempotent:
n = 4
g1, e1 = gen_g(n, 1), gen_e(n, 1)
print("\ng1 * g1^-1 =", g1.times(gen_g_inv(n, 1)))
print("e1 * e1 == e1:", e1.times(e1) == e1)

# The quadratic relation g^2 = 1 + (q - q^-1) e g in normal form:
print("g1^2 =", g1.times(g1))

# Multiplying two tie generators joins their strands:
e2 = gen_e(n, 2)
print("e1 * e2 =", e1.times(e2))

# A product of braids follows reduced words; descents produce tie terms:
w = g1.times(gen_g(n, 2)).times(g1)
print("g1 g2 g1 =", w)
print("braid relation holds:", w == gen_g(n, 2).times(g1).times(gen_g(n, 2)))
