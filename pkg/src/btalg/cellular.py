"""Cellular and dual cellular basis elements.

Both bases are seven-factor products

    E . g*_{d(s)} . X . B*_{d(u)} . S . B_{d(v)} . g_{d(t)}

with E the idempotent of the interval partition of blam, X the q-symmetrizer
(resp. q-antisymmetrizer) of the Young subgroup of blam, S the image of the
plain (resp. signed) sum over the row stabilizer of t^bmu under the block
embedding, and B_w the block-permutation elements.  The block embedding sends
a slot permutation w to (central idempotent of alpha) * g_{B_w}; its validity
is established behaviourally by the test suite (quadratic relation against
the idempotent, basis cardinality and independence).
"""

from __future__ import annotations

from functools import lru_cache

from . import permutations as perm
from . import setpartitions as sp
from . import tableaux as tab
from .algebra import (Element, LAURENT, central_idempotent, gen_e,
                      g_of_perm, orthogonal_idempotent)
from .cellposet import (cell_shapes, d_of_u, standard_cell_tableaux,
                        super_cell_tableau)


# ---------------------------------------------------------------------------
# symmetrizers over the Young subgroup of blam

def q_symmetrizer(n, blam, ring=LAURENT):
    """Sum of q^length(w) g_w over the row stabilizer of t^blam."""
    flat = tab.flatten_comp(blam)
    terms = {}
    sing = sp.singletons(n)
    for w in perm.young_subgroup(n, flat):
        terms[(sing, w)] = ring.q_power(perm.length(w))
    return Element(n, terms, ring)


def q_antisymmetrizer(n, blam, ring=LAURENT):
    """Sum of (-q)^(-length(w)) g_w over the row stabilizer of t^blam."""
    flat = tab.flatten_comp(blam)
    terms = {}
    sing = sp.singletons(n)
    for w in perm.young_subgroup(n, flat):
        l = perm.length(w)
        c = ring.q_power(-l)
        if l % 2:
            c = ring.neg(c)
        terms[(sing, w)] = c
    return Element(n, terms, ring)


# ---------------------------------------------------------------------------
# block permutations

def block_intervals(blam):
    out = []
    start = 1
    for comp in blam:
        m = sum(comp)
        out.append(tuple(range(start, start + m)))
        start += m
    return out


def block_perm(blam, slot_perm):
    """B_w: the permutation moving block k order-preservingly onto block
    slot_perm(k).  Blocks related by slot_perm must have equal sizes."""
    n = tab.multicomp_size(blam)
    blocks = block_intervals(blam)
    img = [0] * n
    for k, block in enumerate(blocks):
        target = blocks[slot_perm[k] - 1]
        if len(target) != len(block):
            raise ValueError("slot permutation moves blocks of unequal size")
        for src, dst in zip(block, target):
            img[src - 1] = dst
    return tuple(img)


def block_transposition(blam, i):
    """The minimal-length permutation exchanging blocks i and i+1."""
    if blam[i - 1] != blam[i]:
        raise ValueError("adjacent components must have equal shape")
    r = len(blam)
    return block_perm(blam, perm.simple(r, i))


@lru_cache(maxsize=None)
def _central_idem(n, alpha):
    return central_idempotent(n, alpha)


def block_perm_element(blam, slot_perm, ring=LAURENT, corrupted=False):
    """The image of a slot permutation under the block embedding."""
    n = tab.multicomp_size(blam)
    b = block_perm(blam, slot_perm)
    g = g_of_perm(n, b)
    if not corrupted:
        alpha = sp.type_of(sp.from_multicomposition(blam))
        g = _central_idem(n, alpha).times(g)
    if ring is not LAURENT:
        g = g.specialize(ring.field, ring.q0)
    return g


def _row_stabilizer_slots(shape):
    """Elements of the row stabilizer of t^bmu inside S_r, with signs."""
    r = len(shape.blam)
    flat = tab.flatten_comp(shape.bmu)
    return [(w, perm.length(w)) for w in perm.young_subgroup(r, flat)]


def block_symmetrizer(shape, ring=LAURENT, corrupted=False):
    """b: the unsigned sum of block-permutation elements over the row
    stabilizer of t^bmu."""
    acc = None
    for w, _ in _row_stabilizer_slots(shape):
        piece = block_perm_element(shape.blam, w, ring, corrupted)
        acc = piece if acc is None else acc.add(piece)
    return acc


def block_antisymmetrizer(shape, ring=LAURENT, corrupted=False):
    """c: the sign-alternating sum over the row stabilizer of t^bmu."""
    acc = None
    for w, l in _row_stabilizer_slots(shape):
        piece = block_perm_element(shape.blam, w, ring, corrupted)
        if l % 2:
            piece = piece.scale(ring.of_int(-1))
        acc = piece if acc is None else acc.add(piece)
    return acc


# ---------------------------------------------------------------------------
# the basis elements

def _times_g_of(x, w):
    return x.times_word(perm.reduced_word(w))


@lru_cache(maxsize=None)
def _cell_element_cached(shape, es, et, flavor, corrupted):
    # g*_{d(s)} E x B*_{d(u)} S B_{d(v)} g_{d(t)}: the idempotent sits next
    # to the symmetrizer so that it can travel onto the blocks of s
    n = tab.multicomp_size(shape.blam)
    blam = shape.blam
    a_blam = sp.from_multicomposition(blam)
    if flavor == "m":
        mid = q_symmetrizer(n, blam)
        summ = block_symmetrizer(shape, LAURENT, corrupted)
    else:
        mid = q_antisymmetrizer(n, blam)
        summ = block_antisymmetrizer(shape, LAURENT, corrupted)
    bu = block_perm_element(blam, d_of_u(es.u), LAURENT, corrupted)
    bv = block_perm_element(blam, d_of_u(et.u), LAURENT, corrupted)
    cur = g_of_perm(n, perm.inverse(tab.d_of(es.t)))
    if not corrupted:
        cur = cur.times(orthogonal_idempotent(a_blam))
    cur = cur.times(mid)
    cur = cur.times(bu.star())
    cur = cur.times(summ)
    cur = cur.times(bv)
    cur = _times_g_of(cur, tab.d_of(et.t))
    return cur


def cell_element(shape, es, et, flavor="m", ring=LAURENT, corrupted=False):
    """The basis element indexed by the pair (es, et) of row-standard cell
    tableaux of the given shape; flavor "m" or its dual "n"."""
    x = _cell_element_cached(shape, es, et, flavor, corrupted)
    if ring is LAURENT:
        return x
    return x.specialize(ring.field, ring.q0)


def m_element(shape, es, et, ring=LAURENT):
    return cell_element(shape, es, et, "m", ring)


def n_element(shape, es, et, ring=LAURENT):
    return cell_element(shape, es, et, "n", ring)


def m_of(shape, et, ring=LAURENT):
    """Shorthand with the first index the row-reading tableau of the shape."""
    return m_element(shape, super_cell_tableau(shape), et, ring)


def n_of(shape, et, ring=LAURENT):
    return n_element(shape, super_cell_tableau(shape), et, ring)


def m_start(shape, ring=LAURENT):
    """E x b: the element every m of this shape is built from."""
    top = super_cell_tableau(shape)
    return m_element(shape, top, top, ring)


def n_start(shape, ring=LAURENT):
    top = super_cell_tableau(shape)
    return n_element(shape, top, top, ring)


def murphy_pair_x(shape, s_t, t_t, ring=LAURENT):
    """g*_{d(s)} E x g_{d(t)} for bare multitableaux (duality tests)."""
    n = tab.multicomp_size(shape.blam)
    a_blam = sp.from_multicomposition(shape.blam)
    cur = g_of_perm(n, perm.inverse(tab.d_of(s_t)))
    cur = cur.times(orthogonal_idempotent(a_blam))
    cur = cur.times(q_symmetrizer(n, shape.blam))
    cur = _times_g_of(cur, tab.d_of(t_t))
    if ring is not LAURENT:
        cur = cur.specialize(ring.field, ring.q0)
    return cur


def murphy_pair_y(shape, s_t, t_t, ring=LAURENT):
    n = tab.multicomp_size(shape.blam)
    a_blam = sp.from_multicomposition(shape.blam)
    cur = g_of_perm(n, perm.inverse(tab.d_of(s_t)))
    cur = cur.times(orthogonal_idempotent(a_blam))
    cur = cur.times(q_antisymmetrizer(n, shape.blam))
    cur = _times_g_of(cur, tab.d_of(t_t))
    if ring is not LAURENT:
        cur = cur.specialize(ring.field, ring.q0)
    return cur


# ---------------------------------------------------------------------------
# full bases

def cell_basis(n, alpha, flavor="m", ring=LAURENT, corrupted=False):
    """All (shape, s, t, element) records over the poset of the given type."""
    out = []
    for shape in cell_shapes(n, alpha):
        std = standard_cell_tableaux(shape)
        for s_tab in std:
            for t_tab in std:
                el = cell_element(shape, s_tab, t_tab, flavor, ring, corrupted)
                out.append((shape, s_tab, t_tab, el))
    return out


# ---------------------------------------------------------------------------
# Steinberg elements

def steinberg(n, i, ring=LAURENT):
    """-q^-3 g_i g_{i+1} g_i + q^-2 (g_i g_{i+1} + g_{i+1} g_i)
    - q^-1 (g_i + g_{i+1}) + 1."""
    if not 1 <= i <= n - 2:
        raise ValueError("need 1 <= i <= n-2")
    sing = sp.singletons(n)

    def gw(word):
        return perm.perm_from_word(n, word)

    terms = {
        (sing, gw((i, i + 1, i))): ring.neg(ring.q_power(-3)),
        (sing, gw((i, i + 1))): ring.q_power(-2),
        (sing, gw((i + 1, i))): ring.q_power(-2),
        (sing, gw((i,))): ring.neg(ring.q_power(-1)),
        (sing, gw((i + 1,))): ring.neg(ring.q_power(-1)),
        (sing, gw(())): ring.one,
    }
    return Element(n, terms, ring)


def ptl_generator(n, i, ring=LAURENT):
    """e_i e_{i+1} St_i, the relation cutting out the N = 2 quotient."""
    return gen_e(n, i, ring).times_e(i + 1).times(steinberg(n, i, ring))
