"""The tensor space module and the two families of permutation modules.

Tensor vectors are sparse dicts keyed by index pairs ``(i, s)`` (tuples of row
numbers bounded by N and component numbers bounded by r).  The action is a
right action; a basis symbol E_A g_w acts by the idempotent filter followed
by the braid operators along a reduced word.  A slower path builds the
idempotent action purely out of the two-slot operators, for use as an
independent oracle.

Permutation-module vectors are sparse dicts keyed by row-standard
multitableaux (for the module attached to a multicomposition) or by
row-standard cell tableaux (for the module attached to a cell shape); both
carry exact basis-coordinate readouts from algebra elements.
"""

from __future__ import annotations

import itertools

from . import cellposet as cpos
from . import permutations as perm
from . import setpartitions as sp
from . import tableaux as tab
from .algebra import LAURENT, Element, orthogonal_idempotent
from .cellular import block_perm, m_element, q_symmetrizer


# ---------------------------------------------------------------------------
# tensor vectors

def unit_vector(i_seq, s_seq, ring=LAURENT):
    return {(tuple(i_seq), tuple(s_seq)): ring.one}


def _acc(out, key, c, ring):
    s = ring.add(out.get(key, ring.zero), c)
    if ring.is_zero(s):
        out.pop(key, None)
    else:
        out[key] = s


def vadd(a, b, ring):
    out = dict(a)
    for k, c in b.items():
        _acc(out, k, c, ring)
    return out


def vscale(a, c, ring):
    if ring.is_zero(c):
        return {}
    return {k: ring.mul(v, c) for k, v in a.items()}


def apply_E(v, pos, ring):
    """The tie operator in slots pos, pos+1: projection onto equal
    component numbers.  (A literal subscript swap would fail idempotency
    and the eigenvector description of the partition idempotents.)"""
    return {(iseq, sseq): c for (iseq, sseq), c in v.items()
            if sseq[pos - 1] == sseq[pos]}


def apply_G(v, pos, ring):
    """The braid operator in slots pos, pos+1."""
    out = {}
    for (iseq, sseq), c in v.items():
        a, b = pos - 1, pos
        i, s = iseq[a], sseq[a]
        j, t = iseq[b], sseq[b]
        if s != t or i != j:
            ii = list(iseq)
            ss = list(sseq)
            ii[a], ii[b] = j, i
            ss[a], ss[b] = t, s
            _acc(out, (tuple(ii), tuple(ss)), c, ring)
            if s == t and i > j:
                _acc(out, (iseq, sseq), ring.mul(c, ring.q_minus_qinv), ring)
        else:
            _acc(out, (iseq, sseq), ring.mul(c, ring.q_power(1)), ring)
    return out


def apply_G_inv(v, pos, ring):
    out = apply_G(v, pos, ring)
    corr = vscale(apply_E(v, pos, ring), ring.neg(ring.q_minus_qinv), ring)
    return vadd(out, corr, ring)


def apply_pair_idem(v, i, j, ring):
    """The idempotent attached to the pair {i, j}, built recursively from
    the two-slot operators only."""
    if j == i + 1:
        return apply_E(v, i, ring)
    w = apply_G(v, i, ring)
    w = apply_pair_idem(w, i + 1, j, ring)
    return apply_G_inv(w, i, ring)


def apply_partition_idem_generators(v, a, ring):
    """E_A through the recursion, pair by pair (oracle path)."""
    out = v
    for block in a:
        for x in range(len(block)):
            for y in range(x + 1, len(block)):
                out = apply_pair_idem(out, block[x], block[y], ring)
    return out


def apply_partition_idem(v, a, ring):
    """E_A as the support filter: keeps v_(i,s) iff A refines the fibers
    of s."""
    return {k: c for k, c in v.items() if sp.coarser_eq(a, sp.from_sequence(k[1]))}


def apply_word(v, word, ring):
    for i in word:
        v = apply_G(v, i, ring)
    return v


def act_element(v, x, via_generators=False):
    """Right action of an algebra element on a tensor vector."""
    ring = x.ring
    acc = {}
    for (a, w), c in x.terms.items():
        if via_generators:
            piece = apply_partition_idem_generators(v, a, ring)
        else:
            piece = apply_partition_idem(v, a, ring)
        piece = apply_word(piece, perm.reduced_word(w), ring)
        acc = vadd(acc, vscale(piece, c, ring), ring)
    return acc


def vector_from_tableau(t_multi, ring=LAURENT):
    iseq, sseq = index_of_tableau(t_multi)
    return unit_vector(iseq, sseq, ring)


def index_of_tableau(t_multi):
    """(i, s): row numbers and component numbers of 1..n in the tableau."""
    pos = tab.positions(t_multi)
    n = len(pos)
    iseq = tuple(pos[j][0] for j in range(1, n + 1))
    sseq = tuple(pos[j][2] for j in range(1, n + 1))
    return iseq, sseq


def tableau_of_index(iseq, sseq, r, N):
    """The unique row-standard multitableau whose index pair is (i, s)."""
    comps = []
    for k in range(1, r + 1):
        rows = [[] for _ in range(N)]
        for j, (i, s) in enumerate(zip(iseq, sseq), start=1):
            if s == k:
                rows[i - 1].append(j)
        while rows and not rows[-1]:
            rows.pop()
        comps.append(tuple(tuple(sorted(row)) for row in rows))
    return tuple(comps)


def all_index_pairs(n, N, r):
    return [(i, s)
            for i in itertools.product(range(1, N + 1), repeat=n)
            for s in itertools.product(range(1, r + 1), repeat=n)]


def index_pairs_of_type(n, N, r, alpha):
    alpha = tuple(alpha)
    return [(i, s) for (i, s) in all_index_pairs(n, N, r)
            if sp.type_of(sp.from_sequence(s)) == alpha]


def compositions_bounded(m, N):
    """Compositions of m with at most N parts; internal zeros allowed."""
    if m == 0:
        return [()]
    out = []
    for k in range(1, N + 1):
        for body in itertools.product(range(m + 1), repeat=k - 1):
            last = m - sum(body)
            if last > 0:
                out.append(tuple(body) + (last,))
    return out


def multicompositions_bounded(r, n, N):
    """All r-tuples of compositions with at most N rows, total size n."""
    out = []
    for sizes in itertools.product(range(n + 1), repeat=r):
        if sum(sizes) != n:
            continue
        for comps in itertools.product(*(compositions_bounded(m, N) for m in sizes)):
            out.append(tuple(comps))
    return out


# ---------------------------------------------------------------------------
# the module of a multicomposition, on its row-standard basis

def mblam_unit(s_tab, ring=LAURENT):
    return {s_tab: ring.one}


def mblam_act_g(vec, i, ring=LAURENT):
    out = {}
    for s_tab, c in vec.items():
        pos = tab.positions(s_tab)
        r1, _, p1 = pos[i]
        r2, _, p2 = pos[i + 1]
        if p1 != p2:
            _acc(out, tab.swap_entries(s_tab, i), c, ring)
        elif r1 == r2:
            _acc(out, s_tab, ring.mul(c, ring.q_power(1)), ring)
        elif r1 < r2:
            _acc(out, tab.swap_entries(s_tab, i), c, ring)
        else:
            _acc(out, s_tab, ring.mul(c, ring.q_minus_qinv), ring)
            _acc(out, tab.swap_entries(s_tab, i), c, ring)
    return out


def mblam_act_e(vec, i, ring=LAURENT):
    out = {}
    for s_tab, c in vec.items():
        pos = tab.positions(s_tab)
        if pos[i][2] == pos[i + 1][2]:
            _acc(out, s_tab, c, ring)
    return out


def mblam_act_element(vec, x, ring=LAURENT):
    """Action of an algebra element through its E/g word expansion."""
    acc = {}
    for (a, w), c in x.terms.items():
        piece = vec
        for block in a:
            for k in range(len(block) - 1):
                piece = _mblam_act_pair(piece, block[k], block[k + 1], ring)
        for i in perm.reduced_word(w):
            piece = mblam_act_g(piece, i, ring)
        acc = vadd(acc, vscale(piece, c, ring), ring)
    return acc


def _mblam_act_pair(vec, i, j, ring):
    if j == i + 1:
        return mblam_act_e(vec, i, ring)
    out = mblam_act_g(vec, i, ring)
    out = _mblam_act_pair(out, i + 1, j, ring)
    corr = vscale(mblam_act_e(out, i, ring), ring.neg(ring.q_minus_qinv), ring)
    return vadd(mblam_act_g(out, i, ring), corr, ring)


def x_basis_element(blam, s_tab, ring=LAURENT):
    """The algebra element E x g_{d(s)} spanning the module."""
    n = tab.multicomp_size(blam)
    a = sp.from_multicomposition(blam)
    cur = orthogonal_idempotent(a).times(q_symmetrizer(n, blam))
    cur = cur.times_word(perm.reduced_word(tab.d_of(s_tab)))
    if ring is not LAURENT:
        cur = cur.specialize(ring.field, ring.q0)
    return cur


def mblam_to_algebra(vec, blam, ring=LAURENT):
    acc = Element.zero(tab.multicomp_size(blam), ring)
    for s_tab, c in vec.items():
        acc = acc.add(x_basis_element(blam, s_tab, ring).scale(c))
    return acc


def mblam_from_algebra(x, blam):
    """Exact coordinates in the x-basis: the coefficient of the basis symbol
    (A_blam, d(s)) in normal form is the x_s coordinate."""
    a = sp.from_multicomposition(blam)
    out = {}
    for s_tab in tab.enumerate_row_standard(blam):
        c = x.coefficient(a, tab.d_of(s_tab))
        if not x.ring.is_zero(c):
            out[s_tab] = c
    return out


def embed_mblam(vec, ring=LAURENT):
    out = {}
    for s_tab, c in vec.items():
        iseq, sseq = index_of_tableau(s_tab)
        _acc(out, (iseq, sseq), c, ring)
    return out


# ---------------------------------------------------------------------------
# the module of a cell shape, on its m-basis

def mlam_unit(es, ring=LAURENT):
    return {es: ring.one}


def mlam_act_g(vec, i, shape, ring=LAURENT):
    out = {}
    for es, c in vec.items():
        pos = tab.positions(es.t)
        r1, _, p1 = pos[i]
        r2, _, p2 = pos[i + 1]
        target = cpos.cell_tableau_dot_si(es, i, shape)
        if p1 != p2:
            _acc(out, target, c, ring)
        elif r1 == r2:
            _acc(out, target, ring.mul(c, ring.q_power(1)), ring)
        elif r1 < r2:
            _acc(out, target, c, ring)
        else:
            _acc(out, es, ring.mul(c, ring.q_minus_qinv), ring)
            _acc(out, target, c, ring)
    return out


def mlam_act_e(vec, i, shape, ring=LAURENT):
    out = {}
    for es, c in vec.items():
        pos = tab.positions(es.t)
        if pos[i][2] == pos[i + 1][2]:
            _acc(out, es, c, ring)
    return out


def mlam_coordinate_key(shape, es):
    """Normal-form key carrying the m-basis coordinate of a row-standard
    cell tableau: (A_blam, B_{d(u)} d(t))."""
    a = sp.from_multicomposition(shape.blam)
    b = block_perm(shape.blam, cpos.d_of_u(es.u))
    return a, perm.compose(b, tab.d_of(es.t))


def mlam_from_algebra(x, shape):
    """Exact m-basis coordinates of an element of the cell-shape module."""
    out = {}
    for es in cpos.row_standard_cell_tableaux(shape):
        a, key_w = mlam_coordinate_key(shape, es)
        c = x.coefficient(a, key_w)
        if not x.ring.is_zero(c):
            out[es] = c
    return out


def mlam_to_algebra(vec, shape, ring=LAURENT):
    n = tab.multicomp_size(shape.blam)
    acc = Element.zero(n, ring)
    for es, c in vec.items():
        acc = acc.add(m_element(shape, cpos.super_cell_tableau(shape), es, ring).scale(c))
    return acc


def bilinear_form(vec_a, vec_b, ring=LAURENT):
    """Orthonormal pairing on the m-basis of a cell-shape module."""
    acc = ring.zero
    for es, c in vec_a.items():
        d = vec_b.get(es)
        if d is not None:
            acc = ring.add(acc, ring.mul(c, d))
    return acc


def pair_algebra_elements(shape, x, y):
    """The bilinear form evaluated on two algebra elements of the module."""
    ring = x.ring
    return bilinear_form(mlam_from_algebra(x, shape), mlam_from_algebra(y, shape), ring)
