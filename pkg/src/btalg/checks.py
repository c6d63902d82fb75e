"""Named verification suites shared by the command line and the tests.

Each check returns (name, ok, detail); detail is None on success.
"""

from __future__ import annotations

import itertools

from . import cellposet as cpos
from . import permutations as perm
from . import setpartitions as sp
from . import tableaux as tab
from . import tensor as ten
from .algebra import LAURENT, Element, central_idempotent, gen_e, gen_g, \
    gen_g_inv, orthogonal_idempotent
from .cellular import (block_antisymmetrizer, m_element, n_element, m_of,
                       q_antisymmetrizer)
from .laurent import ONE


def check_defining_relations(n):
    """All nine relations between the braid and tie generators, in normal
    form, for every applicable pair of indices."""
    g = lambda i: gen_g(n, i)
    e = lambda i: gen_e(n, i)
    one = Element.one(n)
    bad = []
    for i in range(1, n):
        for j in range(1, n):
            gi, gj, ei, ej = g(i), g(j), e(i), e(j)
            if abs(i - j) > 1:
                if gi.times(gj) != gj.times(gi):
                    bad.append(("gg far", i, j))
                if gi.times(ej) != ej.times(gi):
                    bad.append(("ge far", i, j))
            if abs(i - j) == 1:
                if gi.times(gj).times(gi) != gj.times(gi).times(gj):
                    bad.append(("braid", i, j))
                if ei.times(gj).times(gi) != gj.times(gi).times(ej):
                    bad.append(("eg braid", i, j))
                lhs = ei.times(ej).times(gj)
                mid = ei.times(gj).times(ei)
                rhs = gj.times(ei).times(ej)
                if not (lhs == mid == rhs):
                    bad.append(("tie braid", i, j))
            if ei.times(ej) != ej.times(ei):
                bad.append(("ee", i, j))
        ei, gi = e(i), g(i)
        if gi.times(ei) != ei.times(gi):
            bad.append(("ge same", i))
        if ei.times(ei) != ei:
            bad.append(("e idem", i))
        quad = one.add(ei.times(gi).scale(LAURENT.q_minus_qinv))
        if gi.times(gi) != quad:
            bad.append(("quadratic", i))
        if gi.times(gen_g_inv(n, i)) != one:
            bad.append(("inverse", i))
    return ("defining relations", not bad, bad or None)


def check_tensor_relations(n, N, r):
    """The same relations as operator identities on every basis vector."""
    ring = LAURENT
    keys = ten.all_index_pairs(n, N, r)

    def op_g(vs, i):
        return {k: ten.apply_G(v, i, ring) for k, v in vs.items()}

    def op_e(vs, i):
        return {k: ten.apply_E(v, i, ring) for k, v in vs.items()}

    base = {k: {k: ONE} for k in keys}
    bad = []

    def eq(a, b, tag):
        if a != b:
            bad.append(tag)

    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                eq(op_g(op_g(base, i), j), op_g(op_g(base, j), i), ("gg far", i, j))
                eq(op_g(op_e(base, j), i), op_e(op_g(base, i), j), ("ge far", i, j))
            if abs(i - j) == 1:
                eq(op_g(op_g(op_g(base, i), j), i),
                   op_g(op_g(op_g(base, j), i), j), ("braid", i, j))
                eq(op_g(op_g(op_e(base, i), j), i),
                   op_e(op_g(op_g(base, j), i), j), ("eg braid", i, j))
                lhs = op_g(op_e(op_e(base, i), j), j)
                mid = op_e(op_g(op_e(base, i), j), i)
                rhs = op_e(op_e(op_g(base, j), i), j)
                if not (lhs == mid == rhs):
                    bad.append(("tie braid", i, j))
            eq(op_e(op_e(base, i), j), op_e(op_e(base, j), i), ("ee", i, j))
        eq(op_e(op_e(base, i), i), op_e(base, i), ("e idem", i))
        gg = op_g(op_g(base, i), i)
        quad = {}
        for k in keys:
            corr = ten.vscale(ten.apply_G(ten.apply_E({k: ONE}, i, ring), i, ring),
                              LAURENT.q_minus_qinv, ring)
            quad[k] = ten.vadd({k: ONE}, corr, ring)
        eq(gg, quad, ("quadratic", i))
    return (f"tensor relations N={N} r={r}", not bad, bad or None)


def check_idempotents(n):
    """Orthogonality of the Mobius family, its interaction with g_w and E_B,
    and centrality of the type sums."""
    parts = sp.enumerate_set_partitions(n)
    idems = {a: orthogonal_idempotent(a) for a in parts}
    bad = []
    for a in parts:
        for b in parts:
            prod = idems[a].times(idems[b])
            expected = idems[a] if a == b else Element.zero(n)
            if prod != expected:
                bad.append(("orthogonality", a, b))
    for a in parts:
        for i in range(1, n):
            g = gen_g(n, i)
            if idems[a].times(g) != g.times(idems[sp.act(a, perm.simple(n, i))]):
                bad.append(("commute g", a, i))
        for b in parts:
            prod = idems[a].times(Element.basis(n, b, perm.identity(n)))
            expected = idems[a] if sp.coarser_eq(b, a) else Element.zero(n)
            if prod != expected:
                bad.append(("absorb E", a, b))
    total = Element.zero(n)
    for alpha in tab.partitions_of(n):
        c = central_idempotent(n, alpha)
        total = total.add(c)
        for i in range(1, n):
            for gen in (gen_g(n, i), gen_e(n, i)):
                if c.times(gen) != gen.times(c):
                    bad.append(("centrality", alpha, i))
    if total != Element.one(n):
        bad.append(("partition of unity",))
    return ("idempotent family", not bad, bad or None)


def check_bilinear_form(n):
    """Symmetry and invariance of the cell-module pairing, all generators."""
    bad = []
    for alpha in tab.partitions_of(n):
        for shape in cpos.cell_shapes(n, alpha):
            basis = cpos.row_standard_cell_tableaux(shape)
            for es in basis:
                for et in basis:
                    for i in range(1, n):
                        for act in (ten.mlam_act_g, ten.mlam_act_e):
                            lhs = ten.bilinear_form(act(ten.mlam_unit(es), i, shape),
                                                    ten.mlam_unit(et))
                            rhs = ten.bilinear_form(ten.mlam_unit(es),
                                                    act(ten.mlam_unit(et), i, shape))
                            if lhs != rhs:
                                bad.append((shape, es, et, i, act.__name__))
    return ("bilinear form invariance", not bad, bad or None)


def check_crucial_pairing(n):
    """Nonvanishing of the pairing against the dual basis, and the value 1
    of its shape-only reduced form."""
    bad = []
    for alpha in tab.partitions_of(n):
        for shape in cpos.cell_shapes(n, alpha):
            std = cpos.standard_cell_tableaux(shape)
            cshape = cpos.conjugate_shape(shape)
            for es in std:
                for et in std:
                    val = crucial_pairing(shape, es, et)
                    if LAURENT.is_zero(val):
                        bad.append(("zero", shape, es, et))
            mt = m_of(shape, cpos.sub_cell_tableau(shape))
            red = mt.times(q_antisymmetrizer(tab.multicomp_size(shape.blam),
                                             cshape.blam))
            red = red.times(block_antisymmetrizer(cshape))
            coeffs = ten.mlam_from_algebra(red, shape)
            got = coeffs.get(cpos.sub_cell_tableau(shape), LAURENT.zero)
            if got != ONE:
                bad.append(("reduced value", shape, got))
    return ("crucial pairing", not bad, bad or None)


def crucial_pairing(shape, es, et):
    """(m_{et} n_{et' es'}, m_{es}) in the cell module of the shape."""
    cshape = cpos.conjugate_shape(shape)
    m_t = m_of(shape, et)
    n_part = n_element(cshape, cpos.conjugate_cell_tableau(et),
                       cpos.conjugate_cell_tableau(es))
    prod = m_t.times(n_part)
    coeffs = ten.mlam_from_algebra(prod, shape)
    return coeffs.get(es, prod.ring.zero)


def check_duality(n):
    """If the product of a basis element with a dual basis element is
    nonzero, the inner tableaux are forced to be conjugate-dominated."""
    bad = []
    for alpha in tab.partitions_of(n):
        shapes = cpos.cell_shapes(n, alpha)
        for shape in shapes:
            for shape1 in shapes:
                std = cpos.standard_cell_tableaux(shape)
                std1 = cpos.standard_cell_tableaux(shape1)
                for es, et in itertools.product(std, repeat=2):
                    m = m_element(shape, es, et)
                    for es1, et1 in itertools.product(std1, repeat=2):
                        nn = n_element(shape1, es1, et1)
                        if not m.times(nn).is_zero():
                            conj = cpos.conjugate_cell_tableau(es1)
                            if not cpos.cell_tableau_dominates_eq(et, conj):
                                bad.append((shape, es, et, shape1, es1, et1))
    return ("dual-basis vanishing", not bad, bad or None)


def run_all(n, N=None, r=None):
    if N is None:
        N = 2
    if r is None:
        r = 2
    results = [
        check_defining_relations(n),
        check_tensor_relations(min(n, 3), N, r),
        check_idempotents(min(n, 4)),
        check_bilinear_form(min(n, 3)),
        check_crucial_pairing(min(n, 3)),
        check_duality(min(n, 3)),
    ]
    return results
