import random

from btalg import cellposet as cpos
from btalg import permutations as perm
from btalg import setpartitions as sp
from btalg import tableaux as tab
from btalg import tensor as ten
from btalg.algebra import (Element, LAURENT, central_idempotent, gen_e, gen_g,
                           orthogonal_idempotent)
from btalg.cellular import m_of
from btalg.checks import (check_bilinear_form, check_crucial_pairing,
                          check_duality, check_tensor_relations,
                          crucial_pairing)
from btalg.laurent import ONE, Q, Q_INV


def v(i, s):
    return {(tuple(i), tuple(s)): ONE}


def test_tie_operator_is_color_projection():
    ring = LAURENT
    # equal component numbers are kept, unequal ones are killed
    assert ten.apply_E(v((1, 2), (1, 1)), 1, ring) == v((1, 2), (1, 1))
    assert ten.apply_E(v((1, 2), (1, 2)), 1, ring) == {}
    # idempotent
    w = ten.apply_E(v((2, 1), (1, 1)), 1, ring)
    assert ten.apply_E(w, 1, ring) == w


def test_braid_operator_cases():
    ring = LAURENT
    assert ten.apply_G(v((1, 1), (1, 1)), 1, ring) == {
        ((1, 1), (1, 1)): Q}
    got = ten.apply_G(v((2, 1), (1, 1)), 1, ring)
    assert got == {((2, 1), (1, 1)): Q - Q_INV, ((1, 2), (1, 1)): ONE}
    assert ten.apply_G(v((1, 2), (1, 1)), 1, ring) == v((2, 1), (1, 1))
    assert ten.apply_G(v((1, 2), (1, 2)), 1, ring) == v((2, 1), (2, 1))
    inv = ten.apply_G_inv(ten.apply_G(v((2, 1), (1, 1)), 1, ring), 1, ring)
    assert inv == v((2, 1), (1, 1))


def test_operator_relations():
    for n, N, r in ((3, 2, 2), (3, 3, 3), (4, 2, 2)):
        name, ok, detail = check_tensor_relations(n, N, r)
        assert ok, detail


def test_partition_idempotent_action_exhaustive():
    for n in (2, 3):
        keys = ten.all_index_pairs(n, n, n)
        for a in sp.enumerate_set_partitions(n):
            ea = Element.basis(n, a, perm.identity(n))
            bba = orthogonal_idempotent(a)
            for k in keys:
                vec = {k: ONE}
                img = ten.act_element(vec, ea, via_generators=True)
                expect = vec if sp.coarser_eq(a, sp.from_sequence(k[1])) else {}
                assert img == expect
                img2 = ten.act_element(vec, bba, via_generators=True)
                expect2 = vec if sp.from_sequence(k[1]) == a else {}
                assert img2 == expect2
                # the fast filter path agrees
                assert ten.act_element(vec, ea) == img


def test_central_idempotent_spans_type_component():
    n = 3
    keys = ten.all_index_pairs(n, 2, 2)
    for alpha in tab.partitions_of(n):
        c = central_idempotent(n, alpha)
        for k in keys:
            vec = {k: ONE}
            img = ten.act_element(vec, c)
            expect = vec if sp.type_of(sp.from_sequence(k[1])) == alpha else {}
            assert img == expect


def test_index_of_tableau_small():
    assert ten.index_of_tableau(tab.super_tableau(((2,), (1,)))) == \
        ((1, 1, 1), (1, 1, 2))


def test_index_of_tableau_25_box_example():
    t = ((((3,), (4,))), ((1,), (8,)), ((6, 9),), ((7, 10),),
         ((11,), (12,), (13,)), ((14,), (15,), (16,)), ((20,), (18,), (19,)),
         ((21, 23), (24,)), ((17,), (22, 25)), ((5,), (2,)))
    iseq, sseq = ten.index_of_tableau(t)
    assert iseq[:8] == (1, 2, 1, 2, 1, 1, 1, 2)
    assert iseq == (1, 2, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3, 1, 2, 3, 1, 2, 3,
                    1, 1, 2, 1, 2, 2)
    assert sseq == (2, 10, 1, 1, 10, 3, 4, 2, 3, 4, 5, 5, 5, 6, 6, 6, 9, 7,
                    7, 7, 8, 9, 8, 8, 9)


def test_index_tableau_bijection():
    n, N, r = 3, 2, 2
    seen = {}
    for blam in ten.multicompositions_bounded(r, n, N):
        for s_tab in tab.enumerate_row_standard(blam):
            key = ten.index_of_tableau(s_tab)
            assert key not in seen
            seen[key] = s_tab
            assert ten.tableau_of_index(key[0], key[1], r, N) == s_tab
    assert len(seen) == (N * r) ** n


def test_mblam_action_examples():
    blam = ((2,), (1,))
    top = tab.super_tableau(blam)
    vec = ten.mblam_unit(top)
    # same component, same row: eigenvalue q
    assert ten.mblam_act_g(vec, 1, LAURENT) == {top: Q}
    # tie inside a component keeps the vector, across components kills it
    assert ten.mblam_act_e(vec, 1, LAURENT) == vec
    assert ten.mblam_act_e(vec, 2, LAURENT) == {}


def test_module_embedding_agreement():
    rng = random.Random(14)
    for n in (2, 3):
        for r in (1, 2):
            for blam in ten.multicompositions_bounded(r, n, n):
                for s_tab in tab.enumerate_row_standard(blam):
                    vec = ten.mblam_unit(s_tab)
                    tvec = ten.embed_mblam(vec)
                    for i in range(1, n):
                        assert ten.embed_mblam(ten.mblam_act_g(vec, i)) == \
                            ten.act_element(tvec, gen_g(n, i))
                        assert ten.embed_mblam(ten.mblam_act_e(vec, i)) == \
                            ten.act_element(tvec, gen_e(n, i))
    # random composite elements through the generator expansion
    n = 4
    blam = ((2,), (1, 1))
    keys = [(a, w) for a in sp.enumerate_set_partitions(n)
            for w in perm.all_permutations(n)]
    for _ in range(20):
        x = Element.basis(n, *rng.choice(keys))
        for s_tab in tab.enumerate_row_standard(blam)[:4]:
            vec = ten.mblam_unit(s_tab)
            lhs = ten.embed_mblam(ten.mblam_act_element(vec, x))
            rhs = ten.act_element(ten.embed_mblam(vec), x)
            assert lhs == rhs


def test_mblam_readout_round_trip():
    for blam in (((2,), (1,)), ((1, 1), (2,)), ((2, 1),)):
        n = tab.multicomp_size(blam)
        for s_tab in tab.enumerate_row_standard(blam):
            el = ten.x_basis_element(blam, s_tab)
            coords = ten.mblam_from_algebra(el, blam)
            assert coords == {s_tab: ONE}
        # a nontrivial combination read back exactly
        basis = tab.enumerate_row_standard(blam)
        combo = ten.x_basis_element(blam, basis[0]).scale(Q).add(
            ten.x_basis_element(blam, basis[-1]))
        coords = ten.mblam_from_algebra(combo, blam)
        assert coords[basis[0]] == Q and coords[basis[-1]] == ONE


def test_cell_module_vs_algebra_exhaustive():
    from btalg.cellular import m_element
    for n in (2, 3):
        for alpha in tab.partitions_of(n):
            for shape in cpos.cell_shapes(n, alpha):
                top = cpos.super_cell_tableau(shape)
                for es in cpos.row_standard_cell_tableaux(shape):
                    m = m_element(shape, top, es)
                    for i in range(1, n):
                        got = ten.mlam_from_algebra(m.times(gen_g(n, i)), shape)
                        want = ten.mlam_act_g(ten.mlam_unit(es), i, shape)
                        assert got == want
                        got_e = ten.mlam_from_algebra(m.times(gen_e(n, i)), shape)
                        want_e = ten.mlam_act_e(ten.mlam_unit(es), i, shape)
                        assert got_e == want_e


def test_cell_module_contained_in_composition_module():
    # every m-basis vector expands exactly in the x-basis of its shape
    for n in (2, 3):
        for alpha in tab.partitions_of(n):
            for shape in cpos.cell_shapes(n, alpha):
                for es in cpos.row_standard_cell_tableaux(shape):
                    m = m_of(shape, es)
                    coords = ten.mblam_from_algebra(m, shape.blam)
                    rebuilt = ten.mblam_to_algebra(coords, shape.blam)
                    assert rebuilt == m


def test_bilinear_form_basics():
    shape = cpos.cell_shapes(3, (2, 1))[0]
    basis = cpos.row_standard_cell_tableaux(shape)
    for es in basis:
        for et in basis:
            val = ten.bilinear_form(ten.mlam_unit(es), ten.mlam_unit(et))
            assert val == (ONE if es == et else LAURENT.zero)


def test_bilinear_form_invariance():
    for n in (2, 3):
        name, ok, detail = check_bilinear_form(n)
        assert ok, detail


def test_crucial_pairing_nonzero_and_reduced_value():
    for n in (2, 3):
        name, ok, detail = check_crucial_pairing(n)
        assert ok, detail
    # trivial one-box case
    shape = cpos.cell_shapes(1, (1,))[0]
    top = cpos.super_cell_tableau(shape)
    assert crucial_pairing(shape, top, top) == ONE


def test_dual_basis_vanishing():
    for n in (2, 3):
        name, ok, detail = check_duality(n)
        assert ok, detail


def test_faithfulness_rank_n3():
    from btalg.annihilator import full_annihilator_dim
    from btalg.laurent import QQ
    from fractions import Fraction
    assert full_annihilator_dim(3, 3, 3, QQ, Fraction(2)) == 0


def test_type_component_dimension_counts():
    for n in (2, 3, 4):
        for N in (2, 3):
            for alpha in tab.partitions_of(n):
                r = len(alpha)
                lhs = len(ten.index_pairs_of_type(n, N, r, alpha))
                rhs = sum(len(tab.enumerate_row_standard(blam))
                          for blam in ten.multicompositions_bounded(r, n, N)
                          if sp.type_of(sp.from_multicomposition(blam)) == alpha)
                assert lhs == rhs
