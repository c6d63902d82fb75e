import random

import pytest

from btalg import permutations as perm
from btalg import setpartitions as sp


def part(*blocks):
    return sp.canonical(blocks)


def test_join_examples():
    a = part((1, 2), (3,))
    b = part((1,), (2, 3))
    assert sp.join(a, b) == part((1, 2, 3))
    for x in sp.enumerate_set_partitions(4):
        assert sp.join(x, x) == x


def test_join_is_minimal_common_coarsening():
    # oracle: enumerate all common coarsenings and take the finest
    all4 = sp.enumerate_set_partitions(4)
    for a in all4:
        for b in all4:
            common = [c for c in sp.coarsenings(a) if sp.coarser_eq(b, c)]
            finest = [c for c in common
                      if all(not (sp.coarser_eq(d, c) and d != c) for d in common)]
            assert len(finest) == 1
            assert sp.join(a, b) == finest[0]


def test_join_axioms():
    all3 = sp.enumerate_set_partitions(3)
    for a in all3:
        for b in all3:
            assert sp.join(a, b) == sp.join(b, a)
            for c in all3:
                assert sp.join(sp.join(a, b), c) == sp.join(a, sp.join(b, c))


def test_act_examples():
    a = part((1, 2), (3,))
    assert sp.act(a, perm.identity(3)) == a
    assert sp.act(a, perm.simple(3, 2)) == part((1, 3), (2,))
    rng = random.Random(6)
    for _ in range(100):
        x = rng.choice(sp.enumerate_set_partitions(4))
        u = perm.random_permutation(4, rng)
        v = perm.random_permutation(4, rng)
        assert sp.act(sp.act(x, u), v) == sp.act(x, perm.compose(u, v))
        assert sp.type_of(sp.act(x, u)) == sp.type_of(x)


def test_type_of_examples():
    seq = (1, 2, 2, 1, 2, 2, 2, 1, 2, 4, 1, 2, 2)
    assert sp.type_of(sp.from_sequence(seq)) == (8, 4, 1)
    assert sp.type_of(sp.singletons(5)) == (1, 1, 1, 1, 1)
    assert sp.type_of(sp.one_block(5)) == (5,)


def test_enumeration_counts():
    assert len(sp.enumerate_set_partitions(3)) == 5
    assert len(sp.enumerate_set_partitions(4)) == 15
    assert len(sp.enumerate_set_partitions(5)) == 52
    assert len(set(sp.enumerate_set_partitions(5))) == 52
    assert len(sp.set_partitions_of_type(4, (2, 1, 1))) == 6


def _mobius_by_recursion(a, b, cache=None):
    # defining recursion: sum over a <= c <= b of mu(a, c) is delta_{a,b}
    if cache is None:
        cache = {}
    if (a, b) in cache:
        return cache[(a, b)]
    if a == b:
        return 1
    total = 0
    for c in sp.coarsenings(a):
        if c != b and sp.coarser_eq(c, b):
            total += _mobius_by_recursion(a, c, cache)
    cache[(a, b)] = -total
    return -total


def test_mobius_against_recursion():
    assert sp.mobius(sp.singletons(3), sp.one_block(3)) == 2
    all4 = sp.enumerate_set_partitions(4)
    for a in all4:
        assert sp.mobius(a, a) == 1
        for b in sp.coarsenings(a):
            assert sp.mobius(a, b) == _mobius_by_recursion(a, b)
            total = sum(sp.mobius(a, c) for c in sp.coarsenings(a)
                        if sp.coarser_eq(c, b))
            assert total == (1 if a == b else 0)
    with pytest.raises(ValueError):
        sp.mobius(sp.one_block(3), sp.singletons(3))


def test_from_multicomposition():
    assert sp.from_multicomposition(((2,), (1,))) == part((1, 2), (3,))
    blam = ((1, 1), (1, 1), (1, 1), (2,), (2,), (1, 1, 1), (1, 1, 1),
            (1, 1, 1), (2, 1))
    expected = [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12, 13),
                (14, 15, 16), (17, 18, 19), (20, 21, 22)]
    assert sp.from_multicomposition(blam) == sp.canonical(expected)
    assert sp.from_multicomposition(((2,), (), (1,))) == part((1, 2), (3,))


def test_from_sequence():
    assert sp.from_sequence((1, 1, 1)) == part((1, 2, 3))
    assert sp.from_sequence((3, 1, 2)) == sp.singletons(3)
    seq = (1, 2, 2, 1, 2, 2, 2, 1, 2, 4, 1, 2, 2)
    assert sp.from_sequence(seq) == sp.canonical(
        [(1, 4, 8, 11), (2, 3, 5, 6, 7, 9, 12, 13), (10,)])


def test_partial_order_n4():
    all4 = sp.enumerate_set_partitions(4)
    for a in all4:
        assert sp.coarser_eq(a, a)
        for b in all4:
            if sp.coarser_eq(a, b) and sp.coarser_eq(b, a):
                assert a == b
            lub = sp.join(a, b)
            assert sp.coarser_eq(a, lub) and sp.coarser_eq(b, lub)


def test_json_round_trip():
    a = part((1, 3), (2,))
    assert sp.to_json(a) == [[1, 3], [2]]
    assert sp.from_json([[1, 3], [2]]) == a
