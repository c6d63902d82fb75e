"""The lattice of set partitions of {1..n}.

A set partition is canonically a tuple of blocks, each a sorted tuple of
integers, blocks ordered by minimum.  The partial order used throughout is
coarsening: ``A <= B`` when every block of B is a union of blocks of A, and
``join`` is the least common coarsening.
"""

from __future__ import annotations

import math
from functools import lru_cache


def canonical(blocks):
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def singletons(n):
    return tuple((i,) for i in range(1, n + 1))


def one_block(n):
    return (tuple(range(1, n + 1)),) if n else ()


def size(a):
    return sum(len(b) for b in a)


def block_map(a):
    """Map element -> index of its block in a."""
    out = {}
    for k, b in enumerate(a):
        for x in b:
            out[x] = k
    return out


@lru_cache(maxsize=None)
def join(a, b):
    """Least common coarsening (union-find over the blocks of both)."""
    if size(a) != size(b):
        raise ValueError("size mismatch")
    n = size(a)
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for part in (a, b):
        for block in part:
            for x in block[1:]:
                union(block[0], x)
    groups = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return canonical(groups.values())


def coarser_eq(a, b):
    """True iff a <= b, i.e. each block of b is a union of blocks of a."""
    bm = block_map(b)
    return all(len({bm[x] for x in block}) == 1 for block in a)


@lru_cache(maxsize=None)
def act(a, w):
    """The partition A*w with blocks mapped elementwise through w."""
    return canonical(tuple(w[x - 1] for x in block) for block in a)


def type_of(a):
    """Block sizes, sorted decreasingly (an integer partition)."""
    return tuple(sorted((len(b) for b in a), reverse=True))


def pair_partition(n, i, j):
    """The partition whose only non-singleton block is {i, j}."""
    blocks = [(x,) for x in range(1, n + 1) if x not in (i, j)]
    blocks.append((i, j))
    return canonical(blocks)


def enumerate_set_partitions(n):
    """All set partitions of {1..n} via restricted-growth strings."""
    if n == 0:
        return [()]
    out = []

    def grow(rgs, maxv):
        if len(rgs) == n:
            blocks = {}
            for idx, v in enumerate(rgs):
                blocks.setdefault(v, []).append(idx + 1)
            out.append(canonical(blocks.values()))
            return
        for v in range(maxv + 2):
            grow(rgs + [v], max(maxv, v))

    grow([0], 0)
    return out


def set_partitions_of_type(n, alpha):
    return [a for a in enumerate_set_partitions(n) if type_of(a) == tuple(alpha)]


def coarsenings(a):
    """All partitions b with a <= b."""
    n = size(a)
    blocks = list(a)
    out = []
    for grouping in enumerate_set_partitions(len(blocks)):
        merged = []
        for group in grouping:
            merged.append(tuple(sorted(x for gi in group for x in blocks[gi - 1])))
        out.append(canonical(merged))
    return out


def bell_number(n):
    return len(enumerate_set_partitions(n)) if n else 1


@lru_cache(maxsize=None)
def mobius(a, b):
    """Mobius function of the interval [a, b] in the coarsening order.

    The interval is a product of full partition lattices, one per block of b
    with n_k the number of a-blocks it contains, and each factor contributes
    (-1)^(n_k - 1) * (n_k - 1)!.
    """
    if not coarser_eq(a, b):
        raise ValueError("a is not finer than b")
    bm = block_map(a)
    value = 1
    for block in b:
        n_k = len({bm[x] for x in block})
        value *= (-1) ** (n_k - 1) * math.factorial(n_k - 1)
    return value


def from_multicomposition(blam):
    """Consecutive-interval partition with one block per nonempty component."""
    blocks = []
    start = 1
    for comp in blam:
        m = sum(comp)
        if m:
            blocks.append(tuple(range(start, start + m)))
        start += m
    return canonical(blocks)


def from_sequence(seq):
    """Fibers of a sequence, empty fibers skipped."""
    fibers = {}
    for pos, v in enumerate(seq):
        fibers.setdefault(v, []).append(pos + 1)
    return canonical(fibers.values())


def to_json(a):
    return [list(b) for b in a]


def from_json(obj):
    return canonical(obj)
