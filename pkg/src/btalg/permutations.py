"""Permutations of {1..n} as a Coxeter group acting on the right.

A permutation is a tuple ``w`` with ``w[i-1]`` the image of ``i``.  Products
compose left-to-right: ``compose(u, v)`` applies ``u`` first, matching the
right action on points, so ``x * (u v) = (x * u) * v``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def identity(n):
    return tuple(range(1, n + 1))


def compose(u, v):
    """Apply u, then v."""
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return tuple(v[x - 1] for x in u)


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def transposition(n, a, b):
    img = list(range(1, n + 1))
    img[a - 1], img[b - 1] = b, a
    return tuple(img)


def simple(n, i):
    """s_i = (i, i+1)."""
    return transposition(n, i, i + 1)


@lru_cache(maxsize=None)
def length(w):
    """Coxeter length = number of inversions."""
    count = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                count += 1
    return count


def times_si(w, i):
    """w * s_i, i.e. swap the values i and i+1 in the one-line notation."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def right_descent(w, i):
    """True iff length(w * s_i) < length(w)."""
    return w.index(i + 1) < w.index(i)


@lru_cache(maxsize=None)
def reduced_word(w):
    """A reduced word (i_1, ..., i_k) with s_{i_1} ... s_{i_k} = w.

    Deterministic: repeatedly strips the smallest right descent.
    """
    word = []
    cur = w
    n = len(w)
    while True:
        for i in range(1, n):
            if right_descent(cur, i):
                word.append(i)
                cur = times_si(cur, i)
                break
        else:
            break
    return tuple(reversed(word))


def perm_from_word(n, word):
    w = identity(n)
    for i in word:
        w = times_si(w, i)
    return w


def random_permutation(n, rng):
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return tuple(img)


def all_permutations(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# Young subgroups and distinguished coset decompositions.
#
# A composition (parts >= 0) carves {1..n} into consecutive row intervals;
# the Young subgroup is the direct product of the symmetric groups on those
# intervals.

def row_intervals(lam):
    """Consecutive intervals of {1..n} cut out by the composition lam."""
    out = []
    start = 1
    for part in lam:
        out.append(tuple(range(start, start + part)))
        start += part
    return out


def young_subgroup(n, lam):
    """All elements of the Young subgroup S_lam, with sum(lam) == n."""
    if sum(lam) != n:
        raise ValueError("composition size mismatch")
    intervals = [iv for iv in row_intervals(lam) if iv]
    perms = []
    for choice in itertools.product(*(itertools.permutations(iv) for iv in intervals)):
        img = list(range(1, n + 1))
        for iv, ch in zip(intervals, choice):
            for src, dst in zip(iv, ch):
                img[src - 1] = dst
        perms.append(tuple(img))
    return perms


def parabolic_decompose(w, lam):
    """Unique w = w0 * d with w0 in S_lam and d the distinguished coset rep.

    Returns (w0, rows) where rows is the row-standard tableau of shape lam
    obtained by sorting the rows of the lam-tableau of w; d is recovered as
    the row reading of rows.  Lengths are additive:
    length(w) == length(w0) + length(d).
    """
    if sum(lam) != len(w):
        raise ValueError("composition size mismatch")
    rows = tuple(tuple(sorted(w[x - 1] for x in iv)) for iv in row_intervals(lam))
    d = tuple(x for row in rows for x in row)
    w0 = compose(w, inverse(d))
    return w0, rows


def coset_representative(w, lam):
    """The distinguished representative d of S_lam * w."""
    _, rows = parabolic_decompose(w, lam)
    return tuple(x for row in rows for x in row)
