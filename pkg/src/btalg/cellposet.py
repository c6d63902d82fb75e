"""The cell poset and its tableaux.

A cell shape is a pair ``(blam | bmu)``: ``blam`` an increasing multipartition
of n whose block sizes realize the type ``alpha``, and ``bmu`` a multipartition
of r = len(blam) recording the multiplicities of repeated components of
``blam``.  A cell tableau is a pair ``(t | u)`` with ``t`` a blam-multitableau
and ``u`` a bmu-multitableau of the initial kind; row-standard cell tableaux
additionally require ``t`` increasing (components of equal shape ordered by
their minimal entries).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

from . import permutations as perm
from . import tableaux as tab


class CellShape(NamedTuple):
    blam: tuple
    bmu: tuple


class CellTableau(NamedTuple):
    t: tuple
    u: tuple


def multiplicity_classes(blam):
    """Runs of equal adjacent components: list of (start_slot, count),
    1-based slots."""
    classes = []
    k = 0
    while k < len(blam):
        j = k
        while j + 1 < len(blam) and blam[j + 1] == blam[k]:
            j += 1
        classes.append((k + 1, j - k + 1))
        k = j + 1
    return classes


def is_increasing_multipartition(blam):
    keys = [tab.partition_key(c) for c in blam]
    return all(a <= b for a, b in zip(keys, keys[1:]))


@lru_cache(maxsize=None)
def cell_shapes(n, alpha):
    """The poset elements for the given type, as a list of CellShape."""
    alpha = tuple(alpha)
    if sorted(alpha, reverse=True) != list(alpha) or sum(alpha) != n:
        raise ValueError("alpha must be a partition of n")
    sizes = sorted(set(alpha))
    per_size = {}
    for s in sizes:
        count = alpha.count(s)
        opts = tab.partitions_of(s)
        per_size[s] = list(itertools.combinations_with_replacement(opts, count))
    out = []
    for chosen in itertools.product(*(per_size[s] for s in sizes)):
        comps = [c for group in chosen for c in group]
        blam = tuple(sorted(comps, key=tab.partition_key))
        for bmu in _multiplicity_shapes(blam):
            out.append(CellShape(blam, bmu))
    return out


def _multiplicity_shapes(blam):
    mults = [m for _, m in multiplicity_classes(blam)]
    for parts in itertools.product(*(tab.partitions_of(m) for m in mults)):
        yield tuple(parts)


def shape_type(blam):
    return tuple(sorted((sum(c) for c in blam if sum(c)), reverse=True))


def column_bounded(shape, N):
    """True iff every component of blam has at most N columns."""
    return all(tab.n_columns(c) <= N for c in shape.blam)


def split_by_column_bound(shapes, N):
    within = [s for s in shapes if column_bounded(s, N)]
    beyond = [s for s in shapes if not column_bounded(s, N)]
    return within, beyond


def conjugate_shape(shape):
    return CellShape(tuple(tab.conjugate_partition(c) for c in shape.blam),
                     tuple(tab.conjugate_partition(c) for c in shape.bmu))


def conjugate_cell_tableau(es):
    return CellTableau(tab.conjugate_multitableau(es.t),
                       tab.conjugate_multitableau(es.u))


def super_cell_tableau(shape):
    return CellTableau(tab.super_tableau(shape.blam), tab.super_tableau(shape.bmu))


def sub_cell_tableau(shape):
    return CellTableau(tab.sub_tableau(shape.blam), tab.sub_tableau(shape.bmu))


def is_increasing_tableau(t_multi, blam):
    """Components of equal shape must be ordered by minimal entry."""
    for start, count in multiplicity_classes(blam):
        mins = [tab.min_entry(t_multi[k]) for k in range(start - 1, start - 1 + count)]
        if any(a > b for a, b in zip(mins, mins[1:])):
            return False
    return True


def is_row_standard_cell(es, shape):
    return (tab.is_row_standard(es.t) and is_increasing_tableau(es.t, shape.blam)
            and tab.is_row_standard(es.u) and tab.is_initial_kind(es.u))


def is_standard_cell(es, shape):
    return (is_row_standard_cell(es, shape)
            and tab.is_standard(es.t) and tab.is_standard(es.u))


@lru_cache(maxsize=None)
def row_standard_cell_tableaux(shape):
    ts = [t for t in tab.enumerate_row_standard(shape.blam)
          if is_increasing_tableau(t, shape.blam)]
    us = _initial_kind_tableaux(shape, standard=False)
    return [CellTableau(t, u) for t in ts for u in us]


@lru_cache(maxsize=None)
def standard_cell_tableaux(shape):
    ts = [t for t in tab.enumerate_standard(shape.blam)
          if is_increasing_tableau(t, shape.blam)]
    us = _initial_kind_tableaux(shape, standard=True)
    return [CellTableau(t, u) for t in ts for u in us]


def _initial_kind_tableaux(shape, standard):
    """bmu-multitableaux of the initial kind: component j is filled with the
    consecutive block of multiplicity labels belonging to class j."""
    enum = tab.enumerate_standard if standard else tab.enumerate_row_standard
    per_class = []
    offset = 0
    for mu in shape.bmu:
        m = sum(mu)
        fillings = []
        for f in enum((mu,)):
            shifted = tuple(tuple(x + offset for x in row) for row in f[0])
            fillings.append(shifted)
        per_class.append(fillings)
        offset += m
    return [tuple(choice) for choice in itertools.product(*per_class)]


def d_of_u(u_multi):
    """The slot permutation d(u) in S_r with u = t^bmu * d(u)."""
    return tab.d_of(u_multi)


# ---------------------------------------------------------------------------
# dominance

def shape_dominates(a, b):
    """Strict order on cell shapes: a < b."""
    if a.blam == b.blam:
        return a.bmu != b.bmu and tab.dominates_multicomp(a.bmu, b.bmu)
    if len(a.blam) == len(b.blam):
        for sigma in itertools.permutations(range(len(a.blam))):
            permuted = tuple(a.blam[sigma[k]] for k in range(len(a.blam)))
            if permuted != b.blam and tab.dominates_multicomp(permuted, b.blam):
                return True
    return False


def shape_dominates_eq(a, b):
    return a == b or shape_dominates(a, b)


def cell_tableau_dominates_eq(es, et):
    """Componentwise dominance of cell tableaux (used in property tests)."""
    return tab.dominates_tableau(es.t, et.t) and tab.dominates_tableau(es.u, et.u)


# ---------------------------------------------------------------------------
# the . s_i action with straightening

def cell_tableau_dot_si(es, i, shape):
    """The action of s_i on a row-standard cell tableau.

    Entries i, i+1 are exchanged in the t-part; when this breaks the
    increasing ordering (two adjacent components of equal shape whose minimal
    entries are exactly i and i+1), the two components are swapped back and
    the u-part absorbs the swap: d(u_new) is the distinguished representative
    of d(u) * tau modulo the row stabilizer of t^bmu, with tau the adjacent
    slot transposition.
    """
    t, u = es
    pos = tab.positions(t)
    r1, _, p1 = pos[i]
    r2, _, p2 = pos[i + 1]
    if p1 == p2:
        if r1 == r2:
            return es
        return CellTableau(tab.swap_entries(t, i), u)
    sh1 = tab.shape_of_tableau(t[p1 - 1])
    sh2 = tab.shape_of_tableau(t[p2 - 1])
    if sh1 != sh2:
        return CellTableau(tab.swap_entries(t, i), u)
    m1 = tab.min_entry(t[p1 - 1])
    m2 = tab.min_entry(t[p2 - 1])
    if {m1, m2} != {i, i + 1}:
        return CellTableau(tab.swap_entries(t, i), u)
    # straightening case: p2 == p1 + 1 and the mins are i < i+1
    lo = min(p1, p2)
    r = len(t)
    tau = perm.simple(r, lo)
    t_new = tab.permute_components(tab.swap_entries(t, i), tau)
    du_new = perm.compose(d_of_u(u), tau)
    u_new = _row_sorted_u(du_new, shape.bmu)
    return CellTableau(t_new, u_new)


def _row_sorted_u(d_slot, bmu):
    """The bmu-multitableau of d_slot with rows sorted (the distinguished
    coset representative for the row stabilizer of t^bmu)."""
    _, t = tab.multicomp_decompose(d_slot, bmu)
    return t


def cell_tableau_dot_word(es, word, shape):
    for i in word:
        es = cell_tableau_dot_si(es, i, shape)
    return es
