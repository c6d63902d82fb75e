"""Compositions, partitions, multitableaux, dominance and enumeration.

Representations are plain nested tuples:

* composition: tuple of ints >= 0, no trailing zeros (internal zeros allowed);
* partition: weakly decreasing tuple of positive ints;
* multicomposition: tuple of compositions (components may be empty);
* tableau: tuple of rows, each row a tuple of entries; the rows of empty
  length are kept so that row indices match the shape;
* multitableau: tuple of tableaux.

A multitableau of total size n is a bijective labelling of the diagram by
{1..n}; the row reading in diagram order (rows of component 1, then
component 2, ...) of the tableau of a permutation w is the one-line notation
of w itself.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import permutations as perm


# ---------------------------------------------------------------------------
# shapes

def trim(comp):
    comp = tuple(comp)
    while comp and comp[-1] == 0:
        comp = comp[:-1]
    return comp


def is_partition(lam):
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All integer partitions of n, largest part first within each."""
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


def conjugate_partition(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partition_key(lam):
    """Sort key realizing the fixed total order on partitions.

    Graded by size, then lexicographic on partial sums; this refines the
    dominance order (bigger key = more dominant among equal sizes).
    """
    psums = tuple(itertools.accumulate(lam))
    return (sum(lam), psums)


def multicomp_size(blam):
    return sum(sum(c) for c in blam)


def multicomp_norm(blam):
    """Component sizes as a composition of length r."""
    return tuple(sum(c) for c in blam)


def conjugate_multipartition(blam):
    return tuple(conjugate_partition(c) for c in blam)


def n_columns(lam):
    return lam[0] if lam else 0


# dominance on compositions compares partial sums; sizes may differ.

def dominates_comp(a, b):
    """True iff a is dominated by b (partial sums of a <= those of b)."""
    ta = tb = 0
    for k in range(max(len(a), len(b))):
        ta += a[k] if k < len(a) else 0
        tb += b[k] if k < len(b) else 0
        if ta > tb:
            return False
    return True


def dominates_multicomp(a, b):
    """Componentwise dominance of multicompositions of equal length."""
    if len(a) != len(b):
        return False
    return all(dominates_comp(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# tableaux

def shape_of_tableau(t):
    return trim(tuple(len(row) for row in t))


def shape_of(t_multi):
    return tuple(shape_of_tableau(c) for c in t_multi)


def super_tableau(blam):
    """t^blam: 1..n in order along the rows, one component after another."""
    out = []
    x = 1
    for comp in blam:
        rows = []
        for part in comp:
            rows.append(tuple(range(x, x + part)))
            x += part
        out.append(tuple(rows))
    return tuple(out)


def sub_tableau(blam):
    """t_blam: 1..n in order along the columns of each component in turn."""
    out = []
    x = 1
    for comp in blam:
        cells = {}
        for col in range(comp[0] if comp else 0):
            for row in range(len(comp)):
                if comp[row] > col:
                    cells[(row, col)] = x
                    x += 1
        rows = tuple(tuple(cells[(r, c)] for c in range(comp[r])) for r in range(len(comp)))
        out.append(rows)
    return tuple(out)


def reading(t_multi):
    return tuple(x for c in t_multi for row in c for x in row)


def d_of(t_multi):
    """The permutation d(t) with t = t^shape * d(t); its one-line notation
    is the row reading of t."""
    return reading(t_multi)


def tableau_of(w, blam):
    """t^blam * w: the entry j of t^blam is replaced by w(j)."""
    t = super_tableau(blam)
    return tuple(tuple(tuple(w[x - 1] for x in row) for row in c) for c in t)


def apply_perm(t_multi, w):
    """Replace every entry x by w(x)."""
    return tuple(tuple(tuple(w[x - 1] for x in row) for row in c) for c in t_multi)


def swap_entries(t_multi, i):
    """The tableau t * s_i (entries i and i+1 exchanged)."""
    def sw(x):
        return i + 1 if x == i else i if x == i + 1 else x
    return tuple(tuple(tuple(sw(x) for x in row) for row in c) for c in t_multi)


def is_row_standard(t_multi):
    for c in t_multi:
        for row in c:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
    return True


def is_standard(t_multi):
    if not is_row_standard(t_multi):
        return False
    for c in t_multi:
        for r in range(len(c) - 1):
            for k in range(min(len(c[r]), len(c[r + 1]))):
                if c[r][k] >= c[r + 1][k]:
                    return False
    return True


def positions(t_multi):
    """Maps entry -> (row, column, component), all 1-based."""
    out = {}
    for p, c in enumerate(t_multi):
        for r, row in enumerate(c):
            for k, x in enumerate(row):
                out[x] = (r + 1, k + 1, p + 1)
    return out


def component_of(t_multi):
    """Map entry -> component index (1-based)."""
    out = {}
    for p, c in enumerate(t_multi):
        for row in c:
            for x in row:
                out[x] = p + 1
    return out


def is_initial_kind(t_multi):
    """True iff every entry sits in the same component as in t^shape."""
    blam = shape_of(t_multi)
    return component_of(t_multi) == component_of(super_tableau(blam))


def norm_tableau(t_multi):
    """The tableau of shape (|comp_1|, ..., |comp_r|) whose i-th row is the
    row reading of the i-th component."""
    return tuple(tuple(x for row in c for x in row) for c in t_multi)


def min_entry(component):
    return min(x for row in component for x in row)


def restricted_shape(t_multi, m):
    """Shape of the restriction to entries <= m (entries in rows form
    prefixes when the tableau is row standard)."""
    out = []
    for c in t_multi:
        counts = tuple(sum(1 for x in row if x <= m) for row in c)
        out.append(trim(counts))
    return tuple(out)


def dominates_tableau(s, t):
    """Row-standard multitableau dominance: restriction shapes are
    componentwise dominated at every level m."""
    n = multicomp_size(shape_of(s))
    for m in range(1, n + 1):
        a, b = restricted_shape(s, m), restricted_shape(t, m)
        if len(a) != len(b) or not dominates_multicomp(a, b):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration

def _row_slots(blam):
    """Flattened (component, row, capacity) list in diagram order."""
    slots = []
    for p, comp in enumerate(blam):
        for r, part in enumerate(comp):
            slots.append((p, r, part))
    return slots


def enumerate_row_standard(blam):
    """All row-standard multitableaux of shape blam."""
    slots = _row_slots(blam)
    n = multicomp_size(blam)
    shapes = [list(c) for c in blam]
    out = []

    def rec(entry, fill):
        if entry > n:
            rows = [[[] for _ in comp] for comp in blam]
            for x, slot in enumerate(fill, start=1):
                p, r, _ = slots[slot]
                rows[p][r].append(x)
            out.append(tuple(tuple(tuple(row) for row in c) for c in rows))
            return
        for k, (p, r, cap) in enumerate(slots):
            used = sum(1 for s in fill if s == k)
            if used < cap:
                fill.append(k)
                rec(entry + 1, fill)
                fill.pop()

    rec(1, [])
    return out


def enumerate_standard(blam):
    return [t for t in enumerate_row_standard(blam) if is_standard(t)]


# ---------------------------------------------------------------------------
# coset decompositions through tableaux

def flatten_comp(blam):
    """All row lengths of all components, in diagram order."""
    return tuple(part for comp in blam for part in comp)


def multicomp_decompose(w, blam):
    """w = w0 * d(t) with w0 in the Young subgroup S_blam and t row standard.

    Returns (w0, t); t is the multitableau of w with its rows sorted.
    """
    flat = flatten_comp(blam)
    w0, rows = perm.parabolic_decompose(w, flat)
    t = _split_rows(rows, blam)
    return w0, t


def _split_rows(rows, blam):
    out = []
    k = 0
    for comp in blam:
        out.append(tuple(rows[k:k + len(comp)]))
        k += len(comp)
    return tuple(out)


def initial_kind_decompose(w, blam):
    """w = w0 * d(t) with w0 in S_{|blam|} (so its tableau is of the initial
    kind) and norm(t) row standard.

    Returns (s0, t): s0 is the initial-kind tableau of w0 and t the coset
    tableau, both of shape blam.
    """
    sizes = multicomp_norm(blam)
    w0_flat, rows = perm.parabolic_decompose(w, sizes)
    # each "row" is the sorted content of one component; refill along the
    # component's own rows to obtain the multitableau of the coset rep
    t = []
    s0 = []
    for comp, content in zip(blam, rows):
        k = 0
        trows = []
        for part in comp:
            trows.append(tuple(content[k:k + part]))
            k += part
        t.append(tuple(trows))
    t = tuple(t)
    s0 = tableau_of(w0_flat, blam)
    return s0, t


def w_multipartition(blam):
    """d(t_blam) for a multipartition blam."""
    return d_of(sub_tableau(blam))


def conjugate_multitableau(t_multi):
    out = []
    for c in t_multi:
        ncols = len(c[0]) if c else 0
        cc = tuple(tuple(c[r][k] for r in range(len(c)) if len(c[r]) > k)
                   for k in range(ncols))
        out.append(cc)
    return tuple(out)


def dot_si(t_multi, i):
    """t . s_i: entries i, i+1 exchanged unless they share a row."""
    pos = positions(t_multi)
    r1, _, p1 = pos[i]
    r2, _, p2 = pos[i + 1]
    if p1 == p2 and r1 == r2:
        return t_multi
    return swap_entries(t_multi, i)


def permute_components(t_multi, slot_perm):
    """Content permutation: slot k receives the content of slot
    slot_perm(k).  Only meaningful between equal shapes."""
    return tuple(t_multi[slot_perm[k] - 1] for k in range(len(t_multi)))
