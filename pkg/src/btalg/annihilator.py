"""The annihilator of the tensor action, computed two independent ways.

The predicted side lists the dual-basis elements indexed by cell shapes with
a component exceeding the column bound N.  The brute-force side specializes
the type-alpha ideal basis at field points and row-reduces its action matrix
on the type-alpha part of the tensor space; the kernel can only grow at
special points, so the minimum across points upper-bounds (and, by the
structure theory, equals) the generic kernel dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import cellposet as cpos
from . import permutations as perm
from . import setpartitions as sp
from . import tableaux as tab
from . import tensor as ten
from .algebra import LAURENT, SpecializedRing, full_basis_keys, gen_e, gen_g
from .cellular import cell_element, ptl_generator
from .laurent import PrimeField, QQ
from .linalg import Echelon


def default_points():
    return [(QQ, Fraction(2)), (PrimeField(10**9 + 7), 3), (QQ, Fraction(5, 7))]


def point_label(field, q0):
    return field.scalar_repr(q0) if hasattr(field, "scalar_repr") else str(q0)


# ---------------------------------------------------------------------------
# dimensions of the quotients (pure counting)

def predicted_annihilator(n, N, alpha):
    """All (shape, s, t) with the shape beyond the column bound."""
    _, beyond = cpos.split_by_column_bound(cpos.cell_shapes(n, alpha), N)
    out = []
    for shape in beyond:
        std = cpos.standard_cell_tableaux(shape)
        for s_tab in std:
            for t_tab in std:
                out.append((shape, s_tab, t_tab))
    return out


def predicted_annihilator_dim(n, N, alpha):
    _, beyond = cpos.split_by_column_bound(cpos.cell_shapes(n, alpha), N)
    return sum(len(cpos.standard_cell_tableaux(s)) ** 2 for s in beyond)


def cell_dim(n, alpha):
    return sum(len(cpos.standard_cell_tableaux(s)) ** 2
               for s in cpos.cell_shapes(n, alpha))


def etl_dim(n, N):
    """Dimension of the level-N quotient, summed over all types."""
    total = 0
    for alpha in tab.partitions_of(n):
        within, _ = cpos.split_by_column_bound(cpos.cell_shapes(n, alpha), N)
        total += sum(len(cpos.standard_cell_tableaux(s)) ** 2 for s in within)
    return total


def etl_dim_alpha(n, N, alpha):
    within, _ = cpos.split_by_column_bound(cpos.cell_shapes(n, alpha), N)
    return sum(len(cpos.standard_cell_tableaux(s)) ** 2 for s in within)


def ptl_dim(n):
    return etl_dim(n, 2)


# ---------------------------------------------------------------------------
# brute force over the tensor space

def _action_rows(n, N, alpha, ring):
    """Sparse rows (one per ideal basis element) of the action on the
    type-alpha tensor vectors, as dicts over (input, output) labels."""
    r = len(alpha)
    inputs = ten.index_pairs_of_type(n, N, r, alpha)
    by_partition = {}
    for key in inputs:
        by_partition.setdefault(sp.from_sequence(key[1]), []).append(key)
    rows = []
    for a in sp.set_partitions_of_type(n, alpha):
        mine = by_partition.get(a, [])
        for w in perm.all_permutations(n):
            word = perm.reduced_word(w)
            row = {}
            for key in mine:
                vec = ten.apply_word({key: ring.one}, word, ring)
                for out_key, c in vec.items():
                    row[(key, out_key)] = c
            rows.append(((a, w), row))
    return rows


def bruteforce_annihilator_dims(n, N, alpha, points=None):
    """Kernel dimension of the action matrix at each evaluation point."""
    if points is None:
        points = default_points()
    dims = []
    for fieldobj, q0 in points:
        ring = SpecializedRing(fieldobj, q0)
        rows = _action_rows(n, N, alpha, ring)
        ech = Echelon(fieldobj)
        for _, row in rows:
            ech.add(row)
        dims.append(len(rows) - ech.rank)
    return dims


def bruteforce_annihilator_dim(n, N, alpha, points=None):
    return min(bruteforce_annihilator_dims(n, N, alpha, points))


def full_annihilator_dim(n, N, r, fieldobj, q0):
    """Kernel of the whole algebra acting on the full tensor space, computed
    on the E_A g_w basis (no idempotent decomposition)."""
    ring = SpecializedRing(fieldobj, q0)
    inputs = ten.all_index_pairs(n, N, r)
    ech = Echelon(fieldobj)
    count = 0
    for a, w in full_basis_keys(n):
        word = perm.reduced_word(w)
        row = {}
        for key in inputs:
            vec = ten.apply_partition_idem({key: ring.one}, a, ring)
            vec = ten.apply_word(vec, word, ring)
            for out_key, c in vec.items():
                row[(key, out_key)] = c
        ech.add(row)
        count += 1
    return count - ech.rank


# ---------------------------------------------------------------------------
# the report

@dataclass
class AnnihilatorReport:
    n: int
    N: int
    alpha: tuple
    predicted_dim: int
    bruteforce_dim: int
    points: list
    match: bool
    kill_checked: bool = True
    independent: bool = True
    failures: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "n": self.n,
            "N": self.N,
            "alpha": list(self.alpha),
            "predicted": self.predicted_dim,
            "bruteforce": self.bruteforce_dim,
            "points": list(self.points),
            "match": self.match,
            "kill_checked": self.kill_checked,
            "independent": self.independent,
            "failures": list(self.failures),
        }


def verify_predicted_basis(n, N, alpha, points=None, symbolic=None):
    """Check the predicted annihilator basis against the tensor action.

    (a) every predicted element annihilates every type-alpha basis vector
        (symbolically for n <= 3, at the evaluation points otherwise);
    (b) the predicted elements are linearly independent at >= 2 points;
    (c) the predicted count equals the brute-force kernel dimension.
    """
    if points is None:
        points = default_points()
    if symbolic is None:
        symbolic = n <= 3
    alpha = tuple(alpha)
    failures = []
    predicted = predicted_annihilator(n, N, alpha)

    r = len(alpha)
    inputs = ten.index_pairs_of_type(n, N, r, alpha)

    if symbolic:
        rings = [LAURENT]
    else:
        rings = [SpecializedRing(f, q0) for f, q0 in points[:2]]
    for ring in rings:
        for shape, s_tab, t_tab in predicted:
            el = cell_element(shape, s_tab, t_tab, "n", ring)
            for key in inputs:
                img = ten.act_element({key: el.ring.one}, el)
                if img:
                    failures.append(("kill", shape, s_tab, t_tab, key))
                    break
    kill_ok = not failures

    indep_ok = True
    for fieldobj, q0 in points[:2]:
        ring = SpecializedRing(fieldobj, q0)
        ech = Echelon(fieldobj)
        got = 0
        for shape, s_tab, t_tab in predicted:
            el = cell_element(shape, s_tab, t_tab, "n", ring)
            if ech.add(dict(el.terms)):
                got += 1
        if got != len(predicted):
            indep_ok = False
            failures.append(("independence", point_label(fieldobj, q0), got, len(predicted)))

    dims = bruteforce_annihilator_dims(n, N, alpha, points)
    bf = min(dims)
    if len(set(dims)) != 1:
        failures.append(("point_instability", dims))
    match = (bf == len(predicted)) and kill_ok and indep_ok
    if bf != len(predicted):
        failures.append(("dimension", bf, len(predicted)))
    return AnnihilatorReport(
        n=n, N=N, alpha=alpha,
        predicted_dim=len(predicted), bruteforce_dim=bf,
        points=[point_label(f, q0) for f, q0 in points],
        match=match, kill_checked=kill_ok, independent=indep_ok,
        failures=failures,
    )


# ---------------------------------------------------------------------------
# the ideal generated by a Steinberg relation

def steinberg_ideal_dim(n, alpha, point=None, generator_index=1):
    """Dimension of the two-sided ideal of the type-alpha summand generated
    by e_i e_{i+1} St_i, computed at one evaluation point by closing the
    span under one-letter multiplications on both sides."""
    if point is None:
        point = (QQ, Fraction(2))
    fieldobj, q0 = point
    ring = SpecializedRing(fieldobj, q0)
    z = ptl_generator(n, generator_index, ring)
    idem = _central_idem_specialized(n, tuple(alpha), ring)
    z = z.times(idem)
    ech = Echelon(fieldobj)
    frontier = []
    if ech.add(dict(z.terms)):
        frontier.append(z)
    gens = [gen_g(n, i, ring) for i in range(1, n)] + [gen_e(n, i, ring) for i in range(1, n)]
    while frontier:
        new_frontier = []
        for v in frontier:
            candidates = []
            for g in gens:
                candidates.append(v.times(g))
                candidates.append(g.times(v))
            for c in candidates:
                if not c.is_zero() and ech.add(dict(c.terms)):
                    new_frontier.append(c)
        frontier = new_frontier
    return ech.rank


def _central_idem_specialized(n, alpha, ring):
    from .cellular import _central_idem
    return _central_idem(n, alpha).specialize(ring.field, ring.q0)
