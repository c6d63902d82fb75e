"""Sparse Gaussian elimination over an exact field.

Vectors are dicts keyed by arbitrary hashable column labels.  The Echelon
accumulator keeps one normalized row per pivot and supports incremental rank
queries; fields follow the small protocol of laurent.Rationals/PrimeField.
"""

from __future__ import annotations

from .laurent import LaurentPoly as _LP

_LP_ZERO = _LP()
_LP_ONE = _LP.const(1)


class Echelon:
    """Row space accumulator in (unordered) echelon form."""

    def __init__(self, field):
        self.field = field
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce vec against the stored rows; returns a new dict."""
        f = self.field
        vec = dict(vec)
        hits = [k for k in vec if k in self.rows]
        while hits:
            for pivot in hits:
                c = vec.pop(pivot, None)
                if c is None or f.is_zero(c):
                    continue
                for k, v in self.rows[pivot].items():
                    if k == pivot:
                        continue
                    s = f.sub(vec.get(k, f.zero), f.mul(c, v))
                    if f.is_zero(s):
                        vec.pop(k, None)
                    else:
                        vec[k] = s
            hits = [k for k in vec if k in self.rows]
        return vec

    def add(self, vec):
        """Insert a vector; True iff it enlarged the row space."""
        f = self.field
        vec = self.reduce(vec)
        vec = {k: v for k, v in vec.items() if not f.is_zero(v)}
        if not vec:
            return False
        pivot = next(iter(vec))
        inv = f.inv(vec[pivot])
        self.rows[pivot] = {k: f.mul(v, inv) for k, v in vec.items()}
        # keep stored rows fully reduced against the new pivot
        for other_pivot, row in list(self.rows.items()):
            if other_pivot == pivot:
                continue
            c = row.get(pivot)
            if c is None or f.is_zero(c):
                continue
            for k, v in self.rows[pivot].items():
                s = f.sub(row.get(k, f.zero), f.mul(c, v))
                if f.is_zero(s):
                    row.pop(k, None)
                else:
                    row[k] = s
        return True


def rank_of(vectors, field):
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


class LaurentEchelon:
    """Exact elimination over Z[q, q^-1] with unit pivots only.

    Insertable vectors are dicts with LaurentPoly values.  A vector can be
    inserted only when, after reduction, some coefficient is a unit
    (a single term +-q^k); Murphy-type bases always provide such pivots.
    Keeps per-row bookkeeping so that expand() recovers exact coordinates
    with respect to the inserted vectors.
    """

    def __init__(self):
        self.rows = {}
        self.combos = {}
        self.count = 0

    @staticmethod
    def _unit_inverse(c):
        if len(c.terms) != 1:
            return None
        (e, k), = c.terms.items()
        if k == 1:
            return type(c).q_power(-e)
        if k == -1:
            return type(c).q_power(-e, -1)
        return None

    def _reduce(self, vec, combo):
        changed = True
        while changed:
            changed = False
            for pivot in list(vec):
                if pivot in self.rows and not vec[pivot].is_zero():
                    c = vec.pop(pivot)
                    row = self.rows[pivot]
                    for k, v in row.items():
                        if k == pivot:
                            continue
                        s = vec.get(k, _LP_ZERO) - c * v
                        if s.is_zero():
                            vec.pop(k, None)
                        else:
                            vec[k] = s
                    for idx, v in self.combos[pivot].items():
                        s = combo.get(idx, _LP_ZERO) - c * v
                        if s.is_zero():
                            combo.pop(idx, None)
                        else:
                            combo[idx] = s
                    changed = True
        return vec, combo

    def add(self, vec, label=None):
        """Insert; returns False when the vector reduces to zero.
        Raises when no unit pivot is available."""
        if label is None:
            label = self.count
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        combo = {label: _LP_ONE}
        vec, combo = self._reduce(vec, combo)
        if not vec:
            return False
        for pivot, c in vec.items():
            inv = self._unit_inverse(c)
            if inv is not None:
                break
        else:
            raise ArithmeticError("no unit pivot available")
        self.rows[pivot] = {k: v * inv for k, v in vec.items()}
        self.combos[pivot] = {k: v * inv for k, v in combo.items()}
        for other, row in list(self.rows.items()):
            if other == pivot:
                continue
            c = row.get(pivot)
            if c is None or c.is_zero():
                continue
            for k, v in self.rows[pivot].items():
                s = row.get(k, _LP_ZERO) - c * v
                if s.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = s
            ocombo = self.combos[other]
            for k, v in self.combos[pivot].items():
                s = ocombo.get(k, _LP_ZERO) - c * v
                if s.is_zero():
                    ocombo.pop(k, None)
                else:
                    ocombo[k] = s
        self.count += 1
        return True

    def expand(self, vec):
        """Exact coordinates of vec over the inserted vectors, or None when
        vec lies outside their span."""
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        combo = {}
        vec, combo = self._reduce(vec, combo)
        if vec:
            return None
        return {k: -v for k, v in combo.items()}
