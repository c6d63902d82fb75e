"""The braids-and-ties algebra in normal form.

Elements are sparse linear combinations of basis symbols ``(A, w)`` standing
for E_A g_w, with A a set partition of {1..n} and w a permutation.  The
rewrite rules driving multiplication are

    (E_A g_w) e_i = E_{A v P_i w^-1} g_w
    (E_A g_w) g_i = E_A g_{w s_i}                            if length goes up
                  = E_A g_{w s_i}
                    + (q - q^-1) E_{A v P_i (w s_i)^-1} g_w  otherwise

where P_i is the pair partition {i, i+1} and the superscripts act on blocks
elementwise.  Coefficients live in Z[q, q^-1] or in a field with a chosen
invertible q0; the ring object carries the constants the rules need.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly, ONE, ZERO, Q_MINUS_QINV
from . import permutations as perm
from . import setpartitions as sp


class LaurentRing:
    """Coefficient ring Z[q, q^-1]."""

    name = "Z[q,q^-1]"

    def __init__(self):
        self.one = ONE
        self.zero = ZERO
        self.q_minus_qinv = Q_MINUS_QINV

    def q_power(self, k):
        return LaurentPoly.q_power(k)

    def of_int(self, k):
        return LaurentPoly.const(k)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a.is_zero()

    def coeff_repr(self, a):
        return repr(a)


class SpecializedRing:
    """Coefficients in a field with q mapped to an invertible q0."""

    def __init__(self, field, q0):
        if field.is_zero(q0):
            raise ZeroDivisionError("q0 must be invertible")
        self.field = field
        self.q0 = q0
        self.q0_inv = field.inv(q0)
        self.one = field.one
        self.zero = field.zero
        self.q_minus_qinv = field.sub(q0, self.q0_inv)
        self.name = f"{field.name}, q={field.scalar_repr(q0)}"

    def q_power(self, k):
        base = self.q0 if k >= 0 else self.q0_inv
        out = self.one
        for _ in range(abs(k)):
            out = self.field.mul(out, base)
        return out

    def of_int(self, k):
        return self.field.of(k)

    def add(self, a, b):
        return self.field.add(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def is_zero(self, a):
        return self.field.is_zero(a)

    def coeff_repr(self, a):
        return self.field.scalar_repr(a)


LAURENT = LaurentRing()


class Element:
    """An algebra element in normal form: dict (A, w) -> coefficient."""

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n, terms=None, ring=LAURENT):
        self.n = n
        self.ring = ring
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not ring.is_zero(c):
                    self.terms[key] = c

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero(n, ring=LAURENT):
        return Element(n, None, ring)

    @staticmethod
    def one(n, ring=LAURENT):
        return Element(n, {(sp.singletons(n), perm.identity(n)): ring.one}, ring)

    @staticmethod
    def basis(n, a, w, ring=LAURENT):
        return Element(n, {(a, w): ring.one}, ring)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, w) in sorted(self.terms, key=lambda k: (k[0], k[1])):
            c = self.terms[(a, w)]
            bits.append(f"({self.ring.coeff_repr(c)})*E{list(map(list, a))}g{list(w)}")
        return " + ".join(bits)

    # -- linear structure ---------------------------------------------------

    def add(self, other):
        out = dict(self.terms)
        ring = self.ring
        for key, c in other.terms.items():
            s = ring.add(out.get(key, ring.zero), c)
            if ring.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        res = Element(self.n, None, ring)
        res.terms = out
        return res

    def scale(self, c):
        ring = self.ring
        if ring.is_zero(c):
            return Element.zero(self.n, ring)
        res = Element(self.n, None, ring)
        res.terms = {key: ring.mul(v, c) for key, v in self.terms.items()}
        return res

    def sub(self, other):
        return self.add(other.scale(self.ring.of_int(-1)))

    # -- right multiplication by generators ---------------------------------

    def times_e(self, i):
        ring = self.ring
        out = {}
        for (a, w), c in self.terms.items():
            wi = perm.inverse(w)
            pair = sp.pair_partition(self.n, wi[i - 1], wi[i])
            key = (sp.join(a, pair), w)
            _accumulate(out, key, c, ring)
        return _wrap(self.n, out, ring)

    def times_g(self, i):
        ring = self.ring
        out = {}
        for (a, w), c in self.terms.items():
            ws = perm.times_si(w, i)
            _accumulate(out, (a, ws), c, ring)
            if perm.right_descent(w, i):
                wsi = perm.inverse(ws)
                pair = sp.pair_partition(self.n, wsi[i - 1], wsi[i])
                key = (sp.join(a, pair), w)
                _accumulate(out, key, ring.mul(c, ring.q_minus_qinv), ring)
        return _wrap(self.n, out, ring)

    def times_g_inv(self, i):
        # g_i^-1 = g_i + (q^-1 - q) e_i
        ring = self.ring
        part = self.times_e(i).scale(ring.neg(ring.q_minus_qinv))
        return self.times_g(i).add(part)

    def times_word(self, word):
        cur = self
        for i in word:
            cur = cur.times_g(i)
        return cur

    def times_E(self, b):
        """Right multiplication by the idempotent symbol E_b."""
        ring = self.ring
        out = {}
        for (a, w), c in self.terms.items():
            key = (sp.join(a, sp.act(b, perm.inverse(w))), w)
            _accumulate(out, key, c, ring)
        return _wrap(self.n, out, ring)

    def times(self, other):
        """The algebra product self * other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        ring = self.ring
        acc = Element.zero(self.n, ring)
        for (b, v), c in other.terms.items():
            piece = self.times_E(b).times_word(perm.reduced_word(v)).scale(c)
            acc = acc.add(piece)
        return acc

    # -- structural maps ----------------------------------------------------

    def star(self):
        """The anti-automorphism fixing every g_i and e_i:
        (E_A g_w)* = g_{w^-1} E_A = E_{A w} g_{w^-1}."""
        out = {}
        for (a, w), c in self.terms.items():
            out[(sp.act(a, w), perm.inverse(w))] = c
        res = Element(self.n, None, self.ring)
        res.terms = out
        return res

    def specialize(self, field, q0):
        ring = SpecializedRing(field, q0)
        out = {}
        for key, c in self.terms.items():
            v = c.evaluate(field, q0)
            if not field.is_zero(v):
                out[key] = v
        res = Element(self.n, None, ring)
        res.terms = out
        return res

    def coefficient(self, a, w):
        return self.terms.get((a, w), self.ring.zero)


def _accumulate(out, key, c, ring):
    s = ring.add(out.get(key, ring.zero), c)
    if ring.is_zero(s):
        out.pop(key, None)
    else:
        out[key] = s


def _wrap(n, terms, ring):
    res = Element(n, None, ring)
    res.terms = terms
    return res


def mul(a, b):
    return a.times(b)


# ---------------------------------------------------------------------------
# generators and idempotent families

def gen_g(n, i, ring=LAURENT):
    if not 1 <= i < n:
        raise ValueError("generator index out of range")
    return Element.basis(n, sp.singletons(n), perm.simple(n, i), ring)


def gen_e(n, i, ring=LAURENT):
    if not 1 <= i < n:
        raise ValueError("generator index out of range")
    return Element.basis(n, sp.pair_partition(n, i, i + 1), perm.identity(n), ring)


def gen_g_inv(n, i, ring=LAURENT):
    return Element.one(n, ring).times_g_inv(i)


def g_of_perm(n, w, ring=LAURENT):
    return Element.basis(n, sp.singletons(n), w, ring)


def E_of(a, ring=LAURENT):
    """The idempotent symbol E_A as an element."""
    n = sp.size(a)
    return Element.basis(n, a, perm.identity(n), ring)


def E_pair_recursive(n, i, j, ring=LAURENT):
    """E_{ij} built from the defining recursion g_i E_{i+1,j} g_i^-1."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    if j == i + 1:
        return gen_e(n, i, ring)
    inner = E_pair_recursive(n, i + 1, j, ring)
    return gen_g(n, i, ring).times(inner).times_g_inv(i)


def E_product(a, ring=LAURENT):
    """E_A as the product of E_{ij} over same-block pairs (test oracle)."""
    n = sp.size(a)
    out = Element.one(n, ring)
    for block in a:
        for x in range(len(block)):
            for y in range(x + 1, len(block)):
                out = out.times(E_pair_recursive(n, block[x], block[y], ring))
    return out


@lru_cache(maxsize=None)
def _orthogonal_idempotent_coeffs(a):
    return tuple((b, sp.mobius(a, b)) for b in sp.coarsenings(a))


def orthogonal_idempotent(a, ring=LAURENT):
    """The Mobius-inverted idempotent carried by the set partition A."""
    n = sp.size(a)
    w0 = perm.identity(n)
    terms = {}
    for b, m in _orthogonal_idempotent_coeffs(a):
        terms[(b, w0)] = ring.of_int(m)
    return Element(n, terms, ring)


def central_idempotent(n, alpha, ring=LAURENT):
    """Sum of the orthogonal idempotents over all partitions of type alpha."""
    acc = Element.zero(n, ring)
    for a in sp.set_partitions_of_type(n, alpha):
        acc = acc.add(orthogonal_idempotent(a, ring))
    return acc


def idempotent_basis_element(a, w, ring=LAURENT):
    """The element (orthogonal idempotent of A) * g_w, a single Mobius sum."""
    n = sp.size(a)
    terms = {}
    for b, m in _orthogonal_idempotent_coeffs(a):
        terms[(b, w)] = ring.of_int(m)
    return Element(n, terms, ring)


def alpha_basis(n, alpha, ring=LAURENT):
    """Basis of the two-sided ideal of type alpha."""
    out = []
    for a in sp.set_partitions_of_type(n, alpha):
        for w in perm.all_permutations(n):
            out.append(((a, w), idempotent_basis_element(a, w, ring)))
    return out


def project_alpha(x, alpha):
    """x * (central idempotent of type alpha)."""
    return x.times(central_idempotent(x.n, alpha, x.ring))


def full_basis_keys(n):
    return [(a, w) for a in sp.enumerate_set_partitions(n)
            for w in perm.all_permutations(n)]


def element_to_json(x):
    out = {"n": x.n, "terms": []}
    for (a, w) in sorted(x.terms, key=lambda k: (k[0], k[1])):
        c = x.terms[(a, w)]
        coeff = c.to_json() if isinstance(c, LaurentPoly) else str(c)
        out["terms"].append({
            "partition": sp.to_json(a),
            "word": list(w),
            "coeff": coeff,
        })
    return out


def element_from_json(obj, ring=LAURENT):
    n = obj["n"]
    terms = {}
    for rec in obj["terms"]:
        a = sp.from_json(rec["partition"])
        w = tuple(rec["word"])
        terms[(a, w)] = LaurentPoly.from_json(rec["coeff"])
    return Element(n, terms, ring)
