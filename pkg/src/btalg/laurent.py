"""Exact arithmetic in Z[q, q^-1] and in the fields used for specialization.

Laurent polynomials are kept in canonical form (no zero coefficients), with
arbitrary-precision integer coefficients.  Field scalars are either rationals
(``fractions.Fraction``) or residues in a prime field GF(p); both are handled
through small field objects so that dict-based linear algebra can run on plain
values.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Immutable and hashable; ``terms`` maps exponents to nonzero coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self._hash = None

    @staticmethod
    def const(c):
        return LaurentPoly({0: c}) if c else LaurentPoly()

    @staticmethod
    def q_power(k, coeff=1):
        return LaurentPoly({k: coeff}) if coeff else LaurentPoly()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {e: c * other for e, c in self.terms.items()}
            res._hash = None
            return res
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, field, q0):
        """Value of the substitution homomorphism q -> q0 in the given field.

        q0 must be invertible; negative exponents use field inversion.
        """
        if field.is_zero(q0):
            raise ZeroDivisionError("q must be invertible in the field")
        acc = field.zero
        q0_inv = field.inv(q0)
        for e, c in self.terms.items():
            base = q0 if e >= 0 else q0_inv
            p = field.of(1)
            for _ in range(abs(e)):
                p = field.mul(p, base)
            acc = field.add(acc, field.mul(field.of(c), p))
        return acc

    def to_json(self):
        return {str(e): str(c) for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(obj):
        return LaurentPoly({int(e): int(c) for e, c in obj.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*q")
            else:
                bits.append(f"{c}*q^{e}")
        return " + ".join(bits)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q_power(1)
Q_INV = LaurentPoly.q_power(-1)
Q_MINUS_QINV = Q - Q_INV


class Rationals:
    """The field of rationals; values are ``fractions.Fraction``."""

    name = "QQ"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def scalar_repr(self, a):
        return str(a)


class PrimeField:
    """GF(p) for prime p; values are plain ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, min(p, 1 + int(p**0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def of(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def scalar_repr(self, a):
        return f"{a % self.p} mod {self.p}"


QQ = Rationals()


def lp_add(a, b):
    return a + b


def lp_mul(a, b):
    return a * b


def lp_eval(a, field, q0):
    return a.evaluate(field, q0)
