"""Exact scalar arithmetic over QQ, prime fields F_p, and cyclotomic fields Q(zeta_l).

Every computation in this package reduces to linear algebra over one of three
kinds of fields:

* the rationals, with GCD-reduced arbitrary-precision fractions,
* a prime field F_p, with residues in [0, p),
* a cyclotomic field Q(zeta_l), realized as Q[x] / (Phi_l(x)) where Phi_l is
  the l-th cyclotomic polynomial.  Elements are coefficient tuples of length
  phi(l) (Euler totient), i.e. polynomials in zeta of degree < phi(l).

There is no floating point anywhere.  Field objects expose arithmetic on raw
payloads (mpq for Q, int for F_p, tuple of mpq for cyclotomic) so that inner
loops avoid per-element wrapper overhead; the Scalar class wraps a payload
together with its field for use at API boundaries and in serialization.

cyclotomic(1) and cyclotomic(2) collapse to the rationals, so that q = 1 and
q = -1 never force a field extension.
"""

import math
from fractions import Fraction

from gmpy2 import mpq


class FieldError(Exception):
    pass


class NonPrimeModulus(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class UnsupportedOrder(FieldError):
    pass


class DimensionMismatch(FieldError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _poly_divide_exact(num, den):
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return out


def cyclotomic_polynomial(ell):
    """Coefficients of Phi_ell, ascending, computed by recursive division
    of x^ell - 1 by the Phi_d for proper divisors d."""
    poly = [-1] + [0] * (ell - 1) + [1]
    for d in range(1, ell):
        if ell % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return poly


class Rationals:
    """The field Q.  Payloads are gmpy2.mpq values (always reduced)."""

    kind = "rationals"
    char = 0
    name = "QQ"

    zero = mpq(0)
    one = mpq(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return mpq(n)

    def from_fraction(self, num, den=1):
        if den == 0:
            raise DivisionByZero("zero denominator")
        return mpq(num, den)

    def random(self, rng):
        return mpq(rng.randint(-9, 9), rng.randint(1, 9))

    def format(self, a):
        return "%s/%s" % (a.numerator, a.denominator)

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return self.from_fraction(int(num), int(den))
        return mpq(int(text))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("field", "rationals"))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p with integer payloads in [0, p)."""

    kind = "prime"
    name = None

    def __init__(self, p):
        if not _is_prime(p):
            raise NonPrimeModulus("modulus %r is not prime" % (p,))
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p
        self.name = "F%d" % p

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
            raise DivisionByZero("inverse of 0 in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.p == 0

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, num, den=1):
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def random(self, rng):
        return rng.randrange(self.p)

    def format(self, a):
        return "%d mod %d" % (a % self.p, self.p)

    def parse(self, text):
        left, mod, right = text.strip().rpartition(" mod ")
        if not mod or int(right) != self.p:
            raise FieldMismatch("bad F_%d literal: %r" % (self.p, text))
        return int(left) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", "prime", self.p))

    def __repr__(self):
        return self.name


class CyclotomicField:
    """Q(zeta_ell) = Q[x]/(Phi_ell).  Payloads are tuples of mpq, length phi(ell)."""

    kind = "cyclotomic"
    char = 0

    def __init__(self, ell):
        if ell < 3:
            raise UnsupportedOrder("cyclotomic(%d) collapses to QQ" % ell)
        self.ell = ell
        self.poly = cyclotomic_polynomial(ell)
        self.degree = len(self.poly) - 1
        assert self.degree == sum(1 for j in range(1, ell + 1) if math.gcd(j, ell) == 1)
        self.name = "QQ(zeta%d)" % ell
        self.zero = tuple([mpq(0)] * self.degree)
        self.one = tuple([mpq(1)] + [mpq(0)] * (self.degree - 1))
        # reduction rows: zeta^e as a payload, for e up to 2*(degree-1)
        rows = [self._unit(e) for e in range(self.degree)]
        top = [mpq(-c, self.poly[-1]) for c in self.poly[:-1]]
        rows.append(tuple(top))
        for _ in range(self.degree - 2):
            prev = rows[-1]
            shifted = [mpq(0)] + list(prev[:-1])
            lead = prev[-1]
            rows.append(tuple(shifted[i] + lead * top[i] for i in range(self.degree)))
        self._power_rows = rows

    def _unit(self, e):
        row = [mpq(0)] * self.degree
        row[e] = mpq(1)
        return tuple(row)

    @property
    def zeta(self):
        return self._unit(1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        n = self.degree
        prod = [mpq(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y != 0:
                    prod[i + j] += x * y
        out = list(prod[:n])
        for e in range(n, 2 * n - 1):
            c = prod[e]
            if c != 0:
                row = self._power_rows[e]
                for i in range(n):
                    if row[i] != 0:
                        out[i] += c * row[i]
        return tuple(out)

    def inv(self, a):
        # extended Euclid on a (as a poly in zeta) and Phi_ell over QQ
        if self.is_zero(a):
            raise DivisionByZero("inverse of 0 in %s" % self.name)
        r0 = [mpq(c) for c in self.poly]
        r1 = list(a)
        s0 = [mpq(0)]
        s1 = [mpq(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i] != 0:
                    return i
            return -1

        while deg(r1) > 0:
            d0, d1 = deg(r0), deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= c * r1[i]
            if len(s0) < len(s1) + shift:
                s0 = s0 + [mpq(0)] * (len(s1) + shift - len(s0))
            for i in range(len(s1)):
                s0[i + shift] -= c * s1[i]
            if deg(r0) < deg(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        lead = r1[deg(r1)]
        s1 = [c / lead for c in s1]
        out = [mpq(0)] * self.degree
        for e, c in enumerate(s1):
            if c != 0:
                row = self._power_rows[e] if e >= self.degree else self._unit(e)
                for i in range(self.degree):
                    out[i] += c * row[i]
        return tuple(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def from_int(self, n):
        return tuple([mpq(n)] + [mpq(0)] * (self.degree - 1))

    def from_fraction(self, num, den=1):
        if den == 0:
            raise DivisionByZero("zero denominator")
        return tuple([mpq(num, den)] + [mpq(0)] * (self.degree - 1))

    def from_coeffs(self, coeffs):
        cs = [mpq(c) for c in coeffs]
        if len(cs) > self.degree:
            raise DimensionMismatch("too many coefficients")
        cs += [mpq(0)] * (self.degree - len(cs))
        return tuple(cs)

    def random(self, rng):
        return tuple(mpq(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(self.degree))

    def format(self, a):
        parts = []
        for e, c in enumerate(a):
            frac = "%s/%s" % (c.numerator, c.denominator)
            if e == 0:
                parts.append(frac)
            elif e == 1:
                parts.append("%s*z" % frac)
            else:
                parts.append("%s*z^%d" % (frac, e))
        return " + ".join(parts)

    def parse(self, text):
        out = [mpq(0)] * self.degree
        for part in text.strip().split(" + "):
            part = part.strip()
            if "*" in part:
                frac, power = part.split("*")
                e = 1 if power == "z" else int(power[2:])
            else:
                frac, e = part, 0
            num, _, den = frac.partition("/")
            out[e] = mpq(int(num), int(den) if den else 1)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.ell == self.ell

    def __hash__(self):
        return hash(("field", "cyclotomic", self.ell))

    def __repr__(self):
        return self.name


QQ = Rationals()


def field_make(kind, p=None, ell=None):
    """Factory for field descriptors.

    kind 'rationals' needs no parameter; 'prime' needs p; 'cyclotomic' needs
    ell and collapses to QQ when ell is 1 or 2.
    """
    if kind == "rationals":
        return QQ
    if kind == "prime":
        return PrimeField(p)
    if kind == "cyclotomic":
        if ell < 1:
            raise UnsupportedOrder("ell must be >= 1")
        if ell <= 2:
            return QQ
        return CyclotomicField(ell)
    raise FieldError("unknown field kind %r" % (kind,))


def root_of_unity(field, ell=None):
    """A primitive ell-th root of unity as a payload of the given field.

    Over QQ only ell in {1, 2} is possible; over Q(zeta_ell) the class of x
    is returned.  Over F_p an element of multiplicative order ell is searched
    for (exists iff ell divides p - 1).
    """
    if field.kind == "rationals":
        if ell in (None, 2):
            return mpq(-1)
        if ell == 1:
            return mpq(1)
        raise UnsupportedOrder("QQ has no primitive root of order %r" % (ell,))
    if field.kind == "cyclotomic":
        if ell is not None and ell != field.ell:
            raise UnsupportedOrder("field carries zeta_%d, not order %r" % (field.ell, ell))
        return field._unit(1)
    if field.kind == "prime":
        if ell is None:
            raise UnsupportedOrder("order required over a prime field")
        for c in range(1, field.p):
            if pow(c, ell, field.p) == 1 and all(pow(c, j, field.p) != 1 for j in range(1, ell)):
                return c
        raise UnsupportedOrder("F_%d has no element of order %d" % (field.p, ell))
    raise UnsupportedOrder("unsupported field kind")


class Scalar:
    """A field element tagged with its field; canonical payload, decidable equality."""

    __slots__ = ("field", "payload")

    def __init__(self, field, payload):
        self.field = field
        self.payload = payload

    @classmethod
    def of(cls, field, n):
        return cls(field, field.from_int(n))

    def _check(self, other):
        if not isinstance(other, Scalar) or other.field != self.field:
            raise FieldMismatch("scalars from different fields")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.add(self.payload, other.payload))

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.sub(self.payload, other.payload))

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.mul(self.payload, other.payload))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.payload))

    def __truediv__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.div(self.payload, other.payload))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.payload))

    def is_zero(self):
        return self.field.is_zero(self.payload)

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and other.field == self.field
            and other.payload == self.payload
        )

    def __hash__(self):
        return hash((self.field, self.payload))

    def __str__(self):
        return self.field.format(self.payload)

    def __repr__(self):
        return "Scalar(%s, %s)" % (self.field, self.field.format(self.payload))


def scalar_arith(op, a, b=None):
    """Dispatch form of Scalar arithmetic: op in {add, mul, neg, inv}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise FieldError("unknown op %r" % (op,))


def scalar_parse(field, text):
    return Scalar(field, field.parse(text))


def scalar_format(s):
    return s.field.format(s.payload)


def power(field, a, e):
    """a^e in the field; negative e via the inverse."""
    if e < 0:
        return power(field, field.inv(a), -e)
    out = field.one
    base = a
    while e:
        if e & 1:
            out = field.mul(out, base)
        base = field.mul(base, base)
        e >>= 1
    return out


def to_fraction(a):
    """mpq payload to Fraction (for interop with sympy)."""
    return Fraction(int(a.numerator), int(a.denominator))
