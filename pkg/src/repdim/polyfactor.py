"""Exact univariate polynomial utilities over the supported fields.

Polynomials are lists of field payloads in ascending degree, normalized so
the leading coefficient is nonzero (the zero polynomial is []).  Factoring
is delegated to sympy over QQ, GF(p) and cyclotomic extensions; everything
else (division, extended gcd, evaluation on matrices, minimal polynomials,
splitting idempotents) is done natively so the arithmetic stays exact in
our own representation.
"""

from fractions import Fraction

import sympy

from .linalg import Matrix, Subspace, solve


def poly_trim(field, p):
    while p and field.is_zero(p[-1]):
        p.pop()
    return p


def poly_add(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return poly_trim(field, out)


def poly_scale(field, a, c):
    return poly_trim(field, [field.mul(c, x) for x in a])


def poly_mul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return poly_trim(field, out)


def poly_divmod(field, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and a:
        c = field.mul(a[-1], inv_lead)
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = field.sub(a[d + i], field.mul(c, y))
        poly_trim(field, a)
    return poly_trim(field, q), a


def poly_gcd_ext(field, a, b):
    """(g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    u0, u1 = [field.one], []
    v0, v1 = [], [field.one]
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_add(field, u0, poly_scale(field, poly_mul(field, q, u1), field.neg(field.one)))
        v0, v1 = v1, poly_add(field, v0, poly_scale(field, poly_mul(field, q, v1), field.neg(field.one)))
    if r0:
        c = field.inv(r0[-1])
        r0 = poly_scale(field, r0, c)
        u0 = poly_scale(field, u0, c)
        v0 = poly_scale(field, v0, c)
    return r0, u0, v0


def poly_eval_matrix(field, p, m):
    out = Matrix.zero(field, m.rows, m.cols)
    power = Matrix.identity(field, m.rows)
    for i, c in enumerate(p):
        if not field.is_zero(c):
            out = out + power.scale(c)
        if i + 1 < len(p):
            power = m * power
    return out


def _local_minimal_polynomial(m, v):
    """Monic annihilator of the Krylov sequence v, mv, m^2 v, ..."""
    field = m.field
    n = m.rows
    span = Subspace(field, n)
    vecs = []
    cur = list(v)
    while span.add(cur):
        vecs.append(cur)
        cur = m.apply(cur)
    d = len(vecs)
    stack = Matrix(field, n, d, [[vecs[k][i] for k in range(d)] for i in range(n)])
    coeffs = solve(stack, Matrix.column(field, cur))
    assert coeffs is not None
    p = [field.neg(coeffs.data[k][0]) for k in range(d)] + [field.one]
    return poly_trim(field, p)


def poly_lcm(field, a, b):
    if not a or not b:
        return []
    g, _, _ = poly_gcd_ext(field, a, b)
    q, r = poly_divmod(field, poly_mul(field, a, b), g)
    assert not r
    if q:
        q = poly_scale(field, q, field.inv(q[-1]))
    return q


def minimal_polynomial(m):
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    Built as the lcm of cyclic-vector annihilators; verified by evaluating
    on the matrix, so early exit over the basis vectors is sound."""
    field = m.field
    n = m.rows
    out = [field.one]
    for j in range(n):
        v = [field.one if i == j else field.zero for i in range(n)]
        out = poly_lcm(field, out, _local_minimal_polynomial(m, v))
        if len(out) > 1 and poly_eval_matrix(field, out, m).is_zero():
            return out
    assert poly_eval_matrix(field, out, m).is_zero()
    return out


# -- factorization via sympy ---------------------------------------------

_T = sympy.Symbol("t")


def _qq_to_sympy(field, c):
    return sympy.Rational(int(c.numerator), int(c.denominator))


def _qq_from_sympy(field, r):
    r = sympy.Rational(r)
    return field.from_fraction(int(r.p), int(r.q))


def _cyclo_domain(field):
    zeta = sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(1, field.ell))
    dom = sympy.QQ.algebraic_field(zeta)
    return dom, zeta


def factor_poly(field, p):
    """Distinct monic irreducible factors with multiplicities,
    [(coeffs ascending, e)], sorted deterministically."""
    if len(p) <= 1:
        raise ValueError("cannot factor a constant polynomial")
    kind = field.kind
    if kind == "rationals":
        expr = sum(_qq_to_sympy(field, c) * _T ** i for i, c in enumerate(p))
        _, factors = sympy.Poly(expr, _T, domain=sympy.QQ).factor_list()
        out = []
        for fac, e in factors:
            coeffs = [ _qq_from_sympy(field, c) for c in reversed(fac.all_coeffs()) ]
            lead = field.inv(coeffs[-1])
            out.append(([field.mul(lead, c) for c in coeffs], int(e)))
    elif kind == "prime":
        expr = sum(int(c) * _T ** i for i, c in enumerate(p))
        _, factors = sympy.Poly(expr, _T, modulus=field.p, symmetric=False).factor_list()
        out = []
        for fac, e in factors:
            coeffs = [int(c) % field.p for c in reversed(fac.all_coeffs())]
            lead = field.inv(coeffs[-1])
            out.append(([field.mul(lead, c) for c in coeffs], int(e)))
    elif kind == "cyclotomic":
        dom, zeta = _cyclo_domain(field)
        expr = sympy.Integer(0)
        for i, c in enumerate(p):
            term = sympy.Integer(0)
            for j, q in enumerate(c):
                num, den = int(q.numerator), int(q.denominator)
                term += sympy.Rational(num, den) * zeta ** j
            expr += term * _T ** i
        poly = sympy.Poly(expr, _T, domain=dom)
        _, factors = poly.factor_list()
        out = []
        for fac, e in factors:
            coeffs = []
            for c in reversed(sympy.Poly(fac, _T, domain=dom).rep.to_list()):
                # ANP coordinates come descending in powers of zeta, in the
                # same basis as our payloads
                rep = list(reversed(c.rep))
                coeffs.append(
                    field.from_coeffs(
                        [Fraction(int(x.numerator), int(x.denominator)) for x in rep]
                    )
                )
            lead = field.inv(coeffs[-1])
            out.append(([field.mul(lead, c) for c in coeffs], int(e)))
    else:
        raise ValueError("unsupported field kind %r" % kind)
    out.sort(key=lambda fe: (len(fe[0]), [field.format(c) for c in fe[0]]))
    # consistency: product of factors (times leading unit) has the right degree
    assert sum((len(f) - 1) * e for f, e in out) == len(p) - 1
    return out


def splitting_idempotent(field, minpoly, factors):
    """For minpoly = f1^e1 * rest with at least two distinct irreducible
    factors, return the polynomial e(t) with e ≡ 1 mod f1^e1, e ≡ 0 mod rest,
    so that e(x) is an exact idempotent in k[x] = k[t]/(minpoly)."""
    f1, e1 = factors[0]
    g1 = [field.one]
    for _ in range(e1):
        g1 = poly_mul(field, g1, f1)
    g2, rem = poly_divmod(field, minpoly, g1)
    assert not rem
    g, u, v = poly_gcd_ext(field, g1, g2)
    assert len(g) == 1  # coprime
    # u*g1 + v*g2 = 1; e = v*g2 is 1 mod g1 and 0 mod g2
    e = poly_mul(field, v, g2)
    _, e = poly_divmod(field, e, minpoly)
    return e
