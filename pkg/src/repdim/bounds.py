"""Closed-form bound arithmetic for the supported algebra families.

Everything here is pure arithmetic on (n, ell, p) and exact evaluation of
the two parameter polynomials

    f_n(Q, q) = prod_{i=1-n}^{n-1} (Q + q^i)
    g_n(q)   = 2 prod_{i=1}^{n-1} (1 + q^i)

that gate the type-B and type-D upper bounds.  No module categories are
touched; the computational witnesses live in endo.py.  Reports tag every
asserted claim so downstream serialization can attach them verbatim.

ell = None (or math.inf) means a generic parameter q, i.e. q is not a root
of unity; writing n = ell*m + a with 0 <= a <= ell - 1, the quantity m
drives every formula.
"""

import math

from .fields import field_make, power, root_of_unity


class RankTooLarge(ValueError):
    """The symmetric-group bounds only apply for n < p^2."""


class EvenRankUnsupported(ValueError):
    """The type-D factor list needs odd rank."""


def _infinite(ell):
    return ell is None or ell == math.inf


def _m_of(n, ell):
    # n = ell*m + a, 0 <= a <= ell-1
    if _infinite(ell):
        return 0
    if ell < 2:
        raise ValueError("need ell >= 2 or infinite")
    return n // ell


class BoundReport:
    """Lower/upper bounds for one algebra instance plus the condition
    evaluations that produced them.

    upper is None when the family's upper-bound statement does not apply;
    conditions then records why.  rep_class is only populated for families
    with a known representation-type classification.  annotations carry
    known exact values; they never replace the bounds.
    """

    def __init__(self, spec, lower, upper, rep_class=None, conditions=None,
                 claims=None, annotations=None):
        if lower is not None and upper is not None and lower > upper:
            raise ValueError("bound interval is empty")
        self.spec = spec
        self.lower = lower
        self.upper = upper
        self.rep_class = rep_class
        self.conditions = conditions or {}
        self.claims = claims or []
        self.annotations = annotations or {}

    def to_dict(self):
        return {
            "spec": dict(self.spec),
            "lower": self.lower,
            "upper": self.upper,
            "rep_class": self.rep_class,
            "conditions": dict(self.conditions),
            "claims": list(self.claims),
            "annotations": dict(self.annotations),
        }

    def __repr__(self):
        up = "-" if self.upper is None else str(self.upper)
        return "BoundReport(%r, %s..%s)" % (self.spec, self.lower, up)


def classify_type_A(n, ell):
    """Representation type of the rank n - 1 type-A algebra at an ell-th
    root of unity: semisimple iff ell infinite or m = 0, finite iff m = 1,
    tame iff ell = 2 and n in {4, 5}, wild otherwise."""
    if n < 1:
        raise ValueError("need n >= 1")
    if _infinite(ell) or _m_of(n, ell) == 0:
        return "semisimple"
    if _m_of(n, ell) == 1:
        return "finite"
    if ell == 2 and n in (4, 5):
        return "tame"
    return "wild"


def bounds_type_A(n, ell):
    cls = classify_type_A(n, ell)
    spec = {"family": "heckeA", "n": n, "ell": None if _infinite(ell) else ell}
    if cls == "semisimple":
        return BoundReport(spec, 0, 0, rep_class=cls,
                           claims=["class:heckeA", "bound:semisimple"])
    m = _m_of(n, ell)
    annotations = {}
    if cls == "finite":
        annotations["known_exact"] = 2
    elif cls == "tame":
        annotations["known_exact"] = 3
    return BoundReport(spec, m + 1, 2 * m, rep_class=cls,
                       conditions={"m": m},
                       claims=["class:heckeA", "bound:heckeA:interval"],
                       annotations=annotations)


def bounds_group(n, p):
    """Bounds for the symmetric group algebra over F_p; only valid below
    p^2, where the Sylow subgroup is elementary abelian."""
    if n >= p * p:
        raise RankTooLarge("bounds require n < p^2 (got n=%d, p=%d)" % (n, p))
    spec = {"family": "symmetricGroup", "n": n, "p": p}
    if n < p:
        return BoundReport(spec, 0, 0, rep_class="semisimple",
                           claims=["bound:semisimple"])
    m = n // p
    return BoundReport(spec, m + 1, 2 * m, conditions={"m": m},
                       claims=["bound:group:interval"])


def _coerce(field, x):
    if isinstance(x, int):
        return field.from_int(x)
    return x


def f_poly(field, n, Q, q):
    """prod_{i=1-n}^{n-1} (Q + q^i), exactly in the field (q invertible)."""
    Q = _coerce(field, Q)
    q = _coerce(field, q)
    if field.is_zero(q):
        raise ValueError("q must be invertible")
    out = field.one
    for i in range(1 - n, n):
        out = field.mul(out, field.add(Q, power(field, q, i)))
    return out


def g_poly(field, n, q):
    """2 prod_{i=1}^{n-1} (1 + q^i), exactly in the field."""
    q = _coerce(field, q)
    out = field.from_int(2)
    for i in range(1, n):
        out = field.mul(out, field.add(field.one, power(field, q, i)))
    return out


def _unity_field(ell):
    field = field_make("cyclotomic", ell=ell)
    return field, root_of_unity(field, ell)


def bounds_type_B(n, ell, Q):
    """Lower bound m + 1 whenever m >= 1; upper bound 2m attached exactly
    when f_n(Q, q) is nonzero.  No representation-type class is claimed."""
    spec = {"family": "heckeB", "n": n, "ell": None if _infinite(ell) else ell}
    if _infinite(ell):
        return BoundReport(spec, None, None,
                           conditions={"reason": "generic q: no bound stated"})
    field, q = _unity_field(ell)
    Q = _coerce(field, Q)
    spec["Q"] = field.format(Q)
    m = _m_of(n, ell)
    fval = f_poly(field, n, Q, q)
    f_nonzero = not field.is_zero(fval)
    conditions = {"m": m, "f_value": field.format(fval), "f_nonzero": f_nonzero}
    lower = m + 1 if m >= 1 else None
    claims = []
    if lower is not None:
        claims.append("bound:heckeB:lower")
    else:
        conditions["reason"] = "m = 0: lower bound unavailable"
    upper = None
    if f_nonzero and m >= 1:
        upper = 2 * m
        claims.append("bound:heckeB:upper")
    elif not f_nonzero:
        conditions["reason"] = "f_n(Q, q) = 0: upper bound unavailable"
    return BoundReport(spec, lower, upper, conditions=conditions, claims=claims)


def bounds_type_D(n, ell):
    """Lower bound m + 1 whenever m >= 1; upper bound 2m attached exactly
    when n is odd and g_n(q) is nonzero."""
    spec = {"family": "heckeD", "n": n, "ell": None if _infinite(ell) else ell}
    if _infinite(ell):
        return BoundReport(spec, None, None,
                           conditions={"reason": "generic q: no bound stated"})
    field, q = _unity_field(ell)
    m = _m_of(n, ell)
    gval = g_poly(field, n, q)
    g_nonzero = not field.is_zero(gval)
    conditions = {"m": m, "g_value": field.format(gval),
                  "g_nonzero": g_nonzero, "n_odd": n % 2 == 1}
    lower = m + 1 if m >= 1 else None
    claims = []
    if lower is not None:
        claims.append("bound:heckeD:lower")
    else:
        conditions["reason"] = "m = 0: lower bound unavailable"
    upper = None
    if n % 2 == 1 and g_nonzero and m >= 1:
        upper = 2 * m
        claims.append("bound:heckeD:upper")
    elif n % 2 == 0:
        conditions["reason"] = "n even: upper bound unavailable"
    elif not g_nonzero:
        conditions["reason"] = "g_n(q) = 0: upper bound unavailable"
    return BoundReport(spec, lower, upper, conditions=conditions, claims=claims)


def bounds_ariki_koike(n, ell, q_list):
    """Lower bound m + 1 only; no upper bound is stated for the general
    cyclotomic family."""
    if _infinite(ell):
        raise ValueError("need finite ell")
    m = _m_of(n, ell)
    if m < 1:
        raise ValueError("lower bound needs m >= 1")
    field, _ = _unity_field(ell)
    spec = {
        "family": "arikiKoike",
        "n": n,
        "ell": ell,
        "Q_list": [field.format(_coerce(field, x)) for x in q_list],
    }
    return BoundReport(spec, m + 1, None, conditions={"m": m},
                       claims=["bound:arikiKoike:lower"])


def morita_factors(btype, n):
    """Index pairs (j, n - j) of the type-A tensor factors in the Morita
    decomposition; all of j = 0..n for type B, the upper half for type D
    (odd n only)."""
    if btype == "B":
        return [(j, n - j) for j in range(n + 1)]
    if btype == "D":
        if n % 2 == 0:
            raise EvenRankUnsupported("type D factor list needs odd n")
        return [(j, n - j) for j in range((n + 1) // 2, n + 1)]
    raise ValueError("unknown type %r" % btype)


def rouquier_chain(n, ell):
    """(stable-category dimension lower bound, induced repdim lower bound)
    = (m - 1, m + 1); pure arithmetic."""
    m = _m_of(n, ell)
    if m < 1:
        raise ValueError("chain needs m >= 1")
    return (m - 1, m + 1)
