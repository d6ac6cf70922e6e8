import math

import pytest
import sympy

from repdim.bounds import (
    BoundReport,
    EvenRankUnsupported,
    RankTooLarge,
    bounds_ariki_koike,
    bounds_group,
    bounds_type_A,
    bounds_type_B,
    bounds_type_D,
    classify_type_A,
    f_poly,
    g_poly,
    morita_factors,
    rouquier_chain,
)
from repdim.fields import QQ, field_make, root_of_unity


def test_classify_type_A_table():
    assert classify_type_A(4, 2) == "tame"
    assert classify_type_A(5, 2) == "tame"
    assert classify_type_A(3, 3) == "finite"
    assert classify_type_A(2, 2) == "finite"
    assert classify_type_A(7, 3) == "wild"
    assert classify_type_A(6, 2) == "wild"
    assert classify_type_A(2, 3) == "semisimple"
    assert classify_type_A(9, None) == "semisimple"
    assert classify_type_A(9, math.inf) == "semisimple"


def test_bounds_type_A_examples():
    r = bounds_type_A(7, 3)
    assert (r.lower, r.upper, r.rep_class) == (3, 4, "wild")
    r = bounds_type_A(4, 2)
    assert (r.lower, r.upper) == (3, 4)
    assert r.annotations["known_exact"] == 3
    r = bounds_type_A(2, 2)
    assert (r.lower, r.upper) == (2, 2)
    assert r.annotations["known_exact"] == 2
    r = bounds_type_A(5, None)
    assert (r.lower, r.upper, r.rep_class) == (0, 0, "semisimple")


def test_bounds_type_A_gap_invariant():
    # upper - lower = m - 1 whenever not semisimple
    for n in range(2, 13):
        for ell in (2, 3, 4, 5):
            r = bounds_type_A(n, ell)
            m = n // ell
            if m == 0:
                assert (r.lower, r.upper) == (0, 0)
            else:
                assert r.upper - r.lower == m - 1
                assert (r.lower, r.upper) == (m + 1, 2 * m)


def test_bounds_group():
    assert (bounds_group(5, 3).lower, bounds_group(5, 3).upper) == (2, 2)
    assert (bounds_group(8, 3).lower, bounds_group(8, 3).upper) == (3, 4)
    r = bounds_group(2, 3)
    assert (r.lower, r.upper, r.rep_class) == (0, 0, "semisimple")
    with pytest.raises(RankTooLarge):
        bounds_group(9, 3)
    with pytest.raises(RankTooLarge):
        bounds_group(4, 2)


def test_f_poly_small_values():
    # ell = 2, q = -1: f_2(2, -1) = (2-1)(2+1)(2-1) = 3
    q = QQ.from_int(-1)
    assert f_poly(QQ, 2, 2, q) == QQ.from_int(3)
    # a vanishing factor
    assert QQ.is_zero(f_poly(QQ, 2, 1, q))
    with pytest.raises(ValueError):
        f_poly(QQ, 2, 1, QQ.zero)


def test_g_poly_small_values():
    q = QQ.from_int(-1)
    assert g_poly(QQ, 1, q) == QQ.from_int(2)
    assert QQ.is_zero(g_poly(QQ, 2, q))
    z3 = field_make("cyclotomic", ell=3)
    g = g_poly(z3, 5, root_of_unity(z3, 3))
    # (1+q)(1+q^2) = 1, (1+q^3) = 2, (1+q^4) = 1+q
    expect = z3.mul(z3.from_int(4), z3.add(z3.one, root_of_unity(z3, 3)))
    assert g == expect


def _sympy_zeta(ell):
    return sympy.exp(2 * sympy.pi * sympy.I / ell)


def test_f_zero_locus_sweep():
    # f_n(-q^i, q) = 0 for every i in [1-n, n-1]; nonzero for Q off the locus
    for ell in (2, 3, 4, 5):
        field = field_make("cyclotomic", ell=ell)
        q = root_of_unity(field, ell)
        for n in (2, 3, 4):
            for i in range(1 - n, n):
                qi = field.one
                for _ in range(i % ell):
                    qi = field.mul(qi, q)
                assert field.is_zero(f_poly(field, n, field.neg(qi), q))
            assert not field.is_zero(f_poly(field, n, field.from_int(2), q))


def test_g_zero_locus_against_direct_oracle():
    # g_n(q) = 0 iff ell even and ell/2 <= n-1, cross-checked by exact
    # symbolic evaluation of the defining product
    for ell in range(2, 9):
        field = field_make("cyclotomic", ell=ell)
        q = root_of_unity(field, ell)
        zq = _sympy_zeta(ell)
        for n in range(1, 9):
            ours = field.is_zero(g_poly(field, n, q))
            direct = sympy.simplify(
                2 * sympy.prod([1 + zq ** i for i in range(1, n)])
            ) == 0
            predicted = ell % 2 == 0 and ell // 2 <= n - 1
            assert ours == direct == predicted, (ell, n)


def test_bounds_type_B():
    r = bounds_type_B(2, 2, 2)
    assert (r.lower, r.upper) == (2, 2)
    assert r.conditions["f_nonzero"]
    r = bounds_type_B(2, 2, 1)
    assert (r.lower, r.upper) == (2, None)
    assert not r.conditions["f_nonzero"]
    assert r.rep_class is None
    # (5, 3, Q=1): upper present exactly when f_5(1, zeta_3) != 0
    r = bounds_type_B(5, 3, 1)
    assert r.lower == 2
    assert (r.upper == 2) == r.conditions["f_nonzero"]
    # m = 0: no bounds at all, never a semisimplicity claim
    r = bounds_type_B(2, 5, 2)
    assert r.lower is None and r.upper is None and r.rep_class is None


def test_bounds_type_D():
    r = bounds_type_D(5, 3)
    assert (r.lower, r.upper) == (2, 2)
    r = bounds_type_D(6, 3)
    assert (r.lower, r.upper) == (3, None)
    assert "n even" in r.conditions["reason"]
    r = bounds_type_D(5, 2)
    assert (r.lower, r.upper) == (3, None)
    assert not r.conditions["g_nonzero"]
    assert r.rep_class is None


def test_bounds_ariki_koike():
    r = bounds_ariki_koike(7, 3, [1])
    assert r.lower == 3 and r.upper is None
    # singleton parameter list agrees with the type-A lower bound
    assert r.lower == bounds_type_A(7, 3).lower
    with pytest.raises(ValueError):
        bounds_ariki_koike(2, 3, [1])


def test_morita_factors():
    assert morita_factors("B", 2) == [(0, 2), (1, 1), (2, 0)]
    assert morita_factors("D", 5) == [(3, 2), (4, 1), (5, 0)]
    with pytest.raises(EvenRankUnsupported):
        morita_factors("D", 4)
    with pytest.raises(ValueError):
        morita_factors("E", 5)


def test_rouquier_chain():
    assert rouquier_chain(7, 3) == (1, 3)
    assert rouquier_chain(2, 2) == (0, 2)
    assert rouquier_chain(9, 2) == (3, 5)
    with pytest.raises(ValueError):
        rouquier_chain(2, 3)


def test_bound_report_interval_checked():
    with pytest.raises(ValueError):
        BoundReport({"family": "x"}, 3, 2)


def test_report_serialization_shape():
    d = bounds_type_A(7, 3).to_dict()
    assert d["lower"] == 3 and d["upper"] == 4
    assert "class:heckeA" in d["claims"]
    assert d["spec"]["family"] == "heckeA"
