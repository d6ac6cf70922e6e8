import random

import pytest
from hypothesis import given, strategies as st

from repdim.fields import (
    CyclotomicField,
    DivisionByZero,
    FieldMismatch,
    NonPrimeModulus,
    QQ,
    Scalar,
    UnsupportedOrder,
    cyclotomic_polynomial,
    field_make,
    power,
    root_of_unity,
    scalar_arith,
    scalar_parse,
)


def test_field_make_kinds():
    assert field_make("rationals") is QQ
    f5 = field_make("prime", p=5)
    assert f5.p == 5 and f5.char == 5
    with pytest.raises(NonPrimeModulus):
        field_make("prime", p=6)
    # cyclotomic(1) and cyclotomic(2) collapse to the rationals
    assert field_make("cyclotomic", ell=1) is QQ
    assert field_make("cyclotomic", ell=2) is QQ
    z4 = field_make("cyclotomic", ell=4)
    assert z4.poly == [1, 0, 1]  # x^2 + 1
    assert z4.degree == 2


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(5) == [1, 1, 1, 1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(8) == [1, 0, 0, 0, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_rational_arith():
    a = Scalar(QQ, QQ.from_fraction(1, 2))
    b = Scalar(QQ, QQ.from_fraction(1, 3))
    assert scalar_arith("add", a, b).payload == QQ.from_fraction(5, 6)
    assert (a * b).payload == QQ.from_fraction(1, 6)
    assert (-a).payload == QQ.from_fraction(-1, 2)
    assert a.inverse().payload == QQ.from_int(2)
    with pytest.raises(DivisionByZero):
        Scalar.of(QQ, 0).inverse()


def test_prime_arith():
    f5 = field_make("prime", p=5)
    assert f5.mul(2, 3) == 1
    assert f5.inv(2) == 3
    assert f5.sub(1, 3) == 3


def test_field_mismatch():
    f5 = field_make("prime", p=5)
    with pytest.raises(FieldMismatch):
        Scalar.of(QQ, 1) + Scalar.of(f5, 1)


def test_cyclotomic_mult_zeta4():
    z4 = field_make("cyclotomic", ell=4)
    z = root_of_unity(z4)
    assert z4.mul(z, z) == z4.from_int(-1)


def test_root_of_unity_orders():
    assert root_of_unity(QQ, 2) == QQ.from_int(-1)
    assert root_of_unity(QQ, 1) == QQ.from_int(1)
    with pytest.raises(UnsupportedOrder):
        root_of_unity(QQ, 3)
    for ell in (3, 4, 5, 6, 8):
        f = field_make("cyclotomic", ell=ell)
        z = root_of_unity(f)
        assert power(f, z, ell) == f.one
        for j in range(1, ell):
            assert power(f, z, j) != f.one
        # Phi_ell(zeta) == 0
        acc = f.zero
        for e, c in enumerate(f.poly):
            acc = f.add(acc, f.mul(f.from_int(c), power(f, z, e)))
        assert f.is_zero(acc)


def test_prime_root_of_unity():
    f7 = field_make("prime", p=7)
    z = root_of_unity(f7, 3)
    assert pow(z, 3, 7) == 1 and z != 1


FIELDS = [QQ, field_make("prime", p=5), field_make("cyclotomic", ell=3), field_make("cyclotomic", ell=4)]


@given(st.integers(0, 3), st.integers(0, 2 ** 30))
def test_field_axioms(fi, seed):
    f = FIELDS[fi]
    rng = random.Random(seed)
    a, b, c = f.random(rng), f.random(rng), f.random(rng)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(a, f.neg(a)) == f.zero
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one


@given(st.integers(0, 3), st.integers(0, 2 ** 30))
def test_scalar_text_round_trip(fi, seed):
    f = FIELDS[fi]
    rng = random.Random(seed)
    a = Scalar(f, f.random(rng))
    text = str(a)
    back = scalar_parse(f, text)
    assert back == a
    assert str(back) == text


def test_format_examples():
    assert str(Scalar(QQ, QQ.from_fraction(5, 6))) == "5/6"
    f5 = field_make("prime", p=5)
    assert str(Scalar.of(f5, 7)) == "2 mod 5"
    z3 = field_make("cyclotomic", ell=3)
    s = Scalar(z3, z3.from_coeffs([1, -2]))
    assert str(s) == "1/1 + -2/1*z"
    assert scalar_parse(z3, str(s)) == s
