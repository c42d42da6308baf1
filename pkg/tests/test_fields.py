"""Exact scalar arithmetic: examples, exhaustive axioms, literals."""

from fractions import Fraction
from itertools import product

import pytest

from oracles import gf25_elements_of_order

from symcenter import GF, QQ, ExtensionField, FieldScalar, element_of_order
from symcenter.errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    NoSuchOrder,
    ScalarFormatError,
)


def test_gf3_addition_wraps():
    g3 = GF(3)
    assert g3.scalar(2) + g3.scalar(2) == 1


def test_rational_product_reduces():
    assert QQ.scalar(Fraction(1, 2)) * QQ.scalar(Fraction(2, 3)) == Fraction(1, 3)


def test_gf25_generator_square_is_minus_two(f25):
    t = FieldScalar(f25, f25.coeffs_to_enc([0, 1]))
    assert t * t == 3


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    f = GF(p)
    for a, b, c in product(range(p), repeat=3):
        assert f.s_add(f.s_add(a, b), c) == f.s_add(a, f.s_add(b, c))
        assert f.s_mul(f.s_mul(a, b), c) == f.s_mul(a, f.s_mul(b, c))
        assert f.s_mul(a, f.s_add(b, c)) == f.s_add(f.s_mul(a, b), f.s_mul(a, c))
    for a in range(1, p):
        assert f.s_mul(a, f.s_inv(a)) == 1


def test_field_axioms_sampled_gf25_and_rationals(f25, rng):
    for f in (f25, QQ):
        for _ in range(200):
            a, b, c = (f.scalar(v) for v in _draw3(f, rng))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * a.inverse() == f.one()


def _draw3(field, rng):
    if field.order is None:
        return [Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5)))
                for _ in range(3)]
    return [FieldScalar(field, int(e)) for e in rng.integers(0, field.order, 3)]


def test_element_of_order_examples(f25):
    assert element_of_order(GF(3), 2) == 2
    with pytest.raises(NoSuchOrder):
        element_of_order(GF(5), 3)
    # oracle: exhaustive scan with an independent tuple-based GF(25)
    oracle = gf25_elements_of_order(24)
    assert oracle, "GF(25)* is cyclic of order 24, a generator must exist"
    smallest = oracle[0]
    q = element_of_order(f25, 24)
    assert f25.enc_to_coeffs(q.value) == smallest
    assert f25.enc_to_coeffs(q.value) == (1, 1)  # frozen from the oracle
    assert q ** 24 == f25.one()
    for ell in (2, 3):
        assert q ** (24 // ell) != f25.one()


def test_element_of_order_rationals_rejected():
    with pytest.raises(NoSuchOrder):
        element_of_order(QQ, 2)


def test_canonicalisation_idempotent(f25):
    g7 = GF(7)
    assert g7.parse_enc("-1") == 6
    assert g7.parse_enc(g7.format_enc(5)) == 5
    assert QQ.parse_enc("2/4") == Fraction(1, 2)
    assert QQ.parse_enc(QQ.format_enc(Fraction(-3, 7))) == Fraction(-3, 7)
    for enc in range(25):
        assert f25.parse_enc(f25.format_enc(enc)) == enc
    with pytest.raises(ScalarFormatError):
        GF(3).parse_enc("x")
    with pytest.raises(ScalarFormatError):
        QQ.parse_enc("1/0")


def test_field_construction_guards():
    with pytest.raises(InvalidField):
        GF(6)
    with pytest.raises(InvalidField):
        ExtensionField(5, [1, 0, 1])  # t^2 + 1 = (t+2)(t+3) mod 5
    with pytest.raises(InvalidField):
        ExtensionField(5, [2, 0, 2])  # not monic
    with pytest.raises(InvalidField):
        ExtensionField(5, [2, 1])  # degree 1
    assert ExtensionField(2, [1, 1, 0, 1]).order == 8  # t^3 + t + 1 irreducible


def test_mixed_field_arithmetic_rejected():
    a = GF(3).scalar(1)
    b = GF(5).scalar(1)
    with pytest.raises(FieldMismatch):
        _ = a + b
    # equal parameters are interoperable even for distinct instances
    assert GF(3).scalar(2) + GF(3).scalar(2) == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(3).scalar(1) / GF(3).scalar(0)
    with pytest.raises(DivisionByZero):
        QQ.scalar(1) / QQ.scalar(0)


def test_matmul_exact_against_naive(f25, rng):
    for field in (GF(3), GF(7), f25, QQ):
        a = field.random_enc(rng, (6, 5))
        b = field.random_enc(rng, (5, 4))
        m = field.matmul2(a, b)
        for i in range(6):
            for j in range(4):
                acc = field.zero_enc
                for t in range(5):
                    acc = field.s_add(acc, field.s_mul(a[i, t], b[t, j]))
                assert m[i, j] == acc


def test_matmul_large_prime_fallback(rng):
    # p large enough that the float64 path is refused for long contractions
    p = 2147483629
    f = GF(p)
    a = f.random_enc(rng, (3, 4))
    b = f.random_enc(rng, (4, 2))
    m = f.matmul2(a, b)
    for i in range(3):
        for j in range(2):
            acc = sum(int(a[i, t]) * int(b[t, j]) for t in range(4)) % p
            assert m[i, j] == acc


def test_scalar_literal_forms(f25):
    assert f25.parse_enc("[2,3]") == f25.coeffs_to_enc([2, 3])
    assert f25.parse_enc("7") == 2
    assert f25.format_enc(f25.coeffs_to_enc([2, 3])) == "[2,3]"
    assert GF(11).format_enc(7) == "7"
    assert QQ.format_enc(Fraction(5)) == "5"
    assert QQ.format_enc(Fraction(-1, 2)) == "-1/2"
