from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matspace.errors import FieldMismatchError, UsageError
from matspace.scalars import GF, QQ, QQI, GFp, Gaussian, field_from_tag, is_prime

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
gaussians = st.builds(Gaussian, fractions, fractions)


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(gaussians)
def test_gaussian_inverse_and_conjugate(a):
    if a != 0:
        assert a * a.inverse() == 1
        assert a / a == 1
    assert a * a.conjugate() == Gaussian(a.norm())
    assert a.conjugate().conjugate() == a


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_field_axioms_exhaustive(p):
    F = GFp(p)
    els = list(F.elements())
    assert len(els) == p
    for a in els:
        assert a + (-a) == 0
        if a != 0:
            assert a * a.inverse() == 1
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert a * (b + c) == a * b + a * c


def test_frobenius_fixes_prime_field():
    F = GFp(7)
    assert all(a ** 7 == a for a in F.elements())


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatchError):
        GF(1, 3) + GF(1, 5)
    with pytest.raises(FieldMismatchError):
        Gaussian(1, 1) + GF(1, 5)


def test_ints_combine_with_any_field():
    assert GF(2, 3) + 1 == 0
    assert Gaussian(0, 1) * 2 == Gaussian(0, 2)
    assert 1 - Gaussian(0, 1) == Gaussian(1, -1)


def test_strict_rejects_foreign_elements():
    with pytest.raises(FieldMismatchError):
        QQ.strict(Gaussian(0, 1))
    with pytest.raises(FieldMismatchError):
        GFp(5).strict(Fraction(1, 2))
    assert QQI.strict(2) == Gaussian(2)


@pytest.mark.parametrize("text,value", [
    ("3/4+1/2i", Gaussian(Fraction(3, 4), Fraction(1, 2))),
    ("i", Gaussian(0, 1)),
    ("-i", Gaussian(0, -1)),
    ("2", Gaussian(2)),
    ("-1/3i", Gaussian(0, Fraction(-1, 3))),
])
def test_gaussian_parse(text, value):
    assert QQI.parse(text) == value
    assert QQI.parse(QQI.format(value)) == value


def test_parse_and_format_mod_p():
    F = GFp(5)
    assert F.parse("2 mod 5") == F(2)
    assert F.parse("7") == F(2)
    assert F.parse(F.format(F(3))) == F(3)
    with pytest.raises(UsageError):
        F.parse("2 mod 7")


def test_field_tags():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("Qi") is QQI
    assert field_from_tag("GF:7") == GFp(7)
    assert field_from_tag("GF(7)") == GFp(7)
    with pytest.raises(UsageError):
        field_from_tag("GF:8")
    with pytest.raises(UsageError):
        field_from_tag("R")


def test_is_prime():
    small = [k for k in range(60) if is_prime(k)]
    assert small == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)


def test_gf_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(0, 7).inverse()
