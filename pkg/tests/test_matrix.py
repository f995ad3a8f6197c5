import random
from fractions import Fraction

import pytest

from matspace.errors import UsageError, FieldMismatchError
from matspace.matrix import (
    Echelon,
    Matrix,
    char_poly_berkowitz,
    char_poly_faddeev,
    det,
    diag,
    identity,
    inverse,
    is_nilpotent,
    is_normal,
    jordan_block,
    nullspace,
    rank,
    rref,
    s2,
    trace,
    unit,
    zeros,
)
from matspace.randgen import random_invertible, random_matrix
from matspace.scalars import QQ, QQI, GFp, Gaussian

I_ = Gaussian(0, 1)


def test_trace_and_products():
    assert trace(unit(2, 0, 1) @ unit(2, 1, 0)) == 1
    rng = random.Random(1)
    A, B = random_matrix(rng, 4), random_matrix(rng, 4)
    assert trace(A @ B) == trace(B @ A)


def test_conj_transpose():
    m = Matrix([[I_, 0], [0, 0]], QQI)
    assert m.H == Matrix([[-I_, 0], [0, 0]], QQI)
    q = Matrix([[1, 2], [3, 4]])
    assert q.H == q.T


def test_s2_examples():
    assert s2(identity(3)) == 3
    assert s2(Matrix([[1, 2], [3, 4]])) == -2
    assert s2(unit(3, 0, 1) + unit(3, 0, 2).scale(5) + unit(3, 1, 2)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_jordan_block_char_poly(n):
    chi = char_poly_berkowitz(jordan_block(n))
    assert chi.is_pure_power()
    assert chi.coeffs == (0,) * n + (1,)


def test_char_poly_examples():
    assert char_poly_berkowitz(Matrix([[2, 1], [1, 2]])).coeffs == (3, -4, 1)
    assert char_poly_faddeev(identity(3)).coeffs == (-1, 3, -3, 1)
    assert char_poly_faddeev(unit(2, 0, 1)).coeffs == (0, 0, 1)


def test_faddeev_refuses_char_p():
    with pytest.raises(UsageError):
        char_poly_faddeev(identity(2, GFp(3)))


@pytest.mark.parametrize("seed", range(20))
def test_coefficient_identities(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    for field in (QQ, GFp(3)):
        m = random_matrix(rng, n, field)
        c = char_poly_berkowitz(m).coeffs
        assert c[n] == 1
        assert c[n - 1] == -trace(m)
        assert c[n - 2] == s2(m)
        assert c[0] == (-1) ** n * det(m)


@pytest.mark.parametrize("seed", range(15))
def test_similarity_invariance(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(2, 5)
    m = random_matrix(rng, n)
    c = random_invertible(rng, n)
    assert char_poly_berkowitz(inverse(c) @ m @ c) == char_poly_berkowitz(m)


@pytest.mark.parametrize("seed", range(10))
def test_berkowitz_matches_faddeev_over_gaussians(seed):
    rng = random.Random(seed)
    m = random_matrix(rng, 4, QQI, 4)
    assert char_poly_berkowitz(m).coeffs == char_poly_faddeev(m).coeffs


def test_nilpotency_single():
    assert is_nilpotent(unit(3, 0, 1) + unit(3, 1, 2))
    F = GFp(2)
    assert not is_nilpotent(unit(2, 0, 1, F) + unit(2, 1, 0, F))
    assert not is_nilpotent(identity(3))


@pytest.mark.parametrize("seed", range(20))
def test_nilpotent_conjugates(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    c = random_invertible(rng, n)
    m = c @ jordan_block(n) @ inverse(c)
    assert is_nilpotent(m)
    assert is_nilpotent(m) == ((m ** n).is_zero())


def test_normality_single():
    assert is_normal(Matrix([[0, 1], [-1, 0]]))
    assert not is_normal(unit(2, 0, 1))
    assert is_normal(diag([Gaussian(1, 2), Gaussian(0, -3), 5], QQI))
    with pytest.raises(UsageError):
        is_normal(identity(2, GFp(5)))


def test_rank_examples():
    assert rank(unit(2, 0, 1) + unit(2, 1, 0)) == 2
    assert rank(zeros(4)) == 0
    assert rank(Matrix([[1, 1], [1, 1]], GFp(2))) == 1


def test_rref_and_nullspace():
    m = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, piv = rref(m)
    assert tuple(piv) == (0, 1)
    ns = nullspace(m)
    assert len(ns) == 1
    assert (m @ Matrix.column(ns[0])).is_zero()


def test_inverse_roundtrip():
    rng = random.Random(3)
    c = random_invertible(rng, 4)
    assert c @ inverse(c) == identity(4)
    with pytest.raises((UsageError, ZeroDivisionError)):
        inverse(zeros(2))


def test_shape_and_ring_mismatch():
    with pytest.raises(UsageError):
        identity(2) + identity(3)
    with pytest.raises(FieldMismatchError):
        identity(2) + identity(2, GFp(3))


def test_json_roundtrip():
    for m in (Matrix([[Fraction(1, 2), -3], [0, 7]]),
              Matrix([[I_, Gaussian(Fraction(3, 4), Fraction(1, 2))], [0, 1]], QQI),
              Matrix([[1, 2], [3, 4]], GFp(5))):
        out = m.to_json()
        assert set(out) == {"field", "n", "entries"}
        assert Matrix.from_json(out) == m


def test_json_format():
    m = Matrix([[1, 2], [3, 4]], GFp(5))
    assert m.to_json() == {"field": "GF(5)", "n": 2,
                           "entries": [["1 mod 5", "2 mod 5"], ["3 mod 5", "4 mod 5"]]}


def test_echelon_tracks_coordinates():
    ech = Echelon(QQ, 3)
    assert ech.add((1, 0, 1))
    assert ech.add((0, 1, 1))
    assert not ech.add((1, 1, 2))
    assert tuple(ech.solve((2, 3, 5))) == (2, 3)
    assert ech.solve((0, 0, 1)) is None
    assert ech.rank == 2
