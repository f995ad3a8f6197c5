import json
import random

import pytest

from matspace.errors import FieldMismatchError, ResourceError, UsageError
from matspace.matrix import Matrix, identity, rank, unit, zeros
from matspace.nilpotency import char2_counterexample, witness_max_nilpotent
from matspace.randgen import random_matrix
from matspace.scalars import QQ, GFp
from matspace.subspace import (
    coordinates,
    enumerate_space,
    generic_element,
    make_subspace,
    membership,
    recombine,
    span_with_base,
    subspace_from_json,
    subspace_to_json,
)

F2 = GFp(2)


def random_space(rng, n=3, h=2, field=QQ, affine=True):
    base = random_matrix(rng, n, field, 3) if affine else zeros(n, ring=field)
    return make_subspace(base, [random_matrix(rng, n, field, 3) for _ in range(h)])


def test_duplicate_generators_pruned():
    S = make_subspace(zeros(2), [unit(2, 0, 1), unit(2, 0, 1)])
    assert S.dim == 1 and S.is_linear


def test_nonsymmetric_diag_space_shape():
    S = char2_counterexample()
    assert S.dim == 1 and not S.is_linear
    assert S.field == F2


def test_base_in_direction_is_canonicalized():
    S = make_subspace(unit(2, 0, 0), [unit(2, 0, 0)])
    assert S.is_linear
    assert S.base.is_zero()


def test_membership_examples():
    T = witness_max_nilpotent(3)
    assert membership(T, unit(3, 0, 2))
    assert not membership(T, unit(3, 1, 0))
    assert membership(char2_counterexample(), unit(2, 1, 0, F2))


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatchError):
        make_subspace(zeros(2), [unit(2, 0, 1, F2)])


def test_coordinates_wrong_ambient():
    with pytest.raises(UsageError):
        coordinates(witness_max_nilpotent(3), identity(2))


def test_generic_element_examples():
    G = generic_element(make_subspace(zeros(2), [unit(2, 0, 0)]))
    (t,) = G.ring.gens()
    assert G == Matrix([[t, 0], [0, 0]], G.ring)
    R = generic_element(char2_counterexample())
    (t,) = R.ring.gens()
    assert R == Matrix([[0, 1 + t], [t, 0]], R.ring)


@pytest.mark.parametrize("seed", range(50))
def test_generic_element_at_zero_is_base(seed):
    rng = random.Random(seed)
    S = random_space(rng, n=rng.randint(1, 4), h=rng.randint(0, 3))
    G = generic_element(S)
    assert G.evaluate((0,) * S.dim) == S.base
    pt = tuple(QQ.random_element(rng) for _ in range(S.dim))
    assert membership(S, G.evaluate(pt))


def test_span_with_base_examples():
    W = span_with_base(char2_counterexample())
    assert W.dim == 2 and W.is_linear
    assert membership(W, unit(2, 0, 1, F2)) and membership(W, unit(2, 1, 0, F2))
    T = witness_max_nilpotent(3)
    assert span_with_base(T) == T
    assert span_with_base(make_subspace(unit(2, 0, 0), [unit(2, 1, 1)])).dim == 2


@pytest.mark.parametrize("seed", range(30))
def test_structural_invariants(seed):
    rng = random.Random(seed)
    S = random_space(rng, n=rng.randint(2, 3), h=rng.randint(0, 4), affine=rng.random() < 0.7)
    flat = Matrix([z.flatten() for z in S.basis], QQ) if S.basis else None
    assert S.dim == (rank(flat) if flat else 0)
    assert make_subspace(S.base, S.basis) == S
    assert S.is_linear == membership(S, zeros(S.n))
    assert span_with_base(S).dim == S.dim + (0 if S.is_linear else 1)


def test_enumeration():
    elems = [m for _, m in enumerate_space(char2_counterexample())]
    assert set(elems) == {unit(2, 0, 1, F2), unit(2, 1, 0, F2)}
    F3 = GFp(3)
    assert len(list(enumerate_space(make_subspace(zeros(2, ring=F3), [unit(2, 0, 0, F3)])))) == 3
    assert [m for _, m in enumerate_space(make_subspace(identity(2, F3)))] == [identity(2, F3)]


@pytest.mark.parametrize("seed", range(10))
def test_enumeration_cardinality_and_slices(seed):
    rng = random.Random(seed)
    F = GFp(rng.choice([2, 3]))
    S = random_space(rng, n=2, h=rng.randint(1, 3), field=F)
    full = [c for c, _ in enumerate_space(S)]
    assert len(full) == F.order ** S.dim == len(set(full))
    mid = len(full) // 2
    parts = [c for c, _ in enumerate_space(S, stop=mid)] + \
            [c for c, _ in enumerate_space(S, start=mid)]
    assert parts == full


def test_enumeration_cap():
    F = GFp(5)
    S = witness_max_nilpotent(4, F)
    with pytest.raises(ResourceError):
        next(enumerate_space(S, cap=1000))


def test_recombine_same_space():
    rng = random.Random(4)
    S = random_space(rng, n=3, h=3)
    T = recombine(S, random.Random(9))
    assert T.dim == S.dim and T.basis != S.basis
    assert all(membership(S, z + S.base) for z in T.basis)


def test_json_roundtrip():
    for S in (char2_counterexample(), witness_max_nilpotent(3)):
        text = json.dumps(subspace_to_json(S))
        assert subspace_from_json(text) == S


def test_json_errors_name_location():
    obj = subspace_to_json(witness_max_nilpotent(2))
    obj["generators"][0]["entries"][0][1] = "x"
    with pytest.raises(UsageError, match=r"generators\[0\]"):
        subspace_from_json(obj)
    with pytest.raises(UsageError, match="missing"):
        subspace_from_json({"field": "Q"})
