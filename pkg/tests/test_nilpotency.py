import itertools
import random

import pytest

from matspace.errors import PreconditionError, ResourceError, UsageError
from matspace.matrix import identity, is_nilpotent, jordan_block, unit, zeros
from matspace.nilpotency import (
    certify_nilpotent,
    char2_counterexample,
    check_s2_identity,
    check_span_nilpotent_consequence,
    formal_defect,
    nilpotent_bound,
    trace_pairing,
    witness_affine_not_linear_nilpotent,
    witness_max_nilpotent,
)
from matspace.randgen import (
    random_matrix,
    random_pairing_triple,
    random_s2_pair,
)
from matspace.scalars import QQ, QQI, GFp
from matspace.subspace import make_subspace, membership, restrict

from _spaces import random_gf3_space

F3 = GFp(3)


def test_s2_identity_examples():
    rng = random.Random(0)
    R = random_matrix(rng, 3)
    chk = check_s2_identity(R, unit(3, 0, 1))
    assert chk.lhs == chk.rhs == R[1, 0]
    assert check_s2_identity(R, zeros(3)).lhs == 0
    chk = check_s2_identity(zeros(3), unit(3, 0, 2))
    assert chk.lhs == chk.rhs == 0


def test_s2_identity_precondition():
    with pytest.raises(PreconditionError):
        check_s2_identity(identity(2), identity(2))


def test_s2_identity_random_conjugates():
    rng = random.Random(200)
    for _ in range(200):
        R, U = random_s2_pair(rng, rng.randint(2, 4))
        assert check_s2_identity(R, U).equal


def test_trace_pairing_examples():
    assert trace_pairing(zeros(3), unit(3, 0, 1), unit(3, 0, 2)) == 0
    assert trace_pairing(jordan_block(3), unit(3, 0, 2), unit(3, 1, 2)) == 0


def test_trace_pairing_names_failing_hypothesis():
    with pytest.raises(PreconditionError, match=r"P\+A\b"):
        trace_pairing(zeros(2), identity(2), zeros(2))
    with pytest.raises(PreconditionError, match=r"P\+A\+B"):
        trace_pairing(zeros(2), unit(2, 0, 1), unit(2, 1, 0))


def test_trace_pairing_random_triples():
    rng = random.Random(201)
    for _ in range(200):
        P, A, B = random_pairing_triple(rng, rng.randint(2, 4))
        assert trace_pairing(P, A, B) == 0


def test_trace_pairing_inside_certified_affine_space():
    S = witness_affine_not_linear_nilpotent(4)
    rng = random.Random(5)
    for _ in range(30):
        pts = [[QQ.random_element(rng, 4) for _ in range(S.dim)] for _ in range(3)]
        P = S.element(pts[0])
        A = S.element(pts[1]) - S.base
        B = S.element(pts[2]) - S.base
        assert trace_pairing(P, A, B) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_strict_upper_certified(n):
    cert = certify_nilpotent(witness_max_nilpotent(n))
    assert cert.holds and cert.method == "symbolic"
    assert cert.dim == nilpotent_bound(n) == n * (n - 1) // 2
    assert cert.bound_satisfied and cert.is_linear


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_affine_witness(n):
    S = witness_affine_not_linear_nilpotent(n)
    cert = certify_nilpotent(S)
    assert cert.holds and not cert.is_linear
    assert cert.dim == n * (n - 1) // 2 - 1
    assert cert.refined_bound_applicable and cert.bound_satisfied
    assert check_span_nilpotent_consequence(S)


def test_affine_witness_small_cases():
    S = witness_affine_not_linear_nilpotent(2)
    assert S.dim == 0 and S.base == unit(2, 0, 1)
    with pytest.raises(UsageError):
        witness_affine_not_linear_nilpotent(1)
    with pytest.raises(UsageError):
        witness_affine_not_linear_nilpotent(3, F3)


def test_span_consequence_dims():
    S = witness_affine_not_linear_nilpotent(3)
    assert check_span_nilpotent_consequence(S)
    assert check_span_nilpotent_consequence(witness_max_nilpotent(3))
    with pytest.raises(UsageError):
        check_span_nilpotent_consequence(make_subspace(identity(2)))
    with pytest.raises(UsageError):
        check_span_nilpotent_consequence(char2_counterexample())


def test_char2_counterexample_space():
    S = char2_counterexample()
    cert = certify_nilpotent(S)
    assert cert.holds and cert.method == "enumeration"
    assert cert.elements_tested == 2
    assert cert.dim == 1 == nilpotent_bound(2)
    assert not cert.is_linear and not cert.refined_bound_applicable
    assert cert.bound_satisfied
    assert any("refined bound not applicable" in note for note in cert.notes)
    # the formal defect is nonzero: t^2 + t is zero as a function on GF(2) only
    defect = formal_defect(S)
    assert defect and all(p.evaluate((x,)) == 0 for p in defect.values()
                          for x in GFp(2).elements())


def test_counterexample_symbolic():
    S = make_subspace(zeros(2), [unit(2, 0, 1), unit(2, 1, 0)])
    cert = certify_nilpotent(S)
    assert not cert.holds
    m = cert.counterexample.matrix
    assert membership(S, m) and not is_nilpotent(m)
    assert cert.nonzero_coefficients


def test_counterexample_over_gaussians():
    S = make_subspace(zeros(2, ring=QQI), [unit(2, 0, 1, QQI) + unit(2, 1, 0, QQI)])
    cert = certify_nilpotent(S)
    assert not cert.holds and not is_nilpotent(cert.counterexample.matrix)


def test_enumeration_cap():
    S = witness_max_nilpotent(5, GFp(5))
    with pytest.raises(ResourceError):
        certify_nilpotent(S, cap=10 ** 4)


def test_parallel_enumeration_matches_serial():
    S = make_subspace(unit(3, 0, 1, F3), [unit(3, 1, 2, F3), unit(3, 2, 0, F3), unit(3, 0, 2, F3)])
    a = certify_nilpotent(S, jobs=1)
    b = certify_nilpotent(S, jobs=3)
    assert a == b
    assert not a.holds


def test_formal_vs_enumeration_over_gf3():
    rng = random.Random(33)
    divergences = 0
    for _ in range(100):
        S = random_gf3_space(rng)
        enum = certify_nilpotent(S).holds
        formal = not formal_defect(S)
        if formal:
            assert enum
        elif enum:
            # formally nonzero but functionally zero: the char-p gap
            divergences += 1
            values = list(F3.elements())
            for p in formal_defect(S).values():
                assert all(p.evaluate(pt) == 0
                           for pt in itertools.product(values, repeat=S.dim))
    assert divergences < 100


def test_monotonicity():
    rng = random.Random(7)
    S = witness_affine_not_linear_nilpotent(4)
    for _ in range(20):
        keep = sorted(rng.sample(range(S.dim), rng.randint(0, S.dim)))
        assert certify_nilpotent(restrict(S, keep)).holds


def test_report_fields():
    rep = certify_nilpotent(witness_max_nilpotent(4)).to_report(seed=5)
    assert rep["dim"] == 6 and rep["bound"] == 6 and rep["seed"] == 5
    assert rep["verdict"] == "all-nilpotent" and rep["property"] == "nilpotent"
