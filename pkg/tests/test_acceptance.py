"""The eleven acceptance criteria, each at its stated size and tolerance.

Every test prints a single ``PASS``/``FAIL`` line (visible with or without -s)
before asserting, so a run log doubles as the acceptance record.
"""

import random
import time

import numpy as np
import pytest

from matspace.diagonalizability import (
    antisymmetric_pencil_escape,
    escape_budget,
    nonsymmetric_diag_space_2x2,
    sample_certify_diag_space,
    sturm_real_root_count,
    witness_max_diag_affine_not_linear,
    witness_max_diag_linear,
)
from matspace.matrix import (
    Matrix,
    char_poly_berkowitz,
    char_poly_faddeev,
    diag,
    inverse,
    is_nilpotent,
    unit,
    zeros,
)
from matspace.nilpotency import (
    certify_nilpotent,
    char2_counterexample,
    check_s2_identity,
    check_span_nilpotent_consequence,
    trace_pairing,
    witness_affine_not_linear_nilpotent,
    witness_max_nilpotent,
)
from matspace.normality import (
    certify_normal,
    circulant_space,
    diagonal_space,
    exact_eigen_failures,
    max_residual,
    simultaneous_diagonalize,
    symmetric_circulant_affine,
)
from matspace.oracle import cross_validate, oracle_all_property
from matspace.randgen import (
    random_antisymmetric,
    random_invertible,
    random_matrix,
    random_pairing_triple,
    random_s2_pair,
)
from matspace.scalars import GFp
from matspace.subspace import enumerate_space, make_subspace, membership
from matspace.upoly import X

from _spaces import random_gf3_space, random_small_space


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print("\n%s  criterion %2d: %s" % ("PASS" if ok else "FAIL", number, detail))
        assert ok, detail
    return emit


def test_01_strict_upper_maximal(verdict):
    start = time.perf_counter()
    dims, ok = [], True
    for n in range(2, 7):
        cert = certify_nilpotent(witness_max_nilpotent(n))
        dims.append(cert.dim)
        ok = ok and cert.holds and cert.method == "symbolic" and cert.dim == n * (n - 1) // 2
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    verdict(1, ok, "strictly upper n=2..6 symbolic all-nilpotent, dims %s, %.2fs < 60s"
            % (dims, elapsed))


def test_02_affine_not_linear_nilpotent(verdict):
    rows, ok = [], True
    for n in range(2, 6):
        S = witness_affine_not_linear_nilpotent(n)
        cert = certify_nilpotent(S)
        span_ok = check_span_nilpotent_consequence(S)
        good = (cert.holds and not cert.is_linear and cert.dim == n * (n - 1) // 2 - 1
                and span_ok)
        rows.append("n=%d dim %d%s" % (n, cert.dim, "" if good else " BAD"))
        ok = ok and good
    verdict(2, ok, "affine-not-linear witnesses all-nilpotent, span consequence holds: "
            + ", ".join(rows))


def test_03_char2_counterexample_space(verdict):
    S = char2_counterexample()
    F = GFp(2)
    elems = {m for _, m in enumerate_space(S)}
    cert = certify_nilpotent(S)
    ok = (elems == {unit(2, 0, 1, F), unit(2, 1, 0, F)}
          and all(is_nilpotent(m) for m in elems)
          and cert.holds and cert.dim == 1 == 2 * 1 // 2 and not cert.is_linear
          and not cert.refined_bound_applicable
          and any("not applicable" in note for note in cert.notes))
    verdict(3, ok, "GF(2) space is exactly {E12, E21}, both nilpotent, dim 1, not linear, "
            "refined bound reported not applicable")


def test_04_s2_identity(verdict):
    rng = random.Random(4)
    equal = 0
    for _ in range(1000):
        R, U = random_s2_pair(rng, rng.randint(2, 5))
        equal += check_s2_identity(R, U).equal
    verdict(4, equal == 1000, "S2(R) - S2(R+U) = tr(RU) on %d/1000 random pairs" % equal)


def test_05_trace_pairing(verdict):
    rng = random.Random(5)
    zero = 0
    for _ in range(500):
        P, A, B = random_pairing_triple(rng, rng.randint(2, 5))
        zero += trace_pairing(P, A, B) == 0       # checks all four hypotheses first
    verdict(5, zero == 500, "tr(AB) = 0 on %d/500 hypothesis-verified triples" % zero)


def test_06_normal_bound(verdict):
    problems = []

    def both(S, parameters="complex"):
        a = certify_normal(S, method="symbolic", parameters=parameters)
        b = certify_normal(S, method="pairwise", parameters=parameters)
        if a.holds != b.holds:
            problems.append("methods disagree on %r" % (S,))
        return a

    for n in range(2, 7):
        c = both(diagonal_space(n))
        if not (c.holds and c.dim == n and c.bound_satisfied):
            problems.append("diagonal n=%d" % n)
    for n in range(2, 6):
        c = both(circulant_space(n))
        if not (c.holds and c.dim == n and c.bound_satisfied):
            problems.append("circulant n=%d" % n)
    S = symmetric_circulant_affine()
    c = both(S, parameters="real")
    if not (c.holds and c.dim == 2 and not S.is_linear and not membership(S, zeros(2))):
        problems.append("symmetric affine example")
    rng = random.Random(6)
    for _ in range(100):
        T = random_small_space(rng)
        both(T, "complex")
        both(T, "real")
    verdict(6, not problems,
            "diagonal n=2..6 and circulant n=2..5 all-normal with dim n; E11+span{I,E12+E21} "
            "all-normal (real parameters), dim 2, 0 not in S; methods agree on these and 100 "
            "random spaces" + ("; problems: %s" % problems if problems else ""))


def _random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_07_simultaneous_diagonalization(verdict):
    rng = random.Random(7)
    exact_fail = 0
    for _ in range(50):
        n = rng.randint(2, 4)
        C = random_invertible(rng, n)
        Ci = inverse(C)
        fam = [C @ diag([rng.randint(-3, 3) for _ in range(n)]) @ Ci
               for _ in range(rng.randint(1, 3))]
        ref = simultaneous_diagonalize(fam, mode="exact")
        if sum(len(b) for b in ref.blocks) != n or exact_eigen_failures(ref, fam):
            exact_fail += 1
    nrng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(50):
        n = int(nrng.integers(2, 7))
        U = _random_unitary(nrng, n)
        re = nrng.integers(-2, 3, size=n)
        fam = [U @ np.diag(re * nrng.integers(-2, 3) + 1j * nrng.integers(-2, 3, size=n))
               @ U.conj().T for _ in range(int(nrng.integers(1, 4)))]
        ref = simultaneous_diagonalize(fam, mode="numeric")
        assert sum(len(b) for b in ref.blocks) == n
        worst = max(worst, max_residual(ref, fam))
    ok = exact_fail == 0 and worst <= 1e-9
    verdict(7, ok, "exact mode: %d/50 families with an exact common eigenbasis; numeric mode: "
            "max residual %.2e <= 1e-9 over 50 normal commuting families" % (50 - exact_fail, worst))


def test_08_diagonalizable_sampling(verdict):
    runs = [("symmetric n=3", witness_max_diag_linear(3), 6)]
    runs += [("E11+U n=%d" % n, witness_max_diag_affine_not_linear(n), n * (n + 1) // 2 - 1)
             for n in (2, 3, 4)]
    runs += [("[[a,b],[2b,c]]", nonsymmetric_diag_space_2x2(), 3)]
    rows, ok = [], True
    for name, S, dim in runs:
        cert = sample_certify_diag_space(S, samples=10 ** 4, seed=8)
        good = cert.holds and cert.samples == 10 ** 4 and cert.dim == dim and cert.bound_satisfied
        rows.append("%s dim %d%s" % (name, cert.dim, "" if good else " BAD"))
        ok = ok and good
    broken = sample_certify_diag_space(make_subspace(zeros(2), [unit(2, 0, 1)]),
                                       samples=10 ** 4, seed=8)
    pt = broken.counterexample.point if broken.counterexample else None
    in_grid = pt is not None and all(c == int(c) and abs(c) <= 3 for c in pt)
    ok = ok and not broken.holds and in_grid
    verdict(8, ok, "10^4 samples, no counterexample: %s; span{E12} fails at t=%s in the grid pass"
            % (", ".join(rows), pt[0] if pt else None))


def test_09_pencil_escape(verdict):
    P, Y = unit(2, 0, 0), unit(2, 0, 1) - unit(2, 1, 0)
    res = antisymmetric_pencil_escape(P, Y)
    first = (res.t == 1 and res.matrix == Matrix([[1, 1], [-1, 0]])
             and res.char_poly == X * X - X + 1
             and sturm_real_root_count(res.char_poly) == 0)
    rng = random.Random(9)
    found = 0
    for _ in range(100):
        n = rng.randint(2, 4)
        Pr = random_matrix(rng, n, bound=6)
        Yr = random_antisymmetric(rng, n)
        r = antisymmetric_pencil_escape(Pr, Yr)
        found += abs(r.t) <= escape_budget(Pr) and not r.report.diagonalizable
    verdict(9, first and found == 100,
            "E11 + t(E12-E21): t=%s, chi = %s, Sturm count %d; random pencils escaped within "
            "budget %d/100" % (res.t, res.char_poly, sturm_real_root_count(res.char_poly), found))


def test_10_oracle_cross_validation(verdict):
    rng = random.Random(10)
    agree, holds = 0, 0
    for _ in range(100):
        S = random_gf3_space(rng)
        ag = cross_validate(certify_nilpotent(S), oracle_all_property(S, "nilpotent"))
        agree += ag.agree
        holds += ag.oracle_holds
    verdict(10, agree == 100, "GF(3), n=3, h<=2: oracle and certifier agree %d/100 "
            "(%d all-nilpotent, %d with counterexample)" % (agree, holds, 100 - holds))


def test_11_kernel_equivalence(verdict):
    rng = random.Random(11)
    same = 0
    for _ in range(100):
        m = random_matrix(rng, 5, bound=9)
        same += char_poly_berkowitz(m) == char_poly_faddeev(m)
    verdict(11, same == 100, "Berkowitz = Faddeev-LeVerrier on %d/100 random 5x5 rational "
            "matrices" % same)
