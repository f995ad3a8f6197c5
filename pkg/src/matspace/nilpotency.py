"""Certification of affine spaces of nilpotent matrices and the two trace lemmas.

Over an infinite field the generic element P + sum t_k Z_k is nilpotent for
every parameter value iff its characteristic polynomial, computed without
division over Q[t], is exactly x^n.  Over GF(p) a formally zero test would be
wrong (``t^2 + t`` vanishes on GF(2)), so finite fields are always certified
by enumerating every element.
"""

from dataclasses import dataclass, field as dc_field
from typing import Any, Optional, Tuple

from .errors import PreconditionError, UsageError
from .matrix import char_poly_berkowitz, is_nilpotent, s2, trace, unit, zeros
from .parallel import first_hit, split_range
from .poly import nonvanishing_point
from .reports import Counterexample, make_report
from .scalars import QQ, GFp
from .subspace import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_space,
    generic_element,
    make_subspace,
    membership,
    span_with_base,
    _check_enumerable,
)

__all__ = [
    "S2Check",
    "check_s2_identity",
    "trace_pairing",
    "NilpotencyCert",
    "certify_nilpotent",
    "nilpotent_bound",
    "formal_defect",
    "witness_max_nilpotent",
    "witness_affine_not_linear_nilpotent",
    "char2_counterexample",
    "check_span_nilpotent_consequence",
]


@dataclass(frozen=True)
class S2Check:
    lhs: Any
    rhs: Any

    @property
    def equal(self):
        return self.lhs == self.rhs


def check_s2_identity(R, U):
    """Both sides of S2(R) - S2(R + U) = tr(R U) for nilpotent U."""
    if R.ring != U.ring or R.shape != U.shape:
        raise UsageError("R and U must be square matrices of one size over one field")
    if not is_nilpotent(U):
        raise PreconditionError("U is not nilpotent")
    return S2Check(s2(R) - s2(R + U), trace(R @ U))


def trace_pairing(P, A, B):
    """tr(AB), after checking that P, P+A, P+B and P+A+B are all nilpotent.

    Under those hypotheses the result is always 0.
    """
    for name, m in (("P", P), ("P+A", P + A), ("P+B", P + B), ("P+A+B", P + A + B)):
        if not is_nilpotent(m):
            raise PreconditionError("%s is not nilpotent" % name)
    return trace(A @ B)


def nilpotent_bound(n):
    return n * (n - 1) // 2


@dataclass(frozen=True)
class NilpotencyCert:
    verdict: str                      # "all-nilpotent" | "counterexample"
    method: str                       # "symbolic" | "enumeration"
    n: int
    field: str
    characteristic: int
    dim: int
    is_linear: bool
    bound: int
    refined_bound: Optional[int]
    refined_bound_applicable: bool
    counterexample: Optional[Counterexample] = None
    elements_tested: Optional[int] = None
    nonzero_coefficients: Tuple[int, ...] = ()
    notes: Tuple[str, ...] = dc_field(default=())

    @property
    def holds(self):
        return self.verdict == "all-nilpotent"

    @property
    def bound_satisfied(self):
        if self.dim > self.bound:
            return False
        if self.refined_bound_applicable and self.dim > self.refined_bound:
            return False
        return True

    def to_report(self, command="certify", seed=0):
        details = {"characteristic": self.characteristic}
        if self.elements_tested is not None:
            details["elements_tested"] = self.elements_tested
        if self.nonzero_coefficients:
            details["nonzero_char_poly_coefficients"] = list(self.nonzero_coefficients)
        return make_report(
            command, self.verdict, property="nilpotent", method=self.method, seed=seed,
            n=self.n, field=self.field, dim=self.dim, is_linear=self.is_linear,
            bound=self.bound, refined_bound=self.refined_bound,
            refined_bound_applicable=self.refined_bound_applicable,
            bound_satisfied=self.bound_satisfied, counterexample=self.counterexample,
            notes=list(self.notes), details=details)


def _enum_chunk(args):
    S, start, stop, cap = args
    for coeffs, m in enumerate_space(S, cap=cap, start=start, stop=stop):
        if not is_nilpotent(m):
            return coeffs, m
    return None


def _verify_counterexample(S, m):
    if not membership(S, m) or is_nilpotent(m):
        raise RuntimeError("internal error: bad nilpotency counterexample\n%s" % m)


def certify_nilpotent(S, cap=DEFAULT_ENUMERATION_CAP, jobs=1):
    """Decide whether every element of S is nilpotent, and check the dimension bound."""
    n, F = S.n, S.field
    char = F.characteristic
    refined_applicable = char == 0 and not S.is_linear
    base = dict(n=n, field=F.name, characteristic=char, dim=S.dim, is_linear=S.is_linear,
                bound=nilpotent_bound(n), refined_bound=nilpotent_bound(n) - 1,
                refined_bound_applicable=refined_applicable)
    notes = []
    if not S.is_linear and char != 0:
        notes.append("char-0 refined bound not applicable (characteristic %d)" % char)

    if F.is_finite:
        size = _check_enumerable(S, cap)
        chunks = [(S, a, b, cap) for a, b in split_range(size, max(1, jobs) * 4)]
        hit = first_hit(_enum_chunk, chunks, jobs)
        if hit is None:
            return NilpotencyCert("all-nilpotent", "enumeration", elements_tested=size,
                                  notes=tuple(notes), **base)
        coeffs, m = hit
        _verify_counterexample(S, m)
        return NilpotencyCert("counterexample", "enumeration",
                              counterexample=Counterexample(coeffs, m, "char poly is not x^n"),
                              notes=tuple(notes), **base)

    chi = char_poly_berkowitz(generic_element(S))
    bad = tuple(chi.nonzero_lower())
    if not bad:
        return NilpotencyCert("all-nilpotent", "symbolic", notes=tuple(notes), **base)
    # Lowest-degree coefficient first: the cheapest to evaluate.
    k = max(bad)
    point = nonvanishing_point(chi.coeffs[k])
    m = S.element(point)
    _verify_counterexample(S, m)
    return NilpotencyCert(
        "counterexample", "symbolic", nonzero_coefficients=bad, notes=tuple(notes),
        counterexample=Counterexample(point, m, "coefficient of x^%d is nonzero here" % k),
        **base)


def formal_defect(S):
    """Nonzero lower coefficients of the generic characteristic polynomial.

    Works over any field, GF(p) included, but over GF(p) an empty result only
    proves formal zero; a nonempty one does not prove a counterexample exists.
    """
    chi = char_poly_berkowitz(generic_element(S))
    return {k: chi.coeffs[k] for k in chi.nonzero_lower()}


def _strict_upper_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def witness_max_nilpotent(n, field=QQ):
    """The strictly upper triangular matrices: dimension n(n-1)/2."""
    if n < 1:
        raise UsageError("n must be positive")
    return make_subspace(zeros(n, ring=field),
                         [unit(n, i, j, field) for i, j in _strict_upper_pairs(n)])


def witness_affine_not_linear_nilpotent(n, field=QQ):
    """E_12 + span of the other strictly upper units: 0 is excluded, dimension n(n-1)/2 - 1."""
    if n < 2:
        raise UsageError("no affine-not-linear nilpotent space for n < 2")
    if field.characteristic != 0:
        raise UsageError("this witness is stated for characteristic 0")
    gens = [unit(n, i, j, field) for i, j in _strict_upper_pairs(n) if (i, j) != (0, 1)]
    return make_subspace(unit(n, 0, 1, field), gens)


def char2_counterexample():
    """E_12 + <E_12 + E_21> over GF(2): affine, not linear, yet of dimension n(n-1)/2."""
    F = GFp(2)
    e12, e21 = unit(2, 0, 1, F), unit(2, 1, 0, F)
    return make_subspace(e12, [e12 + e21])


def check_span_nilpotent_consequence(S, cap=DEFAULT_ENUMERATION_CAP):
    """For an all-nilpotent S in characteristic 0, certify that span(P, Z) is all-nilpotent too."""
    if S.field.characteristic != 0:
        raise UsageError("this consequence is only claimed in characteristic 0")
    if not certify_nilpotent(S, cap=cap).holds:
        raise UsageError("S is not certified all-nilpotent")
    return certify_nilpotent(span_with_base(S), cap=cap).holds
