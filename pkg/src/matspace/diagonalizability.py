"""Diagonalizability over the reals, decided exactly for rational matrices.

A rational matrix is diagonalizable over R iff its minimal polynomial is
squarefree and all of its roots are real; the root count comes from a Sturm
sequence, so no floating point is involved.

Whole affine spaces are only *sampled*: real diagonalizability is not a
polynomial identity, so a space that survives sampling is reported as
"no-counterexample-found", never as certified.
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import BudgetExhausted, PreconditionError, UsageError
from .matrix import Echelon, Matrix, char_poly_berkowitz, identity, nullspace, unit, zeros
from .parallel import first_hit
from .poly import candidate_values
from .reports import Counterexample, make_report
from .scalars import QQ
from .subspace import make_subspace, membership
from .upoly import UPoly, gcd

__all__ = [
    "minimal_polynomial",
    "sturm_sequence",
    "sturm_real_root_count",
    "RealDiagReport",
    "is_diagonalizable_real",
    "SpaceSampleCert",
    "sample_points",
    "sample_certify_diag_space",
    "diag_bound",
    "witness_max_diag_linear",
    "witness_max_diag_affine_not_linear",
    "nonsymmetric_diag_space_2x2",
    "EscapeResult",
    "antisymmetric_pencil_escape",
    "escape_budget",
    "antisymmetric_intersection",
]


def _require_rational(m):
    if m.ring != QQ:
        raise UsageError("expected a rational matrix, got entries in %r" % (m.ring,))


def minimal_polynomial(m):
    """Monic annihilating polynomial of least degree, found from I, m, m^2, ..."""
    if not m.is_field_matrix:
        raise UsageError("minimal_polynomial needs scalar entries")
    n = m.n
    ech = Echelon(m.ring, n * n)
    power = identity(n, m.ring)
    for k in range(n + 1):
        coords = ech.solve(power.flatten())
        if coords is not None:
            mp = UPoly([-c for c in coords] + [m.ring.one])
            chi = UPoly(char_poly_berkowitz(m).coeffs)
            if not (chi % mp).is_zero():
                raise RuntimeError("internal error: minimal polynomial does not divide chi")
            return mp
        ech.add(power.flatten())
        power = power @ m
    raise RuntimeError("internal error: no annihilator of degree <= n")


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _variations(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at_infinity(q, positive):
    s = 1 if q.lead > 0 else -1
    if not positive and q.degree % 2:
        s = -s
    return s


def sturm_real_root_count(p, interval=None):
    """Number of distinct real roots of a squarefree rational polynomial.

    With ``interval=(a, b)`` only roots in the half-open interval (a, b] count.
    """
    if isinstance(p, (list, tuple)):
        p = UPoly([Fraction(c) for c in p])
    if p.is_zero():
        raise UsageError("the zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    if gcd(p, p.derivative()).degree > 0:
        raise UsageError("Sturm counting needs a squarefree polynomial")
    seq = sturm_sequence(p)
    if interval is None:
        lo = _variations([_sign_at_infinity(q, False) for q in seq])
        hi = _variations([_sign_at_infinity(q, True) for q in seq])
    else:
        a, b = (Fraction(x) for x in interval)
        if a >= b:
            raise UsageError("empty interval")
        lo = _variations([q(a) for q in seq])
        hi = _variations([q(b) for q in seq])
    return lo - hi


@dataclass(frozen=True)
class RealDiagReport:
    diagonalizable: bool
    reason: str                  # "ok" | "minimal-poly-not-squarefree" | "non-real-eigenvalue"
    minimal_polynomial: UPoly
    real_root_count: Optional[int]
    degree: int

    def to_json(self):
        return {"diagonalizable": self.diagonalizable, "reason": self.reason,
                "minimal_polynomial": str(self.minimal_polynomial),
                "real_root_count": self.real_root_count, "degree": self.degree}


def is_diagonalizable_real(m):
    _require_rational(m)
    chi = UPoly(char_poly_berkowitz(m).coeffs)
    # A squarefree chi is already the minimal polynomial.
    mp = chi if chi.is_squarefree() else minimal_polynomial(m)
    if not mp.is_squarefree():
        return RealDiagReport(False, "minimal-poly-not-squarefree", mp, None, mp.degree)
    count = sturm_real_root_count(mp)
    if count < mp.degree:
        return RealDiagReport(False, "non-real-eigenvalue", mp, count, mp.degree)
    return RealDiagReport(True, "ok", mp, count, mp.degree)


def diag_bound(n, linear):
    full = n * (n + 1) // 2
    return full if linear else full - 1


@dataclass(frozen=True)
class SpaceSampleCert:
    verdict: str                 # "no-counterexample-found" | "counterexample"
    samples: int
    grid_points: int
    grid_radius: int
    seed: int
    n: int
    field: str
    dim: int
    is_linear: bool
    bound: int
    counterexample: Optional[Counterexample] = None
    counterexample_report: Optional[RealDiagReport] = None
    notes: Tuple[str, ...] = dc_field(default=())

    @property
    def holds(self):
        return self.verdict == "no-counterexample-found"

    @property
    def bound_satisfied(self):
        return self.dim <= self.bound

    def to_report(self, command="certify"):
        details = {"samples": self.samples, "grid_points": self.grid_points,
                   "grid": "{-%d..%d}^h by increasing max-norm" % (self.grid_radius,
                                                                     self.grid_radius),
                   "random": "numerators in [-100, 100], denominators in [1, 100]"}
        if self.counterexample_report is not None:
            details["counterexample_report"] = self.counterexample_report.to_json()
        return make_report(
            command, self.verdict, property="diagonalizable-real", method="sampling",
            seed=self.seed, n=self.n, field=self.field, dim=self.dim, is_linear=self.is_linear,
            bound=self.bound, bound_satisfied=self.bound_satisfied,
            counterexample=self.counterexample, notes=list(self.notes), details=details)


def _grid(h, radius):
    yield (0,) * h
    for r in range(1, radius + 1):
        for p in itertools.product(candidate_values(2 * r + 1), repeat=h):
            if max(abs(c) for c in p) == r:
                yield p


def sample_points(h, samples, seed=0, grid_radius=3, grid_cap=10 ** 4):
    """Deterministic grid points first, then seeded random rationals.

    The grid is walked shell by shell in max-norm; inside a shell each
    coordinate runs through 0, 1, -1, 2, -2, ...
    """
    if h == 0:
        return [()], 1
    pts = list(itertools.islice(_grid(h, grid_radius), min(samples, grid_cap)))
    n_grid = len(pts)
    rng = random.Random(seed)
    while len(pts) < samples:
        pts.append(tuple(Fraction(rng.randint(-100, 100), rng.randint(1, 100))
                         for _ in range(h)))
    return pts, n_grid


def _sample_chunk(args):
    S, points = args
    for p in points:
        m = S.element(p)
        rep = is_diagonalizable_real(m)
        if not rep.diagonalizable:
            return p, m, rep
    return None


def sample_certify_diag_space(S, samples=10 ** 4, seed=0, grid_radius=3, jobs=1):
    """Test sampled members of S for real diagonalizability; return the first failure."""
    if S.field != QQ:
        raise UsageError("sampling certification needs a rational space")
    pts, n_grid = sample_points(S.dim, samples, seed, grid_radius)
    size = max(1, len(pts) // (4 * max(1, jobs)))
    chunks = [(S, pts[i:i + size]) for i in range(0, len(pts), size)]
    hit = first_hit(_sample_chunk, chunks, jobs)
    common = dict(samples=len(pts), grid_points=n_grid, grid_radius=grid_radius, seed=seed,
                  n=S.n, field=S.field.name, dim=S.dim, is_linear=S.is_linear,
                  bound=diag_bound(S.n, S.is_linear),
                  notes=("sampling only: no counterexample is not a proof",))
    if hit is None:
        return SpaceSampleCert("no-counterexample-found", **common)
    p, m, rep = hit
    if not membership(S, m) or is_diagonalizable_real(m).diagonalizable:
        raise RuntimeError("internal error: bad diagonalizability counterexample")
    return SpaceSampleCert("counterexample", counterexample=Counterexample(p, m, rep.reason),
                           counterexample_report=rep, **common)


def _symmetric_units(n, start=0):
    gens = [unit(n, i, i) for i in range(start, n)]
    gens += [unit(n, i, j) + unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    return gens


def witness_max_diag_linear(n):
    """Real symmetric matrices: dimension n(n+1)/2."""
    if n < 1:
        raise UsageError("n must be positive")
    return make_subspace(zeros(n), _symmetric_units(n))


def witness_max_diag_affine_not_linear(n):
    """E_11 + U with U spanned by E_ii (i >= 2) and E_ij + E_ji: dimension n(n+1)/2 - 1."""
    if n < 1:
        raise UsageError("n must be positive")
    return make_subspace(unit(n, 0, 0), _symmetric_units(n, start=1))


def nonsymmetric_diag_space_2x2():
    """{[[a, b], [2b, c]]}: non-symmetric, yet inside the real-diagonalizable matrices."""
    return make_subspace(zeros(2), [unit(2, 0, 0), unit(2, 0, 1) + unit(2, 1, 0) * 2,
                                    unit(2, 1, 1)])


@dataclass(frozen=True)
class EscapeResult:
    t: Fraction
    matrix: Matrix
    report: RealDiagReport
    char_poly: UPoly
    tried: int


def escape_budget(P):
    return 10 * max((abs(x) for x in P.flatten()), default=0) + 10


def _escape_schedule(budget):
    seen = set()
    t = Fraction(1)
    while t <= budget:
        for s in (t, -t):
            seen.add(s)
            yield s
        t *= 2
    for den in (1, 2, 4, 8):
        k = 1
        while Fraction(k, den) <= budget:
            for s in (Fraction(k, den), Fraction(-k, den)):
                if s not in seen:
                    seen.add(s)
                    yield s
            k += 1


def antisymmetric_pencil_escape(P, Y, budget=None):
    """First t (doubling, then finer rational steps) with P + tY not diagonalizable over R."""
    _require_rational(P)
    _require_rational(Y)
    if Y.transpose() != -Y:
        raise PreconditionError("Y is not antisymmetric")
    if Y.is_zero():
        raise PreconditionError("Y must be nonzero")
    budget = escape_budget(P) if budget is None else Fraction(budget)
    tried = 0
    for t in _escape_schedule(budget):
        tried += 1
        m = P + Y.scale(t)
        rep = is_diagonalizable_real(m)
        if not rep.diagonalizable:
            return EscapeResult(t, m, rep, UPoly(char_poly_berkowitz(m).coeffs), tried)
    raise BudgetExhausted("no escape with |t| <= %s after %d values (not a proof of absence)"
                          % (budget, tried))


def antisymmetric_intersection(W):
    """Basis of W ∩ {antisymmetric matrices} for a rational linear space W."""
    if W.field != QQ:
        raise UsageError("expected a rational space")
    if not W.is_linear:
        raise UsageError("expected a linear space")
    if not W.basis:
        return []
    sym = [(z + z.transpose()).flatten() for z in W.basis]
    cols = Matrix([[v[r] for v in sym] for r in range(W.n * W.n)], QQ)
    out = []
    for c in nullspace(cols):
        m = zeros(W.n)
        for coef, z in zip(c, W.basis):
            if coef != 0:
                m = m + z.scale(coef)
        out.append(m)
    return out
