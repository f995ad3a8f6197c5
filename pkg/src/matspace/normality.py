"""Normal-matrix spaces: two independent certificates, and simultaneous diagonalization.

A space is read with *complex* parameters by default, S = P + span_C(Z), which
is the setting of the dimension bound dim S <= n.  ``parameters="real"``
instead reads S = P + span_R(Z); real symmetric matrices show that the bound
does not apply there, so it is reported as not applicable.

The symbolic certificate expands G G* - G* G for the generic element G.  The
pairwise certificate checks the finitely many matrix identities that the
coefficients of that expansion reduce to:

* base:      P P* = P* P
* direction: A_k A_k* = A_k* A_k
* cross:     A_k P* + P A_k* = P* A_k + A_k* P           (real and complex)
             A_k P* = P* A_k                               (complex only)
* pair:      [A_j, A_k*] + [A_k, A_j*] = 0                 (real)
             [A_j, A_k*] = [A_k, A_j*] = 0                 (complex)
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Optional, Tuple

from .errors import (
    NotSimultaneouslyDiagonalizable,
    PreconditionError,
    UsageError,
)
from .matrix import Matrix, char_poly_berkowitz, identity, inverse, is_normal, nullspace
from .poly import PolyRing, nonvanishing_point
from .reports import Counterexample, make_report
from .scalars import QQ, QQI, Gaussian
from .subspace import make_subspace
from .upoly import UPoly

__all__ = [
    "NormalityCert",
    "certify_normal",
    "direction_space_normal",
    "pairwise_commutation_check",
    "EigenRefinement",
    "simultaneous_diagonalize",
    "exact_eigen_failures",
    "max_residual",
    "gaussian_eigenvalues",
    "DiagonalizationResult",
    "normal_space_to_diagonal",
    "diagonal_space",
    "circulant_space",
    "cyclic_shift",
    "symmetric_circulant_affine",
]

PARAMETERS = ("complex", "real")
I = Gaussian(0, 1)


def _lift(m):
    if m.ring == QQI:
        return m
    if m.ring == QQ:
        return m.over(QQI)
    raise UsageError("normality is defined over Q or Q(i), not %r" % (m.ring,))


def _comm(a, b):
    return a @ b - b @ a


@dataclass(frozen=True)
class NormalityCert:
    verdict: str                     # "all-normal" | "counterexample"
    method: str                      # "symbolic" | "pairwise-certificate"
    parameters: str
    n: int
    field: str
    dim: int
    is_linear: bool
    failing_identity: Optional[str] = None
    counterexample: Optional[Counterexample] = None
    notes: Tuple[str, ...] = dc_field(default=())

    @property
    def holds(self):
        return self.verdict == "all-normal"

    @property
    def bound(self):
        return self.n

    @property
    def bound_applicable(self):
        return self.parameters == "complex"

    @property
    def bound_satisfied(self):
        if not self.bound_applicable:
            return None
        return self.dim <= self.n

    def to_report(self, command="certify", seed=0):
        details = {"parameters": self.parameters, "bound_applicable": self.bound_applicable}
        if self.failing_identity:
            details["failing_identity"] = self.failing_identity
        return make_report(
            command, self.verdict, property="normal", method=self.method, seed=seed,
            n=self.n, field=self.field, dim=self.dim, is_linear=self.is_linear,
            bound=self.n, bound_satisfied=self.bound_satisfied,
            counterexample=self.counterexample, notes=list(self.notes), details=details)


def _generic(S, parameters):
    P = _lift(S.base)
    Z = [_lift(z) for z in S.basis]
    h = len(Z)
    if parameters == "complex":
        names = [s % (k + 1) for k in range(h) for s in ("x%d", "y%d")]
        ring = PolyRing(QQI, 2 * h, names)
        coeffs = []
        for k in range(h):
            x, y = ring.gen(2 * k), ring.gen(2 * k + 1)
            coeffs.append(x + y * I)
    else:
        ring = PolyRing(QQI, h)
        coeffs = ring.gens()
    G = P.over(ring)
    for c, z in zip(coeffs, Z):
        G = G + z.over(ring).scale(c)
    return G


def _point_to_coeffs(point, parameters):
    if parameters == "complex":
        return tuple(Gaussian(point[2 * k], point[2 * k + 1])
                     for k in range(len(point) // 2))
    return tuple(point)


def _symbolic(S, parameters):
    G = _generic(S, parameters)
    H = G.conj_transpose()
    D = G @ H - H @ G
    for row in D.rows:
        for f in row:
            if f.terms:
                point = nonvanishing_point(f)
                coeffs = _point_to_coeffs(point, parameters)
                return coeffs
    return None


def _pairwise(S, parameters):
    """First failing identity (tag, witness coefficients) or None."""
    P = _lift(S.base)
    Z = [_lift(z) for z in S.basis]
    h = len(Z)
    Ph = P.H
    Zh = [z.H for z in Z]
    zero = (Gaussian(0),) * h

    def e(k, c=1, j=None, d=1):
        v = list(zero)
        v[k] = QQI(c) if not isinstance(c, Gaussian) else c
        if j is not None:
            v[j] = QQI(d) if not isinstance(d, Gaussian) else d
        return tuple(v)

    if not _comm(P, Ph).is_zero():
        return "base-normality", zero
    for k, (a, ah) in enumerate(zip(Z, Zh)):
        if not _comm(a, ah).is_zero():
            return "direction-normality(A%d)" % (k + 1), [e(k, 1), e(k, -1)]
    for k, (a, ah) in enumerate(zip(Z, Zh)):
        x = a @ Ph - Ph @ a
        y = P @ ah - ah @ P
        if not (x + y).is_zero():
            return "cross(P,A%d)" % (k + 1), [e(k, 1)]
        if parameters == "complex" and not x.is_zero():
            return "cross(P,A%d)" % (k + 1), [e(k, 1), e(k, I)]
    for j in range(h):
        for k in range(j + 1, h):
            x = Z[j] @ Zh[k] - Zh[k] @ Z[j]
            y = Z[k] @ Zh[j] - Zh[j] @ Z[k]
            if not (x + y).is_zero():
                return "pair(A%d,A%d)" % (j + 1, k + 1), [e(j, 1, k, 1)]
            if parameters == "complex" and not x.is_zero():
                return "pair(A%d,A%d)" % (j + 1, k + 1), [e(j, 1, k, 1), e(j, 1, k, I)]
    return None


def certify_normal(S, method="symbolic", parameters="complex"):
    """Decide whether every element of S is normal.

    ``method`` is ``"symbolic"`` or ``"pairwise"``; they must agree.
    """
    if S.field.is_finite:
        raise UsageError("normality is undefined over %s" % S.field.name)
    if parameters not in PARAMETERS:
        raise UsageError("parameters must be one of %s" % (PARAMETERS,))
    common = dict(parameters=parameters, n=S.n, field=S.field.name, dim=S.dim,
                  is_linear=S.is_linear)
    notes = ()
    if parameters == "real":
        notes = ("real parameters: the dim <= n bound concerns complex spans and is not applied",)
    if method == "symbolic":
        coeffs = _symbolic(S, parameters)
        if coeffs is None:
            return NormalityCert("all-normal", "symbolic", notes=notes, **common)
        cex = _make_cex(S, coeffs, "G G* - G* G is nonzero here")
        # Label only; the verdict above does not depend on it.
        fail = _pairwise(S, parameters)
        return NormalityCert("counterexample", "symbolic", counterexample=cex,
                             failing_identity=fail[0] if fail else None,
                             notes=notes, **common)
    if method == "pairwise":
        fail = _pairwise(S, parameters)
        if fail is None:
            return NormalityCert("all-normal", "pairwise-certificate", notes=notes, **common)
        tag, candidates = fail
        if isinstance(candidates, tuple):
            candidates = [candidates]
        cex = None
        for coeffs in candidates:
            m = _element(S, coeffs)
            if not is_normal(m):
                cex = Counterexample(coeffs, m, "fails %s" % tag)
                break
        if cex is None:
            raise RuntimeError("internal error: pairwise failure %s without witness" % tag)
        return NormalityCert("counterexample", "pairwise-certificate", failing_identity=tag,
                             counterexample=cex, notes=notes, **common)
    raise UsageError("method must be 'symbolic' or 'pairwise', got %r" % (method,))


def _element(S, coeffs):
    m = _lift(S.base)
    for c, z in zip(coeffs, S.basis):
        m = m + _lift(z).scale(QQI(c))
    return m


def _make_cex(S, coeffs, reason):
    m = _element(S, coeffs)
    if is_normal(m):
        raise RuntimeError("internal error: symbolic normality witness is normal")
    return Counterexample(coeffs, m, reason)


def direction_space_normal(S, parameters="complex"):
    """For all-normal S, re-certify the direction space Z on its own."""
    if not certify_normal(S, parameters=parameters).holds:
        raise UsageError("S is not certified all-normal")
    return certify_normal(S.direction(), parameters=parameters).holds


def pairwise_commutation_check(A, B):
    """Return (B A* - A* B, A B* - B* A); both vanish when A + zB is normal for z in {1, -1, i, -i}."""
    A, B = _lift(A), _lift(B)
    for name, m in (("A", A), ("B", B)):
        if not is_normal(m):
            raise PreconditionError("%s is not normal" % name)
    for z in (Gaussian(1), Gaussian(-1), I, -I):
        if not is_normal(A + B.scale(z)):
            raise PreconditionError("A + (%s)B is not normal" % z)
    return B @ A.H - A.H @ B, A @ B.H - B.H @ A


# -- simultaneous diagonalization ------------------------------------------

@dataclass(frozen=True)
class EigenRefinement:
    """Blocks V_1..V_k of a direct sum decomposition into common eigenspaces.

    ``blocks[j]`` is a tuple of column vectors; ``eigenvalues[i][j]`` is the
    eigenvalue of matrix i on block j.
    """

    mode: str
    n: int
    blocks: Tuple[Tuple[Any, ...], ...]
    eigenvalues: Tuple[Tuple[Any, ...], ...]

    def basis(self):
        return [v for b in self.blocks for v in b]

    def basis_matrix(self):
        vecs = self.basis()
        if self.mode == "exact":
            return Matrix([[v[i] for v in vecs] for i in range(self.n)], QQI)
        import numpy as np
        return np.column_stack(vecs)

    def to_json(self):
        if self.mode == "exact":
            blocks = [[[str(x) for x in v] for v in b] for b in self.blocks]
            eig = [[str(x) for x in row] for row in self.eigenvalues]
        else:
            blocks = [[[[float(x.real), float(x.imag)] for x in v] for v in b] for b in self.blocks]
            eig = [[[float(x.real), float(x.imag)] for x in row] for row in self.eigenvalues]
        return {"mode": self.mode, "n": self.n, "blocks": blocks, "eigenvalues": eig}


def _rationalize(z):
    """Gaussian rationals with small denominators near a complex float."""
    seen = []
    for d in (1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 30, 32, 48, 64, 100, 128, 256,
              1000, 10 ** 4, 10 ** 5, 10 ** 6):
        g = Gaussian(Fraction(z.real).limit_denominator(d), Fraction(z.imag).limit_denominator(d))
        if g not in seen:
            seen.append(g)
    return seen


def gaussian_eigenvalues(A):
    """Distinct eigenvalues of A, all of which must lie in Q(i); sorted by (re, im).

    Roots are located numerically on the squarefree part of the characteristic
    polynomial and then confirmed by exact evaluation; nothing unconfirmed is
    returned.
    """
    import numpy as np
    A = _lift(A)
    p = UPoly(char_poly_berkowitz(A).coeffs).squarefree_part()
    if p.degree == 0:
        return []
    approx = np.roots([complex(c) for c in reversed(p.coeffs)])
    roots = []
    for z in approx:
        for g in _rationalize(z):
            if p(g) == 0:
                if g not in roots:
                    roots.append(g)
                break
    if len(roots) != p.degree:
        raise UsageError("eigenvalues of this matrix are not all Gaussian rationals; "
                         "use numeric mode")
    return sorted(roots, key=lambda g: (g.re, g.im))


def _exact_refine(mats):
    n = mats[0].n
    blocks = [tuple(identity(n, QQI).col(j) for j in range(n))]
    vals = [()]
    for i, A in enumerate(mats):
        lams = gaussian_eigenvalues(A)
        new_blocks, new_vals = [], []
        for b, (W, v) in enumerate(zip(blocks, vals)):
            Wm = Matrix([[w[r] for w in W] for r in range(n)], QQI)
            found = 0
            for lam in lams:
                K = nullspace((A - identity(n, QQI).scale(lam)) @ Wm)
                if K:
                    vecs = tuple((Wm @ Matrix.column(c, QQI)).col(0) for c in K)
                    new_blocks.append(vecs)
                    new_vals.append(v + (lam,))
                    found += len(K)
            if found != len(W):
                raise NotSimultaneouslyDiagonalizable(
                    "matrix %d does not split block %d (dim %d) into eigenspaces; "
                    "only %d dimensions found" % (i, b, len(W), found),
                    matrix_index=i, block_index=b)
        blocks, vals = new_blocks, new_vals
    eig = tuple(tuple(v[i] for v in vals) for i in range(len(mats)))
    return EigenRefinement("exact", n, tuple(blocks), eig)


def _as_complex_array(m):
    import numpy as np
    if isinstance(m, Matrix):
        return _lift(m).to_numpy().astype(complex)
    return np.asarray(m, dtype=complex)


def _numeric_refine(mats, tol):
    import numpy as np
    arrs = [_as_complex_array(m) for m in mats]
    n = arrs[0].shape[0]
    scale = max(1.0, max(np.abs(a).max() for a in arrs))
    pre_tol = 1e-8 * scale * scale
    for i, a in enumerate(arrs):
        if np.abs(a @ a.conj().T - a.conj().T @ a).max() > pre_tol:
            raise NotSimultaneouslyDiagonalizable("matrix %d is not normal" % i, matrix_index=i)
        for j in range(i):
            if np.abs(a @ arrs[j] - arrs[j] @ a).max() > pre_tol:
                raise NotSimultaneouslyDiagonalizable(
                    "matrices %d and %d do not commute" % (j, i), matrix_index=i)
    cluster_tol = 1e-6 * scale
    blocks = [np.eye(n, dtype=complex)]
    for a in arrs:
        for herm in ((a + a.conj().T) / 2, (a - a.conj().T) / 2j):
            refined = []
            for Q in blocks:
                w, V = np.linalg.eigh(Q.conj().T @ herm @ Q)
                start = 0
                for k in range(1, len(w) + 1):
                    if k == len(w) or w[k] - w[k - 1] > cluster_tol:
                        refined.append(Q @ V[:, start:k])
                        start = k
            blocks = refined
    eig = tuple(tuple(complex(np.mean(np.diag(Q.conj().T @ a @ Q))) for Q in blocks)
                for a in arrs)
    vec_blocks = tuple(tuple(Q[:, k].copy() for k in range(Q.shape[1])) for Q in blocks)
    ref = EigenRefinement("numeric", n, vec_blocks, eig)
    worst = max_residual(ref, arrs)
    if worst > tol:
        raise NotSimultaneouslyDiagonalizable("numeric residual %.3g exceeds %.3g" % (worst, tol))
    return ref


def exact_eigen_failures(ref, mats):
    """Pairs (matrix index, basis index) where A v != lambda v exactly; [] for a valid basis."""
    bad = []
    for i, (A, lams) in enumerate(zip(mats, ref.eigenvalues)):
        A = _lift(A)
        k = 0
        for block, lam in zip(ref.blocks, lams):
            for v in block:
                col = Matrix.column(v, QQI)
                if A @ col != col.scale(lam):
                    bad.append((i, k))
                k += 1
    return bad


def max_residual(ref, mats):
    """max over matrices and basis vectors of ||A v - lambda v||_inf (unit v)."""
    import numpy as np
    worst = 0.0
    for a, lams in zip(mats, ref.eigenvalues):
        a = _as_complex_array(a)
        for block, lam in zip(ref.blocks, lams):
            for v in block:
                v = np.asarray([complex(x) for x in v])
                v = v / np.linalg.norm(v)
                worst = max(worst, float(np.abs(a @ v - lam * v).max()))
    return worst


def simultaneous_diagonalize(mats, mode="exact", tol=1e-9):
    """Common eigenbasis of a family of simultaneously diagonalizable matrices.

    Starts from one block (the whole space) and, matrix by matrix, splits every
    block W into the nonzero intersections of W with the eigenspaces of that
    matrix.  Blocks that do not split completely mean the family is not
    simultaneously diagonalizable.

    ``mode="exact"`` works over Q(i) and needs Gaussian-rational eigenvalues.
    ``mode="numeric"`` takes normal commuting matrices (numpy arrays or
    Matrix) and refines with the Hermitian parts (A + A*)/2, (A - A*)/2i.
    """
    mats = list(mats)
    if not mats:
        raise UsageError("need at least one matrix")
    if mode == "exact":
        return _exact_refine([_lift(m) for m in mats])
    if mode == "numeric":
        return _numeric_refine(mats, tol)
    raise UsageError("mode must be 'exact' or 'numeric'")


@dataclass(frozen=True)
class DiagonalizationResult:
    C: Matrix
    diagonals: Tuple[Tuple[Any, ...], ...]
    all_diagonal: bool
    refinement: EigenRefinement


def normal_space_to_diagonal(S, parameters="complex"):
    """Invertible C with C^-1 Z_k C diagonal for every basis matrix of an all-normal S."""
    if not certify_normal(S, parameters=parameters).holds:
        raise UsageError("S is not certified all-normal")
    basis = [_lift(z) for z in S.basis] or [identity(S.n, QQI)]
    ref = simultaneous_diagonalize(basis, mode="exact")
    C = ref.basis_matrix()
    Cinv = inverse(C)
    diagonals, ok = [], True
    for z in basis:
        d = Cinv @ z @ C
        ok = ok and all(d[i, j] == 0 for i in range(S.n) for j in range(S.n) if i != j)
        diagonals.append(tuple(d[i, i] for i in range(S.n)))
    return DiagonalizationResult(C, tuple(diagonals), ok, ref)


# -- standard spaces --------------------------------------------------------

def diagonal_space(n, field=QQ):
    from .matrix import unit, zeros
    return make_subspace(zeros(n, ring=field), [unit(n, i, i, field) for i in range(n)])


def cyclic_shift(n, field=QQ):
    return Matrix([[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)], field)


def circulant_space(n, field=QQ):
    """span{C^0, ..., C^(n-1)} for the cyclic shift C."""
    from .matrix import zeros
    c = cyclic_shift(n, field)
    return make_subspace(zeros(n, ring=field), [c ** k for k in range(n)])


def symmetric_circulant_affine():
    """E_11 + span{I, E_12 + E_21}: elements [[1+a, b], [b, a]], normal for real a, b."""
    from .matrix import unit
    return make_subspace(unit(2, 0, 0), [identity(2), unit(2, 0, 1) + unit(2, 1, 0)])
