"""Dense exact matrices over a scalar field or a polynomial ring.

Entries live in a *ring* object: one of the fields from :mod:`matspace.scalars`
or a :class:`~matspace.poly.PolyRing`.  Matrices are immutable.  Indices are
0-based throughout, so the elementary matrix usually written E_{1,2} is
``unit(n, 0, 1)``.

The characteristic polynomial convention is ``det(x*I - A)``.
"""

import json
from dataclasses import dataclass
from typing import Any, Tuple

from .errors import FieldMismatchError, UsageError
from .poly import PolyRing
from .scalars import QQ, QQI, Field, field_from_tag

__all__ = [
    "Matrix",
    "CharPoly",
    "unit",
    "identity",
    "zeros",
    "diag",
    "jordan_block",
    "s2",
    "trace",
    "char_poly_berkowitz",
    "char_poly_faddeev",
    "char_poly",
    "is_nilpotent",
    "is_normal",
    "rank",
    "rref",
    "nullspace",
    "det",
    "inverse",
    "Echelon",
]


class Matrix:
    """An immutable ``nrows x ncols`` matrix with entries in ``ring``."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, rows, ring=QQ):
        conv = ring.strict
        self.ring = ring
        self.rows = tuple(tuple(conv(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise UsageError("ragged matrix rows")

    @classmethod
    def _raw(cls, rows, ring):
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def from_flat(cls, values, nrows, ncols=None, ring=QQ):
        ncols = nrows if ncols is None else ncols
        values = list(values)
        if len(values) != nrows * ncols:
            raise UsageError("need %d values, got %d" % (nrows * ncols, len(values)))
        return cls([values[i * ncols:(i + 1) * ncols] for i in range(nrows)], ring)

    @classmethod
    def column(cls, values, ring=QQ):
        return cls([[v] for v in values], ring)

    # -- shape and access ------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def n(self):
        if not self.is_square:
            raise UsageError("matrix is %dx%d, not square" % self.shape)
        return self.nrows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def flatten(self):
        """Row-major tuple of entries."""
        return tuple(x for r in self.rows for x in r)

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    @property
    def is_field_matrix(self):
        return isinstance(self.ring, Field)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise UsageError("expected a Matrix, got %r" % type(other).__name__)
        if other.ring != self.ring:
            raise FieldMismatchError("matrices over %r and %r" % (self.ring, other.ring))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise UsageError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ring)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise UsageError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ring)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ring)

    def scale(self, c):
        c = self.ring.strict(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ring)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            raise UsageError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise UsageError("cannot multiply %s by %s" % (self.shape, other.shape))
        zero = self.ring.zero
        cols = [other.col(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = zero
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), self.ring)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = identity(self.n, self.ring), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self):
        return Matrix._raw(tuple(zip(*self.rows)) if self.rows else (), self.ring)

    @property
    def T(self):
        return self.transpose()

    def conjugate(self):
        return Matrix._raw(tuple(tuple(a.conjugate() for a in r) for r in self.rows), self.ring)

    def conj_transpose(self):
        """A* (plain transpose over Q and GF(p))."""
        return self.conjugate().transpose()

    @property
    def H(self):
        return self.conj_transpose()

    def map(self, f, ring):
        """Entrywise conversion into another ring."""
        return Matrix([[f(x) for x in r] for r in self.rows], ring)

    def over(self, ring):
        """Explicit change of ring, e.g. ``m.over(QQI)`` or ``m.over(PolyRing(QQ, 2))``."""
        if ring == self.ring:
            return self
        if isinstance(ring, PolyRing):
            base = self if ring.field == self.ring else self.over(ring.field)
            return Matrix._raw(tuple(tuple(ring.const(x) for x in r) for r in base.rows), ring)
        return Matrix([[ring(x) for x in r] for r in self.rows], ring)

    def evaluate(self, point):
        """Substitute a parameter point into a polynomial matrix."""
        if not isinstance(self.ring, PolyRing):
            raise UsageError("evaluate needs a polynomial matrix")
        field = self.ring.field
        pt = tuple(field.strict(x) for x in point)
        return Matrix._raw(tuple(tuple(x.evaluate(pt) for x in r) for r in self.rows), field)

    # -- scalar invariants (delegating) ---------------------------------

    def trace(self):
        return trace(self)

    def s2(self):
        return s2(self)

    def det(self):
        return det(self)

    def rank(self):
        return rank(self)

    def char_poly(self):
        return char_poly(self)

    # -- comparison / io -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return "Matrix(%s, %r)" % ([[str(x) for x in r] for r in self.rows], self.ring)

    def __str__(self):
        fmt = self.ring.format if isinstance(self.ring, Field) else str
        cells = [[fmt(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def to_json(self):
        if not isinstance(self.ring, Field):
            raise UsageError("only scalar matrices serialize to JSON")
        if not self.is_square:
            raise UsageError("matrix JSON describes square matrices")
        return {"field": self.ring.name, "n": self.nrows,
                "entries": [[self.ring.format(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            field = field_from_tag(obj["field"])
            n = int(obj["n"])
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise UsageError("malformed matrix JSON: %s" % exc) from exc
        if len(entries) != n or any(len(r) != n for r in entries):
            raise UsageError("matrix JSON entries are not %dx%d" % (n, n))
        return cls([[field.parse(str(x)) for x in r] for r in entries], field)

    def to_numpy(self):
        import numpy as np
        if self.ring == QQ:
            return np.array([[float(x) for x in r] for r in self.rows], dtype=float)
        if self.ring == QQI:
            return np.array([[complex(x) for x in r] for r in self.rows], dtype=complex)
        raise UsageError("to_numpy supports Q and Q(i) only")


# -- constructors -----------------------------------------------------------

def zeros(n, m=None, ring=QQ):
    m = n if m is None else m
    z = ring.zero
    return Matrix._raw(tuple((z,) * m for _ in range(n)), ring)


def identity(n, ring=QQ):
    z, o = ring.zero, ring.one
    return Matrix._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring)


def unit(n, i, j, ring=QQ):
    """The elementary matrix with a single 1 at (i, j), 0-based."""
    if not (0 <= i < n and 0 <= j < n):
        raise UsageError("index (%d, %d) outside %dx%d" % (i, j, n, n))
    z, o = ring.zero, ring.one
    return Matrix._raw(tuple(tuple(o if (r, c) == (i, j) else z for c in range(n))
                             for r in range(n)), ring)


def diag(values, ring=QQ):
    values = [ring.strict(v) for v in values]
    n = len(values)
    z = ring.zero
    return Matrix._raw(tuple(tuple(values[i] if i == j else z for j in range(n))
                             for i in range(n)), ring)


def jordan_block(n, eigenvalue=0, ring=QQ):
    rows = [[eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(n)]
            for i in range(n)]
    return Matrix(rows, ring)


# -- invariants -------------------------------------------------------------

def trace(m):
    s = m.ring.zero
    for i in range(m.n):
        s = s + m.rows[i][i]
    return s


def s2(m):
    """Sum of the 2x2 principal minors."""
    n = m.n
    r = m.rows
    s = m.ring.zero
    for i in range(n):
        for j in range(i + 1, n):
            s = s + (r[i][i] * r[j][j] - r[i][j] * r[j][i])
    return s


@dataclass(frozen=True)
class CharPoly:
    """Monic ``det(x*I - A)``; ``coeffs[k]`` multiplies ``x**k``."""

    ring: Any
    coeffs: Tuple[Any, ...]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k]

    def is_pure_power(self):
        """True iff the polynomial is exactly x**n."""
        return all(c == 0 for c in self.coeffs[:-1])

    def nonzero_lower(self):
        """Indices k < n with a nonzero coefficient."""
        return [k for k, c in enumerate(self.coeffs[:-1]) if c != 0]

    def evaluate(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if isinstance(self.ring, Field):
            fmt = self.ring.format
        else:
            def fmt(c):
                return "(%s)" % c if len(c.terms) > 1 else str(c)
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else "x^%d" % k)
            cs = fmt(c)
            if mono and cs == "1":
                parts.append(mono)
            elif mono and cs == "-1":
                parts.append("-" + mono)
            elif mono:
                parts.append("%s*%s" % (cs, mono))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def char_poly_berkowitz(m):
    """Characteristic polynomial without divisions (any commutative ring).

    Grows the leading principal submatrix one row/column at a time.  With
    ``A_{r+1} = [[A_r, C], [R, a]]`` the new polynomial is the old one times
    the lower-triangular Toeplitz matrix whose first column is
    ``1, -a, -R C, -R A_r C, ..., -R A_r^{r-1} C``.
    """
    n = m.n
    ring = m.ring
    rows = m.rows
    zero, one = ring.zero, ring.one
    q = [one]  # highest degree first
    for r in range(n):
        a = rows[r][r]
        col = [rows[i][r] for i in range(r)]
        row = [rows[r][j] for j in range(r)]
        t = [one, -a]
        v = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, v):
                if x != 0 and y != 0:
                    s = s + x * y
            t.append(-s)
            nv = []
            for i in range(r):
                acc = zero
                ri = rows[i]
                for j in range(r):
                    if ri[j] != 0 and v[j] != 0:
                        acc = acc + ri[j] * v[j]
                nv.append(acc)
            v = nv
        p = []
        for k in range(r + 2):
            acc = zero
            for j in range(max(0, k - len(t) + 1), min(k, r) + 1):
                if t[k - j] != 0 and q[j] != 0:
                    acc = acc + t[k - j] * q[j]
            p.append(acc)
        q = p
    return CharPoly(ring, tuple(reversed(q)))


def char_poly_faddeev(m):
    """Faddeev-LeVerrier recursion; needs division by 1..n, so characteristic 0 only."""
    if m.ring.characteristic != 0:
        raise UsageError("Faddeev-LeVerrier needs characteristic 0, got %r" % m.ring)
    n = m.n
    ring = m.ring
    coeffs = [ring.zero] * (n + 1)
    coeffs[n] = ring.one
    eye = identity(n, ring)
    mk = zeros(n, n, ring)
    for k in range(1, n + 1):
        mk = m @ mk + eye.scale(coeffs[n - k + 1])
        coeffs[n - k] = -trace(m @ mk) / k
    return CharPoly(ring, tuple(coeffs))


char_poly = char_poly_berkowitz


def is_nilpotent(m):
    """chi(x) == x**n, cross-checked against m**n == 0."""
    if not m.is_field_matrix:
        raise UsageError("is_nilpotent needs scalar entries; certify polynomial matrices instead")
    by_chi = char_poly_berkowitz(m).is_pure_power()
    by_power = (m ** m.n).is_zero()
    if by_chi != by_power:
        raise RuntimeError("nilpotency tests disagree on\n%s" % m)
    return by_chi


def is_normal(m):
    if isinstance(m.ring, Field) and m.ring.is_finite:
        raise UsageError("normality is undefined over %s" % m.ring.name)
    if not m.is_square:
        raise UsageError("normality needs a square matrix")
    h = m.conj_transpose()
    return (m @ h - h @ m).is_zero()


# -- elimination over a field -----------------------------------------------

def _require_field(m):
    if not isinstance(m.ring, Field):
        raise UsageError("elimination needs entries in a field, not %r" % m.ring)


def rref(m):
    """Reduced row echelon form and pivot columns."""
    _require_field(m)
    a = [list(r) for r in m.rows]
    pivots = []
    row = 0
    for c in range(m.ncols):
        if row == m.nrows:
            break
        p = next((i for i in range(row, m.nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        inv = 1 / a[row][c]
        a[row] = [x * inv for x in a[row]]
        for i in range(m.nrows):
            if i != row and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(c)
        row += 1
    return Matrix._raw(tuple(tuple(r) for r in a), m.ring), tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def nullspace(m):
    """Basis of {v : m v = 0} as a list of tuples."""
    r, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    zero, one = m.ring.zero, m.ring.one
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -r.rows[i][f]
        basis.append(tuple(v))
    return basis


def det(m):
    n = m.n
    if not isinstance(m.ring, Field):
        c0 = char_poly_berkowitz(m).coeffs[0]
        return c0 if n % 2 == 0 else -c0
    a = [list(r) for r in m.rows]
    result = m.ring.one
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return m.ring.zero
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        result = result * a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


class Echelon:
    """Incrementally maintained echelon basis of row vectors.

    ``add`` keeps a vector only if it is independent of those already kept
    (first come, first kept) and remembers how each echelon row combines the
    kept vectors, so ``solve`` returns coordinates in terms of them.
    """

    def __init__(self, field, length):
        self.field = field
        self.length = length
        self.rows = []      # (pivot, row, combo) with row[pivot] == 1
        self.kept = 0

    def _reduce(self, v):
        v = [self.field(x) for x in v]
        combo = [self.field.zero] * self.kept
        for pc, row, rc in self.rows:
            f = v[pc]
            if f != 0:
                v = [x - f * y for x, y in zip(v, row)]
                for k, c in enumerate(rc):
                    if c != 0:
                        combo[k] = combo[k] - f * c
        return v, combo

    def add(self, v):
        v, combo = self._reduce(v)
        pc = next((i for i, x in enumerate(v) if x != 0), None)
        if pc is None:
            return False
        inv = 1 / v[pc]
        combo = [c * inv for c in combo] + [inv]
        for _, _, rc in self.rows:
            rc.append(self.field.zero)
        self.rows.append((pc, [x * inv for x in v], combo))
        self.kept += 1
        return True

    def contains(self, v):
        v, _ = self._reduce(v)
        return all(x == 0 for x in v)

    def solve(self, v):
        """Coordinates of ``v`` in the kept vectors, or None if outside their span."""
        r, combo = self._reduce(v)
        if any(x != 0 for x in r):
            return None
        return tuple(-c for c in combo)

    @property
    def rank(self):
        return self.kept


def inverse(m):
    _require_field(m)
    n = m.n
    aug = Matrix._raw(tuple(r + identity(n, m.ring).rows[i] for i, r in enumerate(m.rows)), m.ring)
    r, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix._raw(tuple(row[n:] for row in r.rows), m.ring)
