"""Affine subspaces S = P + span(Z_1, ..., Z_h) of n x n matrices.

Matrices are flattened row-major whenever they are treated as vectors of
length n*n; membership, pruning and dimension all use that convention.

The dimension of S is the dimension of its direction space.  When the base
point lies in the direction space, S is linear and the base is stored as 0.
"""

import itertools
import json
import random
from dataclasses import dataclass
from typing import Tuple

from .errors import FieldMismatchError, ResourceError, UsageError
from .matrix import Echelon, Matrix, zeros
from .poly import MultiPoly, PolyRing
from .scalars import Field, field_from_tag

__all__ = [
    "AffineSubspace",
    "make_subspace",
    "membership",
    "coordinates",
    "generic_element",
    "span_with_base",
    "enumerate_space",
    "element_at",
    "restrict",
    "recombine",
    "subspace_to_json",
    "subspace_from_json",
    "DEFAULT_ENUMERATION_CAP",
]

DEFAULT_ENUMERATION_CAP = 10 ** 6


@dataclass(frozen=True)
class AffineSubspace:
    field: Field
    n: int
    base: Matrix
    basis: Tuple[Matrix, ...]
    is_linear: bool

    @property
    def dim(self):
        return len(self.basis)

    def element(self, coeffs):
        """P + sum(c_k Z_k)."""
        if len(coeffs) != self.dim:
            raise UsageError("expected %d coefficients, got %d" % (self.dim, len(coeffs)))
        m = self.base
        for c, z in zip(coeffs, self.basis):
            c = self.field.strict(c)
            if c != 0:
                m = m + z.scale(c)
        return m

    def direction(self):
        """The linear space Z."""
        return AffineSubspace(self.field, self.n, zeros(self.n, ring=self.field),
                              self.basis, True)

    def __contains__(self, m):
        return membership(self, m)


def _echelon_of(basis, field, n):
    ech = Echelon(field, n * n)
    for z in basis:
        ech.add(z.flatten())
    return ech


def make_subspace(base, generators=(), field=None):
    """Canonical affine subspace spanned from ``base`` by ``generators``.

    Dependent generators are dropped, keeping the earliest ones.
    """
    generators = list(generators)
    if base is None:
        if not generators:
            raise UsageError("need a base point or at least one generator")
        base = zeros(generators[0].n, ring=generators[0].ring)
    field = base.ring if field is None else field
    if not isinstance(field, Field):
        raise UsageError("subspaces live over a scalar field, not %r" % (field,))
    n = base.n
    for m in [base] + generators:
        if m.ring != field:
            raise FieldMismatchError("mixed fields: %r and %r" % (m.ring, field))
        if m.shape != (n, n):
            raise UsageError("mixed sizes: %s vs %dx%d" % (m.shape, n, n))
    ech = Echelon(field, n * n)
    kept = [z for z in generators if ech.add(z.flatten())]
    is_linear = ech.contains(base.flatten())
    if is_linear:
        base = zeros(n, ring=field)
    return AffineSubspace(field, n, base, tuple(kept), is_linear)


def coordinates(S, m):
    """Coefficients c with m = P + sum c_k Z_k, or None if m is not in S."""
    if m.ring != S.field or m.shape != (S.n, S.n):
        raise UsageError("matrix does not live in the ambient space of S")
    return _echelon_of(S.basis, S.field, S.n).solve((m - S.base).flatten())


def membership(S, m):
    return coordinates(S, m) is not None


def generic_element(S, names=None):
    """The matrix P + t_1 Z_1 + ... + t_h Z_h over ``field[t_1..t_h]``."""
    h = S.dim
    ring = PolyRing(S.field, h, names)
    rows = []
    for i in range(S.n):
        row = []
        for j in range(S.n):
            terms = {}
            p = S.base.rows[i][j]
            if p != 0:
                terms[(0,) * h] = p
            for k, z in enumerate(S.basis):
                c = z.rows[i][j]
                if c != 0:
                    exp = [0] * h
                    exp[k] = 1
                    terms[tuple(exp)] = c
            row.append(MultiPoly(ring, terms, _clean=True))
        rows.append(tuple(row))
    return Matrix._raw(tuple(rows), ring)


def span_with_base(S):
    """The linear span of P and Z."""
    if S.is_linear:
        return S
    return make_subspace(zeros(S.n, ring=S.field), [S.base] + list(S.basis))


def _check_enumerable(S, cap):
    if not S.field.is_finite:
        raise UsageError("enumeration needs a finite field, not %s" % S.field.name)
    size = S.field.order ** S.dim
    if size > cap:
        raise ResourceError("%s has %d^%d = %d elements, over the cap of %d"
                            % (S.field.name, S.field.order, S.dim, size, cap))
    return size


def element_at(S, index):
    """Element number ``index`` in enumeration order (first parameter slowest)."""
    p = S.field.order
    digits = []
    for _ in range(S.dim):
        index, d = divmod(index, p)
        digits.append(d)
    coeffs = tuple(reversed(digits))
    return coeffs, S.element(coeffs)


def enumerate_space(S, cap=DEFAULT_ENUMERATION_CAP, start=0, stop=None):
    """Yield ``(coefficients, matrix)`` for every element of S over GF(p).

    ``start``/``stop`` select a slice of the enumeration order so chunks can be
    processed independently.
    """
    size = _check_enumerable(S, cap)
    stop = size if stop is None else min(stop, size)
    if start == 0 and stop == size:
        p = S.field.order
        for coeffs in itertools.product(range(p), repeat=S.dim):
            yield coeffs, S.element(coeffs)
        return
    for idx in range(start, stop):
        yield element_at(S, idx)


def restrict(S, keep):
    """Sub-space with the same base and only the basis vectors at indices ``keep``."""
    base = S.base
    return make_subspace(base, [S.basis[k] for k in keep])


def recombine(S, rng=None, bound=3):
    """Same space, new basis: a random invertible recombination of the old one."""
    rng = rng or random.Random()
    h = S.dim
    while True:
        coeffs = [[S.field.random_element(rng, bound) for _ in range(h)] for _ in range(h)]
        new = []
        for row in coeffs:
            m = zeros(S.n, ring=S.field)
            for c, z in zip(row, S.basis):
                m = m + z.scale(c)
            new.append(m)
        T = make_subspace(S.base, new)
        if T.dim == h:
            return T


def subspace_to_json(S):
    return {"field": S.field.name, "n": S.n, "base": S.base.to_json(),
            "generators": [z.to_json() for z in S.basis]}


def subspace_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise UsageError("subspace JSON must be an object")
    for key in ("field", "n", "base", "generators"):
        if key not in obj:
            raise UsageError("subspace JSON is missing %r" % key)
    field = field_from_tag(obj["field"])
    n = obj["n"]
    base = Matrix.from_json(obj["base"])
    gens = []
    for k, g in enumerate(obj["generators"]):
        try:
            gens.append(Matrix.from_json(g))
        except UsageError as exc:
            raise UsageError("generators[%d]: %s" % (k, exc)) from exc
    for where, m in [("base", base)] + [("generators[%d]" % k, g) for k, g in enumerate(gens)]:
        if m.ring != field or m.n != n:
            raise UsageError("%s does not match field %s / n=%d" % (where, field.name, n))
    return make_subspace(base, gens)
