"""Sparse multivariate polynomials over a scalar field, plus randomized identity testing.

A :class:`MultiPoly` is a dict from exponent tuples to nonzero coefficients.
Zero coefficients are never stored, so two polynomials are equal exactly when
their dicts are equal and ``is_identically_zero`` is an emptiness check.

Over GF(p) that emptiness check is *formal* zero, which is stronger than
vanishing as a function: ``t**p - t`` is formally nonzero yet vanishes on all
of GF(p).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from .errors import FieldMismatchError, UsageError
from .scalars import QQ

__all__ = [
    "PolyRing",
    "MultiPoly",
    "is_identically_zero",
    "nonvanishing_point",
    "candidate_values",
    "PITResult",
    "schwartz_zippel_test",
]


class PolyRing:
    """The ring ``field[t1, ..., tn]``."""

    def __init__(self, field, nvars, names=None):
        if nvars < 0:
            raise UsageError("negative parameter count")
        self.field = field
        self.nvars = nvars
        self.names = tuple(names) if names is not None else tuple(
            "t%d" % (k + 1) for k in range(nvars))
        if len(self.names) != nvars:
            raise UsageError("need %d parameter names" % nvars)
        self.characteristic = field.characteristic
        self._zero_exp = (0,) * nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.nvars == other.nvars)

    def __hash__(self):
        return hash((self.field, self.nvars))

    def __repr__(self):
        return "%s[%s]" % (self.field.name, ", ".join(self.names))

    @property
    def name(self):
        return repr(self)

    def const(self, c):
        c = self.field.strict(c)
        return MultiPoly(self, {self._zero_exp: c} if c != 0 else {}, _clean=True)

    def __call__(self, value):
        if isinstance(value, MultiPoly):
            if value.ring != self:
                raise FieldMismatchError("polynomial from %r given to %r" % (value.ring, self))
            return value
        return self.const(value)

    strict = __call__

    @property
    def zero(self):
        return MultiPoly(self, {}, _clean=True)

    @property
    def one(self):
        return self.const(1)

    def gen(self, k):
        exp = [0] * self.nvars
        exp[k] = 1
        return MultiPoly(self, {tuple(exp): self.field.one}, _clean=True)

    def gens(self):
        return [self.gen(k) for k in range(self.nvars)]

    def is_zero(self, p):
        return not p.terms

    def conj(self, p):
        return p.conjugate()


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            self.terms = {}
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != ring.nvars:
                    raise UsageError("exponent %r has wrong length for %r" % (exp, ring))
                c = ring.field.strict(c)
                if c != 0:
                    self.terms[exp] = c

    def _other(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise FieldMismatchError("%r vs %r" % (self.ring, other.ring))
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._other(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp)
            if s is None:
                terms[exp] = c
            else:
                s = s + c
                if s == 0:
                    del terms[exp]
                else:
                    terms[exp] = s
        return MultiPoly(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.ring.field.strict(other)
            if c == 0:
                return self.ring.zero
            return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()}, _clean=True)
        other = self._other(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly(self.ring, {e: c for e, c in terms.items() if c != 0}, _clean=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division by a scalar only.
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise UsageError("polynomial division is not supported")
            other = other.constant_term()
        inv = 1 / self.ring.field.strict(other)
        return self * inv

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if type(other) is int and other == 0:
            return not self.terms
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or isinstance(other, self.ring.field.element_type):
            try:
                return self.terms == self.ring.const(other).terms
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var):
        return max((e[var] for e in self.terms), default=-1)

    def conjugate(self):
        """Conjugate the coefficients, treating every parameter as real."""
        return MultiPoly(self.ring, {e: c.conjugate() for e, c in self.terms.items()}, _clean=True)

    def evaluate(self, point):
        """Value at a full point of ``field**nvars``."""
        if len(point) != self.ring.nvars:
            raise UsageError("expected %d coordinates, got %d" % (self.ring.nvars, len(point)))
        field = self.ring.field
        pt = [field.strict(x) for x in point]
        powers = [{0: field.one} for _ in pt]
        total = field.zero
        for exp, c in self.terms.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = pt[k] ** e
                    term = term * cache[e]
            total = total + term
        return total

    __call__ = evaluate

    def substitute(self, var, value):
        """Set parameter ``var`` to the scalar ``value``; the ring is unchanged."""
        value = self.ring.field.strict(value)
        terms = {}
        for exp, c in self.terms.items():
            e = exp[var]
            if e:
                c = c * value ** e
                exp = exp[:var] + (0,) + exp[var + 1:]
            s = terms.get(exp)
            terms[exp] = c if s is None else s + c
        return MultiPoly(self.ring, {e: c for e, c in terms.items() if c != 0}, _clean=True)

    def __repr__(self):
        return "MultiPoly(%s)" % self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(self.ring.names, exp) if e)
            cs = self.ring.field.format(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("(%s)*%s" % (cs, mono))
        return " + ".join(parts).replace("+ -", "- ")


def is_identically_zero(p):
    """Formal zero test. Over GF(p) this is NOT the same as vanishing everywhere."""
    return not p.terms


def candidate_values(count):
    """``0, 1, -1, 2, -2, ...``: the first ``count`` small integers by magnitude."""
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out[:count]


def nonvanishing_point(p, values=None):
    """Deterministic point where a nonzero polynomial over an infinite field is nonzero.

    Parameters are fixed one at a time.  After fixing earlier ones, the
    remainder is a nonzero polynomial in the current parameter of degree d, so
    at most d of any d+1 distinct candidates can kill it.  Candidates run
    through ``0, 1, -1, 2, -2, ...``, so a point in ``{-2..2}^h`` is
    returned whenever the degree structure allows it.
    """
    if not p.terms:
        raise UsageError("the zero polynomial vanishes everywhere")
    if p.ring.field.is_finite:
        raise UsageError("nonvanishing_point needs an infinite field")
    point = []
    g = p
    for var in range(p.ring.nvars):
        d = g.degree(var)
        cands = values if values is not None else candidate_values(max(d, 0) + 1)
        for v in cands:
            g2 = g.substitute(var, v)
            if g2.terms:
                point.append(v)
                g = g2
                break
        else:
            raise UsageError("candidate list too short for degree %d" % d)
    return tuple(point)


@dataclass(frozen=True)
class PITResult:
    verdict: str                         # "zero-with-confidence" | "nonzero"
    trials: int
    sample_size: int
    degree_bound: int
    failure_probability: Fraction        # (d/S)^trials; 0 when a witness was found
    witness: Optional[Tuple[Any, ...]] = None
    value: Any = None

    @property
    def is_zero(self):
        return self.verdict == "zero-with-confidence"


def _is_nonzero_value(v):
    if isinstance(v, (list, tuple)):
        return any(_is_nonzero_value(x) for x in v)
    if hasattr(v, "rows"):
        return not v.is_zero()
    return v != 0


def schwartz_zippel_test(expr, nvars, degree, trials=20, sample_size=None, field=QQ, seed=0):
    """Randomized zero test for a polynomial expression given only by evaluation.

    ``expr`` is a :class:`MultiPoly` or any callable mapping a point (tuple of
    field elements) to a scalar, a sequence of scalars, or a matrix; the
    expression counts as nonzero at a point if any component is nonzero.
    ``degree`` must bound the total degree of every component.

    A nonzero evaluation is a proof of nonzeroness.  If every trial vanishes
    the chance that a nonzero expression slipped through is at most
    ``(degree / sample_size) ** trials``.  Points are drawn from
    ``{1, ..., sample_size}`` with one PRNG stream per trial.
    """
    if sample_size is None:
        sample_size = max(100, 2 * degree + 1)
    if sample_size <= degree:
        raise UsageError("sample set size %d must exceed degree bound %d" % (sample_size, degree))
    if field.is_finite and sample_size > field.order:
        raise UsageError("sample set larger than %s" % field.name)
    if trials < 1:
        raise UsageError("need at least one trial")
    evaluate = expr.evaluate if isinstance(expr, MultiPoly) else expr
    for trial in range(trials):
        rng = random.Random("%d:%d" % (seed, trial))
        point = tuple(field(rng.randint(1, sample_size)) for _ in range(nvars))
        value = evaluate(point)
        if _is_nonzero_value(value):
            return PITResult("nonzero", trial + 1, sample_size, degree,
                             Fraction(0), point, value)
    return PITResult("zero-with-confidence", trials, sample_size, degree,
                     Fraction(degree, sample_size) ** trials)
