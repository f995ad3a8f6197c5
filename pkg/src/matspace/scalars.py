"""Exact scalar fields: the rationals Q, the Gaussian rationals Q(i), and GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals and
prime-field residues get small immutable classes of their own.  All three
accept Python ``int`` operands (the prime subfield embeds everywhere), but
mixing two different fields raises :class:`FieldMismatchError`; conversion
between fields is done explicitly by calling the target field, e.g.
``QQI(Fraction(1, 2))``.

Every element has a ``conjugate()`` method, which is the identity except on
Q(i).
"""

import re
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError, UsageError

__all__ = [
    "Gaussian",
    "GF",
    "Field",
    "QQ",
    "QQI",
    "PrimeField",
    "GFp",
    "field_from_tag",
    "is_prime",
]


def _mismatch(a, b):
    return FieldMismatchError(
        "cannot combine %s and %s" % (type(a).__name__, type(b).__name__))


class Gaussian:
    """An element ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def _coerce(self, other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, int):
            return Gaussian(other)
        raise _mismatch(self, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Gaussian(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Gaussian(self.re * other, self.im * other)
        other = self._coerce(other)
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Gaussian(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        d = self.norm()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return Gaussian(self.re / d, -self.im / d)

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return "Gaussian(%s)" % QQI.format(self)

    def __str__(self):
        return QQI.format(self)


class GF:
    """A residue ``value mod p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _val(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatchError(
                    "cannot combine GF(%d) and GF(%d)" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        raise _mismatch(self, other)

    def __add__(self, other):
        return GF(self.v + self._val(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return GF(self.v - self._val(other), self.p)

    def __rsub__(self, other):
        return GF(self._val(other) - self.v, self.p)

    def __mul__(self, other):
        return GF(self.v * self._val(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * GF(self._val(other), self.p).inverse()

    def __rtruediv__(self, other):
        return GF(self._val(other), self.p) * self.inverse()

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return GF(pow(self.v, k, self.p), self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(pow(self.v, -1, self.p), self.p)

    def conjugate(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GF):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __int__(self):
        return self.v

    def __repr__(self):
        return "GF(%d mod %d)" % (self.v, self.p)

    def __str__(self):
        return "%d mod %d" % (self.v, self.p)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the three scalar fields."""

    name = None
    characteristic = 0
    is_finite = False
    order = None

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    element_type = None

    def strict(self, x):
        """Accept an ``int`` or a genuine element of this field; never convert."""
        if isinstance(x, int):
            return self(x)
        if isinstance(x, self.element_type):
            return self(x)
        raise FieldMismatchError("%r is not an element of %s" % (x, self.name))

    def is_zero(self, x):
        return x == 0

    def conj(self, x):
        return x.conjugate()

    def parse(self, text):
        raise NotImplementedError

    def format(self, x):
        return str(x)

    def random_element(self, rng, bound=10):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    element_type = Fraction

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Gaussian) and value.im == 0:
            return value.re
        raise FieldMismatchError("cannot convert %r to Q" % (value,))

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad rational literal %r" % text) from exc

    def random_element(self, rng, bound=10):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


class GaussianField(Field):
    name = "Qi"
    element_type = Gaussian

    def __call__(self, value):
        if isinstance(value, Gaussian):
            return value
        if isinstance(value, (int, Fraction)):
            return Gaussian(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatchError("cannot convert %r to Q(i)" % (value,))

    def parse(self, text):
        s = text.replace(" ", "")
        try:
            if not s.endswith("i"):
                return Gaussian(Fraction(s))
            body = s[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                real, imag = body[:cut], body[cut:]
            else:
                real, imag = "0", body
            if imag in ("", "+"):
                imag = "1"
            elif imag == "-":
                imag = "-1"
            return Gaussian(Fraction(real), Fraction(imag))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad Gaussian rational literal %r" % text) from exc

    def format(self, x):
        re_, im = x.re, x.im
        if im == 0:
            return str(re_)
        imag = "" if abs(im) == 1 else str(abs(im))
        if re_ == 0:
            return ("-" if im < 0 else "") + imag + "i"
        return "%s%s%si" % (re_, "-" if im < 0 else "+", imag)

    def random_element(self, rng, bound=10):
        return Gaussian(QQ.random_element(rng, bound), QQ.random_element(rng, bound))


class PrimeField(Field):
    is_finite = True
    element_type = GF

    def __init__(self, p):
        if not isinstance(p, int) or p >= 2 ** 63 or not is_prime(p):
            raise UsageError("GF(p) needs a word-sized prime, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.order = p
        self.name = "GF(%d)" % p

    def __call__(self, value):
        if isinstance(value, GF):
            if value.p != self.p:
                raise FieldMismatchError("element of GF(%d) given to %s" % (value.p, self.name))
            return value
        if isinstance(value, int):
            return GF(value, self.p)
        if isinstance(value, Fraction):
            return GF(value.numerator, self.p) / GF(value.denominator, self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatchError("cannot convert %r to %s" % (value, self.name))

    def parse(self, text):
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:mod\s*(\d+))?\s*", text)
        if not m:
            raise UsageError("bad %s literal %r" % (self.name, text))
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise FieldMismatchError("literal %r is not in %s" % (text, self.name))
        return GF(int(m.group(1)), self.p)

    def elements(self):
        return [GF(v, self.p) for v in range(self.p)]

    def random_element(self, rng, bound=None):
        return GF(rng.randrange(self.p), self.p)


QQ = RationalField()
QQI = GaussianField()


@lru_cache(maxsize=None)
def GFp(p):
    """The prime field GF(p); instances are cached per p."""
    return PrimeField(p)


def field_from_tag(tag):
    """Parse ``"Q"``, ``"Qi"``, ``"GF(p)"`` or ``"GF:p"``."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag == "Qi":
        return QQI
    m = re.fullmatch(r"GF(?:\((\d+)\)|:(\d+))", tag)
    if m:
        return GFp(int(m.group(1) or m.group(2)))
    raise UsageError("unknown field tag %r (expected Q, Qi, GF(p) or GF:p)" % tag)
