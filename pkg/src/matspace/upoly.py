"""Dense univariate polynomials over an exact field (coefficients low degree first)."""

from fractions import Fraction

__all__ = ["UPoly", "gcd", "X"]


def _reciprocal(c):
    # 1 / int would be a float
    return Fraction(1, c) if isinstance(c, int) else 1 / c


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_charpoly(cls, cp):
        return cls(cp.coeffs)

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = _reciprocal(other.lead)
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c == 0:
                continue
            quot[k - dq] = c
            for j, y in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * y
        return UPoly(quot), UPoly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        inv = _reciprocal(self.lead)
        return UPoly([c * inv for c in self.coeffs])

    def derivative(self):
        return UPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_squarefree(self):
        return gcd(self, self.derivative()).degree <= 0

    def squarefree_part(self):
        return (self // gcd(self, self.derivative())).monic()

    def discriminant_2x2(self):
        """b^2 - 4ac for a quadratic."""
        if self.degree != 2:
            raise ValueError("not a quadratic")
        c, b, a = self.coeffs
        return b * b - 4 * a * c

    def __repr__(self):
        return "UPoly(%s)" % self

    def __str__(self):
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = str(c)
            if isinstance(c, Fraction) or isinstance(c, int):
                pass
            elif k and ("+" in cs[1:] or "-" in cs[1:]):
                cs = "(%s)" % cs
            mono = "" if k == 0 else ("x" if k == 1 else "x^%d" % k)
            if mono and cs == "1":
                parts.append(mono)
            elif mono and cs == "-1":
                parts.append("-" + mono)
            elif mono:
                parts.append("%s*%s" % (cs, mono))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def gcd(a, b):
    """Monic gcd; gcd(0, 0) is 0."""
    while b.coeffs:
        a, b = b, a % b
    return a.monic() if a.coeffs else a


X = UPoly([0, 1])
