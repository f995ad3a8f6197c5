"""Seeded random instances for demos and test suites."""

from fractions import Fraction

from .matrix import Matrix, inverse, rank, unit, zeros
from .scalars import QQ

__all__ = [
    "random_matrix",
    "random_invertible",
    "random_strict_upper",
    "random_conjugate",
    "random_s2_pair",
    "random_pairing_triple",
    "random_antisymmetric",
    "random_symmetric",
]


def random_matrix(rng, n, field=QQ, bound=5):
    return Matrix([[field.random_element(rng, bound) for _ in range(n)] for _ in range(n)], field)


def random_invertible(rng, n, field=QQ, bound=3):
    """Rejection sampling on the rank."""
    while True:
        m = random_matrix(rng, n, field, bound)
        if rank(m) == n:
            return m


def random_strict_upper(rng, n, field=QQ, bound=5):
    m = zeros(n, ring=field)
    for i in range(n):
        for j in range(i + 1, n):
            m = m + unit(n, i, j, field).scale(field.random_element(rng, bound))
    return m


def random_conjugate(rng, m, bound=3):
    c = random_invertible(rng, m.n, m.ring, bound)
    return c @ m @ inverse(c)


def random_s2_pair(rng, n):
    """(R, U): R arbitrary, U a random conjugate of a random strictly upper matrix."""
    R = random_matrix(rng, n)
    U = random_conjugate(rng, random_strict_upper(rng, n))
    return R, U


def random_pairing_triple(rng, n):
    """(P, A, B) drawn from one conjugated strictly upper space, so all four sums are nilpotent."""
    c = random_invertible(rng, n)
    ci = inverse(c)
    P, A, B = (c @ random_strict_upper(rng, n) @ ci for _ in range(3))
    return P, A, B


def random_antisymmetric(rng, n, bound=5):
    while True:
        m = zeros(n)
        for i in range(n):
            for j in range(i + 1, n):
                x = Fraction(rng.randint(-bound, bound))
                m = m + (unit(n, i, j) - unit(n, j, i)).scale(x)
        if not m.is_zero():
            return m


def random_symmetric(rng, n, bound=5):
    m = random_matrix(rng, n, QQ, bound)
    return m + m.transpose()

