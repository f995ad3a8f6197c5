"""Brute-force oracles, kept independent of the certifiers.

An oracle walks every element of a finite space (or of an explicit finite
lattice of parameter values over Q) and applies a single-matrix predicate.
It never looks at generic elements, characteristic polynomials of polynomial
matrices, or anything else the certifiers compute.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Optional

from .diagonalizability import is_diagonalizable_real
from .errors import ResourceError, UsageError
from .matrix import is_nilpotent, is_normal
from .reports import Counterexample, make_report

__all__ = [
    "ORACLE_CAP",
    "OracleVerdict",
    "oracle_all_property",
    "Agreement",
    "cross_validate",
]

ORACLE_CAP = 10 ** 6

PREDICATES = {
    "nilpotent": is_nilpotent,
    "normal": is_normal,
    "diag-real": lambda m: is_diagonalizable_real(m).diagonalizable,
}


@dataclass(frozen=True)
class OracleVerdict:
    property: str
    verdict: str                 # "all-pass" | "counterexample"
    elements_tested: int
    n: int
    field: str
    dim: int
    counterexample: Optional[Counterexample] = None

    @property
    def holds(self):
        return self.verdict == "all-pass"

    def to_report(self, command="oracle", seed=0):
        return make_report(command, self.verdict, property=self.property,
                           method="enumeration-oracle", seed=seed, n=self.n, field=self.field,
                           dim=self.dim, counterexample=self.counterexample,
                           details={"elements_tested": self.elements_tested})


def _points(S, lattice, cap):
    h = len(S.basis)
    if S.field.is_finite:
        if lattice is not None:
            raise UsageError("finite fields are enumerated completely; no lattice")
        values = [S.field(v) for v in range(S.field.order)]
        size = len(values) ** h
    else:
        if lattice is None:
            raise UsageError("an infinite field needs an explicit finite lattice")
        if isinstance(lattice, int):
            values = list(range(-lattice, lattice + 1))
        else:
            values = list(lattice)
        size = len(values) ** h
    if size > cap:
        raise ResourceError("oracle would test %d elements, cap is %d" % (size, cap))
    return itertools.product(values, repeat=h), size


def oracle_all_property(S, prop, cap=ORACLE_CAP, lattice=None):
    """Test every element: all of S over GF(p), or P + sum c_k Z_k with each c_k in ``lattice``.

    ``lattice`` is an int r (meaning -r..r) or an explicit list of scalars.
    """
    if prop not in PREDICATES:
        raise UsageError("unknown property %r; choose from %s" % (prop, sorted(PREDICATES)))
    pred = PREDICATES[prop]
    points, _ = _points(S, lattice, cap)
    tested = 0
    for coeffs in points:
        m = S.base
        for c, z in zip(coeffs, S.basis):
            m = m + z.scale(c)
        tested += 1
        if not pred(m):
            return OracleVerdict(prop, "counterexample", tested, S.n, S.field.name,
                                 len(S.basis), Counterexample(tuple(coeffs), m))
    return OracleVerdict(prop, "all-pass", tested, S.n, S.field.name, len(S.basis))


@dataclass(frozen=True)
class Agreement:
    agree: bool
    certifier_holds: bool
    oracle_holds: bool
    divergence: Optional[str] = None     # None | "char-p-formal-vs-functional" | "disagreement"
    detail: Any = None


def _functionally_zero(poly, field):
    values = [field(v) for v in range(field.order)]
    return all(poly.evaluate(pt) == 0
               for pt in itertools.product(values, repeat=poly.ring.nvars))


def cross_validate(certifier, oracle):
    """Compare a certifier verdict with an oracle verdict on the same space.

    ``certifier`` is any result with a boolean ``holds``, or a dict of formal
    defects as returned by ``formal_defect`` (empty means formally zero).  The
    only divergence accepted as legitimate is a formal defect that vanishes as
    a function on GF(p): that is the gap between formal and functional zero in
    positive characteristic, not a bug.
    """
    if isinstance(certifier, dict):
        cert_holds = not certifier
    else:
        cert_holds = bool(certifier.holds)
    if cert_holds == oracle.holds:
        return Agreement(True, cert_holds, oracle.holds)
    if isinstance(certifier, dict) and not cert_holds and oracle.holds:
        polys = list(certifier.values())
        field = polys[0].ring.field
        if field.is_finite and all(_functionally_zero(p, field) for p in polys):
            return Agreement(False, cert_holds, oracle.holds, "char-p-formal-vs-functional",
                             {k: str(p) for k, p in certifier.items()})
    return Agreement(False, cert_holds, oracle.holds, "disagreement")
