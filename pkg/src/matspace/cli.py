"""Command-line front end.

Exit codes: 0 when the property holds (or no counterexample was found) and
the dimension bound is satisfied, 1 when a counterexample was found or a
bound is violated, 2 on usage, input or resource errors.  Every run prints
one report; the seed is always part of it.
"""

import argparse
import json
import random
import sys

from .diagonalizability import (
    antisymmetric_pencil_escape,
    sample_certify_diag_space,
    sturm_real_root_count,
    witness_max_diag_affine_not_linear,
    witness_max_diag_linear,
)
from .errors import MatspaceError, UsageError
from .matrix import Matrix, diag, inverse, is_nilpotent, unit
from .nilpotency import (
    certify_nilpotent,
    char2_counterexample,
    check_s2_identity,
    trace_pairing,
    witness_affine_not_linear_nilpotent,
    witness_max_nilpotent,
)
from .normality import certify_normal, diagonal_space, exact_eigen_failures, simultaneous_diagonalize
from .oracle import oracle_all_property
from .randgen import random_invertible, random_pairing_triple, random_s2_pair
from .reports import dumps, make_report
from .scalars import field_from_tag
from .subspace import DEFAULT_ENUMERATION_CAP, enumerate_space, subspace_from_json, subspace_to_json

PROPERTIES = ("nilpotent", "normal", "diagonalizable")
DEMOS = ("s2-identity", "trace-pairing", "pencil-escape", "simdiag", "char2-counterexample")

# (property, variant) -> (constructor(n, field), fields accepted)
WITNESSES = {
    ("nilpotent", "linear"): (lambda n, F: witness_max_nilpotent(n, F), "Q, Qi, GF:p"),
    ("nilpotent", "affine-not-linear"):
        (lambda n, F: witness_affine_not_linear_nilpotent(n, F), "Q, Qi"),
    ("nilpotent", "counterexample"): (lambda n, F: char2_counterexample(), "GF:2 (n=2)"),
    ("normal", "linear"): (lambda n, F: diagonal_space(n, F), "Q, Qi"),
    ("diagonalizable", "linear"): (lambda n, F: witness_max_diag_linear(n), "Q"),
    ("diagonalizable", "affine-not-linear"):
        (lambda n, F: witness_max_diag_affine_not_linear(n), "Q"),
}


class InputError(UsageError):
    pass


def _supported():
    return "; ".join("%s/%s [%s]" % (p, v, f) for (p, v), (_, f) in sorted(WITNESSES.items()))


def load_subspace(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror)) from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s: malformed JSON at line %d column %d: %s"
                         % (path, exc.lineno, exc.colno, exc.msg)) from exc
    try:
        return subspace_from_json(obj)
    except UsageError as exc:
        raise InputError("%s: %s" % (path, exc)) from exc


def _certify_exit(report):
    if report["verdict"] == "counterexample":
        return 1
    if report["bound_satisfied"] is False:
        return 1
    return 0


def certify_space(S, prop, args):
    """Run the certifier for ``prop`` on S and return its report."""
    if prop == "nilpotent":
        cert = certify_nilpotent(S, cap=args.cap, jobs=args.jobs)
        return cert.to_report("certify", seed=args.seed)
    if prop == "normal":
        cert = certify_normal(S, method=args.method or "symbolic", parameters=args.params)
        return cert.to_report("certify", seed=args.seed)
    cert = sample_certify_diag_space(S, samples=args.samples, seed=args.seed, jobs=args.jobs)
    return cert.to_report("certify")


def cmd_certify(args):
    S = load_subspace(args.infile)
    report = certify_space(S, args.property, args)
    return _certify_exit(report), report


def cmd_witness(args):
    key = (args.property, args.variant)
    if key not in WITNESSES:
        raise UsageError("unsupported combination %s/%s; supported: %s"
                         % (args.property, args.variant, _supported()))
    build, _ = WITNESSES[key]
    F = field_from_tag(args.field)
    if args.variant == "counterexample":
        if args.n not in (None, 2) or args.field not in ("Q", "GF:2", "GF(2)"):
            raise UsageError("the counterexample witness is fixed: n=2 over GF:2")
    elif args.n is None:
        raise UsageError("--n is required for the %s variant" % args.variant)
    S = build(args.n, F)
    if S.field != F and args.variant != "counterexample":
        raise UsageError("unsupported field %s for %s/%s; supported: %s"
                         % (F.name, args.property, args.variant, _supported()))
    report = certify_space(S, args.property, args)
    if _certify_exit(report) != 0:
        raise RuntimeError("witness failed its own certification:\n" + dumps(report))
    payload = json.dumps(subspace_to_json(S), sort_keys=True, indent=2)
    report["command"] = "witness"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        report["details"]["written"] = args.out
        return 0, report
    return 0, payload


def cmd_oracle(args):
    S = load_subspace(args.infile)
    prop = {"diagonalizable": "diag-real"}.get(args.property, args.property)
    verdict = oracle_all_property(S, prop, cap=args.cap, lattice=args.lattice)
    report = verdict.to_report("oracle", seed=args.seed)
    return (0 if verdict.holds else 1), report


# -- demos -------------------------------------------------------------------

def _demo_s2(args, lines):
    rng = random.Random(args.seed)
    ok = 0
    for k in range(args.trials):
        R, U = random_s2_pair(rng, rng.randint(2, 5))
        chk = check_s2_identity(R, U)
        ok += chk.equal
        if k < 3:
            lines.append("trial %d (n=%d): S2(R)-S2(R+U) = %s, tr(RU) = %s"
                         % (k, R.n, chk.lhs, chk.rhs))
    lines.append("%d/%d equal" % (ok, args.trials))
    return ok == args.trials, {"trials": args.trials, "equal": ok}


def _demo_pairing(args, lines):
    rng = random.Random(args.seed)
    ok = 0
    for _ in range(args.trials):
        P, A, B = random_pairing_triple(rng, rng.randint(2, 5))
        ok += trace_pairing(P, A, B) == 0
    lines.append("%d/%d have tr(AB) = 0" % (ok, args.trials))
    return ok == args.trials, {"trials": args.trials, "zero": ok}


def _demo_pencil(args, lines):
    P = unit(2, 0, 0)
    Y = unit(2, 0, 1) - unit(2, 1, 0)
    res = antisymmetric_pencil_escape(P, Y)
    disc = res.char_poly.discriminant_2x2()
    sturm = sturm_real_root_count(res.char_poly)
    lines.append("P = E11, Y = E12 - E21")
    lines.append("t = %s after %d tries" % (res.t, res.tried))
    lines.append("chi = %s, disc %s, real roots (Sturm) %d" % (res.char_poly, disc, sturm))
    ok = res.t == 1 and disc == -3 and sturm == 0
    return ok, {"t": str(res.t), "char_poly": str(res.char_poly), "discriminant": str(disc),
                "sturm_count": sturm}


def _demo_simdiag(args, lines):
    rng = random.Random(args.seed)
    n = 3
    C = random_invertible(rng, n)
    Ci = inverse(C)
    fam = []
    for _ in range(3):
        d = diag([rng.randint(-2, 2) for _ in range(n)])
        fam.append(C @ d @ Ci)
    ref = simultaneous_diagonalize(fam, mode="exact")
    bad = exact_eigen_failures(ref, fam)
    lines.append("C =\n%s" % C)
    for j, block in enumerate(ref.blocks):
        vals = ", ".join(str(row[j]) for row in ref.eigenvalues)
        vecs = "; ".join("(" + ", ".join(str(x) for x in v) + ")" for v in block)
        lines.append("block %d: eigenvalues [%s], vectors %s" % (j, vals, vecs))
    lines.append("basis vectors failing A v = lambda v exactly: %d" % len(bad))
    return not bad, {"refinement": ref.to_json(), "failures": len(bad)}


def _demo_char2(args, lines):
    S = char2_counterexample()
    elems = list(enumerate_space(S))
    good = True
    for coeffs, m in elems:
        nil = is_nilpotent(m)
        good = good and nil
        lines.append("t=%s: nilpotent=%s" % (coeffs[0], nil))
        lines.extend("  " + row for row in str(m).splitlines())
    lines.append("dim %d, 0 in S: %s" % (S.dim, S.is_linear))
    ok = good and len(elems) == 2 and not S.is_linear
    return ok, {"elements": [m.to_json() for _, m in elems]}


DEMO_FUNCS = {
    "s2-identity": _demo_s2,
    "trace-pairing": _demo_pairing,
    "pencil-escape": _demo_pencil,
    "simdiag": _demo_simdiag,
    "char2-counterexample": _demo_char2,
}


def cmd_demo(args):
    lines = []
    ok, details = DEMO_FUNCS[args.name](args, lines)
    details["narrative"] = lines
    report = make_report("demo", "pass" if ok else "fail", method=args.name, seed=args.seed,
                         details=details)
    return (0 if ok else 1), report


# -- output ------------------------------------------------------------------

def render_text(report):
    out = ["%s: %s" % (report["command"], report["verdict"])]
    for key in ("property", "method", "field", "n", "dim", "is_linear", "bound",
                "refined_bound", "refined_bound_applicable", "bound_satisfied", "seed"):
        if key == "refined_bound_applicable" and report.get("refined_bound") is None:
            continue
        if report.get(key) is not None:
            out.append("  %s: %s" % (key, report[key]))
    cex = report.get("counterexample")
    if cex:
        out.append("  counterexample at (%s)" % ", ".join(cex["point"]))
        m = Matrix.from_json(cex["matrix"])
        out.extend("    " + row for row in str(m).splitlines())
        if cex.get("reason"):
            out.append("    reason: %s" % cex["reason"])
    for note in report.get("notes", []):
        out.append("  note: %s" % note)
    for line in report.get("details", {}).get("narrative", []):
        out.extend("  " + part for part in line.splitlines())
    if report.get("details", {}).get("error"):
        out.append("  error: %s" % report["details"]["error"])
    return "\n".join(out)


def build_parser():
    parser = argparse.ArgumentParser(prog="matspace",
                                     description="Certify affine spaces of matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)

    def certifier_opts(p):
        p.add_argument("--property", choices=PROPERTIES, required=True)
        p.add_argument("--samples", type=int, default=10 ** 4)
        p.add_argument("--method", choices=("symbolic", "pairwise"), default=None,
                       help="normality only")
        p.add_argument("--params", choices=("complex", "real"), default="complex",
                       help="normality only: range of the space parameters")

    p = sub.add_parser("certify", help="certify a subspace file")
    certifier_opts(p)
    p.add_argument("--in", dest="infile", required=True)
    common(p)

    p = sub.add_parser("witness", help="write an extremal witness space")
    certifier_opts(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--field", default="Q")
    p.add_argument("--variant", choices=("linear", "affine-not-linear", "counterexample"),
                   default="linear")
    p.add_argument("--out", default=None)
    common(p)

    p = sub.add_parser("demo", help="run a narrated check")
    p.add_argument("name", choices=DEMOS)
    p.add_argument("--trials", type=int, default=100)
    common(p)

    p = sub.add_parser("oracle", help="brute-force check of every element")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lattice", type=int, default=None,
                   help="over Q: test parameters in -R..R")
    common(p)
    return parser


COMMANDS = {"certify": cmd_certify, "witness": cmd_witness, "demo": cmd_demo,
            "oracle": cmd_oracle}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code, out = COMMANDS[args.command](args)
    except MatspaceError as exc:
        code = 2
        out = make_report(args.command, "error", property=getattr(args, "property", None),
                          seed=args.seed, details={"error": str(exc)})
    if isinstance(out, str):
        print(out)
    elif args.format == "json":
        print(dumps(out))
    else:
        print(render_text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
