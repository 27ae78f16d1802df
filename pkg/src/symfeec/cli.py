"""Command line entry point.

Exit codes: 0 success or verified, 1 checked and false (for example a set
that is not invariant), 2 usage or internal error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import FeecError, NotInvariant, NotMonomial
from .forms import render
from .recursion import build_A_basis, degree_table, max_degree, predict_R_invariance
from .reports import certificate_payload, emit_report, write_report
from .spaces import SpaceSpec, basis_B, dimension, spanning_set
from .symmetry import check_invariance
from .verification import ACCEPTANCE, SUITES, run_suite

OK, FALSE, ERROR = 0, 1, 2

VC_ALIASES = ("RT", "BDM", "Ned1st", "Ned2nd")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_spec(p, r_required=True):
    p.add_argument("--family", choices=["P", "Pminus"], required=True)
    p.add_argument("--ring", action="store_true", help="vanishing traces on the boundary")
    p.add_argument("-r", type=int, required=r_required, help="polynomial degree")
    p.add_argument("-k", type=int, required=True, help="form degree")
    p.add_argument("-n", type=int, required=True, help="simplex dimension")


def _add_output(p, default="text"):
    p.add_argument("--format", choices=["json", "csv", "text"], default=default)
    p.add_argument("--out", help="write the report to this file instead of stdout")


def build_parser():
    parser = _Parser(prog="symfeec", description="Invariant bases of polynomial differential forms on simplices.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="dimension of a space")
    _add_spec(p)
    _add_output(p)

    p = sub.add_parser("span", help="canonical spanning set")
    _add_spec(p)
    _add_output(p)

    p = sub.add_parser("basis", help="canonical basis")
    _add_spec(p)
    _add_output(p)

    p = sub.add_parser("invariance", help="certify invariance of a set")
    _add_spec(p)
    p.add_argument("--set", dest="which", choices=["A", "B", "S"], default="A",
                   help="A: recursive basis, B: canonical basis, S: spanning family")
    p.add_argument("--mode", choices=["R", "C"], default="C")
    _add_output(p)

    p = sub.add_parser("build-invariant", help="build the recursive basis, or a degree table")
    _add_spec(p, r_required=False)
    p.add_argument("--r-max", type=int, help="tabulate degrees 0..R_MAX instead of one build")
    _add_output(p, default="json")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", default=["all"],
                   help=f"suite names ({', '.join(SUITES)}) or all")
    _add_output(p)

    p = sub.add_parser("vc-alias", help="resolve a vector calculus element name")
    p.add_argument("--name", choices=VC_ALIASES, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, default=3)
    p.add_argument("--build", action="store_true", help="also build and classify the basis")
    _add_output(p)
    return parser


def _spec(args, r=None):
    try:
        return SpaceSpec(args.family, args.ring, args.r if r is None else r, args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap(r):
    cap = max_degree()
    if cap is not None and r > cap:
        raise UsageError(f"degree {r} exceeds SYMFEEC_MAX_DEGREE={cap}")


def _listing(spec, fs):
    lines = [f"{spec.label()}: {len(fs)} elements"]
    lines += [f"  {render(e.to_form())}" for e in fs]
    return {
        "spec": spec.to_json(),
        "count": len(fs),
        "elements": [e.to_form().to_json() for e in fs],
        "text": "\n".join(lines),
    }


def _cmd_dim(args):
    spec = _spec(args)
    d = dimension(spec)
    return {"spec": spec.to_json(), "dimension": d, "text": str(d)}, OK


def _cmd_span(args):
    spec = _spec(args)
    return _listing(spec, spanning_set(spec)), OK


def _cmd_basis(args):
    spec = _spec(args)
    return _listing(spec, basis_B(spec)), OK


def _cmd_invariance(args):
    spec = _spec(args)
    _cap(spec.r)
    strict = True
    if args.which == "A":
        try:
            q = build_A_basis(spec, classify=False).basis
        except NotMonomial as exc:
            return {"spec": spec.to_json(), "invariant": None, "reason": str(exc),
                    "text": f"no recursive basis: {exc}"}, FALSE
    elif args.which == "B":
        q = basis_B(spec)
    else:
        q = spanning_set(spec, dedupe=False)
        strict = False
    payload = {"spec": spec.to_json(), "set": args.which, "mode": args.mode, "size": len(q)}
    try:
        cert = check_invariance(q, args.mode, strict=strict)
    except NotInvariant as exc:
        payload.update(invariant=False, reason=str(exc), text=f"not invariant: {exc}")
        return payload, FALSE
    payload.update(invariant=True, certificate=certificate_payload(cert),
                   text=f"invariant ({args.mode}), {len(q)} elements")
    return payload, OK


def _cmd_build(args):
    if args.r_max is not None:
        _cap(args.r_max)
        if args.r_max < 0:
            raise UsageError("--r-max must be >= 0")
        _spec(args, r=0)
        rows = degree_table(args.family, args.ring, args.k, args.n, args.r_max)
        lines = [
            f"r={row['r']:>2}  stated {row['predicted']:<11} built {row['classified']:<11}"
            f" {'agree' if row['agree'] else 'DISAGREE'}"
            for row in rows
        ]
        code = OK if all(row["agree"] for row in rows) else FALSE
        return {"rows": rows, "text": "\n".join(lines)}, code
    if args.r is None:
        raise UsageError("give -r or --r-max")
    spec = _spec(args)
    _cap(spec.r)
    try:
        res = build_A_basis(spec)
    except NotMonomial as exc:
        chain = [s.to_json() for s in exc.chain]
        return {"spec": spec.to_json(), "error": "NotMonomial", "reason": str(exc), "chain": chain,
                "text": str(exc)}, FALSE
    payload = res.to_json()
    payload["certificate"] = certificate_payload(res.certificate)
    payload["predicted"] = predict_R_invariance(spec)
    payload["text"] = (
        f"{spec.label()}: {len(res.basis)} elements, classified {res.classification},"
        f" stated {payload['predicted']}"
    )
    return payload, OK


def _cmd_verify(args):
    names = []
    for name in args.suites:
        names.extend(ACCEPTANCE if name == "all" else [name])
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    results = {}
    lines = []
    ok = True
    for name in names:
        checks = run_suite(name)
        results[name] = [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
        lines += [c.line() for c in checks]
        passed = all(c.ok for c in checks)
        ok = ok and passed
        lines.append(f"== {name}: {'PASS' if passed else 'FAIL'}")
    rows = [dict(suite=n, **c) for n, cs in results.items() for c in cs]
    return {"suites": results, "passed": ok, "rows": rows, "text": "\n".join(lines)}, (OK if ok else FALSE)


def resolve_alias(name, r, n):
    """``SpaceSpec`` of a vector calculus element."""
    if name in ("Ned1st", "Ned2nd") and n != 3:
        raise UsageError(f"{name} is defined on the tetrahedron (n = 3)")
    if n < 2:
        raise UsageError("vector calculus aliases need n >= 2")
    if name == "RT":
        return SpaceSpec("Pminus", False, r, n - 1, n)
    if name == "BDM":
        return SpaceSpec("P", False, r, n - 1, n)
    if name == "Ned1st":
        return SpaceSpec("Pminus", False, r, 1, n)
    return SpaceSpec("P", False, r, 1, n)


def _cmd_alias(args):
    spec = resolve_alias(args.name, args.r, args.n)
    verdict = predict_R_invariance(spec)
    real = {"R": True, "C_only": False}.get(verdict)
    payload = {"name": args.name, "spec": spec.to_json(), "predicted": verdict, "predicted_real": real}
    text = f"{args.name}_{args.r} = {spec.label()}; stated real invariance: {verdict}"
    if args.build:
        _cap(spec.r)
        try:
            res = build_A_basis(spec)
            payload["classified"] = res.classification
            text += f"; built {res.classification}"
        except NotMonomial as exc:
            payload["classified"] = "NotMonomial"
            text += f"; {exc}"
    payload["text"] = text
    return payload, OK


COMMANDS = {
    "dim": _cmd_dim,
    "span": _cmd_span,
    "basis": _cmd_basis,
    "invariance": _cmd_invariance,
    "build-invariant": _cmd_build,
    "verify": _cmd_verify,
    "vc-alias": _cmd_alias,
}


def run_command(argv):
    """``(report bytes, exit code, error message or None)``."""
    try:
        args = build_parser().parse_args(argv)
        payload, code = COMMANDS[args.verb](args)
        if args.format == "csv" and "rows" not in payload:
            raise UsageError(f"csv output is only available for tables, not for {args.verb}")
        data = emit_report(payload, args.format)
        if args.out:
            write_report(data, args.out)
            data = b""
        return data, code, None
    except UsageError as exc:
        return b"", ERROR, f"usage: {exc}"
    except (FeecError, OSError) as exc:
        return b"", ERROR, f"error: {type(exc).__name__}: {exc}"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return exc.code
    data, code, err = run_command(argv)
    if data:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
