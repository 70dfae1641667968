"""Command-line front end.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import render
from .capacity import c_full, packing_feasible, graph_sample
from .ech import TriangleSpec, c_ech_lower, ech_mu_inf, n_sequence
from .exceptional import enumerate_classes, enumerate_diophantine_only
from .numerics import format_rational, parse_rational
from .verify import run_checks
from .weights import hj_expansion, staircase, weight_expansion

DEFAULT_DMAX = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if message:
            print(message, end="")
        raise SystemExit(status)


def _rational(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse {token!r} as an exact rational ({exc})")


def _positive_int(token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {token!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {token!r}")
    return value


def default_dmax() -> int:
    env = os.environ.get("SQUEEZE_DMAX")
    if env is None:
        return DEFAULT_DMAX
    try:
        return _positive_int(env)
    except argparse.ArgumentTypeError:
        raise UsageError(f"SQUEEZE_DMAX must be a positive integer, got {env!r}") from None


def _aligned(pairs: Sequence[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def cmd_weights(args) -> str:
    w = weight_expansion(args.a)
    num = lambda x: render.fmt_number(x, args.float)  # noqa: E731
    mults = list(w.multiplicities)
    cf = f"[{mults[0]}" + (f"; {', '.join(map(str, mults[1:]))}]" if len(mults) > 1 else "]")
    if args.json:
        return render.dumps({
            "a": format_rational(w.a),
            "weights": [num(x) for x in w.weights],
            "multiplicities": mults,
            "labels": list(w.labels),
            "length": w.length,
            "sum": num(sum(w.weights)),
            "sum_of_squares": num(sum(x * x for x in w.weights)),
        })
    return _aligned([
        ("a", num(w.a)),
        ("weights", ", ".join(num(x) for x in w.weights)),
        ("multiplicities", cf),
        ("labels", ", ".join(map(str, w.labels))),
        ("length", str(w.length)),
        ("sum w", num(sum(w.weights))),
        ("sum w^2", num(sum(x * x for x in w.weights))),
    ])


def cmd_staircase(args) -> str:
    a = args.a
    diagram = staircase(a)
    p, q = a.numerator, a.denominator
    hj, companion = hj_expansion(p, q)
    if args.json:
        return render.dumps({
            "a": format_rational(a),
            "runs": [[d, n] for d, n in diagram.runs],
            "labels": list(diagram.labels),
            "hj": {f"{p}/{q}": list(hj.coefficients), f"{p}/{p - q}": list(companion.coefficients)},
        })
    return "\n".join([
        render.render_staircase(diagram),
        "",
        f"labels  {', '.join(map(str, diagram.labels))}",
        f"HJ {p}/{q} = {hj}",
        f"HJ {p}/{p - q} = {companion}",
    ])


def cmd_classes(args) -> str:
    found = enumerate_diophantine_only(args.dmax) if args.diophantine_only else enumerate_classes(args.dmax)
    if args.json:
        return render.dumps([[t.d, list(t.m)] for t in found])
    return "\n".join(t.listing() for t in found)


def cmd_capacity(args) -> str:
    dmax = args.dmax or default_dmax()
    r = c_full(args.a, dmax)
    if args.json:
        return render.dumps(render.capacity_json(args.a, r))
    witness = render.fmt_witness(r.witness)
    text = f"{render.fmt_value(r, args.float)} ({r.status.value})"
    return f"{text} witness {witness}" if witness else text


def cmd_graph(args) -> str:
    dmax = args.dmax or default_dmax()
    rows = graph_sample(args.a_from, args.a_to, args.steps, dmax)
    out = render.emit_csv(rows) if args.format == "csv" else render.emit_svg(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
        return f"wrote {len(rows)} rows to {args.output}"
    return out.rstrip("\n")


def _triangle_str(t: TriangleSpec) -> str:
    return f"(A,B)=({t.A},{t.B}) slope {t.slope}"


def cmd_ech(args) -> str:
    value, witness = c_ech_lower(args.a, args.amax, args.bmax)
    ratio = ech_mu_inf(args.a, args.terms)
    num = lambda x: render.fmt_number(x, args.float)  # noqa: E731
    if args.json:
        return render.dumps({
            "a": format_rational(args.a),
            "triangle_lower_bound": num(value),
            "witness": {"A": witness.A, "B": witness.B, "slope": str(witness.slope)},
            "nsequence_bound": num(ratio),
            "terms": args.terms,
        })
    return "\n".join([
        f"triangle bound  {num(value)}  witness {_triangle_str(witness)}  (A<={args.amax}, B<={args.bmax})",
        f"N-sequence bound  {num(ratio)}  ({args.terms} terms)",
    ])


def cmd_nseq(args) -> str:
    seq = n_sequence(args.a, args.b, args.bound)
    if args.json:
        return render.dumps([format_rational(x) for x in seq.terms])
    return ", ".join(format_rational(x) for x in seq.terms)


def cmd_packing(args) -> str:
    dmax = args.dmax or default_dmax()
    v = packing_feasible(args.weights, args.mu, dmax)
    if args.json:
        w = v.witness
        return render.dumps({
            "outcome": v.outcome.value,
            "witness": render.class_json(w) if hasattr(w, "d") else w,
            "d_max": v.d_max_used,
        })
    text = f"{v.outcome.value} (d_max {v.d_max_used})"
    return f"{text} witness {render.fmt_witness(v.witness)}" if v.witness else text


def cmd_verify(args) -> tuple[int, str]:
    lines = []
    ok = True
    for r in run_checks(args.nmax, args.seed):
        ok &= r.passed
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name}" + (f"  -- {r.detail}" if r.detail else ""))
    lines.append("all checks passed" if ok else "some checks FAILED")
    return (0 if ok else 1), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="squeeze", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p, json_flag=True):
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--float", action="store_true", help="render numbers to 12 significant digits")

    p = sub.add_parser("weights", help="weight expansion of a rational")
    p.add_argument("a", type=_rational)
    output_flags(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("staircase", help="Riemenschneider staircase and HJ expansions")
    p.add_argument("a", type=_rational)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_staircase)

    p = sub.add_parser("classes", help="list exceptional classes")
    p.add_argument("--dmax", type=_positive_int, required=True)
    p.add_argument("--diophantine-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("capacity", help="c(a) with status and witness")
    p.add_argument("a", type=_rational)
    p.add_argument("--dmax", type=_positive_int)
    output_flags(p)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("graph", help="sample c(a) on a range as CSV or SVG")
    p.add_argument("--from", dest="a_from", type=_rational, required=True)
    p.add_argument("--to", dest="a_to", type=_rational, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    p.add_argument("--dmax", type=_positive_int)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("ech", help="lattice-point capacity lower bounds")
    p.add_argument("a", type=_rational)
    p.add_argument("--amax", type=_positive_int, default=30)
    p.add_argument("--bmax", type=_positive_int, default=30)
    p.add_argument("--terms", type=_positive_int, default=10_000)
    output_flags(p)
    p.set_defaults(func=cmd_ech)

    p = sub.add_parser("nseq", help="the sequence N(a, b) up to a bound")
    p.add_argument("a", type=_rational)
    p.add_argument("b", type=_rational)
    p.add_argument("--bound", type=_rational, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nseq)

    p = sub.add_parser("packing", help="can balls of these weights pack into B(mu)?")
    p.add_argument("weights", type=_rational, nargs="+")
    p.add_argument("--mu", type=_rational, required=True)
    p.add_argument("--dmax", type=_positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_packing)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--nmax", type=_positive_int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns the exit status and everything it printed."""
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            args = build_parser().parse_args(list(argv))
        result = args.func(args)
    except UsageError as exc:
        return 2, buf.getvalue() + str(exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0), buf.getvalue().rstrip("\n")
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        return 1, f"error: {exc}"
    if isinstance(result, tuple):
        return result
    return 0, result


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 or text.startswith("error:") else sys.stdout
    if text:
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
