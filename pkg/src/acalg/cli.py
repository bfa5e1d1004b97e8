"""Command-line front end.

Subcommands wrap the engine:

    dims          dimension table for a carrier (A, g or B)
    normal-form   normal form of an expression
    bracket       graded commutator of two expressions
    cohomology    cohomology table for a differential on a carrier
    mc            Maurer-Cartan checks: check / param / tangent / nullity
    rep           representation tools: verify / example / faithful

Global flags: ``--format {text,json,csv}`` (CSV for tables only),
``--seed`` for anything randomized, ``--max-degree`` as the enumeration cap
(default 12).  Exit codes: 0 success, 1 domain error (JSON error object on
stdout), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import dim_A, graded_commutator
from .cohomology import cohomology_data, get_carrier
from .errors import EngineError, ExprSyntaxError
from .exprs import parse_element, render
from .lie import d_lie, dim_g, lie_generator
from .mc import (
    d_st,
    g1_coordinates,
    g1_element,
    is_mc,
    quotient_nullity,
    strata_nullity,
    tangent_basis,
)
from .reps import (
    build_example_rep,
    load_rep,
    quotient_faithfulness,
    rep_to_dict,
    save_rep,
    verify_relations,
)
from .scalars import scalar_from_text

DEFAULT_CAP = 12


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acalg",
        description="Exact calculus for the almost-complex operator algebra.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    parser.add_argument(
        "--max-degree",
        type=int,
        default=DEFAULT_CAP,
        help=f"cap for degree-indexed tables (default {DEFAULT_CAP})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension table of a carrier")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--carrier", choices=("A", "g", "B"), default="A")

    p = sub.add_parser("normal-form", help="normal form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("bracket", help="graded commutator of two expressions")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("cohomology", help="cohomology table for an inner differential")
    p.add_argument(
        "--diff",
        nargs="+",
        required=True,
        metavar="DIFF",
        help="d | mubar | mu | st <s> <t>",
    )
    p.add_argument("--carrier", choices=("g", "B", "h"), default="g")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--reps", action="store_true", help="include representatives")

    p = sub.add_parser("mc", help="Maurer-Cartan locus tools")
    mc_sub = p.add_subparsers(dest="mc_command", required=True)
    q = mc_sub.add_parser("check", help="test a degree-1 point")
    for name in ("x", "y", "z", "w"):
        q.add_argument(name)
    q = mc_sub.add_parser("param", help="the curve point d_{s,t}")
    q.add_argument("s")
    q.add_argument("t")
    q = mc_sub.add_parser("tangent", help="tangent basis at (s, t)")
    q.add_argument("s")
    q.add_argument("t")
    q = mc_sub.add_parser("nullity", help="nullity of the quotient map on H^1")
    q.add_argument("s")
    q.add_argument("t")

    p = sub.add_parser("rep", help="bigraded representation tools")
    rep_sub = p.add_subparsers(dest="rep_command", required=True)
    q = rep_sub.add_parser("verify", help="check the seven relations on a file")
    q.add_argument("file")
    q = rep_sub.add_parser("example", help="the three-parameter family member")
    q.add_argument("--alpha", default="0")
    q.add_argument("--beta", default="0")
    q.add_argument("--gamma", default="0")
    q.add_argument("--emit", metavar="FILE")
    q = rep_sub.add_parser("faithful", help="quotient faithfulness of a file")
    q.add_argument("file")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _table(fmt: str, header: list[str], rows: list[list], json_payload) -> None:
    if fmt == "json":
        _emit_json(json_payload)
    elif fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(str(cell) for cell in row))
        _emit("\n".join(lines))
    else:
        widths = [
            max(len(str(h)), *(len(str(r[n])) for r in rows)) if rows else len(str(h))
            for n, h in enumerate(header)
        ]
        lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
        for row in rows:
            lines.append("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)))
        _emit("\n".join(lines))


def _check_cap(k: int, cap: int) -> None:
    if k > cap:
        raise UsageError(
            f"--max {k} exceeds the degree cap {cap}; raise --max-degree to allow it"
        )
    if k < 0:
        raise UsageError("--max must be nonnegative")


def _scalar_arg(text: str):
    try:
        return scalar_from_text(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _differential(spec: list[str]):
    if spec == ["d"]:
        return d_lie(), "d"
    if spec == ["mubar"]:
        return lie_generator("mubar"), "mubar"
    if spec == ["mu"]:
        return lie_generator("mu"), "mu"
    if spec and spec[0] == "st":
        if len(spec) != 3:
            raise UsageError("--diff st needs two scalars: st <s> <t>")
        s, t = _scalar_arg(spec[1]), _scalar_arg(spec[2])
        return d_st(s, t), f"st({s},{t})"
    raise UsageError(f"unknown differential {' '.join(spec)!r}")


def _cmd_dims(args) -> None:
    _check_cap(args.max, args.max_degree)
    if args.carrier == "A":
        dims = {k: dim_A(k) for k in range(args.max + 1)}
    elif args.carrier == "g":
        dims = {k: dim_g(k) for k in range(1, args.max + 1)}
    else:
        carrier = get_carrier("B")
        dims = {k: carrier.dim(k) for k in range(args.max + 1)}
    rows = [[k, n] for k, n in dims.items()]
    payload = {
        "carrier": args.carrier,
        "dims": [{"degree": k, "dim": n} for k, n in dims.items()],
    }
    _table(args.format, ["degree", "dim"], rows, payload)


def _cmd_normal_form(args) -> None:
    element = parse_element(args.expr)
    if args.format == "csv":
        raise UsageError("normal-form has no CSV form")
    if args.format == "json":
        _emit_json({"input": args.expr, "normal_form": render(element)})
    else:
        _emit(render(element))


def _cmd_bracket(args) -> None:
    element = graded_commutator(parse_element(args.left), parse_element(args.right))
    if args.format == "csv":
        raise UsageError("bracket has no CSV form")
    if args.format == "json":
        _emit_json({"left": args.left, "right": args.right, "bracket": render(element)})
    else:
        _emit(render(element))


def _cmd_cohomology(args) -> None:
    _check_cap(args.max, args.max_degree)
    diff, diff_name = _differential(args.diff)
    carrier = get_carrier(args.carrier)
    k_min = 0 if carrier.name == "B" else 1
    rows = []
    payload_rows = []
    for k in range(k_min, args.max + 1):
        data = cohomology_data(diff, k, carrier)
        reps = [render(r) for r in data.representatives]
        if args.reps:
            rows.append([k, data.dim, "; ".join(reps)])
        else:
            rows.append([k, data.dim])
        entry = {"degree": k, "dim": data.dim}
        if args.reps:
            entry["representatives"] = reps
        payload_rows.append(entry)
    header = ["degree", "dim"] + (["representatives"] if args.reps else [])
    payload = {"differential": diff_name, "carrier": args.carrier, "table": payload_rows}
    _table(args.format, header, rows, payload)


def _cmd_mc(args) -> None:
    if args.format == "csv":
        raise UsageError("mc has no CSV form")
    if args.mc_command == "check":
        coords = [_scalar_arg(getattr(args, name)) for name in ("x", "y", "z", "w")]
        verdict = is_mc(*coords)
        h1_dim, nullity = quotient_nullity(g1_element(*coords))
        payload = {
            "point": [str(c) for c in coords],
            "is_mc": verdict.is_mc,
            "quadric_values": [str(q) for q in verdict.quadrics],
            "h1_dim": h1_dim,
            "nullity": nullity,
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            _emit(
                f"is_mc: {verdict.is_mc}\nquadrics: "
                + ", ".join(str(q) for q in verdict.quadrics)
                + f"\nh1_dim: {h1_dim}\nnullity: {nullity}"
            )
        return
    s = _scalar_arg(args.s)
    t = _scalar_arg(args.t)
    if args.mc_command == "param":
        element = d_st(s, t)
        payload = {
            "s": str(s),
            "t": str(t),
            "element": render(element.value),
            "coordinates": [str(c) for c in g1_coordinates(element)],
        }
        _emit_json(payload) if args.format == "json" else _emit(render(element.value))
    elif args.mc_command == "tangent":
        first, second = tangent_basis(s, t)
        payload = {
            "s": str(s),
            "t": str(t),
            "tangent": [render(first.value), render(second.value)],
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            _emit(render(first.value) + "\n" + render(second.value))
    elif args.mc_command == "nullity":
        value = strata_nullity(s, t)
        if args.format == "json":
            _emit_json({"s": str(s), "t": str(t), "nullity": value})
        else:
            _emit(str(value))


def _cmd_rep(args) -> None:
    if args.format == "csv":
        raise UsageError("rep has no CSV form")
    if args.rep_command == "verify":
        rep = load_rep(args.file)
        violations = verify_relations(rep)
        payload = {
            "file": args.file,
            "dim": rep.dim,
            "ok": not violations,
            "violations": [
                {
                    "relation": v.relation,
                    "vector": v.vector,
                    "image": [[label, str(c)] for label, c in v.image],
                }
                for v in violations
            ],
        }
        if args.format == "json":
            _emit_json(payload)
        elif violations:
            _emit("\n".join(str(v) for v in violations))
        else:
            _emit("ok")
    elif args.rep_command == "example":
        alpha = _scalar_arg(args.alpha)
        beta = _scalar_arg(args.beta)
        gamma = _scalar_arg(args.gamma)
        rep = build_example_rep(alpha, beta, gamma)
        if args.emit:
            save_rep(rep, args.emit)
            payload = {"written": args.emit, "dim": rep.dim}
            _emit_json(payload) if args.format == "json" else _emit(f"wrote {args.emit}")
        else:
            _emit_json(rep_to_dict(rep))
    elif args.rep_command == "faithful":
        rep = load_rep(args.file)
        value = quotient_faithfulness(rep)
        if args.format == "json":
            _emit_json({"file": args.file, "faithful": value})
        else:
            _emit(str(value))


_COMMANDS = {
    "dims": _cmd_dims,
    "normal-form": _cmd_normal_form,
    "bracket": _cmd_bracket,
    "cohomology": _cmd_cohomology,
    "mc": _cmd_mc,
    "rep": _cmd_rep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _COMMANDS[args.command](args)
    except ExprSyntaxError as exc:
        _emit_json(
            {
                "error": {
                    "type": "ExprSyntaxError",
                    "message": str(exc),
                    "line": exc.line,
                    "column": exc.column,
                }
            }
        )
        return 2
    except UsageError as exc:
        _emit_json({"error": {"type": "UsageError", "message": str(exc)}})
        return 2
    except EngineError as exc:
        _emit_json({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
