"""Command-line workbench.

Exit status: 0 success, 1 a check failed or the mathematics rejected the input
(not a cocycle, color mismatch, size guard), 2 usage errors (bad arguments,
missing or malformed files).
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from .cocycles import NotACocycle, check_cocycle, cyclic_cocycle, is_normalized, normalize
from .contexts import context_names, load_context
from .evaluator import SizeGuardExceeded, evaluate
from .formats import (FormatError, cocycle_from_json, cocycle_to_json, dump_json,
                      genset_from_json, group_from_json, group_to_json, load_json,
                      vector_from_json, vector_to_json)
from .groups import FreeGroup, cyclic_group
from .pacore import ColorMismatch, InvalidBasisElement
from .scalars import ConductorOverflow
from .structure import dim_pn, export_dot, graph_to_json, principal_graph
from .suites import SUITES, run_suites
from .tangles import TangleError, TangleSyntaxError, color_of, parse_tangle, to_sexp

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load(path: str):
    try:
        return load_json(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _group(path: str):
    return group_from_json(_load(path))


def _group_and_cocycle(args):
    raw = _load(args.cocycle)
    if args.group:
        group = _group(args.group)
    elif isinstance(raw, dict) and raw.get("rule") == "cyclic":
        group = cyclic_group(int(raw["m"]))
    else:
        raise UsageError("--group is required unless the cocycle is a cyclic rule")
    return group, cocycle_from_json(raw, group)


# subcommands --------------------------------------------------------------------------

def cmd_verify_cocycle(args) -> int:
    group, omega = _group_and_cocycle(args)
    if isinstance(group, FreeGroup):
        ok, checked, where = True, 0, None
        detail = "free group: only the trivial cocycle is admitted"
    else:
        rep = check_cocycle(omega)
        ok, checked, where = rep.ok, rep.checked, rep.violation
        detail = rep.describe()
    normalized = is_normalized(omega) if ok else False
    names = None if where is None else [group.name(g) for g in where]
    _emit(args, {"ok": ok, "checked": checked, "violation": names, "normalized": normalized},
          ("PASS " if ok else "FAIL ") + detail
          + ("" if not ok else f"; normalized: {'yes' if normalized else 'no'}"))
    return 0 if ok else 1


def cmd_normalize_cocycle(args) -> int:
    group, omega = _group_and_cocycle(args)
    out = normalize(omega)
    doc = cocycle_to_json(out, args.group or "group.json")
    if args.output:
        dump_json(doc, args.output)
    changed = not is_normalized(omega)
    _emit(args, {"cocycle": doc, "changed": changed},
          f"normalized cocycle written to {args.output}" if args.output else dump_json(doc))
    return 0


def cmd_gen_cocycle(args) -> int:
    if args.kind != "cyclic":
        raise UsageError(f"unknown cocycle family {args.kind!r}")
    if args.m < 1 or not 0 <= args.q < args.m:
        raise UsageError("need m >= 1 and 0 <= q < m")
    omega = cyclic_cocycle(args.m, args.q)
    if args.entries:
        omega_table = type(omega)(omega.group, table=omega.table())
        doc = cocycle_to_json(omega_table, args.group_out or "group.json")
    else:
        doc = cocycle_to_json(omega)
    if args.output:
        dump_json(doc, args.output)
    if args.group_out:
        dump_json(group_to_json(cyclic_group(args.m)), args.group_out)
    _emit(args, {"cocycle": doc}, f"cocycle written to {args.output}" if args.output
          else dump_json(doc))
    return 0


def _genset(args):
    group = _group(args.group)
    return genset_from_json(_load(args.genset), group)


def cmd_dims(args) -> int:
    gs = _genset(args)
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    dims = {n: dim_pn(gs, n) for n in range(args.n + 1)}
    _emit(args, {"n": args.n, "dim": dims[args.n], "dims": [dims[n] for n in dims]},
          str(dims[args.n]))
    return 0


def cmd_principal_graph(args) -> int:
    gs = _genset(args)
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    graph = principal_graph(gs, args.depth)
    if args.dot:
        Path(args.dot).write_text(export_dot(graph), encoding="utf-8")
    doc = graph_to_json(graph)
    lines = [f"V{n}: {' '.join(layer) if layer else '(empty)'}"
             for n, layer in enumerate(doc["layers"])]
    lines += [f"{e['from']} -- {e['to']} x{e['mult']}" for e in doc["edges"]]
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_eval(args) -> int:
    ctx = load_context(args.ctx)
    try:
        text = Path(args.tangle).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.tangle}") from None
    tangle = parse_tangle(text)
    inputs = [vector_from_json(_load(p), ctx.genset) for p in args.inputs]
    _, slots = color_of(tangle)
    if len(inputs) != len(slots):
        raise DomainError(f"{to_sexp(tangle)} has {len(slots)} input slots, "
                          f"got {len(inputs)} vectors")
    out = evaluate(ctx, tangle, inputs)
    doc = vector_to_json(out, ctx.genset)
    if args.output:
        dump_json(doc, args.output)
    text = (f"wrote {len(out)} terms of color {out.color} to {args.output}" if args.output
            else dump_json(doc))
    _emit(args, doc, text)
    return 0


def cmd_check_suite(args) -> int:
    ctx = load_context(args.ctx)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = run_suites(ctx, args.suite, seed=args.seed)
    ok = all(r.passed for r in reports)
    lines = [f"seed {args.seed}, context {args.ctx}"]
    for r in reports:
        lines.append(r.line())
        lines.extend("    " + f for f in r.failures)
    _emit(args, {"seed": args.seed, "context": args.ctx, "passed": ok,
                 "suites": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if ok else 1


def cmd_contexts(args) -> int:
    names = context_names()
    _emit(args, {"contexts": names}, "\n".join(names))
    return 0


# parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diagpa", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("verify-cocycle", cmd_verify_cocycle, "check the 3-cocycle identity")
    sp.add_argument("--group")
    sp.add_argument("--cocycle", required=True)

    sp = add("normalize-cocycle", cmd_normalize_cocycle, "normalize a cocycle")
    sp.add_argument("--group")
    sp.add_argument("--cocycle", required=True)
    sp.add_argument("-o", "--output")

    sp = add("gen-cocycle", cmd_gen_cocycle, "generate a standard cocycle")
    sp.add_argument("kind", choices=["cyclic"])
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--group-out", help="also write the group Z_m to this file")
    sp.add_argument("--entries", action="store_true", help="write an explicit phase table")

    sp = add("dims", cmd_dims, "dimension of P_n")
    sp.add_argument("--group", required=True)
    sp.add_argument("--genset", required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("principal-graph", cmd_principal_graph, "layered principal graph")
    sp.add_argument("--group", required=True)
    sp.add_argument("--genset", required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--dot")

    sp = add("eval", cmd_eval, "evaluate a tangle on input vectors")
    sp.add_argument("--ctx", required=True, help="bundled context name or context file")
    sp.add_argument("--tangle", required=True)
    sp.add_argument("--inputs", nargs="*", default=[])
    sp.add_argument("-o", "--output")

    sp = add("check-suite", cmd_check_suite, "run self-check suites")
    sp.add_argument("--ctx", required=True, help="bundled context name or context file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--suite", default="all", choices=["all", *SUITES])

    add("contexts", cmd_contexts, "list bundled contexts")
    return p


_USAGE = (UsageError, FormatError, TangleSyntaxError, FileNotFoundError, IsADirectoryError,
          KeyError)
_DOMAIN = (DomainError, NotACocycle, ColorMismatch, InvalidBasisElement, SizeGuardExceeded,
           ConductorOverflow, TangleError, OverflowError, ValueError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.fn(args)
        for w in caught:
            sys.stderr.write(f"warning: {w.message}\n")
        return code
    except _USAGE as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _DOMAIN as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
