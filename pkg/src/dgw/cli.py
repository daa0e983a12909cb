"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad diagram, failed check,
...), 2 on a usage error (bad flags, unreadable input file).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from dgw import diagrams as dg
from dgw.families import fibonacci_presentation, johnson_presentation, parse_instance
from dgw.geometry import realize, render_dot
from dgw.isomorphisms import phi, psi
from dgw.plmaps import PLMap, compose_pl, diagram_to_plmap, validate_fr
from dgw.presentations import parse_presentation
from dgw.sampling import random_fword
from dgw.semigroups import DEFAULT_MAX_LEN, DEFAULT_MAX_STATES, count_elements, word_equal
from dgw.thompson import FWord, generator, normal_form, pr, relation_holds, word_to_diagram


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _presentation(arg: str):
    text = arg if arg.lstrip().startswith("<") else _read(arg)
    return parse_presentation(text.strip())


def _emit(args, fields: dict, text: str):
    if args.format == "json":
        print(json.dumps(fields))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _diagram_fields(d: dg.Diagram) -> dict:
    p = d.presentation
    return {"base": p.show(d.top), "bottom": p.show(d.bottom), "cells": len(d.atoms),
            "atoms": [str(a) for a in d.atoms]}


def cmd_diagram(args):
    p = _presentation(args.presentation)
    ds = [dg.parse_diagram(_read(f), p) for f in args.files]
    need = {"compose": 2, "sum": 2}.get(args.op, 1)
    if len(ds) != need:
        raise UsageError(f"diagram {args.op} takes {need} file(s)")
    d = ds[0]
    if args.op == "split":
        upper, lower = dg.split(d)
        fields = {"middle": p.show(upper.bottom), "left": [str(a) for a in upper.atoms],
                  "right": [str(a) for a in lower.atoms]}
        text = f"# left\n{dg.format_diagram(upper)}# right\n{dg.format_diagram(lower)}"
        return _emit(args, fields, text)
    if args.op in ("stats", "render"):
        g = realize(d)
        if args.op == "render":
            dot = render_dot(g)
            return _emit(args, {"dot": dot}, dot)
        fields = {"vertices": g.num_vertices, "edges": len(g.edges), "cells": len(g.cells),
                  "top": p.show(d.top), "bottom": p.show(d.bottom), "reduced": dg.is_reduced(d)}
        return _emit(args, fields, f"vertices={g.num_vertices} edges={len(g.edges)} cells={len(g.cells)}")
    ops = {
        "reduce": lambda: dg.reduce(d),
        "canon": lambda: dg.canon(d),
        "invert": lambda: dg.invert(d),
        "compose": lambda: dg.compose(ds[0], ds[1]),
        "sum": lambda: dg.sum(ds[0], ds[1]),
    }
    out = ops[args.op]()
    _emit(args, _diagram_fields(out), dg.format_diagram(out))


def cmd_thompson(args):
    r = args.r
    if args.op == "gen":
        d = generator(r, args.i)
        return _emit(args, _diagram_fields(d), dg.format_diagram(d))
    if args.op == "relcheck":
        ok = relation_holds(r, args.i, args.j)
        return _emit(args, {"r": r, "i": args.i, "j": args.j, "holds": ok}, "true" if ok else "false")
    w = FWord.parse(r, args.word)
    if args.op == "nf":
        nf = normal_form(r, w)
        return _emit(args, {"r": r, "word": str(w), "normal_form": str(nf)}, str(nf))
    d = word_to_diagram(r, w)
    _emit(args, _diagram_fields(d), dg.format_diagram(d))


def cmd_plmap(args):
    if args.op == "of":
        d = dg.parse_diagram(_read(args.files[0]), _presentation(args.presentation))
        f = diagram_to_plmap(d)
        return _emit(args, {"plmap": str(f), "unit": str(f.unit())}, str(f))
    maps = [PLMap.parse(_read(x)) for x in args.files]
    if args.op == "compose":
        f = compose_pl(maps[0], maps[1])
        return _emit(args, {"plmap": str(f)}, str(f))
    ok = validate_fr(maps[0], args.r)
    _emit(args, {"r": args.r, "valid": ok}, "true" if ok else "false")


def cmd_family(args):
    if args.op == "instance":
        inst = parse_instance(args.params[0])
        fields = {"instance": inst.name, "target": str(inst.target), "rprime": inst.rprime}
        return _emit(args, fields, f"{inst.name} {inst.target} rprime={inst.rprime}")
    try:
        nums = [int(x) for x in args.params]
    except ValueError as exc:
        raise UsageError("family parameters must be integers") from exc
    if args.op == "fib":
        p = fibonacci_presentation(nums[0])
    else:
        p = johnson_presentation(*nums)
    _emit(args, {"presentation": str(p)}, str(p))


def cmd_iso(args):
    inst = parse_instance(args.instance)
    if args.op == "phi":
        out = phi(inst, dg.parse_diagram(_read(args.file), pr(inst.rprime)))
        return _emit(args, _diagram_fields(out), dg.format_diagram(out))
    if args.op == "psi":
        out = psi(inst, dg.parse_diagram(_read(args.file), inst.target))
        return _emit(args, _diagram_fields(out), dg.format_diagram(out))
    rng = random.Random(args.seed)
    r = inst.rprime
    if args.word is not None:
        words = [FWord.parse(r, args.word)] * max(args.samples, 1)
    else:
        words = [random_fword(r, rng) for _ in range(args.samples)]
    failures = []
    for w in words:
        d = word_to_diagram(r, w)
        if not dg.equal(psi(inst, phi(inst, d)), d):
            failures.append(str(w))
    ok = not failures
    fields = {"instance": inst.name, "seed": args.seed, "samples": len(words),
              "failures": len(failures), "result": "pass" if ok else "fail"}
    text = f"instance={inst.name} seed={args.seed} samples={len(words)} failures={len(failures)} {'pass' if ok else 'fail'}"
    for w in failures:
        text += f"\nfailed: {w}"
    _emit(args, fields, text)
    return 0 if ok else 1


def cmd_semigroup(args):
    p = _presentation(args.presentation)
    if args.op == "count":
        n = count_elements(p, args.max_len, args.max_states)
        value = "unknown" if n is None else str(n)
        return _emit(args, {"presentation": str(p), "elements": n}, value)
    u, v = (p.word(w) for w in args.words)
    verdict = word_equal(p, u, v, args.max_len, args.max_states)
    fields = {"verdict": verdict.kind, "max_len": args.max_len, "max_states": args.max_states,
              "derivation": [str(a) for a in verdict.derivation.atoms] if verdict.derivation else None}
    text = str(verdict)
    if verdict.derivation is not None:
        text += "\n" + dg.format_diagram(verdict.derivation)
    _emit(args, fields, text)


def cmd_verify(args):
    from dgw.verify import run_all

    results = run_all(args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"seed": args.seed, "passed": sum(r.passed for r in results),
                          "total": len(results), "failed": [r.index for r in results if not r.passed]}))
    else:
        print(f"seed={args.seed}")
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dgw", description="Diagram groups and generalized Thompson groups.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    groups = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, func, help=None):
        sp = group.add_parser(name, parents=[fmt], help=help)
        sp.set_defaults(func=func, op=name)
        return sp

    g = groups.add_parser("diagram", help="diagram calculus on diagram files").add_subparsers(dest="op", required=True)
    for name in ("reduce", "canon", "compose", "sum", "invert", "split", "stats", "render"):
        sp = leaf(g, name, cmd_diagram)
        sp.add_argument("files", nargs="+")
        sp.add_argument("-p", "--presentation", required=True, help="presentation text or file")

    g = groups.add_parser("thompson", help="generators and words of F_r").add_subparsers(dest="op", required=True)
    sp = leaf(g, "gen", cmd_thompson)
    sp.add_argument("--i", type=int, required=True)
    for name in ("nf", "word2diag"):
        sp = leaf(g, name, cmd_thompson)
        sp.add_argument("word", help="e.g. 'x0 x3 X2'")
    sp = leaf(g, "relcheck", cmd_thompson)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    for sp in g.choices.values():
        sp.add_argument("--r", type=int, required=True)

    g = groups.add_parser("plmap", help="piecewise-linear maps").add_subparsers(dest="op", required=True)
    sp = leaf(g, "of", cmd_plmap)
    sp.add_argument("files", nargs=1, metavar="diagram")
    sp.add_argument("-p", "--presentation", required=True)
    sp = leaf(g, "compose", cmd_plmap)
    sp.add_argument("files", nargs=2, metavar="plmap")
    sp = leaf(g, "check", cmd_plmap)
    sp.add_argument("files", nargs=1, metavar="plmap")
    sp.add_argument("--r", type=int, required=True)

    g = groups.add_parser("family", help="Fibonacci/Johnson presentations and instances").add_subparsers(dest="op", required=True)
    leaf(g, "fib", cmd_family).add_argument("params", nargs=1, metavar="n")
    leaf(g, "johnson", cmd_family).add_argument("params", nargs=2, metavar="n_r")
    leaf(g, "instance", cmd_family).add_argument("params", nargs=1, metavar="name")

    g = groups.add_parser("iso", help="the maps phi and psi").add_subparsers(dest="op", required=True)
    leaf(g, "phi", cmd_iso).add_argument("file")
    leaf(g, "psi", cmd_iso).add_argument("file")
    sp = leaf(g, "roundtrip", cmd_iso)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--word", help="use this F-word instead of random samples")
    for sp in g.choices.values():
        sp.add_argument("--instance", required=True, help="fib3, fib4, johnson-odd:S or johnson-even:S")

    g = groups.add_parser("semigroup", help="bounded word problem and element count").add_subparsers(dest="op", required=True)
    leaf(g, "count", cmd_semigroup)
    leaf(g, "eq", cmd_semigroup).add_argument("words", nargs=2, metavar="word")
    for sp in g.choices.values():
        sp.add_argument("-p", "--presentation", required=True)
        sp.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
        sp.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)

    g = groups.add_parser("verify", help="run the acceptance checks").add_subparsers(dest="op", required=True)
    leaf(g, "all", cmd_verify).add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"dgw: usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as exc:
        print(f"dgw: error: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
