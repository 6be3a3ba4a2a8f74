"""Command-line front end.

Every subcommand reads JSON from the files named on the command line (or from
standard input when none is given or the name is ``-``) and writes one JSON
document to standard output. Exit status is 0 on success, 1 on a domain error
and 2 on malformed input; in both failure cases the output is
``{"error": code, "detail": {...}}``.
"""

import argparse
import json
import random
import sys

from graphcob import catalog, cospan, generators, grading, iso, monoidal, morphism, normalize
from graphcob.errors import GafError, MalformedJson, UnknownSubcommand
from graphcob.jsonio import (
    colored_morphism_from_json,
    gaf_from_json,
    loads,
    morphism_from_json,
    to_json,
)

__all__ = ["run", "main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message and "command" in message:
            raise UnknownSubcommand(message)
        raise MalformedJson(message)


def build_parser():
    p = _Parser(prog="graphcob", description="Graph cobordisms between finite sets.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized procedures")
    p.add_argument("--format", choices=["json"], default="json")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, help, inputs="?"):
        s = sub.add_parser(name, help=help)
        s.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        if inputs:
            s.add_argument("inputs", nargs=inputs, default=None, help="JSON input files ('-' for stdin)")
        return s

    cmd("validate", "validate a gaf or morphism")
    s = cmd("iso", "isomorphism test between two gafs", "*")
    s.add_argument("--free", action="store_true", help="allow permuting A and B")
    s = cmd("compose", "compose two gafs or two morphisms", "*")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--horizontal", action="store_true")
    mode.add_argument("--vertical", action="store_true")
    mode.add_argument("--tensor", action="store_true")
    s = cmd("generators", "emit canonical generators", None)
    s.add_argument("--name", choices=sorted(_generator_table()))
    cmd("axioms", "check the generator identities", None)
    cmd("grade", "VE of a gaf, CE grade of a (colored) morphism")
    cmd("leaflike", "leaf-likeness of a colored morphism")
    cmd("spine", "spine factorization of a leaf-like colored morphism")
    s = cmd("normalize", "collapse leaves, bridges, or reduce")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--leaves", action="store_true")
    mode.add_argument("--bridges", action="store_true")
    mode.add_argument("--reduce", action="store_true")
    s.add_argument("--variants", type=int, default=0, help="also report distinct reductions over N random edge orders")
    cmd("nf", "cospan normal form of the realization")
    cmd("functorial-check", "compare NF of a horizontal composite with the composed NFs", "*")
    for name, help in (("enumerate", "gafs up to isomorphism"), ("nerve", "finite truncation of Gr(B, A)")):
        s = cmd(name, help, None)
        s.add_argument("--a", type=int, default=0)
        s.add_argument("--b", type=int, default=0)
        s.add_argument("--max-v", type=int, default=1)
        s.add_argument("--max-e", type=int, default=1)
        if name == "nerve":
            s.add_argument("--limit", type=int, default=20000)
    s = cmd("zigzag", "search a zig-zag of collapses and expansions", "*")
    s.add_argument("--budget", type=int, default=None)
    return p


def _generator_table():
    table = {name: fn for name, fn in generators.GENERATORS.items()}
    table["beta"] = generators.gen_beta
    table["tbeta"] = generators.gen_tbeta
    return table


def _read(name, stdin):
    if name in (None, "-"):
        return loads(stdin.read())
    try:
        with open(name) as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MalformedJson(f"cannot read {name}: {exc.strerror}", path=name) from None


def _read_pair(inputs, stdin):
    """Two documents: either two files, or one JSON array of length two."""
    if len(inputs) == 2:
        return _read(inputs[0], stdin), _read(inputs[1], stdin)
    if len(inputs) > 2:
        raise MalformedJson("expected at most two inputs")
    doc = _read(inputs[0] if inputs else None, stdin)
    if not (isinstance(doc, list) and len(doc) == 2):
        raise MalformedJson("expected a JSON array of two documents")
    return doc[0], doc[1]


def _is_morphism(d):
    return isinstance(d, dict) and "source" in d


def _is_colored(d):
    return isinstance(d, dict) and "morphism" in d


def _dispatch(args, stdin):
    c = args.command
    if c == "validate":
        d = _read(args.inputs, stdin)
        if _is_morphism(d):
            morphism_from_json(d)
            return {"valid": True, "kind": "morphism"}
        gaf_from_json(d)
        return {"valid": True, "kind": "gaf"}
    if c == "iso":
        G, H = (gaf_from_json(d) for d in _read_pair(args.inputs, stdin))
        f = iso.is_isomorphic(G, H, fix_boundary=not args.free)
        return {"isomorphic": f is not None, "iso": f}
    if c == "compose":
        x, y = _read_pair(args.inputs, stdin)
        if args.vertical:
            f, g = morphism_from_json(x), morphism_from_json(y)
            return morphism.compose_v(g, f)
        if _is_morphism(x):
            f, g = morphism_from_json(x), morphism_from_json(y)
            return monoidal.compose_h_m(f, g) if args.horizontal else monoidal.tensor_m(f, g)
        G, H = gaf_from_json(x), gaf_from_json(y)
        return monoidal.compose_h(G, H) if args.horizontal else monoidal.tensor(G, H)
    if c == "generators":
        table = _generator_table()
        if args.name:
            return table[args.name]()
        return {name: fn() for name, fn in table.items()}
    if c == "axioms":
        return generators.verify_graphlike_axioms()
    if c == "grade":
        d = _read(args.inputs, stdin)
        if _is_colored(d):
            fm = colored_morphism_from_json(d)
            return {"grade": grading.grade(fm.underlying), "grade_s": list(grading.grade_s(fm))}
        if _is_morphism(d):
            f = morphism_from_json(d)
            return {"grade": grading.grade(f), "ce": [list(e) for e in grading.ce(f)]}
        G = gaf_from_json(d)
        return {"ve": grading.ve(G)}
    if c == "leaflike":
        fm = colored_morphism_from_json(_read(args.inputs, stdin))
        leaf = grading.is_leaf_like(fm)
        return {"leaf_like": leaf is not None, "leaf": leaf}
    if c == "spine":
        sp = grading.spine(colored_morphism_from_json(_read(args.inputs, stdin)))
        return {
            "case": sp.case,
            "leaf": sp.leaf,
            "spine_edges": [list(e) for e in sp.spine_edges],
            "f_b": sp.f_b,
            "f_s": sp.f_s,
        }
    if c == "normalize":
        G = gaf_from_json(_read(args.inputs, stdin))
        if args.leaves:
            R, f = normalize.collapse_unmarked_leaves(G)
        elif args.bridges:
            R, f = normalize.collapse_bridges(G)
        else:
            R, f = normalize.reduce(G)
        out = {"result": R, "morphism": f}
        if args.reduce and args.variants:
            out["variants"] = normalize.reduce_variants(G, random.Random(args.seed), args.variants)
        return out
    if c == "nf":
        return cospan.realize_nf(gaf_from_json(_read(args.inputs, stdin)))
    if c == "functorial-check":
        G, H = (gaf_from_json(d) for d in _read_pair(args.inputs, stdin))
        left = cospan.realize_nf(monoidal.compose_h(G, H))
        right = cospan.compose_nf(cospan.realize_nf(G), cospan.realize_nf(H))
        return {"holds": left == right, "composite_nf": left, "composed_nf": right}
    if c == "enumerate":
        return catalog.enumerate_gafs(args.a, args.b, args.max_v, args.max_e)
    if c == "nerve":
        return catalog.nerve_export(args.a, args.b, args.max_v, args.max_e, limit=args.limit)
    if c == "zigzag":
        G, H = (gaf_from_json(d) for d in _read_pair(args.inputs, stdin))
        path = catalog.zigzag_connected(G, H, args.budget)
        moves = None if path is None else [{"move": m.kind, "gaf": m.result} for m in path]
        return {"connected": path is not None, "path": moves}
    raise UnknownSubcommand(f"unknown subcommand {c!r}", command=c)


def run(argv, stdin=None, stdout=None):
    """Run one command; returns the exit status."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        result = _dispatch(args, stdin)
        status = 0
    except (MalformedJson, UnknownSubcommand) as exc:
        result, status = exc.to_json(), 2
    except GafError as exc:
        result, status = exc.to_json(), 1
    stdout.write(json.dumps(to_json(result), sort_keys=True) + "\n")
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
