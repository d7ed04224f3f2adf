"""Command-line front end.

Subcommands::

    analyze  -f G.tg [--json]            decidability report (file or directory)
    nf       -f G.tg -w WORD             normal form of a word
    eq       -f G.tg -w1 W1 -w2 W2       word equality (exit 10 when unequal)
    subgroup -f G.tg -x APEX [--verify]  index-2 subgroup presentation graph
    rewrite  -f G.tg -x APEX -w WORD     rewrite into subgroup generators
    inr      -f G.tg                     cone-class recognition (exit 10 if not)
    enum     -n K --out DIR              write all K-vertex mixed graphs
    oracle   -f G.tg -w WORD -r R        brute-force equivalence class

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
violation, 10 negative decision.  Every subcommand accepts --json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import report as report_mod
from .classify import Cone, Leaf, Union, decomposition_to_obj, is_in_class_r
from .errors import ParseError, TraagError
from .graphs import MixedGraph, enumerate_mixed_graphs, parse_graph, serialize_graph
from .subgroups import (
    apex_subgroup_graph,
    rewrite_into_subgroup,
    verify_subgroup_presentation,
)
from .words import (
    bfs_equivalence_class,
    equals,
    normal_form,
    parse_word,
    serialize_word,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NEGATIVE = 10


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through our own codes.
    def error(self, message):
        raise _UsageError(message)


def _load_graph(path: str) -> MixedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _get_word(args, g, slot=""):
    inline = getattr(args, "word" + slot)
    path = getattr(args, "word_file" + slot)
    if inline is not None:
        return parse_word(inline, graph=g)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_word(fh.read(), graph=g)


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _render_decomposition(d, depth=0):
    pad = "  " * depth
    if isinstance(d, Leaf):
        return ["%sleaf(%s)" % (pad, d.vertex)]
    if isinstance(d, Union):
        lines = ["%sunion" % pad]
        for part in d.parts:
            lines.extend(_render_decomposition(part, depth + 1))
        return lines
    if isinstance(d, Cone):
        kinds = " ".join("%s=%s" % (v, k) for v, k in d.kinds)
        lines = ["%scone(tip=%s, %s)" % (pad, d.tip, kinds)]
        lines.extend(_render_decomposition(d.base, depth + 1))
        return lines
    raise TypeError("not a decomposition node: %r" % (d,))


def _cmd_analyze(args) -> int:
    if os.path.isdir(args.file):
        paths = sorted(
            os.path.join(args.file, name)
            for name in os.listdir(args.file)
            if name.endswith(".tg")
        )
        batch = report_mod.batch_analyze_paths(paths)
        if args.json:
            _emit_json(
                {
                    "reports": [
                        {"path": name, "report": report_mod.report_to_obj(r)}
                        for name, r in batch.reports
                    ],
                    "errors": [
                        {"path": name, "error": msg} for name, msg in batch.errors
                    ],
                    "summary": batch.summary,
                }
            )
        else:
            for name, r in batch.reports:
                print("== %s ==" % name)
                print(report_mod.render_text(r))
                print()
            for name, msg in batch.errors:
                print("== %s ==" % name)
                print("error: %s" % msg)
                print()
            print("summary: %s" % json.dumps(batch.summary))
        return EXIT_OK
    g = _load_graph(args.file)
    r = report_mod.analyze(g)
    if args.json:
        _emit_json(report_mod.report_to_obj(r))
    else:
        print(report_mod.render_text(r))
    return EXIT_OK


def _cmd_nf(args) -> int:
    g = _load_graph(args.file)
    w = _get_word(args, g)
    nf = normal_form(g, w)
    if args.json:
        _emit_json({"input": serialize_word(w), "normal_form": serialize_word(nf)})
    else:
        print(serialize_word(nf))
    return EXIT_OK


def _cmd_eq(args) -> int:
    g = _load_graph(args.file)
    w1 = _get_word(args, g, "1")
    w2 = _get_word(args, g, "2")
    n1 = normal_form(g, w1)
    n2 = normal_form(g, w2)
    same = n1 == n2
    if args.json:
        _emit_json(
            {
                "equal": same,
                "normal_form_1": serialize_word(n1),
                "normal_form_2": serialize_word(n2),
            }
        )
    else:
        print("equal" if same else "not equal")
    return EXIT_OK if same else EXIT_NEGATIVE


def _cmd_subgroup(args) -> int:
    g = _load_graph(args.file)
    verification = None
    if args.verify:
        verification = verify_subgroup_presentation(g, args.apex)
        result = verification.result
    else:
        result = apex_subgroup_graph(g, args.apex)
    tables = {
        "apex": result.apex,
        "apex_square": result.apex_square,
        "generator_map": {
            v: serialize_word(w) for v, w in result.generator_map.items()
        },
        "conjugation_table": dict(result.conjugation_table),
    }
    if verification is not None:
        tables["verification"] = {
            "all_ok": verification.all_ok,
            "checks": [
                {
                    "edge": "%s %s %s"
                    % (c.edge.u, ">" if c.edge.directed else "-", c.edge.v),
                    "relator": serialize_word(c.relator),
                    "image": serialize_word(c.image),
                    "ok": c.ok,
                }
                for c in verification.checks
            ],
        }
    if args.json:
        _emit_json({"delta": serialize_graph(result.delta), **tables})
    else:
        print(serialize_graph(result.delta))
        print()
        _emit_json(tables)
    if verification is not None and not verification.all_ok:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_rewrite(args) -> int:
    g = _load_graph(args.file)
    w = _get_word(args, g)
    rewritten = rewrite_into_subgroup(g, args.apex, w, normalize=args.normalize)
    if rewritten is None:
        if args.json:
            _emit_json({"in_subgroup": False, "rewritten": None})
        else:
            print("not in the index-2 subgroup")
        return EXIT_NEGATIVE
    if args.json:
        _emit_json({"in_subgroup": True, "rewritten": serialize_word(rewritten)})
    else:
        print(serialize_word(rewritten))
    return EXIT_OK


def _cmd_inr(args) -> int:
    g = _load_graph(args.file)
    decomposition = is_in_class_r(g)
    if args.json:
        _emit_json(
            {
                "in_class_r": decomposition is not None,
                "decomposition": (
                    decomposition_to_obj(decomposition)
                    if decomposition is not None
                    else None
                ),
            }
        )
    elif decomposition is None:
        print("not in class R")
    else:
        print("\n".join(_render_decomposition(decomposition)))
    return EXIT_OK if decomposition is not None else EXIT_NEGATIVE


def _cmd_enum(args) -> int:
    graphs = list(enumerate_mixed_graphs(args.count))
    os.makedirs(args.out, exist_ok=True)
    width = len(str(len(graphs) - 1))
    for i, g in enumerate(graphs):
        name = "g%0*d.tg" % (width, i)
        with open(os.path.join(args.out, name), "w", encoding="utf-8") as fh:
            fh.write(serialize_graph(g) + "\n")
    if args.json:
        _emit_json({"count": len(graphs), "vertices": args.count, "dir": args.out})
    else:
        print("wrote %d graphs to %s" % (len(graphs), args.out))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.file)
    w = _get_word(args, g)
    members = bfs_equivalence_class(g, w, args.radius)
    ordered = sorted(members, key=lambda m: (m.letter_length, m.syllables))
    if args.json:
        _emit_json(
            {
                "word": serialize_word(w),
                "radius": args.radius,
                "class_size": len(ordered),
                "members": [serialize_word(m) for m in ordered],
            }
        )
    else:
        for m in ordered:
            print(serialize_word(m))
    return EXIT_OK


def _add_word_args(sub, slot=""):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("-w" + slot, "--word" + slot, dest="word" + slot)
    group.add_argument("--word-file" + slot, dest="word_file" + slot)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="traag", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--seed", type=int, default=0, help="reserved for sampling subcommands"
    )
    subs = parser.add_subparsers(dest="command")

    def add(name, func, help_text):
        sub = subs.add_parser(name, help=help_text)
        sub.set_defaults(func=func)
        sub.add_argument("--json", action="store_true")
        return sub

    sub = add("analyze", _cmd_analyze, "decidability report for a graph or directory")
    sub.add_argument("-f", "--file", required=True)

    sub = add("nf", _cmd_nf, "normal form of a word")
    sub.add_argument("-f", "--file", required=True)
    _add_word_args(sub)

    sub = add("eq", _cmd_eq, "decide word equality")
    sub.add_argument("-f", "--file", required=True)
    _add_word_args(sub, "1")
    _add_word_args(sub, "2")

    sub = add("subgroup", _cmd_subgroup, "index-2 subgroup presentation at an apex")
    sub.add_argument("-f", "--file", required=True)
    sub.add_argument("-x", "--apex", required=True)
    sub.add_argument("--verify", action="store_true")

    sub = add("rewrite", _cmd_rewrite, "rewrite a word into subgroup generators")
    sub.add_argument("-f", "--file", required=True)
    sub.add_argument("-x", "--apex", required=True)
    sub.add_argument("--normalize", action="store_true")
    _add_word_args(sub)

    sub = add("inr", _cmd_inr, "recognize cone-class membership")
    sub.add_argument("-f", "--file", required=True)

    sub = add("enum", _cmd_enum, "write all mixed graphs on n vertices")
    sub.add_argument("-n", "--count", type=int, required=True)
    sub.add_argument("--out", required=True)

    sub = add("oracle", _cmd_oracle, "brute-force word equivalence class")
    sub.add_argument("-f", "--file", required=True)
    _add_word_args(sub)
    sub.add_argument("-r", "--radius", type=int, required=True)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except TraagError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
