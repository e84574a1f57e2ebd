"""Batch front door: classify, color, decompose, analyze holes, verify
theorems, generate named families, and cross-check against the exact
oracles. One JSON object per input graph on stdout.

Exit status: 0 on success, 1 if a verification found a violation, 2 on
usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .coloring import (
    StructuralContradiction,
    color_diamond_class,
    color_gem_class,
    color_kite_class,
)
from .enumerate import connected_graphs
from .families import FAMILY_NAMES, generate
from .graphs import (
    DEFAULT_ORACLE_LIMIT,
    Graph,
    GraphError,
    graph_stats,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .hole_lab import (
    all_seven_holes,
    check_diamond_properties,
    check_gem_properties,
    partition_around_hole,
)
from .patterns import class_membership, find_hole
from .structure import decompose_into_atoms
from .verify import THEOREMS, standard_blowup_corpus, verify_corpus

_COLORERS = {
    "diamond": color_diamond_class,
    "kite": color_kite_class,
    "gem": color_gem_class,
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="p7c4", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--corpus", help="input file of graph6 lines ('-' for stdin)")
        p.add_argument("--family", help="named family: " + ", ".join(FAMILY_NAMES))
        p.add_argument("--param", action="append", default=[], metavar="K=V",
                       help="family parameter, repeatable (e.g. --param t=2 --param sizes=2,2)")
        p.add_argument("--format", choices=("graph6", "edgelist", "auto"), default="auto",
                       help="corpus format (edgelist: one 'n m' header plus pairs per file)")
        p.add_argument("--json", action="store_true", help="pretty-print JSON output")

    p = sub.add_parser("classify", help="class membership with witness")
    p.add_argument("--class", dest="cls", required=True, choices=("diamond", "kite", "gem"))
    add_io(p)

    p = sub.add_parser("color", help="certified coloring for a class member")
    p.add_argument("--class", dest="cls", required=True, choices=("diamond", "kite", "gem"))
    add_io(p)

    p = sub.add_parser("decompose", help="clique-cutset atom decomposition")
    add_io(p)

    p = sub.add_parser("analyze-hole", help="7-hole neighborhood partition and property battery")
    p.add_argument("--mode", required=True, choices=("diamond", "gem"))
    p.add_argument("--all-holes", action="store_true", help="analyze every 7-hole, not just the first")
    add_io(p)

    p = sub.add_parser("verify", help="theorem verification over a corpus")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--exhaustive", type=int, metavar="N",
                   help="all connected graphs with at most N vertices")
    p.add_argument("--blowups", metavar="BASE:TOTAL",
                   help="standard blowup corpus of a named base, e.g. Petersen:20")
    p.add_argument("--sample", type=int, metavar="K",
                   help="randomly subsample the corpus to K graphs (needs --seed for non-default runs)")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample (default 0)")
    add_io(p)

    p = sub.add_parser("generate", help="emit a named family instance as graph6")
    p.add_argument("--family", required=True)
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle-check", help="exact omega/chi/delta, optionally vs a class coloring")
    p.add_argument("--class", dest="cls", choices=("diamond", "kite", "gem"))
    p.add_argument("--limit", type=int, default=DEFAULT_ORACLE_LIMIT, help="chi oracle vertex limit")
    add_io(p)

    return top


def _params(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise GraphError(f"--param needs K=V, got {pair!r}")
        k, v = pair.split("=", 1)
        out[k] = v
    return out


def _read_corpus(args) -> list[tuple[str, Graph]]:
    """Labeled input graphs from --family, --corpus, or stdin."""
    if getattr(args, "family", None):
        g = generate(args.family, **_params(args.param))
        return [(args.family, g)]
    stream = None
    if getattr(args, "corpus", None):
        stream = sys.stdin if args.corpus == "-" else open(args.corpus)
    elif not sys.stdin.isatty():
        stream = sys.stdin
    if stream is None:
        raise GraphError("no input: give --corpus, --family, or pipe graph6 lines on stdin")
    text = stream.read()
    if stream is not sys.stdin:
        stream.close()
    fmt = getattr(args, "format", "auto")
    if fmt == "edgelist" or (fmt == "auto" and _looks_like_edgelist(text)):
        return [("edgelist", parse_edge_list(text))]
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        out.append((line, parse_graph6(line)))
    if not out:
        raise GraphError("corpus is empty")
    return out


def _looks_like_edgelist(text: str) -> bool:
    head = text.lstrip()[:1]
    return head.isdigit()  # graph6 bytes are all >= chr(63), digits are not


def _emit(obj: dict, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def _per_graph(args, fn) -> int:
    for _label, g in _read_corpus(args):
        result = fn(g)
        _emit({"input": write_graph6(g), "command": args.command, "result": result},
              args.json)
    return 0


def _analyze(g: Graph, mode: str, all_holes: bool) -> dict:
    checker = check_diamond_properties if mode == "diamond" else check_gem_properties
    if all_holes:
        holes = all_seven_holes(g)
    else:
        w = find_hole(g, 7)
        holes = [w.vertices] if w else []
    reports = []
    for hole in holes:
        part = partition_around_hole(g, hole, mode)
        reports.append({
            "partition": part.to_json(),
            "properties": [r.to_json() for r in checker(g, part)],
        })
    return {"mode": mode, "holes": len(reports), "analyses": reports}


def cli_main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "classify":
            return _per_graph(args, lambda g: class_membership(g, args.cls).to_json())
        if args.command == "color":
            def run(g):
                cert = _COLORERS[args.cls](g)
                out = cert.to_json()
                out["bound"] = out.pop("claimed_bound")
                return out
            return _per_graph(args, run)
        if args.command == "decompose":
            return _per_graph(args, lambda g: decompose_into_atoms(g).to_json())
        if args.command == "analyze-hole":
            return _per_graph(args, lambda g: _analyze(g, args.mode, args.all_holes))
        if args.command == "generate":
            g = generate(args.family, **_params(args.param))
            _emit({"input": None, "command": "generate",
                   "result": {"family": args.family, "n": g.n, "m": g.edge_count(),
                              "graph6": write_graph6(g)}}, args.json)
            return 0
        if args.command == "oracle-check":
            def run(g):
                stats = graph_stats(g, args.limit)  # chi is None past the limit
                out = {"omega": stats.omega, "chi": stats.chi, "delta": stats.delta,
                       "connected": stats.connected}
                if args.cls:
                    cert = _COLORERS[args.cls](g)
                    out["colors_used"] = cert.colors_used
                    out["bound"] = cert.claimed_bound
                    if stats.chi is not None:
                        out["oracle_chi_le_colors"] = stats.chi <= cert.colors_used
                return out
            return _per_graph(args, run)
        if args.command == "verify":
            return _verify(args)
        raise GraphError(f"unknown command {args.command!r}")
    except StructuralContradiction as exc:
        _emit({"error": "structural-contradiction", "detail": str(exc),
               "graph6": exc.graph6}, getattr(args, "json", False))
        return 1
    except (GraphError, OSError, KeyError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


def _verify(args) -> int:
    labeled: list[tuple[str, Graph]] = []
    desc = []
    if args.exhaustive:
        for n in range(1, args.exhaustive + 1):
            for g in connected_graphs(n):
                labeled.append((write_graph6(g), g))
        desc.append(f"exhaustive connected n<={args.exhaustive}")
    if args.blowups:
        base, _, total = args.blowups.partition(":")
        labeled.extend(standard_blowup_corpus(base, int(total or 20)))
        desc.append(f"blowups {args.blowups}")
    if args.family or args.corpus or (not labeled and not sys.stdin.isatty()):
        labeled.extend(_read_corpus(args))
        desc.append(args.family or args.corpus or "stdin")
    if not labeled:
        raise GraphError("no corpus: give --exhaustive, --blowups, --corpus, or --family")
    if args.sample and args.sample < len(labeled):
        rng = random.Random(args.seed)
        labeled = rng.sample(labeled, args.sample)
        desc.append(f"sample {args.sample} seed {args.seed}")
    run = verify_corpus((g for _, g in labeled), args.theorem, corpus="; ".join(desc))
    _emit({"input": None, "command": "verify", "result": run.to_json()}, args.json)
    return 1 if run.violated else 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
