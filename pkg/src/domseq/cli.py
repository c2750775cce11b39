"""Command-line front end.

Subcommands: solve, verify, recognize, bounds, gen, blowup, crosscheck.
Graphs travel as edge-list text (see graph.parse_edge_list); results are
printed as text or JSON.  Exit codes: 0 ok, 1 unsupported or too large,
2 malformed input, 3 crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import TextIO

from . import bounds as bounds_mod
from . import classgen, decomposition, reductions, sequence, solvers
from .graph import Graph, GraphError, format_edge_list, parse_edge_list
from .oracle import (
    DEFAULT_LIMIT,
    IsolatedVertexError,
    OracleLimitError,
    oracle_mdns,
)

EXIT_OK = 0
EXIT_UNSUPPORTED = 1
EXIT_MALFORMED = 2
EXIT_MISMATCH = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domseq",
        description="Grundy double domination sequences: solvers, verifiers, and generators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_input=True):
        if with_input:
            p.add_argument("--input", default="-", help="edge-list file, '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="oracle size limit")

    p = sub.add_parser("solve", help="compute a maximum DNS")
    add_io(p)
    p.add_argument(
        "--method",
        choices=("auto", "oracle", "tree", "threshold", "cograph", "p4tidy"),
        default="auto",
    )

    p = sub.add_parser("verify", help="verify a vertex sequence")
    add_io(p)
    p.add_argument("--sequence", required=True, help="comma-separated vertex ids")

    p = sub.add_parser("recognize", help="modular decomposition")
    add_io(p)

    p = sub.add_parser("bounds", help="bound report")
    add_io(p)

    p = sub.add_parser("gen", help="generate a family member")
    add_io(p, with_input=False)
    p.add_argument("--family", choices=classgen.FAMILIES, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write PREFIX.edges and PREFIX.json instead of stdout")

    p = sub.add_parser("blowup", help="replace vertices by true-twin cliques")
    add_io(p)
    p.add_argument("--f", default="", help="multiplicities as 'v:k,v:k' (missing = 0)")

    p = sub.add_parser("crosscheck", help="structural solver vs oracle over generated instances")
    add_io(p, with_input=False)
    p.add_argument("--family", choices=classgen.FAMILIES, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_graph(args, stdin: TextIO) -> Graph:
    if args.input == "-":
        return parse_edge_list(stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _emit(args, payload: dict, text_lines: list[str], out: TextIO) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        for line in text_lines:
            print(line, file=out)


def _cmd_solve(args, stdin, out, err) -> int:
    g = _read_graph(args, stdin)
    if args.method == "auto":
        result = solvers.solve_auto(g, args.limit)
    elif args.method == "oracle":
        res = oracle_mdns(g, args.limit)
        result = solvers.SolveResult(res.value, res.witness, "oracle")
    elif args.method == "tree":
        result = solvers.solve_tree(g)
    elif args.method == "threshold":
        result = solvers.solve_threshold(g)
    elif args.method == "cograph":
        result = solvers.solve_cograph(g)
    else:
        result = solvers.solve_p4tidy(g)
    if result is None:
        print(f"graph not supported by method {args.method}", file=err)
        return EXIT_UNSUPPORTED
    _emit(
        args,
        result.to_json(g),
        [
            f"value: {result.value}",
            f"method: {result.method}",
            "sequence: " + " ".join(map(str, result.sequence)),
        ],
        out,
    )
    return EXIT_OK


def _cmd_verify(args, stdin, out, err) -> int:
    g = _read_graph(args, stdin)
    try:
        seq = [int(tok) for tok in args.sequence.split(",") if tok.strip() != ""]
    except ValueError:
        print("malformed --sequence; expected comma-separated integers", file=err)
        return EXIT_MALFORMED
    cert = sequence.footprint(g, seq)
    _emit(
        args,
        cert.to_json(),
        [
            f"is_dns: {str(cert.is_dns).lower()}",
            f"is_dds: {str(cert.is_dds).lower()}",
            f"length: {len(cert.sequence)}",
        ]
        + (
            [f"first_illegal_step: {cert.first_illegal}"]
            if cert.first_illegal is not None
            else []
        ),
        out,
    )
    return EXIT_OK


def _cmd_recognize(args, stdin, out, err) -> int:
    g = _read_graph(args, stdin)
    tree = decomposition.decompose(g)
    if tree is None:
        print("not-supported", file=err)
        return EXIT_UNSUPPORTED
    payload = decomposition.tree_to_json(tree)
    lines = []
    for i, node in enumerate(payload["nodes"]):
        fields = ", ".join(f"{k}={v}" for k, v in node.items() if k != "kind")
        lines.append(f"node {i}: {node['kind']} {fields}")
    _emit(args, payload, lines, out)
    return EXIT_OK


def _cmd_bounds(args, stdin, out, err) -> int:
    g = _read_graph(args, stdin)
    report = bounds_mod.bound_report(g, limit=args.limit)
    payload = report.to_json()
    _emit(args, payload, [f"{k}: {v}" for k, v in payload.items()], out)
    return EXIT_OK


def _cmd_gen(args, stdin, out, err) -> int:
    g, structure = classgen.gen(classgen.GenSpec(args.family, args.size, args.seed))
    edges_text = format_edge_list(g)
    sidecar = json.dumps(structure, sort_keys=True)
    if args.out:
        with open(args.out + ".edges", "w", encoding="utf-8") as fh:
            fh.write(edges_text)
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            fh.write(sidecar + "\n")
        return EXIT_OK
    # Stdout mode keeps the output a valid edge list: the ground-truth
    # sidecar rides along as a comment line.
    out.write(edges_text)
    print(f"# structure: {sidecar}", file=out)
    return EXIT_OK


def _cmd_blowup(args, stdin, out, err) -> int:
    g = _read_graph(args, stdin)
    counts: dict[int, int] = {}
    raw = args.f.strip()
    if raw:
        for item in raw.split(","):
            try:
                v_str, k_str = item.split(":")
                counts[int(v_str)] = int(k_str)
            except ValueError:
                print(f"malformed --f entry {item!r}; expected 'v:k'", file=err)
                return EXIT_MALFORMED
    blown, _classes = reductions.blowup_gf(g, counts)
    out.write(format_edge_list(blown))
    return EXIT_OK


_STRUCTURAL = {
    "tree": lambda g: solvers.solve_tree(g),
    "threshold": lambda g: solvers.solve_threshold(g),
    "cograph": lambda g: solvers.solve_cograph(g),
    "spider": lambda g: solvers.solve_p4tidy(g),
    "quasi_spider": lambda g: solvers.solve_p4tidy(g),
    "p4tidy": lambda g: solvers.solve_p4tidy(g),
    "connected_random": None,  # falls back to solve_auto
}


def _cmd_crosscheck(args, stdin, out, err) -> int:
    if args.size > args.limit:
        print(f"size {args.size} exceeds the oracle limit {args.limit}", file=err)
        return EXIT_UNSUPPORTED
    lo = classgen._MIN_SIZE[args.family]
    mismatches = 0
    for i in range(args.count):
        inst_seed = args.seed + i
        n = random.Random(f"size:{inst_seed}").randint(lo, max(lo, args.size))
        g, _structure = classgen.gen(classgen.GenSpec(args.family, n, inst_seed))
        solver = _STRUCTURAL[args.family]
        structural = solver(g) if solver is not None else solvers.solve_auto(g, args.limit)
        expected = oracle_mdns(g, args.limit).value
        witness_ok = (
            structural is not None
            and structural.value == len(structural.sequence)
            and sequence.footprint(g, structural.sequence).is_dns
        )
        ok = structural is not None and structural.value == expected and witness_ok
        if not ok:
            mismatches += 1
        got = "none" if structural is None else structural.value
        print(
            f"instance {i}: n={n} structural={got} oracle={expected} "
            f"{'ok' if ok else 'MISMATCH'}",
            file=out,
        )
    return EXIT_MISMATCH if mismatches else EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "recognize": _cmd_recognize,
    "bounds": _cmd_bounds,
    "gen": _cmd_gen,
    "blowup": _cmd_blowup,
    "crosscheck": _cmd_crosscheck,
}


def run(
    argv: list[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    if getattr(args, "limit", 1) < 1:
        print("error: --limit must be at least 1", file=stderr)
        return EXIT_MALFORMED
    try:
        return _COMMANDS[args.command](args, stdin, stdout, stderr)
    except (GraphError, sequence.SequenceError, classgen.GenError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED
    except (
        OracleLimitError,
        IsolatedVertexError,
        solvers.UnsupportedGraphError,
        solvers.SolverError,
    ) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_UNSUPPORTED
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())
