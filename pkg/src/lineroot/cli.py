"""Command-line interface.

Exit codes: 0 success, 1 not a line graph (or not a GLG, or a failed
selftest), 2 malformed input or bad arguments, 3 disconnected input where a
connected graph is required, 4 a result failed its own verification.
Graph output goes to stdout only on success; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .acceptance import DESK, FULL, run_all
from .errors import ConstraintUnsatisfiable, InvalidInput, MalformedInput, NotLineGraph
from .graphs import SimpleGraph, components, is_connected
from .linegraph import LineMode, line_graph
from .oracle import delta0_rewrite, random_multigraph
from .reconstruct import delta0_collapse, is_generalized_line_graph, reconstruct_root, verify
from .textio import emit_root, format_multigraph, format_simple_graph, parse_multigraph, parse_simple_graph

EXIT_OK = 0
EXIT_NOT_LINE = 1
EXIT_MALFORMED = 2
EXIT_DISCONNECTED = 3
EXIT_UNVERIFIED = 4


class _Exit(Exception):
    def __init__(self, code: int, message: str, prefix: bool = True) -> None:
        super().__init__(message)
        self.code = code
        self.prefix = prefix


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_MALFORMED, f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, parse):
    try:
        return parse(_read(path))
    except MalformedInput as exc:
        raise _Exit(EXIT_MALFORMED, f"{path}: {exc}") from None
    except InvalidInput as exc:
        raise _Exit(EXIT_MALFORMED, f"{path}: {exc}") from None


def _reconstruct(gamma: SimpleGraph, mode: LineMode, check: bool, labels: list[int] | None = None) -> str:
    try:
        r = reconstruct_root(gamma, mode)
    except NotLineGraph as exc:
        raise _Exit(EXIT_NOT_LINE, f"not a {mode.value} line graph: {exc}") from None
    if check and not verify(gamma, r):
        raise _Exit(EXIT_UNVERIFIED, "reconstructed root failed verification")
    return emit_root(r, labels)


def cmd_root(args) -> str:
    mode = LineMode(args.mode)
    gamma = _load(args.file, parse_simple_graph)
    if gamma.vertex_count == 0:
        raise _Exit(EXIT_MALFORMED, "graph has no vertices")
    if not args.components:
        if not is_connected(gamma):
            raise _Exit(EXIT_DISCONNECTED, "graph is disconnected (use --components)")
        return _reconstruct(gamma, mode, args.verify)
    blocks = []
    # Components come as sorted vertex lists, ordered by smallest vertex.
    for vertices in components(gamma):
        blocks.append(_reconstruct(gamma.induced(vertices), mode, args.verify, vertices))
    return "".join(blocks)


def cmd_linegraph(args) -> str:
    g = _load(args.file, parse_multigraph)
    return format_simple_graph(line_graph(g, args.mode))


def cmd_check_glg(args) -> str:
    gamma = _load(args.file, parse_simple_graph)
    if gamma.vertex_count == 0:
        raise _Exit(EXIT_MALFORMED, "graph has no vertices")
    if not is_connected(gamma):
        raise _Exit(EXIT_DISCONNECTED, "graph is disconnected")
    r = is_generalized_line_graph(gamma)
    if r is None:
        raise _Exit(EXIT_NOT_LINE, "not-glg", prefix=False)
    return emit_root(r)


def cmd_delta0(args) -> str:
    g = _load(args.file, parse_multigraph)
    if g.edge_count == 0:
        raise _Exit(EXIT_MALFORMED, "multigraph has no edges")
    if not is_connected(g):
        raise _Exit(EXIT_DISCONNECTED, "multigraph is disconnected")
    collapsed = delta0_collapse(g)
    _, trace = delta0_rewrite(g)
    lines = [f"# step {i}: x={w.x} y={w.y} z={w.z}" for i, w in enumerate(trace, start=1)]
    if not trace:
        lines.append("# already Delta0-free")
    return "\n".join(lines) + "\n" + format_multigraph(collapsed)


def cmd_gen(args) -> str:
    try:
        g = random_multigraph(args.vertices, args.edges, args.seed,
                              connected=args.connected, delta0_free=args.delta0_free)
    except (InvalidInput, ConstraintUnsatisfiable) as exc:
        raise _Exit(EXIT_MALFORMED, str(exc)) from None
    return format_multigraph(g)


def cmd_selftest(args) -> str:
    results = run_all(FULL if args.full else DESK, args.only or None)
    report = "".join(r.line() + "\n" for r in results)
    if not all(r.passed for r in results):
        # The report is the diagnostic here.
        sys.stderr.write(report)
        raise _Exit(EXIT_NOT_LINE, f"{sum(not r.passed for r in results)} criterion(s) failed")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lineroot",
        description="Recognize 1-line and >=1-line graphs of multigraphs and reconstruct their roots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [m.value for m in LineMode]

    p = sub.add_parser("root", help="reconstruct the canonical root of a graph")
    p.add_argument("--mode", choices=modes, required=True)
    p.add_argument("--verify", action="store_true", help="check the root against the forward construction")
    p.add_argument("--components", action="store_true", help="reconstruct each connected component")
    p.add_argument("file", help="graph file, or - for stdin")
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("linegraph", help="line graph of a multigraph")
    p.add_argument("--mode", choices=modes, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("check-glg", help="find a generalized line graph root")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_glg)

    p = sub.add_parser("delta0", help="Delta0-free collapse of a multigraph with the rewriting trace")
    p.add_argument("file")
    p.set_defaults(func=cmd_delta0)

    p = sub.add_parser("gen", help="seeded random multigraph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--delta0-free", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="run the acceptance checks at desk scale")
    p.add_argument("--full", action="store_true", help="use the full stated scale (minutes)")
    p.add_argument("--only", type=int, nargs="*", metavar="N", help="criterion numbers to run")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the malformed-input code.
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except _Exit as exc:
        print(f"lineroot: {exc}" if exc.prefix else str(exc), file=sys.stderr)
        return exc.code
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
