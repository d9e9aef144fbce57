"""Command-line front door: every algorithm, driven by files in the
interchange formats.

Exit codes: 0 on any successful determination (including UNWINNABLE),
2 on input or usage errors, 3 on internal errors.  All commands are
deterministic: identical inputs produce identical bytes on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .dhar import dhar_burning, default_q, ewd, q_reduce
from .configuration import Configuration
from .divisor import Divisor, linear_equivalence
from .errors import ChipGameError, GraphMismatchError
from .families import FAMILY_NAMES, generate_family
from .gonality import gonality
from .graph import Multigraph
from .rank import rank


def _detect_format(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix == ".txt":
        return "txt"
    raise ChipGameError(
        f"cannot infer format from {path!r}; use --format json|txt"
    )


def _load(path: str, kind: str, fmt: str | None = None):
    return formats.read(_detect_format(path, fmt), kind, Path(path).read_text(encoding="utf-8"))


def _load_divisor(args) -> Divisor:
    divisor = _load(args.divisor, "divisor", getattr(args, "format", None))
    if getattr(args, "graph", None):
        graph = _load(args.graph, "graph", getattr(args, "format", None))
        if divisor.graph != graph:
            raise GraphMismatchError(
                "the divisor file embeds a different graph than the graph file"
            )
    return divisor


def _parse_params(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ChipGameError(f"family parameters must be comma-separated integers: {text!r}") from None


def _load_graph_arg(args) -> Multigraph:
    if getattr(args, "family", None):
        return generate_family(args.family, _parse_params(args.params))
    if getattr(args, "graph", None):
        return _load(args.graph, "graph", getattr(args, "format", None))
    raise ChipGameError("provide a graph file (-g) or a --family")


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write_result(obj, out_path: str | None, fmt: str | None) -> None:
    if out_path:
        Path(out_path).write_text(
            formats.write(_detect_format(out_path, fmt), obj), encoding="utf-8"
        )


# --- subcommand handlers ------------------------------------------------------


def _cmd_winnable(args) -> int:
    divisor = _load_divisor(args)
    result = ewd(divisor.graph, divisor, q=args.q, optimized=args.optimized)
    verdict = "WINNABLE" if result.winnable else "UNWINNABLE"
    payload = {"winnable": result.winnable, "q": result.q, "degree": divisor.degree}
    if result.q_reduced is not None:
        payload["q_reduced"] = result.q_reduced.as_dict()
    _emit(args, [verdict], payload)
    return 0


def _cmd_qreduce(args) -> int:
    divisor = _load_divisor(args)
    q = args.q or default_q(divisor.graph)
    reduced, script = q_reduce(divisor, q)
    _emit(
        args,
        [f"q: {q}", f"reduced: {reduced}"],
        {"q": q, "reduced": reduced.as_dict(), "script": script.as_dict()},
    )
    _write_result(reduced, args.out, args.to_format)
    return 0


def _cmd_rank(args) -> int:
    divisor = _load_divisor(args)
    result = rank(divisor, optimized=args.optimized)
    lines = [f"rank: {result.rank}"]
    payload = {"rank": result.rank, "ewd_calls": result.ewd_calls}
    if result.witness is not None:
        lines.append(f"witness: {result.witness}")
        payload["witness"] = result.witness.as_dict()
    _emit(args, lines, payload)
    return 0


def _cmd_gonality(args) -> int:
    graph = _load_graph_arg(args)
    result = gonality(graph, max_degree=args.max_degree, parallelism=args.parallel)
    first = result.winning_strategies[0]
    lines = [
        f"gonality: {result.gonality}",
        f"strategies_found: {len(result.winning_strategies)}",
        f"winning_strategy: {first}",
    ]
    payload = {
        "gonality": result.gonality,
        "strategies_found": len(result.winning_strategies),
        "winning_strategy": first.as_dict(),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_equiv(args) -> int:
    d1 = _load(args.divisor1, "divisor", args.format)
    d2 = _load(args.divisor2, "divisor", args.format)
    equivalent = linear_equivalence(d1, d2)
    _emit(args, ["EQUIVALENT" if equivalent else "NOT EQUIVALENT"], {"equivalent": equivalent})
    return 0


def _cmd_dhar(args) -> int:
    divisor = _load_divisor(args)
    q = args.q or default_q(divisor.graph)
    outcome = dhar_burning(Configuration(divisor, q))
    members = sorted(outcome.firing_set)
    _emit(
        args,
        [
            "firing_set: " + (", ".join(members) if members else "(empty)"),
            "burn_order: " + ", ".join(outcome.burn_order),
        ],
        {"q": q, "firing_set": members, "burn_order": list(outcome.burn_order)},
    )
    return 0


def _cmd_laplacian(args) -> int:
    graph = _load_graph_arg(args)
    lap = graph.laplacian()
    lines = ["order: " + ", ".join(lap.order)]
    lines += [" ".join(str(x) for x in row) for row in lap.entries.tolist()]
    _emit(args, lines, {"order": list(lap.order), "entries": lap.entries.tolist()})
    return 0


def _cmd_generate(args) -> int:
    graph = generate_family(args.family, _parse_params(args.params))
    fmt = args.to_format or (_detect_format(args.out, None) if args.out else "json")
    text = formats.write(fmt, graph)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _emit(
            args,
            [f"wrote {args.family} to {args.out}"],
            {"family": args.family, "path": args.out, "vertices": graph.num_vertices},
        )
    else:
        sys.stdout.write(text)
    return 0


def _cmd_convert(args) -> int:
    obj = formats.read(args.from_format, args.kind, Path(args.infile).read_text(encoding="utf-8"))
    Path(args.outfile).write_text(formats.write(args.to_format, obj), encoding="utf-8")
    return 0


def _cmd_tikz(args) -> int:
    kind = "divisor" if args.divisor else "graph"
    obj = _load_divisor(args) if args.divisor else _load_graph_arg(args)
    text = formats.to_tikz(obj)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    frontend = args.frontend
    if frontend is None and Path("frontend/dist").is_dir():
        frontend = "frontend/dist"
    app = create_app(persist_dir=args.persist, frontend_dir=frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipgame", description="Chip-firing game analysis on multigraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, divisor=False, graph=False, q=False):
        p.add_argument("--format", choices=("json", "txt"), help="override format detection")
        p.add_argument("--output", choices=("text", "json"), default="text",
                       help="stdout style (default: human text)")
        if divisor:
            p.add_argument("-d", "--divisor", required=True, help="divisor file")
        if graph:
            p.add_argument("-g", "--graph", help="graph file")
        if q:
            p.add_argument("-q", help="distinguished vertex (default: lexicographically least)")

    p = sub.add_parser("winnable", help="decide the dollar game")
    add_common(p, divisor=True, graph=True, q=True)
    p.add_argument("--optimized", action="store_true", help="allow degree shortcuts")
    p.set_defaults(func=_cmd_winnable)

    p = sub.add_parser("qreduce", help="compute the q-reduced form")
    add_common(p, divisor=True, graph=True, q=True)
    p.add_argument("-o", "--out", help="write the reduced divisor to this file")
    p.add_argument("--to-format", choices=("json", "txt"), help="format for --out")
    p.set_defaults(func=_cmd_qreduce)

    p = sub.add_parser("rank", help="Baker-Norine rank")
    add_common(p, divisor=True, graph=True)
    p.add_argument("--optimized", action="store_true", help="allow degree shortcuts")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("gonality", help="exhaustive gonality search")
    add_common(p, graph=True)
    p.add_argument("--family", choices=FAMILY_NAMES, help="use a generated graph family")
    p.add_argument("--params", help="comma-separated family parameters")
    p.add_argument("--max-degree", type=int, help="cap the searched degree")
    p.add_argument("--parallel", type=int, help="worker processes for the scan")
    p.set_defaults(func=_cmd_gonality)

    p = sub.add_parser("equiv", help="test linear equivalence of two divisors")
    p.add_argument("divisor1")
    p.add_argument("divisor2")
    p.add_argument("--format", choices=("json", "txt"))
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("dhar", help="one burning pass from q")
    add_common(p, divisor=True, graph=True, q=True)
    p.set_defaults(func=_cmd_dhar)

    p = sub.add_parser("laplacian", help="print the Laplacian matrix")
    add_common(p, graph=True)
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--params", help="comma-separated family parameters")
    p.set_defaults(func=_cmd_laplacian)

    p = sub.add_parser("generate", help="write a graph family as an interchange file")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--params", help="comma-separated family parameters")
    p.add_argument("-o", "--out", help="output path (stdout when omitted)")
    p.add_argument("--to-format", choices=("json", "txt"), help="output format (default json)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("convert", help="convert a file between formats")
    p.add_argument("--kind", required=True, choices=formats.KINDS)
    p.add_argument("--from", dest="from_format", required=True, choices=("json", "txt"))
    p.add_argument("--to", dest="to_format", required=True, choices=("json", "txt"))
    p.add_argument("infile")
    p.add_argument("outfile")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("tikz", help="TikZ export of a graph or divisor")
    p.add_argument("-d", "--divisor", help="divisor file")
    p.add_argument("-g", "--graph", help="graph file")
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--params", help="comma-separated family parameters")
    p.add_argument("--format", choices=("json", "txt"))
    p.add_argument("-o", "--out", help="output path (stdout when omitted)")
    p.set_defaults(func=_cmd_tikz)

    p = sub.add_parser("serve", help="run the interactive game server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist", help="directory for session move logs")
    p.add_argument("--frontend", help="directory with the built web client "
                   "(default: frontend/dist when present)")
    p.set_defaults(func=_cmd_serve)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ChipGameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
