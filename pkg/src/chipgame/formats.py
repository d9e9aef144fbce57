"""Import/export of graphs, divisors, orientations, and firing scripts.

Two interchange formats are supported: a JSON form and a line-oriented TXT
form.  Writing is canonical (vertices and edge pairs in lexicographic
order, one space after every comma and colon), so write(read(x)) is
byte-identical on canonical payloads.  Reading is tolerant of surrounding
whitespace but strict about structure; every parse error carries a line
number (TXT) or a path (JSON).

Firing-script values may be negative in both formats: a script is a net
firing count, with borrows counted below zero.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import (
    ChipGameError,
    KindMismatchError,
    PayloadSemanticError,
    PayloadSyntaxError,
)
from .divisor import Divisor, FiringScript
from .graph import Multigraph
from .orientation import Orientation

KINDS = ("graph", "divisor", "orientation", "firing_script")

_JSON_KEYS = {
    "graph": ("vertices", "edges"),
    "divisor": ("graph", "degrees"),
    "orientation": ("graph", "orientations"),
    "firing_script": ("graph", "script"),
}

_TXT_SEPARATORS = {
    "divisor": "---DEGREES---",
    "orientation": "---ORIENTATIONS---",
    "firing_script": "---SCRIPT---",
}

_TXT_RECORD_KEYWORDS = {
    "divisor": "DEGREE",
    "orientation": "ORIENTED",
    "firing_script": "FIRING",
}


def kind_of(obj: Any) -> str:
    if isinstance(obj, Multigraph):
        return "graph"
    if isinstance(obj, Divisor):
        return "divisor"
    if isinstance(obj, Orientation):
        return "orientation"
    if isinstance(obj, FiringScript):
        return "firing_script"
    raise KindMismatchError(f"no serialization for objects of type {type(obj).__name__}")


# --- JSON object (dict) level ----------------------------------------------


def _require_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise PayloadSemanticError("expected an integer", path)
    if isinstance(value, float):
        if not math.isfinite(value) or value != int(value):
            raise PayloadSemanticError("expected an integer, got a fractional value", path)
        value = int(value)
    return value


def _require_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise PayloadSemanticError("expected a string", path)
    return value


def graph_from_obj(obj: Any, path: str = "") -> Multigraph:
    prefix = f"{path}." if path else ""
    if not isinstance(obj, dict):
        raise PayloadSemanticError("expected an object", path or "$")
    if set(obj) != {"vertices", "edges"}:
        raise PayloadSemanticError(
            "graph object needs exactly the keys 'vertices' and 'edges'", path or "$"
        )
    if not isinstance(obj["vertices"], list):
        raise PayloadSemanticError("expected a list", f"{prefix}vertices")
    vertices = [
        _require_str(v, f"{prefix}vertices[{i}]") for i, v in enumerate(obj["vertices"])
    ]
    if not isinstance(obj["edges"], list):
        raise PayloadSemanticError("expected a list", f"{prefix}edges")
    edges = []
    for i, entry in enumerate(obj["edges"]):
        epath = f"{prefix}edges[{i}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise PayloadSemanticError("expected a [source, target, multiplicity] triple", epath)
        edges.append(
            (
                _require_str(entry[0], epath),
                _require_str(entry[1], epath),
                _require_int(entry[2], epath),
            )
        )
    try:
        return Multigraph(vertices, edges)
    except ChipGameError as exc:
        raise PayloadSemanticError(str(exc), path or "$") from exc


def _int_map_from_obj(obj: Any, path: str) -> dict[str, int]:
    if not isinstance(obj, dict):
        raise PayloadSemanticError("expected an object of integers", path)
    return {
        _require_str(k, f"{path}.{k}"): _require_int(v, f"{path}.{k}") for k, v in obj.items()
    }


def divisor_from_obj(obj: dict) -> Divisor:
    graph = graph_from_obj(obj["graph"], "graph")
    degrees = _int_map_from_obj(obj["degrees"], "degrees")
    try:
        return Divisor(graph, list(degrees.items()))
    except ChipGameError as exc:
        raise PayloadSemanticError(str(exc), "degrees") from exc


def orientation_from_obj(obj: dict) -> Orientation:
    graph = graph_from_obj(obj["graph"], "graph")
    if not isinstance(obj["orientations"], list):
        raise PayloadSemanticError("expected a list", "orientations")
    arcs = []
    seen_pairs = set()
    for i, entry in enumerate(obj["orientations"]):
        path = f"orientations[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise PayloadSemanticError("expected a [source, sink] pair", path)
        source = _require_str(entry[0], path)
        sink = _require_str(entry[1], path)
        pair = (source, sink) if source < sink else (sink, source)
        if pair in seen_pairs:
            raise PayloadSemanticError(f"pair {pair} oriented twice", path)
        seen_pairs.add(pair)
        arcs.append((source, sink))
    try:
        return Orientation(graph, arcs)
    except ChipGameError as exc:
        raise PayloadSemanticError(str(exc), "orientations") from exc


def firing_script_from_obj(obj: dict) -> FiringScript:
    graph = graph_from_obj(obj["graph"], "graph")
    script = _int_map_from_obj(obj["script"], "script")
    try:
        return FiringScript(graph, script)
    except ChipGameError as exc:
        raise PayloadSemanticError(str(exc), "script") from exc


def graph_to_obj(graph: Multigraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [[u, v, m] for u, v, m in graph.edge_pairs()],
    }


def divisor_to_obj(divisor: Divisor) -> dict:
    return {
        "graph": graph_to_obj(divisor.graph),
        "degrees": divisor.as_dict(),
    }


def orientation_to_obj(orientation: Orientation) -> dict:
    return {
        "graph": graph_to_obj(orientation.graph),
        "orientations": [[s, t] for s, t in orientation.arcs()],
    }


def firing_script_to_obj(script: FiringScript) -> dict:
    return {
        "graph": graph_to_obj(script.graph),
        "script": script.as_dict(),
    }


def object_to_obj(obj: Any) -> dict:
    return {
        "graph": graph_to_obj,
        "divisor": divisor_to_obj,
        "orientation": orientation_to_obj,
        "firing_script": firing_script_to_obj,
    }[kind_of(obj)](obj)


def object_from_obj(kind: str, payload: Any) -> Any:
    if kind not in KINDS:
        raise KindMismatchError(f"unknown object kind {kind!r}")
    if not isinstance(payload, dict):
        raise PayloadSemanticError("top-level payload must be an object", "$")
    expected = set(_JSON_KEYS[kind])
    actual = set(payload)
    if actual != expected:
        for other, keys in _JSON_KEYS.items():
            if other != kind and actual == set(keys):
                raise KindMismatchError(
                    f"payload has the shape of a {other}, not a {kind}"
                )
        raise PayloadSemanticError(
            f"expected exactly the keys {sorted(expected)}, got {sorted(actual)}", "$"
        )
    return {
        "graph": lambda p: graph_from_obj(p, ""),
        "divisor": divisor_from_obj,
        "orientation": orientation_from_obj,
        "firing_script": firing_script_from_obj,
    }[kind](payload)


# --- whole payloads ----------------------------------------------------------


def _read_json(kind: str, text: str) -> Any:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    return object_from_obj(kind, payload)


def _txt_lines(text: str) -> list[tuple[int, str]]:
    return [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]


def _split_keyword(lineno: int, line: str, keyword: str) -> str:
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != keyword:
        raise PayloadSyntaxError(f"expected a '{keyword}:' line, got {line!r}", lineno)
    return rest


def _split_fields(lineno: int, rest: str, count: int) -> list[str]:
    fields = [f.strip() for f in rest.split(",")]
    if len(fields) != count:
        raise PayloadSyntaxError(f"expected {count} comma-separated fields", lineno)
    if any(not f for f in fields):
        raise PayloadSyntaxError("empty field", lineno)
    return fields


def _parse_int(lineno: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PayloadSyntaxError(f"expected an integer, got {token!r}", lineno) from None


def _parse_txt_graph(
    lines: list[tuple[int, str]], vertices_kw: str, edge_kw: str
) -> Multigraph:
    if not lines:
        raise PayloadSyntaxError("empty payload", 1)
    header_line, first = lines[0]
    rest = _split_keyword(header_line, first, vertices_kw)
    names = [f.strip() for f in rest.split(",")]
    if any(not f for f in names):
        raise PayloadSyntaxError("empty vertex name", header_line)
    name_set = set(names)
    edges = []
    for lineno, line in lines[1:]:
        fields = _split_fields(lineno, _split_keyword(lineno, line, edge_kw), 3)
        u, v, m = fields[0], fields[1], _parse_int(lineno, fields[2])
        if u == v:
            raise PayloadSemanticError(f"loop edge at {u!r}", f"line {lineno}")
        for endpoint in (u, v):
            if endpoint not in name_set:
                raise PayloadSemanticError(
                    f"edge endpoint {endpoint!r} is not a declared vertex", f"line {lineno}"
                )
        if m < 1:
            raise PayloadSemanticError("edge multiplicity must be positive", f"line {lineno}")
        edges.append((u, v, m))
    try:
        return Multigraph(names, edges)
    except ChipGameError as exc:
        raise PayloadSemanticError(str(exc), f"line {header_line}") from exc


def _read_txt(kind: str, text: str) -> Any:
    lines = _txt_lines(text)
    if not lines:
        raise PayloadSyntaxError("empty payload", 1)

    separator_at = next(
        (i for i, (_, line) in enumerate(lines) if line in _TXT_SEPARATORS.values()), None
    )
    if kind == "graph":
        if separator_at is not None or lines[0][1].startswith("GRAPH_VERTICES"):
            raise KindMismatchError("payload has an embedded graph section, not a bare graph")
        return _parse_txt_graph(lines, "VERTICES", "EDGE")

    if separator_at is None:
        if lines[0][1].startswith("VERTICES"):
            raise KindMismatchError(f"payload is a bare graph, not a {kind}")
        raise PayloadSyntaxError(f"missing the {_TXT_SEPARATORS[kind]} separator line", lines[-1][0])
    sep_line = lines[separator_at][1]
    if sep_line != _TXT_SEPARATORS[kind]:
        actual = next(k for k, v in _TXT_SEPARATORS.items() if v == sep_line)
        raise KindMismatchError(f"payload has the shape of a {actual}, not a {kind}")

    graph = _parse_txt_graph(lines[:separator_at], "GRAPH_VERTICES", "GRAPH_EDGE")
    keyword = _TXT_RECORD_KEYWORDS[kind]
    records: list[tuple[int, str, str]] = []
    for lineno, line in lines[separator_at + 1 :]:
        fields = _split_fields(lineno, _split_keyword(lineno, line, keyword), 2)
        records.append((lineno, fields[0], fields[1]))

    if kind == "divisor":
        seen: dict[str, int] = {}
        for lineno, name, value in records:
            if not graph.has_vertex(name):
                raise PayloadSemanticError(f"unknown vertex {name!r}", f"line {lineno}")
            if name in seen:
                raise PayloadSemanticError(f"vertex {name!r} assigned twice", f"line {lineno}")
            seen[name] = _parse_int(lineno, value)
        return Divisor(graph, list(seen.items()))
    if kind == "orientation":
        arcs = []
        seen_pairs = set()
        for lineno, source, sink in records:
            known = graph.has_vertex(source) and graph.has_vertex(sink)
            if not known or graph.multiplicity(source, sink) == 0:
                raise PayloadSemanticError(
                    f"({source!r}, {sink!r}) is not an edge", f"line {lineno}"
                )
            pair = (source, sink) if source < sink else (sink, source)
            if pair in seen_pairs:
                raise PayloadSemanticError(f"pair {pair} oriented twice", f"line {lineno}")
            seen_pairs.add(pair)
            arcs.append((source, sink))
        return Orientation(graph, arcs)
    # firing script
    script: dict[str, int] = {}
    for lineno, name, value in records:
        if not graph.has_vertex(name):
            raise PayloadSemanticError(f"unknown vertex {name!r}", f"line {lineno}")
        if name in script:
            raise PayloadSemanticError(f"vertex {name!r} fired twice", f"line {lineno}")
        script[name] = _parse_int(lineno, value)
    return FiringScript(graph, script)


def read(fmt: str, kind: str, payload: str | bytes) -> Any:
    """Parse a payload of the given kind; fmt is 'json' or 'txt'."""
    if kind not in KINDS:
        raise KindMismatchError(f"unknown object kind {kind!r}")
    text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
    if fmt == "json":
        return _read_json(kind, text)
    if fmt == "txt":
        return _read_txt(kind, text)
    raise PayloadSyntaxError(f"unknown format {fmt!r}")


def _write_txt_graph(graph: Multigraph, vertices_kw: str, edge_kw: str) -> list[str]:
    lines = [f"{vertices_kw}: " + ", ".join(graph.vertices)]
    for u, v, m in graph.edge_pairs():
        lines.append(f"{edge_kw}: {u}, {v}, {m}")
    return lines


def write(fmt: str, obj: Any) -> str:
    """Serialize to canonical text: lexicographic orders, stable whitespace."""
    kind = kind_of(obj)
    if fmt == "json":
        return json.dumps(object_to_obj(obj), indent=4, ensure_ascii=False) + "\n"
    if fmt != "txt":
        raise PayloadSyntaxError(f"unknown format {fmt!r}")
    if kind == "graph":
        lines = _write_txt_graph(obj, "VERTICES", "EDGE")
    else:
        lines = _write_txt_graph(obj.graph, "GRAPH_VERTICES", "GRAPH_EDGE")
        lines.append(_TXT_SEPARATORS[kind])
        if kind == "divisor":
            lines += [f"DEGREE: {v}, {c}" for v, c in obj.as_dict().items()]
        elif kind == "orientation":
            lines += [f"ORIENTED: {s}, {t}" for s, t in obj.arcs()]
        else:
            lines += [f"FIRING: {v}, {c}" for v, c in obj.as_dict().items()]
    return "\n".join(lines) + "\n"


# --- TikZ export --------------------------------------------------------------

_TEX_SPECIALS = {
    "\\": r"\textbackslash{}",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
}


def _tex_escape(text: str) -> str:
    return "".join(_TEX_SPECIALS.get(ch, ch) for ch in text)


def to_tikz(obj: Any) -> str:
    """Deterministic TikZ picture: vertices on a circle in canonical order,
    parallel edges drawn with symmetric bends, divisors labeled with chips."""
    kind = kind_of(obj)
    if kind == "graph":
        graph, chips = obj, None
    elif kind == "divisor":
        graph, chips = obj.graph, obj.as_dict()
    else:
        raise KindMismatchError("TikZ export supports graphs and divisors")

    n = graph.num_vertices
    radius = 2.5
    lines = [r"\begin{tikzpicture}[every node/.style={circle, draw, minimum size=8mm}]"]
    for i, name in enumerate(graph.vertices):
        angle = math.pi / 2 - 2 * math.pi * i / n
        x = round(radius * math.cos(angle), 4) + 0.0
        y = round(radius * math.sin(angle), 4) + 0.0
        label = _tex_escape(name) if chips is None else f"{_tex_escape(name)}: {chips[name]}"
        lines.append(f"  \\node (n{i}) at ({x:.4f}, {y:.4f}) {{{label}}};")
    for u, v, m in graph.edge_pairs():
        iu, iv = graph.index_of(u), graph.index_of(v)
        for k in range(m):
            offset = 20 * k - 10 * (m - 1)
            if offset == 0:
                lines.append(f"  \\draw (n{iu}) -- (n{iv});")
            elif offset > 0:
                lines.append(f"  \\draw (n{iu}) to[bend left={offset}] (n{iv});")
            else:
                lines.append(f"  \\draw (n{iu}) to[bend right={-offset}] (n{iv});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"
