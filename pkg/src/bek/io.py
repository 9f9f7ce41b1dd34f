"""Reading and writing graphs: edge-list text, JSON and graph6."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, GraphError

FORMATS = ("edgelist", "json", "graph6")


class ParseError(GraphError):
    pass


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    name: str | None = None
    labeling: tuple[int, ...] | None = None


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"header must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {k}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {k}: vertices must be integers") from None
        edges.append((u, v))
    return _build(n, edges)


def _build(n: int, edges) -> Graph:
    if n < 0:
        raise ParseError("negative vertex count")
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) out of range 1..{n}")
        if u == v:
            raise ParseError(f"loop at {u}")
    return Graph.from_edges(n, edges)


def render_edgelist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def parse_json_document(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise ParseError('JSON graph needs an integer "n"')
    edges = data.get("edges", [])
    if not all(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges):
        raise ParseError('"edges" must be a list of integer pairs')
    g = _build(data["n"], [tuple(e) for e in edges])
    labeling = data.get("labeling")
    return GraphDocument(g, data.get("name"), tuple(labeling) if labeling else None)


def parse_json(text: str) -> Graph:
    return parse_json_document(text).graph


def render_json(g: Graph, name: str | None = None, labeling=None) -> str:
    data: dict = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if name is not None:
        data["name"] = name
    if labeling is not None:
        data["labeling"] = list(labeling)
    return json.dumps(data)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; vertices 0..n-1 of the format become 1..n."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("graph6 bytes must lie in 63..126")
    if data[0] == 63:
        if len(data) >= 8 and data[1] == 63:
            n = 0
            for d in data[2:8]:
                n = n << 6 | d
            body = data[8:]
        elif len(data) >= 4:
            n = data[1] << 12 | data[2] << 6 | data[3]
            body = data[4:]
        else:
            raise ParseError("truncated graph6 size field")
    else:
        n, body = data[0], data[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    edges = []
    idx = 0
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph.from_edges(n, edges)


def render_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [int(g.has_edge(i + 1, j + 1)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(d + 63) for d in head + body)


def detect_format(path: str | Path, text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".g6", ".graph6"):
        return "graph6"
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    return "edgelist"


def parse_document(text: str, fmt: str) -> GraphDocument:
    if fmt == "edgelist":
        return GraphDocument(parse_edgelist(text))
    if fmt == "json":
        return parse_json_document(text)
    if fmt == "graph6":
        return GraphDocument(parse_graph6(text))
    raise ParseError(f"unknown format {fmt!r}; choose from {FORMATS}")


def parse_graph(data: bytes | str, fmt: str) -> Graph:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    return parse_document(text, fmt).graph


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return render_edgelist(g)
    if fmt == "json":
        return render_json(g)
    if fmt == "graph6":
        return render_graph6(g)
    raise ParseError(f"unknown format {fmt!r}; choose from {FORMATS}")


def read_graph_file(path: str | Path, fmt: str | None = None) -> GraphDocument:
    raw = Path(path).read_bytes()
    text = raw.decode("utf-8")
    return parse_document(text, fmt or detect_format(path, text))
