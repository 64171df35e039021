"""JSON file formats for hypergraphs and tournaments.

Hypergraph: ``{"n": <int>, "edges": [[i,j,k], ...]}`` with each edge a
strictly increasing index list (any length >= 2).
Tournament: ``{"n": <int>, "arcs": [[i,j], ...]}`` with exactly one ordered
pair per unordered vertex pair.

Parsers raise :class:`ParseError` carrying the source name plus either the
line/column of a JSON syntax error or the JSON path of a semantic one.
"""

from __future__ import annotations

import json

from .core import Hypergraph, Tournament
from .errors import ParseError, PreconditionError

__all__ = [
    "parse_hypergraph", "parse_tournament",
    "hypergraph_to_json", "tournament_to_json",
    "dump_hypergraph", "dump_tournament",
]


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, source=source, line=exc.lineno, column=exc.colno) from exc


def _require_int(value, source: str, path: str, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value!r}",
                         source=source, path=path)
    return value


def parse_hypergraph(text: str, source: str = "<input>") -> Hypergraph:
    data = _load_json(text, source)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", source=source, path="$")
    if "n" not in data or "edges" not in data:
        raise ParseError('expected keys "n" and "edges"', source=source, path="$")
    n = _require_int(data["n"], source, "n")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError("expected a list of edges", source=source, path="edges")
    masks = []
    for k, edge in enumerate(edges):
        path = f"edges[{k}]"
        if not isinstance(edge, list) or len(edge) < 2:
            raise ParseError(f"expected an index list of length >= 2, got {edge!r}",
                             source=source, path=path)
        for v in edge:
            _require_int(v, source, path)
            if v >= n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}",
                                 source=source, path=path)
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise ParseError(f"edge {edge} is not strictly increasing",
                             source=source, path=path)
        masks.append(sum(1 << v for v in edge))
    return Hypergraph._from_masks(n, frozenset(masks))


def parse_tournament(text: str, source: str = "<input>") -> Tournament:
    data = _load_json(text, source)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", source=source, path="$")
    if "n" not in data or "arcs" not in data:
        raise ParseError('expected keys "n" and "arcs"', source=source, path="$")
    n = _require_int(data["n"], source, "n")
    arcs = data["arcs"]
    if not isinstance(arcs, list):
        raise ParseError("expected a list of arcs", source=source, path="arcs")
    succ = [0] * n
    seen_pairs = set()
    for k, arc in enumerate(arcs):
        path = f"arcs[{k}]"
        if not isinstance(arc, list) or len(arc) != 2:
            raise ParseError(f"expected an ordered pair, got {arc!r}",
                             source=source, path=path)
        u, v = arc
        _require_int(u, source, path)
        _require_int(v, source, path)
        if u >= n or v >= n:
            raise ParseError(f"arc {arc} has a vertex out of range 0..{n - 1}",
                             source=source, path=path)
        if u == v:
            raise ParseError(f"arc {arc} is a self-loop", source=source, path=path)
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            raise ParseError(f"pair {{{key[0]},{key[1]}}} oriented more than once",
                             source=source, path=path)
        seen_pairs.add(key)
        succ[u] |= 1 << v
    expected = n * (n - 1) // 2
    if len(seen_pairs) != expected:
        raise ParseError(f"need exactly one arc per pair: got {len(seen_pairs)} of {expected}",
                         source=source, path="arcs")
    try:
        return Tournament(n, succ)
    except PreconditionError as exc:  # unreachable given the checks above
        raise ParseError(str(exc), source=source, path="arcs") from exc


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": h.edge_lists()}


def tournament_to_json(t: Tournament) -> dict:
    return {"n": t.n, "arcs": sorted([u, v] for u, v in t.arcs())}


def dump_hypergraph(h: Hypergraph) -> str:
    return json.dumps(hypergraph_to_json(h))


def dump_tournament(t: Tournament) -> str:
    return json.dumps(tournament_to_json(t))
