"""File formats: the JSON graph document and DOT export.

The JSON document ("mixed-graph/v1") lists vertices as canonical label
strings and edges/arcs as index pairs into that list. Because graphs
are stored in canonical form, exporting the same graph always yields
the same bytes, and export/import round-trips are the identity.

DOT output is a plain digraph: vertex statements first in canonical
order, then one statement per edge (``"u" -> "v" [dir=none];`` with
u <= v) and one per arc (``"u" -> "v";``), all byte-deterministic.
"""

from __future__ import annotations

import json

from . import labels
from .graph import GraphError, MixedGraph

FORMAT_TAG = "mixed-graph/v1"


class DocumentError(ValueError):
    pass


def to_document(graph: MixedGraph) -> dict:
    """GraphDocument dict with keys format, field_order, vertices, edges, arcs."""
    q = graph.field_order
    index = {v: i for i, v in enumerate(graph.vertices)}
    return {
        "format": FORMAT_TAG,
        "field_order": q,
        "vertices": [labels.render(v, q) for v in graph.vertices],
        "edges": [[index[u], index[v]] for u, v in graph.edges],
        "arcs": [[index[u], index[v]] for u, v in graph.arcs],
    }


def _index_pairs(doc, key, n):
    raw = doc[key]
    if not isinstance(raw, list):
        raise DocumentError(f"field {key!r} must be a list")
    pairs = []
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise DocumentError(f"{key}[{k}] must be a pair of integers")
        i, j = item
        if not (0 <= i < n and 0 <= j < n):
            raise DocumentError(f"{key}[{k}] index out of range: {item}")
        if i == j:
            raise DocumentError(f"{key}[{k}] is a self-loop: {item}")
        pairs.append((i, j))
    return pairs


def from_document(doc) -> MixedGraph:
    """Parse a GraphDocument back into a graph, validating as it goes."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("format", "field_order", "vertices", "edges", "arcs"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    if doc["format"] != FORMAT_TAG:
        raise DocumentError(
            f"unsupported format {doc['format']!r} (expected {FORMAT_TAG!r})"
        )
    q = doc["field_order"]
    if q is not None and not isinstance(q, int):
        raise DocumentError(f"field_order must be null or an integer, got {q!r}")
    raw_vertices = doc["vertices"]
    if not isinstance(raw_vertices, list) or not all(
        isinstance(s, str) for s in raw_vertices
    ):
        raise DocumentError("field 'vertices' must be a list of strings")
    vertices = []
    for k, text in enumerate(raw_vertices):
        try:
            vertices.append(labels.parse(text, q))
        except ValueError as exc:
            raise DocumentError(f"vertices[{k}]: {exc}")
    if len(set(vertices)) != len(vertices):
        raise DocumentError("field 'vertices' contains duplicates")
    n = len(vertices)
    edges = [(vertices[i], vertices[j]) for i, j in _index_pairs(doc, "edges", n)]
    arcs = [(vertices[i], vertices[j]) for i, j in _index_pairs(doc, "arcs", n)]
    try:
        return MixedGraph.build(vertices, edges, arcs, field_order=q)
    except GraphError as exc:
        raise DocumentError(str(exc))


def to_json(graph: MixedGraph) -> str:
    return json.dumps(to_document(graph), indent=2) + "\n"


def from_json(text: str) -> MixedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}")
    return from_document(doc)


def to_dot(graph: MixedGraph) -> str:
    q = graph.field_order
    out = ["digraph mixed {"]
    for v in graph.vertices:
        out.append(f'  "{labels.render(v, q)}";')
    for u, v in graph.edges:
        out.append(f'  "{labels.render(u, q)}" -> "{labels.render(v, q)}" [dir=none];')
    for u, v in graph.arcs:
        out.append(f'  "{labels.render(u, q)}" -> "{labels.render(v, q)}";')
    out.append("}")
    return "\n".join(out) + "\n"
