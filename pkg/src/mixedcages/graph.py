"""The mixed graph data model.

A mixed graph has a vertex set, a set of undirected edges and a set of
directed arcs. Simplicity is enforced at construction time: no
self-loops, no duplicate edges or arcs, and no pair of vertices joined
by both an edge and an arc (in either direction). Antiparallel arcs
(u,v) and (v,u) are allowed; the girth engine reports them as a cycle
of length 2.

Graphs are immutable values in canonical form: vertices are sorted by
label order, edge endpoints are stored smaller-first, and the edge and
arc lists are sorted. Mutation-style operations return new graphs, so
instances can be shared freely across analysis code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import gf
from .labels import Label, is_field_label


class GraphError(ValueError):
    pass


Pair = tuple[Label, Label]


def _canonical_pair(u: Label, v: Label) -> Pair:
    return (u, v) if u.sort_key() <= v.sort_key() else (v, u)


@dataclass(frozen=True, eq=True)
class MixedGraph:
    field_order: int | None
    vertices: tuple[Label, ...]
    edges: tuple[Pair, ...]
    arcs: tuple[Pair, ...]

    @classmethod
    def build(
        cls,
        vertices: Iterable[Label],
        edges: Iterable[tuple[Label, Label]] = (),
        arcs: Iterable[tuple[Label, Label]] = (),
        field_order: int | None = None,
    ) -> "MixedGraph":
        """Validate, canonicalize and freeze a mixed graph.

        Input order is irrelevant; duplicate vertices are merged.
        Raises GraphError for self-loops, duplicate edges/arcs, unknown
        endpoints, an edge parallel to an arc, or field-labeled vertices
        that do not fit ``field_order``.
        """
        vset = set(vertices)
        if field_order is not None:
            gf.check_order(field_order)
        for v in vset:
            if is_field_label(v):
                if field_order is None:
                    raise GraphError(
                        f"vertex {v!r} has field-valued label but no field_order given"
                    )
                if any(not 0 <= x < field_order for x in v.data):
                    raise GraphError(
                        f"vertex {v!r} out of range for field order {field_order}"
                    )

        edge_set: set[Pair] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop edge at {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u!r}, {v!r}) has unknown endpoint")
            pair = _canonical_pair(u, v)
            if pair in edge_set:
                raise GraphError(f"duplicate edge {pair!r}")
            edge_set.add(pair)

        arc_set: set[Pair] = set()
        for u, v in arcs:
            if u == v:
                raise GraphError(f"self-loop arc at {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"arc ({u!r}, {v!r}) has unknown endpoint")
            if (u, v) in arc_set:
                raise GraphError(f"duplicate arc ({u!r}, {v!r})")
            if _canonical_pair(u, v) in edge_set:
                raise GraphError(
                    f"arc ({u!r}, {v!r}) parallel to an edge (simplicity violation)"
                )
            arc_set.add((u, v))

        key = Label.sort_key
        return cls(
            field_order=field_order,
            vertices=tuple(sorted(vset, key=key)),
            edges=tuple(sorted(edge_set, key=lambda p: (key(p[0]), key(p[1])))),
            arcs=tuple(sorted(arc_set, key=lambda p: (key(p[0]), key(p[1])))),
        )

    # -- queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    def has_vertex(self, v: Label) -> bool:
        return v in self._vertex_set

    def has_edge(self, u: Label, v: Label) -> bool:
        return _canonical_pair(u, v) in self._edge_set

    def has_arc(self, u: Label, v: Label) -> bool:
        return (u, v) in self._arc_set

    @property
    def _vertex_set(self) -> frozenset:
        cached = self.__dict__.get("_vset")
        if cached is None:
            cached = frozenset(self.vertices)
            self.__dict__["_vset"] = cached
        return cached

    @property
    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get("_eset")
        if cached is None:
            cached = frozenset(self.edges)
            self.__dict__["_eset"] = cached
        return cached

    @property
    def _arc_set(self) -> frozenset:
        cached = self.__dict__.get("_aset")
        if cached is None:
            cached = frozenset(self.arcs)
            self.__dict__["_aset"] = cached
        return cached

    def degree_profile(self) -> dict[Label, tuple[int, int, int]]:
        """Per-vertex (in-arcs, out-arcs, edge-degree) triples."""
        ins = {v: 0 for v in self.vertices}
        outs = {v: 0 for v in self.vertices}
        edeg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            edeg[u] += 1
            edeg[v] += 1
        for u, v in self.arcs:
            outs[u] += 1
            ins[v] += 1
        return {v: (ins[v], outs[v], edeg[v]) for v in self.vertices}

    # -- mutation-style operations (return new graphs) --------------------

    def orient_edge(self, u: Label, v: Label) -> "MixedGraph":
        """Replace edge {u,v} with arc (u,v)."""
        pair = _canonical_pair(u, v)
        if pair not in self._edge_set:
            raise GraphError(f"no edge between {u!r} and {v!r} to orient")
        edges = [e for e in self.edges if e != pair]
        return MixedGraph.build(
            self.vertices, edges, self.arcs + ((u, v),), self.field_order
        )

    def delete_vertices(self, labels: Iterable[Label]) -> "MixedGraph":
        """Induced subgraph on the complement of ``labels``."""
        doomed = set(labels)
        for v in doomed:
            if v not in self._vertex_set:
                raise GraphError(f"cannot delete unknown vertex {v!r}")
        keep = [v for v in self.vertices if v not in doomed]
        edges = [e for e in self.edges if e[0] not in doomed and e[1] not in doomed]
        arcs = [a for a in self.arcs if a[0] not in doomed and a[1] not in doomed]
        return MixedGraph.build(keep, edges, arcs, self.field_order)

    def with_arc(self, u: Label, v: Label) -> "MixedGraph":
        if u not in self._vertex_set or v not in self._vertex_set:
            raise GraphError(f"arc ({u!r}, {v!r}) has unknown endpoint")
        return MixedGraph.build(
            self.vertices, self.edges, self.arcs + ((u, v),), self.field_order
        )

    def with_edge(self, u: Label, v: Label) -> "MixedGraph":
        if u not in self._vertex_set or v not in self._vertex_set:
            raise GraphError(f"edge ({u!r}, {v!r}) has unknown endpoint")
        return MixedGraph.build(
            self.vertices, self.edges + ((u, v),), self.arcs, self.field_order
        )

    def without_edge(self, u: Label, v: Label) -> "MixedGraph":
        pair = _canonical_pair(u, v)
        if pair not in self._edge_set:
            raise GraphError(f"no edge between {u!r} and {v!r} to remove")
        edges = [e for e in self.edges if e != pair]
        return MixedGraph.build(self.vertices, edges, self.arcs, self.field_order)
