"""Generators for every graph family the package knows how to build.

* ``projective_incidence(q)`` — point/line incidence graph of the
  projective plane of order q: (q+1)-regular, order 2q^2 + 2q + 2,
  girth 6, diameter 3.
* ``biaffine(q)`` — the incidence graph restricted to affine points and
  non-vertical lines: q-regular bipartite, order 2q^2; equal to the
  projective graph with the infinity and class vertices deleted.
* ``circulant(n, jumps)`` — directed circulant on n vertices.
* ``bipartite_circulant(q, ...)`` — original/copy digraph whose arcs
  jump forward modulo q between a row of labels and its primed copy.
* ``family(q)`` — two biaffine copies glued by bipartite circulants on
  every line row and every point row; a [z, q]-regular mixed graph of
  girth 6 on 4q^2 vertices, with z determined by q.
* ``cage_136()`` — the 30-vertex graph with one in-arc, one out-arc and
  three edges per vertex and girth 6, obtained by a fixed surgery script
  on ``projective_incidence(4)``.
* ``moore_tree(r, g)`` / ``lower_bound_witness(z, r, g)`` — the tree and
  circulant-plus-tree structures whose orders realize the lower-bound
  formulas in :mod:`mixedcages.analysis`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import gf
from .graph import GraphError, MixedGraph
from .labels import (
    INF_LINE_LABEL,
    INF_POINT_LABEL,
    Label,
    class_line,
    class_point,
    line,
    line_copy,
    plain,
    point,
    point_copy,
    tree_node,
)

LINE_SIDE = "line"
POINT_SIDE = "point"


@dataclass(frozen=True)
class FamilyParams:
    """Derived parameters of the girth-6 family for a prime q >= 3.

    p = (q-1)/2; the regular arc-degree z is (p+1)/2 for odd p and p/2
    for even p; the edge-degree r equals q.
    """

    q: int
    p: int
    z: int
    r: int

    @classmethod
    def from_q(cls, q: int) -> "FamilyParams":
        if not (isinstance(q, int) and q >= 3 and gf.is_prime(q)):
            raise ValueError(f"family parameter q must be a prime >= 3, got {q!r}")
        p = (q - 1) // 2
        z = (p + 1) // 2 if p % 2 == 1 else p // 2
        return cls(q=q, p=p, z=z, r=q)

    @property
    def to_copy_jumps(self) -> tuple[int, ...]:
        if self.p % 2 == 1:
            return tuple(range(0, (self.p - 1) // 2 + 1))
        return tuple(range(0, self.p // 2))

    @property
    def to_orig_jumps(self) -> tuple[int, ...]:
        if self.p % 2 == 1:
            return tuple(range(1, (self.p + 1) // 2 + 1))
        return tuple(range(1, self.p // 2 + 1))


def projective_incidence(q: int) -> MixedGraph:
    """Incidence graph of the projective plane of order q (q prime or 4)."""
    gf.check_order(q)
    rng = range(q)
    points = [point(x, y) for x in rng for y in rng]
    lines = [line(m, b) for m in rng for b in rng]
    cpoints = [class_point(i) for i in rng]
    clines = [class_line(i) for i in rng]
    vertices = points + lines + cpoints + clines + [INF_POINT_LABEL, INF_LINE_LABEL]

    edges: list[tuple[Label, Label]] = []
    for m in rng:
        for b in rng:
            for x in rng:
                y = gf.f_add(q, gf.f_mul(q, m, x), b)
                edges.append((line(m, b), point(x, y)))
    for i in rng:
        for j in rng:
            edges.append((class_line(i), point(i, j)))
            edges.append((class_point(i), line(i, j)))
    for i in rng:
        edges.append((INF_LINE_LABEL, class_point(i)))
        edges.append((INF_POINT_LABEL, class_line(i)))
    edges.append((INF_LINE_LABEL, INF_POINT_LABEL))

    return MixedGraph.build(vertices, edges, (), field_order=q)


def _biaffine_elements(q, make_point, make_line):
    rng = range(q)
    vertices = [make_point(x, y) for x in rng for y in rng]
    vertices += [make_line(m, b) for m in rng for b in rng]
    edges = [
        (make_line(m, b), make_point(x, gf.f_add(q, gf.f_mul(q, m, x), b)))
        for m in rng
        for b in rng
        for x in rng
    ]
    return vertices, edges


def biaffine(q: int) -> MixedGraph:
    """Bipartite incidence graph on affine points and lines y = m*x + b."""
    gf.check_order(q)
    vertices, edges = _biaffine_elements(q, point, line)
    return MixedGraph.build(vertices, edges, (), field_order=q)


def circulant(n: int, jumps) -> MixedGraph:
    """Directed circulant: arcs i -> i + j (mod n) for every jump j."""
    if n < 2:
        raise ValueError(f"circulant needs n >= 2, got {n}")
    jumps = tuple(jumps)
    if not jumps:
        raise ValueError("circulant needs at least one jump")
    if len(set(jumps)) != len(jumps):
        raise ValueError(f"duplicate jumps in {jumps}")
    for j in jumps:
        if not 1 <= j <= n - 1:
            raise ValueError(f"jump {j} out of range [1, {n - 1}]")
    vertices = [plain(i) for i in range(n)]
    arcs = [(plain(i), plain((i + j) % n)) for i in range(n) for j in jumps]
    return MixedGraph.build(vertices, (), arcs)


def _check_jump_sets(q, to_copy_jumps, to_orig_jumps):
    to_copy = tuple(to_copy_jumps)
    to_orig = tuple(to_orig_jumps)
    for j in to_copy:
        if not 0 <= j <= q - 1:
            raise ValueError(f"to-copy jump {j} out of range [0, {q - 1}]")
    for j in to_orig:
        if not 1 <= j <= q - 1:
            raise ValueError(f"to-original jump {j} out of range [1, {q - 1}]")
    if len(set(to_copy)) != len(to_copy) or len(set(to_orig)) != len(to_orig):
        raise ValueError("duplicate jump values")
    return to_copy, to_orig


def _row_circulant_arcs(q, index, to_copy, to_orig, make, make_cp):
    arcs = []
    for b in range(q):
        for j in to_copy:
            arcs.append((make(index, b), make_cp(index, (b + j) % q)))
        for j in to_orig:
            arcs.append((make_cp(index, b), make(index, (b + j) % q)))
    return arcs


def bipartite_circulant(
    q: int,
    side: str = LINE_SIDE,
    index: int = 0,
    to_copy_jumps=None,
    to_orig_jumps=None,
) -> MixedGraph:
    """Arc-only digraph on one label row and its primed copy.

    Vertices are [index, b] and [index', b'] for b in Z_q (or the point
    analog). Arcs run original -> copy with jumps from ``to_copy_jumps``
    and copy -> original with jumps from ``to_orig_jumps``, sums mod q.
    Jump sets default to the family values for q.
    """
    params = FamilyParams.from_q(q)
    if to_copy_jumps is None:
        to_copy_jumps = params.to_copy_jumps
    if to_orig_jumps is None:
        to_orig_jumps = params.to_orig_jumps
    to_copy, to_orig = _check_jump_sets(q, to_copy_jumps, to_orig_jumps)
    if side == LINE_SIDE:
        make, make_cp = line, line_copy
    elif side == POINT_SIDE:
        make, make_cp = point, point_copy
    else:
        raise ValueError(f"side must be {LINE_SIDE!r} or {POINT_SIDE!r}, got {side!r}")
    if not 0 <= index < q:
        raise ValueError(f"row index {index} out of range for q={q}")
    vertices = [make(index, b) for b in range(q)]
    vertices += [make_cp(index, b) for b in range(q)]
    arcs = _row_circulant_arcs(q, index, to_copy, to_orig, make, make_cp)
    return MixedGraph.build(vertices, (), arcs, field_order=q)


def family(q: int, to_copy_jumps=None, to_orig_jumps=None) -> MixedGraph:
    """The girth-6 family member for prime q >= 3 (order 4q^2).

    Two biaffine copies, plus a bipartite circulant between every line
    row and its copy and between every point row and its copy. Jump sets
    default to the parity-appropriate family values but can be
    overridden for experimentation.
    """
    params = FamilyParams.from_q(q)
    if to_copy_jumps is None:
        to_copy_jumps = params.to_copy_jumps
    if to_orig_jumps is None:
        to_orig_jumps = params.to_orig_jumps
    to_copy, to_orig = _check_jump_sets(q, to_copy_jumps, to_orig_jumps)

    vertices, edges = _biaffine_elements(q, point, line)
    cp_vertices, cp_edges = _biaffine_elements(q, point_copy, line_copy)
    vertices += cp_vertices
    edges += cp_edges

    arcs = []
    for i in range(q):
        arcs += _row_circulant_arcs(q, i, to_copy, to_orig, line, line_copy)
        arcs += _row_circulant_arcs(q, i, to_copy, to_orig, point, point_copy)

    return MixedGraph.build(vertices, edges, arcs, field_order=q)


# -- the 30-vertex [1,3;6] construction ---------------------------------


class SurgeryKind(Enum):
    ERASE_VERTEX = "erase_vertex"
    DIRECT_EDGE = "direct_edge"
    ADD_ARC = "add_arc"
    REMOVE_EDGE = "remove_edge"
    ADD_EDGE = "add_edge"


@dataclass(frozen=True)
class SurgeryStep:
    kind: SurgeryKind
    operands: tuple[Label, ...]


def apply_surgery(graph: MixedGraph, steps) -> MixedGraph:
    """Apply a script of surgery steps, failing loudly on a bad operand."""
    for i, step in enumerate(steps):
        try:
            if step.kind is SurgeryKind.ERASE_VERTEX:
                graph = graph.delete_vertices(step.operands)
            elif step.kind is SurgeryKind.DIRECT_EDGE:
                graph = graph.orient_edge(*step.operands)
            elif step.kind is SurgeryKind.ADD_ARC:
                graph = graph.with_arc(*step.operands)
            elif step.kind is SurgeryKind.REMOVE_EDGE:
                graph = graph.without_edge(*step.operands)
            elif step.kind is SurgeryKind.ADD_EDGE:
                graph = graph.with_edge(*step.operands)
            else:
                raise GraphError(f"unknown surgery kind {step.kind!r}")
        except GraphError as exc:
            raise GraphError(f"surgery step {i} ({step.kind.value}) failed: {exc}")
    return graph


def _cage_steps() -> tuple[SurgeryStep, ...]:
    # GF(4): 0, 1, a (=2), a^2 (=3).
    A, A2 = 2, 3
    erase = lambda *vs: SurgeryStep(SurgeryKind.ERASE_VERTEX, vs)
    direct = lambda u, v: SurgeryStep(SurgeryKind.DIRECT_EDGE, (u, v))
    arc = lambda u, v: SurgeryStep(SurgeryKind.ADD_ARC, (u, v))
    rm_edge = lambda u, v: SurgeryStep(SurgeryKind.REMOVE_EDGE, (u, v))
    add_edge = lambda u, v: SurgeryStep(SurgeryKind.ADD_EDGE, (u, v))
    return (
        erase(
            line(0, 0), line(0, 1), line(1, 0), line(1, 1), line(A, A), line(A, A2),
            point(1, 0), point(1, 1), point(A, 0), point(A, 1),
            point(A2, A), point(A2, A2),
        ),
        direct(line(A2, A), class_point(A2)),
        direct(class_point(A2), INF_LINE_LABEL),
        direct(INF_LINE_LABEL, INF_POINT_LABEL),
        direct(INF_POINT_LABEL, class_line(0)),
        direct(class_line(0), point(0, A2)),
        arc(class_point(0), class_line(A2)),
        arc(class_point(1), class_line(A)),
        arc(class_point(A), class_line(1)),
        direct(line(A, 0), point(1, A)),
        direct(line(A, 1), point(1, A2)),
        arc(class_line(1), point(0, A)),
        direct(point(1, A), line(0, A)),
        direct(point(1, A2), line(1, A)),
        arc(class_line(A), point(0, 1)),
        direct(point(A, A), line(A, 1)),
        arc(class_line(A2), point(0, 0)),
        direct(point(A2, 1), line(A, 0)),
        arc(line(A2, 0), class_point(1)),
        arc(line(A2, 1), class_point(0)),
        arc(line(A2, A2), class_point(A)),
        arc(line(0, A), point(A2, 0)),
        direct(point(0, A), line(A2, A)),
        rm_edge(point(A2, 0), line(1, A2)),
        arc(line(0, A2), point(A2, 1)),
        direct(point(0, A2), line(A2, A2)),
        rm_edge(point(A, A2), line(0, A2)),
        arc(line(1, A), point(A, A2)),
        arc(line(1, A2), point(A, A)),
        arc(point(0, 1), line(0, A2)),
        arc(point(0, 0), line(1, A2)),
        arc(point(A2, 0), line(A2, 0)),
        arc(point(A, A2), line(A2, 1)),
        add_edge(line(A2, A), point(0, A2)),
    )


CAGE_136_STEPS = _cage_steps()


def cage_136() -> MixedGraph:
    """The 30-vertex mixed graph with degrees (1,1,3) and girth 6."""
    return apply_surgery(projective_incidence(4), CAGE_136_STEPS)


# -- lower-bound witnesses ------------------------------------------------


def _grow_moore_branches(vertices, edges, parent, path, fanout, depth_left, r):
    for j in range(fanout):
        child = tree_node(path + (j,))
        vertices.append(child)
        edges.append((parent, child))
        if depth_left > 1:
            _grow_moore_branches(
                vertices, edges, child, path + (j,), r - 1, depth_left - 1, r
            )


def _attach_moore_trees(vertices, edges, g, r):
    # Path position c (0-based) carries a tree of depth min(c, g-1-c):
    # root gets r children, deeper nodes r-1 each. For odd g the two
    # depth-(g-1)/2 attachments coincide at the middle vertex and merge
    # into a single tree, which is what makes the node count land on the
    # closed-form bound.
    for c in range(g):
        depth = min(c, g - 1 - c)
        if depth > 0:
            _grow_moore_branches(vertices, edges, plain(c), (c,), r, depth, r)


def moore_tree(r: int, g: int) -> MixedGraph:
    """Directed g-path with undirected degree-r trees hung on it."""
    if r < 1 or g < 3:
        raise ValueError(f"moore_tree needs r >= 1 and g >= 3, got r={r}, g={g}")
    vertices = [plain(i) for i in range(g)]
    arcs = [(plain(i), plain(i + 1)) for i in range(g - 1)]
    edges: list[tuple[Label, Label]] = []
    _attach_moore_trees(vertices, edges, g, r)
    return MixedGraph.build(vertices, edges, arcs)


def lower_bound_witness(z: int, r: int, g: int) -> MixedGraph:
    """Circulant on z(g-1)+1 vertices with the Moore trees grafted on.

    The tree's directed path is identified with circulant vertices
    0..g-1 (its arcs are the circulant's jump-1 arcs), so the order is
    z(g-1) + 1 plus the tree's node count minus the g shared vertices.
    """
    if z < 1 or r < 1 or g < 3:
        raise ValueError(f"witness needs z, r >= 1 and g >= 3, got {z}, {r}, {g}")
    n = z * (g - 1) + 1
    base = circulant(n, range(1, z + 1))
    vertices = list(base.vertices)
    edges: list[tuple[Label, Label]] = []
    _attach_moore_trees(vertices, edges, g, r)
    return MixedGraph.build(vertices, edges, base.arcs)
