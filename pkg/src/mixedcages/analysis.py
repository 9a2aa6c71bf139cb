"""Exact verification engine and bound formulas.

Girth semantics: a mixed cycle traverses edges in either direction and
arcs forward only; its length is the number of elements (= vertices) on
it, and length 2 (two antiparallel arcs) counts as a cycle. Acyclic
graphs report a girth of None.

The girth algorithm follows the shortest-closing-path scheme: for every
arc (u,v) take 1 + the shortest mixed path v -> u, and for every edge
{u,v} take 1 + the shortest mixed path in each orientation that does
not use the edge itself. Because simplicity guarantees at most one
traversable element per ordered vertex pair, "avoid this element" for
an edge reduces to banning one first hop out of the source, and for an
arc it is vacuous (the arc could only be used when leaving the target).
Elements are scanned in a fixed canonical order (edges sorted, then
arcs sorted by head vertex then tail), and a breadth-first search
bounded by the best cycle found so far keeps the whole thing fast while
staying exact; the first element in scan order that attains the final
minimum supplies the witness cycle, so reports are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .generators import FamilyParams
from .graph import MixedGraph
from .labels import Label


@dataclass(frozen=True)
class GirthReport:
    girth: int | None  # None = acyclic
    witness: tuple[Label, ...] | None


def _adjacency(graph: MixedGraph):
    """Vertex indexing plus out-neighbor lists/sets (edges both ways)."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    out: list[list[int]] = [[] for _ in graph.vertices]
    for u, v in graph.edges:
        out[index[u]].append(index[v])
        out[index[v]].append(index[u])
    for u, v in graph.arcs:
        out[index[u]].append(index[v])
    out_sets = [frozenset(nbrs) for nbrs in out]
    return index, out, out_sets


def _shortest_closing_path(out, out_sets, src, dst, ban, cap):
    """Length of the shortest mixed path src -> dst, or None.

    ``ban`` suppresses one direct first hop src -> ban (the avoided
    element); pass -1 for no ban. ``cap`` bounds the acceptable length
    (None = unbounded). Level-synchronized BFS; the final level only
    probes for ``dst`` by set membership instead of expanding.
    """
    if cap is not None and cap < 1:
        return None
    frontier = [w for w in out[src] if w != ban]
    seen = set(frontier)
    seen.add(src)
    if dst in seen and dst != src:
        return 1
    d = 1
    while frontier:
        d += 1
        if cap is not None and d > cap:
            return None
        if cap is not None and d == cap:
            for x in frontier:
                if dst in out_sets[x]:
                    return d
            return None
        nxt = []
        for x in frontier:
            for w in out[x]:
                if w not in seen:
                    if w == dst:
                        return d
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return None


def _all_dists_capped(out, src, cap):
    """Distance map from src for every vertex within ``cap`` hops."""
    dist = {src: 0}
    frontier = [src]
    d = 0
    while frontier and (cap is None or d < cap):
        d += 1
        nxt = []
        for x in frontier:
            for w in out[x]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _path_via_parents(out, src, dst, ban):
    """Vertex-index path src..dst (shortest, honoring the ban)."""
    parent = {src: -1}
    if ban >= 0:
        frontier = [w for w in out[src] if w != ban]
    else:
        frontier = list(out[src])
    for w in frontier:
        parent.setdefault(w, src)
    queue = deque(frontier)
    while dst not in parent:
        x = queue.popleft()
        for w in out[x]:
            if w not in parent:
                parent[w] = x
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def girth(graph: MixedGraph) -> GirthReport:
    """Exact girth with a witness cycle (None/None when acyclic)."""
    index, out, out_sets = _adjacency(graph)
    best: int | None = None
    # winner: (kind, src, dst, ban) of the closing-path BFS to re-run.
    winner = None

    for u, v in graph.edges:
        iu, iv = index[u], index[v]
        for a, b in ((iu, iv), (iv, iu)):
            cap = None if best is None else best - 2
            d = _shortest_closing_path(out, out_sets, a, b, b, cap)
            if d is not None and (best is None or d + 1 < best):
                best = d + 1
                winner = ("edge", a, b, b)

    arc_dists: dict[int, dict[int, int]] = {}
    arcs_sorted = sorted(
        graph.arcs, key=lambda p: (p[1].sort_key(), p[0].sort_key())
    )
    for u, v in arcs_sorted:
        iu, iv = index[u], index[v]
        cap = None if best is None else best - 2
        dists = arc_dists.get(iv)
        if dists is None:
            # Caps only shrink as `best` improves, so a map computed at an
            # earlier (larger) cap stays valid for every later query.
            dists = _all_dists_capped(out, iv, cap)
            arc_dists[iv] = dists
        d = dists.get(iu)
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
            winner = ("arc", iv, iu, -1)

    if best is None:
        return GirthReport(girth=None, witness=None)
    _, src, dst, ban = winner
    path = _path_via_parents(out, src, dst, ban)
    witness = tuple(graph.vertices[i] for i in path)
    return GirthReport(girth=best, witness=witness)


def is_valid_mixed_cycle(graph: MixedGraph, cycle) -> bool:
    """True iff the label sequence is a simple mixed cycle of the graph.

    Consecutive vertices (wrapping around) must be joined by an edge in
    either direction or an arc in traversal direction, no vertex may
    repeat, and no element may be used twice (which only threatens
    length-2 cycles: a digon needs both antiparallel arcs).
    """
    cycle = tuple(cycle)
    n = len(cycle)
    if n < 2 or len(set(cycle)) != n:
        return False
    if any(not graph.has_vertex(v) for v in cycle):
        return False
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        if not (graph.has_arc(u, v) or graph.has_edge(u, v)):
            return False
    if n == 2:
        u, v = cycle
        return graph.has_arc(u, v) and graph.has_arc(v, u)
    return True


def enumerate_cycles_upto(graph: MixedGraph, max_len: int):
    """Brute-force list of all simple mixed cycles of length <= max_len.

    Independent of the girth engine: a plain DFS rooted at each vertex
    in turn, restricted to larger-indexed vertices, with cycles deduced
    by their element sets so each cycle appears exactly once, in
    canonical rotation/orientation (it starts at its smallest vertex and
    takes the lexicographically least valid traversal). Exponential in
    max_len; intended for graphs of up to a couple hundred vertices.
    """
    index, out, _ = _adjacency(graph)
    edge_pairs = {(index[u], index[v]) for u, v in graph.edges}
    edge_pairs |= {(index[v], index[u]) for u, v in graph.edges}
    arc_pairs = {(index[u], index[v]) for u, v in graph.arcs}
    closing_pairs = arc_pairs | edge_pairs

    def element(a: int, b: int):
        if (a, b) in arc_pairs:
            return ("a", a, b)
        return ("e", min(a, b), max(a, b))

    found: dict[frozenset, tuple[int, ...]] = {}

    def record(path: list[int]) -> None:
        elems = frozenset(
            element(path[i], path[(i + 1) % len(path)]) for i in range(len(path))
        )
        seq = tuple(path)
        prev = found.get(elems)
        if prev is None or seq < prev:
            found[elems] = seq

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        x = path[-1]
        if len(path) >= 2 and (x, start) in closing_pairs:
            if len(path) > 2 or element(x, start) != element(start, path[1]):
                record(path)
        if len(path) == max_len:
            return
        for w in out[x]:
            if w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                on_path.remove(w)
                path.pop()

    if max_len >= 2:
        for s in range(len(graph.vertices)):
            extend(s, [s], {s})

    cycles = sorted(found.values(), key=lambda seq: (len(seq), seq))
    return [tuple(graph.vertices[i] for i in seq) for seq in cycles]


def regularity(graph: MixedGraph) -> tuple[int, int] | None:
    """(z, r) if every vertex has z in-arcs, z out-arcs and r edges."""
    profile = graph.degree_profile()
    if not profile:
        return None
    triples = set(profile.values())
    if len(triples) != 1:
        return None
    ins, outs, r = triples.pop()
    if ins != outs:
        return None
    return (ins, r)


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    order: int
    expected: tuple[int, int, int]  # (z, r, g)
    regular: tuple[int, int] | None
    girth: int | None
    witness: tuple[Label, ...] | None
    first_offender: Label | None
    reason: str


def verify_zrg(graph: MixedGraph, z: int, r: int, g: int) -> VerifyReport:
    """Check that the graph is [z,r]-regular with girth exactly g."""
    profile = graph.degree_profile()
    offender = None
    for v in graph.vertices:
        if profile[v] != (z, z, r):
            offender = v
            break
    reg = regularity(graph)
    report = girth(graph)
    if offender is not None:
        reason = (
            f"vertex {offender!r} has degrees {profile[offender]}, "
            f"expected ({z}, {z}, {r})"
        )
        ok = False
    elif report.girth != g:
        actual = "acyclic" if report.girth is None else str(report.girth)
        reason = f"girth is {actual}, expected {g}"
        ok = False
    else:
        reason = "ok"
        ok = True
    return VerifyReport(
        ok=ok,
        order=graph.order,
        expected=(z, r, g),
        regular=reg,
        girth=report.girth,
        witness=report.witness,
        first_offender=offender,
        reason=reason,
    )


def _reverse_adjacency(graph: MixedGraph, index):
    rev: list[list[int]] = [[] for _ in graph.vertices]
    for u, v in graph.edges:
        rev[index[u]].append(index[v])
        rev[index[v]].append(index[u])
    for u, v in graph.arcs:
        rev[index[v]].append(index[u])
    return rev


def _reach_count(adj, start: int) -> int:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen)


def is_strongly_connected(graph: MixedGraph) -> bool:
    """Every ordered pair joined by a mixed path (arcs forward only)."""
    n = graph.order
    if n <= 1:
        return True
    index, out, _ = _adjacency(graph)
    if _reach_count(out, 0) != n:
        return False
    rev = _reverse_adjacency(graph, index)
    return _reach_count(rev, 0) == n


def diameter(graph: MixedGraph) -> int | None:
    """Max shortest mixed-path length over ordered pairs; None if infinite."""
    n = graph.order
    if n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    if n == 1:
        return 0
    _, out, _ = _adjacency(graph)
    worst = 0
    for s in range(n):
        dist = _all_dists_capped(out, s, None)
        if len(dist) != n:
            return None
        worst = max(worst, max(dist.values()))
    return worst


# -- bound formulas -------------------------------------------------------


def moore_bound(r: int, g: int) -> int:
    """Smallest conceivable order of an r-regular graph of girth g."""
    if r < 2 or g < 3:
        raise ValueError(f"moore_bound needs r >= 2 and g >= 3, got r={r}, g={g}")
    k = g // 2
    if g % 2 == 0:
        return 2 * sum((r - 1) ** i for i in range(k))
    return 1 + r * sum((r - 1) ** i for i in range(k))


def ahm_bound(r: int, g: int) -> int:
    """Tree-counting lower bound on the order of [1,r;g]-mixed graphs."""
    if r < 2 or g < 4:
        raise ValueError(f"ahm_bound needs r >= 2 and g >= 4, got r={r}, g={g}")
    k = g // 2
    total = 2 * (1 + sum(moore_bound(r, 2 * i + 1) for i in range(1, k)))
    if g % 2 == 1:
        total += moore_bound(r, g)
    return total


def mixed_lower_bound(z: int, r: int, g: int) -> tuple[int, bool]:
    """Lower bound on the order of [z,r;g]-mixed graphs.

    Returns (value, assumes_conjecture): the value is z(g-1) + 1 plus
    the tree bound minus g. The minimum-order formula z(g-1) + 1 for
    z-regular digraphs of girth g is proven only for z <= 4, so the
    flag is set for z >= 5.
    """
    if z < 1:
        raise ValueError(f"mixed_lower_bound needs z >= 1, got z={z}")
    value = z * (g - 1) + 1 + ahm_bound(r, g) - g
    return value, z >= 5


@dataclass(frozen=True)
class BoundsReport:
    moore: int
    ahm: int
    mixed_lower: int
    assumes_conjecture: bool
    family_upper: int | None


def bounds_report(z: int, r: int, g: int, q: int | None = None) -> BoundsReport:
    """All bounds for the parameter triple, plus 4q^2 when a matching
    family member exists (requires g = 6 and (z, r) agreeing with the
    family parameters for q)."""
    family_upper = None
    if q is not None:
        params = FamilyParams.from_q(q)
        if g != 6 or (z, r) != (params.z, params.r):
            raise ValueError(
                f"family for q={q} is [{params.z},{params.r};6], "
                f"which does not match (z={z}, r={r}, g={g})"
            )
        family_upper = 4 * q * q
    value, assumes = mixed_lower_bound(z, r, g)
    return BoundsReport(
        moore=moore_bound(r, g),
        ahm=ahm_bound(r, g),
        mixed_lower=value,
        assumes_conjecture=assumes,
        family_upper=family_upper,
    )
