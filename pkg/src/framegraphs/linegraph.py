"""Incidence matrices, Laplacians, line graphs, and root-graph recovery.

Line graphs are recognized by Beineke's forbidden-induced-subgraph
characterization; root graphs are recovered by backtracking over Krausz
edge-clique partitions in which every vertex lies in at most two cliques.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, beineke, is_connected, is_isomorphic, path

# Search budgets for the backtracking recognizers.
LINE_GRAPH_MAX_N = 30
ROOT_GRAPH_MAX_N = 21


class NotALineGraph(GraphError):
    pass


class SizeLimitError(GraphError):
    pass


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceMatrix:
    """Vertex-by-edge incidence matrix; columns follow the canonical edge order."""

    matrix: np.ndarray
    edge_order: tuple[tuple[int, int], ...]


def oriented_incidence(g: Graph) -> IncidenceMatrix:
    """Oriented incidence matrix with -1 at the smaller-index endpoint.

    Satisfies B @ B.T == laplacian(g) exactly.
    """
    b = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        b[u, j] = -1.0
        b[v, j] = 1.0
    return IncidenceMatrix(matrix=b, edge_order=g.edges)


def unoriented_incidence(g: Graph) -> IncidenceMatrix:
    """0/1 incidence matrix; (B^T B - 2I) is the line graph's adjacency matrix."""
    b = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        b[u, j] = 1.0
        b[v, j] = 1.0
    return IncidenceMatrix(matrix=b, edge_order=g.edges)


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix."""
    lap = -adjacency(g)
    for u in range(g.n):
        lap[u, u] = g.degree(u)
    return lap


# ---------------------------------------------------------------------------
# Line graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LineGraphMap:
    """Line graph plus the bijection canonical-edge-index -> line vertex."""

    line: Graph
    edge_to_vertex: tuple[int, ...]


def line_graph(g: Graph) -> LineGraphMap:
    """Vertices are the edges of g (canonical order); adjacency is incidence."""
    if g.m < 1:
        raise GraphError("line graph needs at least one edge")
    edges = []
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if set(g.edges[i]) & set(g.edges[j]):
                edges.append((i, j))
    return LineGraphMap(
        line=Graph.from_edges(g.m, edges),
        edge_to_vertex=tuple(range(g.m)),
    )


def contains_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """An injective map V(h) -> V(g) inducing h exactly, or None.

    Backtracking over h's vertices in descending-degree order; adjacency
    and non-adjacency are both enforced, so the image induces h.
    """
    if h.n > g.n:
        raise GraphError("pattern graph is larger than host")
    # Static search order: highest degree first, then greedily prefer
    # vertices with the most already-ordered neighbors, so candidates can
    # be anchored to neighborhoods of mapped images.
    order: list[int] = []
    remaining = set(range(h.n))
    while remaining:
        chosen = max(
            remaining,
            key=lambda u: (
                sum(1 for w in h.neighbors(u) if w in order), h.degree(u), -u
            ),
        )
        order.append(chosen)
        remaining.remove(chosen)
    anchors = [
        [w for w in order[:k] if h.has_edge(order[k], w)] for k in range(h.n)
    ]
    mapping: dict[int, int] = {}
    used = [False] * g.n

    def extend(k: int) -> bool:
        if k == h.n:
            return True
        u = order[k]
        if anchors[k]:
            cand = set(g.neighbors(mapping[anchors[k][0]]))
            for w in anchors[k][1:]:
                cand &= g.neighbors(mapping[w])
            cand = sorted(cand)
        else:
            cand = range(g.n)
        for v in cand:
            if used[v] or g.degree(v) < h.degree(u):
                continue
            if all(
                g.has_edge(v, mapping[w]) == h.has_edge(u, w) for w in order[:k]
            ):
                mapping[u] = v
                used[v] = True
                if extend(k + 1):
                    return True
                del mapping[u]
                used[v] = False
        return False

    return dict(mapping) if extend(0) else None


def is_line_graph(g: Graph):
    """True, or (False, beineke_index, embedding) with a concrete witness."""
    if g.n > LINE_GRAPH_MAX_N:
        raise SizeLimitError(f"line graph recognition capped at {LINE_GRAPH_MAX_N} vertices")
    for i in range(1, 10):
        pattern = beineke(i)
        if pattern.n <= g.n:
            embedding = contains_induced(g, pattern)
            if embedding is not None:
                return (False, i, embedding)
    return True


# ---------------------------------------------------------------------------
# Root graphs via Krausz partitions
# ---------------------------------------------------------------------------

def _krausz_partitions(g: Graph):
    """Yield all partitions of E(g) into cliques, each vertex in <= 2 cliques.

    Unit propagation: once a vertex lies in one clique and still has
    uncovered edges, its second clique is forced to be the whole uncovered
    neighborhood.  Branching happens only at vertices in no clique yet.
    """
    covered: dict[tuple[int, int], bool] = {e: False for e in g.edges}
    count = [0] * g.n
    cliques: list[frozenset[int]] = []

    def uncovered_neighbors(v: int) -> list[int]:
        return [
            w
            for w in sorted(g.neighbors(v))
            if not covered[(min(v, w), max(v, w))]
        ]

    def clique_ok(s: list[int]) -> bool:
        for i, u in enumerate(s):
            if count[u] >= 2:
                return False
            for v in s[i + 1:]:
                e = (min(u, v), max(u, v))
                if not g.has_edge(u, v) or covered[e]:
                    return False
        return True

    def place(s: list[int]) -> list[tuple[int, int]]:
        edges = []
        for i, u in enumerate(s):
            count[u] += 1
            for v in s[i + 1:]:
                e = (min(u, v), max(u, v))
                covered[e] = True
                edges.append(e)
        cliques.append(frozenset(s))
        return edges

    def unplace(s: list[int], edges: list[tuple[int, int]]):
        cliques.pop()
        for u in s:
            count[u] -= 1
        for e in edges:
            covered[e] = False

    def search():
        # Propagate all forced cliques before branching.
        placed: list[tuple[list[int], list[tuple[int, int]]]] = []
        ok = True
        while True:
            forced = None
            for v in range(g.n):
                nbrs = uncovered_neighbors(v)
                if not nbrs:
                    continue
                if count[v] >= 2:
                    ok = False
                    break
                if count[v] == 1:
                    forced = [v] + nbrs
                    break
            if not ok or forced is None:
                break
            if clique_ok(forced):
                placed.append((forced, place(forced)))
            else:
                ok = False
                break
        if ok:
            branch = next(
                (v for v in range(g.n) if uncovered_neighbors(v)), None
            )
            if branch is None:
                yield [set(s) for s in cliques]
            else:
                nbrs = uncovered_neighbors(branch)
                anchor = nbrs[0]
                rest = nbrs[1:]
                # Enumerate the clique at `branch` containing the anchor
                # neighbor; propagation supplies the complementary clique.
                for mask in range(1 << len(rest)):
                    s = [branch, anchor] + [
                        w for i, w in enumerate(rest) if mask >> i & 1
                    ]
                    if clique_ok(s):
                        edges = place(s)
                        yield from search()
                        unplace(s, edges)
        for s, edges in reversed(placed):
            unplace(s, edges)

    yield from search()


def _root_from_partition(g: Graph, cliques: list[set[int]]) -> Graph:
    member: list[list[int]] = [[] for _ in range(g.n)]
    for i, s in enumerate(cliques):
        for v in s:
            member[v].append(i)
    n_root = len(cliques)
    edges = []
    for v in range(g.n):
        cs = member[v]
        if len(cs) == 2:
            edges.append((cs[0], cs[1]))
        elif len(cs) == 1:
            edges.append((cs[0], n_root))  # pendant endpoint
            n_root += 1
        else:
            raise AssertionError("vertex outside every clique")
    return Graph.from_edges(n_root, edges)


def root_graph(g: Graph) -> list[Graph]:
    """All root graphs of a connected line graph, up to isomorphism.

    A single graph for every connected line graph except K_3, which has
    the two roots K_3 and K_{1,3}.
    """
    if g.n > ROOT_GRAPH_MAX_N:
        raise SizeLimitError(f"root recovery capped at {ROOT_GRAPH_MAX_N} vertices")
    if not is_connected(g):
        raise GraphError("root recovery needs a connected graph")
    if g.n == 1:
        return [path(2)]
    roots: list[Graph] = []
    for part in _krausz_partitions(g):
        root = _root_from_partition(g, part)
        if not any(is_isomorphic(root, r) for r in roots):
            roots.append(root)
    if not roots:
        # No Krausz partition; run the recognizer to name a witness.
        verdict = is_line_graph(g)
        if verdict is not True:
            raise NotALineGraph(
                f"not a line graph (forbidden subgraph G{verdict[1]})"
            )
        raise NotALineGraph("not a line graph (no edge-clique partition)")
    return roots
