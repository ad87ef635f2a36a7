"""Simple undirected graphs: named families and the operations used downstream.

Vertices are 0-based integers.  Edges are unordered pairs stored as sorted
tuples ``(u, v)`` with ``u < v``; the edge list is kept sorted
lexicographically and that order is the canonical edge order used by the
incidence / line-graph machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


ENUMERATION_MAX_N = 8
_ENUM_CACHE: dict[int, list["Graph"]] = {}


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        seen = set()
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge {e} for n={self.n}")
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        return Graph(n, tuple(tuple(sorted(e)) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> frozenset[int]:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self._adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.n and 0 <= v < self.n else False

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge order."""
        e = (min(u, v), max(u, v))
        try:
            return self.edges.index(e)
        except ValueError:
            raise GraphError(f"edge {e} not in graph") from None

    def _check_vertex(self, u: int):
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range for n={self.n}")


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

# Beineke's nine forbidden induced subgraphs, 0-based transcription.
# G1 is the claw K_{1,3}, G3 is K_5 minus an edge, G9 is the wheel on 6
# vertices (hub 0).
_BEINEKE_EDGES = {
    1: [(0, 1), (0, 2), (0, 3)],
    2: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)],
    3: [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)],
    4: [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3)],
    5: [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4)],
    6: [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (2, 5),
        (3, 4), (3, 5)],
    7: [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (4, 5)],
    8: [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (1, 5), (2, 5), (3, 4), (4, 5)],
    9: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5),
        (1, 5)],
}

_BEINEKE_ORDER = {1: 4, 2: 5, 3: 5, 4: 6, 5: 6, 6: 6, 7: 6, 8: 6, 9: 6}


@dataclass(frozen=True)
class GraphFamily:
    """A named graph family with integer parameters."""

    tag: str
    params: tuple[int, ...] = ()


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise GraphError("edgeless graph needs n >= 1")
    return Graph(n, ())


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("P_n needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """S_n on n vertices, hub = vertex 0."""
    if n < 2:
        raise GraphError("S_n needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; first part is vertices 0..m-1."""
    if m < 1 or n < 1:
        raise GraphError("K_{m,n} needs m, n >= 1")
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def o_graph(n: int) -> Graph:
    """O_n: the star S_n (hub 0) plus an edge between two leaves."""
    if n < 3:
        raise GraphError("O_n needs n >= 3")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def diamond() -> Graph:
    """K_4 minus an edge; the non-edge is {0, 1}."""
    return Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def hypercube(n: int) -> Graph:
    if n < 1:
        raise GraphError("Q_n needs n >= 1")
    g = complete(2)
    for _ in range(n - 1):
        g = cartesian_product(g, complete(2))
    return g


def beineke(i: int) -> Graph:
    """The i-th forbidden induced subgraph for line graphs, 1 <= i <= 9."""
    if i not in _BEINEKE_EDGES:
        raise GraphError("Beineke index must be in 1..9")
    return Graph.from_edges(_BEINEKE_ORDER[i], _BEINEKE_EDGES[i])


_FAMILIES = {
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "o": (o_graph, 1),
    "diamond": (diamond, 0),
    "hypercube": (hypercube, 1),
    "beineke": (beineke, 1),
    "edgeless": (edgeless, 1),
}


def gen_named(family: GraphFamily | str, *params: int) -> Graph:
    """Build a named family member with its canonical vertex labeling."""
    if isinstance(family, GraphFamily):
        tag, args = family.tag, family.params
    else:
        tag, args = family, params
    tag = tag.lower()
    if tag not in _FAMILIES:
        raise GraphError(f"unknown family {tag!r}")
    fn, arity = _FAMILIES[tag]
    if len(args) != arity:
        raise GraphError(f"family {tag!r} takes {arity} parameter(s)")
    return fn(*args)


def family_names() -> list[str]:
    return sorted(_FAMILIES)


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------

def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, u') maps to index u*|V(h)| + u'."""
    nh = h.n
    edges = []
    for u in range(g.n):
        for up in range(h.n):
            a = u * nh + up
            for vp in h.neighbors(up):
                if vp > up:
                    edges.append((a, u * nh + vp))
            for v in g.neighbors(u):
                if v > u:
                    edges.append((a, v * nh + up))
    return Graph.from_edges(g.n * h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between them."""
    off = g.n
    edges = list(g.edges)
    edges += [(u + off, v + off) for u, v in h.edges]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def duplicate_vertex(g: Graph, u: int) -> Graph:
    """Add vertex g.n adjacent to u and to every neighbor of u."""
    g._check_vertex(u)
    new = g.n
    edges = list(g.edges) + [(u, new)] + [(w, new) for w in sorted(g.neighbors(u))]
    return Graph.from_edges(g.n + 1, edges)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise GraphError(f"edge {(u, v)} not in graph")
    return Graph(g.n, tuple(x for x in g.edges if x != (u, v)))


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return g.neighbors(u) & g.neighbors(v)


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose deletion disconnects the graph (naive, desk scale)."""
    if not is_connected(g):
        return []
    return [e for e in g.edges if not is_connected(delete_edge(g, e))]


# ---------------------------------------------------------------------------
# Isomorphism and enumeration
# ---------------------------------------------------------------------------

def _triangle_counts(g: Graph) -> tuple[int, ...]:
    counts = [0] * g.n
    for u, v in g.edges:
        shared = len(g.neighbors(u) & g.neighbors(v))
        counts[u] += shared
        counts[v] += shared
    return tuple(counts)


def _invariant_key(g: Graph):
    tri = _triangle_counts(g)
    local = sorted(
        (g.degree(u), tri[u], tuple(sorted(g.degree(w) for w in g.neighbors(u))))
        for u in range(g.n)
    )
    return (g.n, g.m, tuple(local))


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An adjacency-preserving bijection V(g) -> V(h), or None.

    Backtracking with degree-sequence pruning; the returned map is the
    lexicographically first one found under the fixed search order.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if _invariant_key(g) != _invariant_key(h):
        return None
    order = sorted(range(g.n), key=lambda u: -g.degree(u))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(k: int) -> bool:
        if k == g.n:
            return True
        u = order[k]
        for v in range(h.n):
            if used[v] or g.degree(u) != h.degree(v):
                continue
            ok = True
            for w in order[:k]:
                if g.has_edge(u, w) != h.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(k + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return {u: mapping[u] for u in range(g.n)} if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def enumerate_connected(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Level k+1 is generated from level k by attaching a new vertex to every
    non-empty neighbor subset (every connected graph has a non-cut vertex,
    so this reaches every class); duplicates are removed by isomorphism
    testing within invariant buckets.  The order is deterministic.
    Results are memoized; callers must not mutate the returned list.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}")
    if n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    level = [Graph(1, ())]
    for k in range(2, n + 1):
        buckets: dict[object, list[Graph]] = {}
        out = []
        for parent in level:
            for mask in range(1, 1 << (k - 1)):
                nbrs = [i for i in range(k - 1) if mask >> i & 1]
                cand = Graph.from_edges(
                    k, list(parent.edges) + [(i, k - 1) for i in nbrs]
                )
                key = _invariant_key(cand)
                bucket = buckets.setdefault(key, [])
                if not any(is_isomorphic(cand, seen) for seen in bucket):
                    bucket.append(cand)
                    out.append(cand)
        level = out
    _ENUM_CACHE[n] = level
    return level


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    """Parse the graph text format: "n m" then m lines "u v" (u < v)."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphError("empty graph text")
    try:
        n, m = (int(x) for x in rows[0].split())
    except ValueError:
        raise GraphError(f"bad header line {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        try:
            u, v = (int(x) for x in line.split())
        except ValueError:
            raise GraphError(f"bad edge line {line!r}") from None
        if not u < v:
            raise GraphError(f"edge line {line!r} must have u < v")
        edges.append((u, v))
    return Graph(n, tuple(edges))
