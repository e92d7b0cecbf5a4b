"""Immutable small-graph representation with bitmask adjacency.

Vertices are integers 0..n-1 with n capped at 64 so every neighborhood
fits in one machine word. Vertex sets are plain Python ints used as bit
vectors; helpers below convert between masks and index tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

MAX_VERTICES = 64


def mask_of(vertices) -> int:
    """Pack an iterable of vertex indices into a bit mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Iterate the set bit indices of a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighborhood of v as a mask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min(self.adj[v].bit_count() for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])


def build_graph(n: int, edges) -> Graph:
    """Build a Graph from an edge list; duplicate pairs collapse to one edge."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has endpoint outside [0,{n})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class Path:
    """Simple path as an ordered vertex sequence (>= 1 vertex)."""

    verts: tuple[int, ...]

    def __post_init__(self):
        if len(self.verts) < 1:
            raise ValueError("path needs at least one vertex")
        if len(set(self.verts)) != len(self.verts):
            raise ValueError("path repeats a vertex")

    @property
    def length(self) -> int:
        """Length in edges."""
        return len(self.verts) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.verts[0], self.verts[-1]

    def internal(self) -> tuple[int, ...]:
        return self.verts[1:-1]

    def vset(self) -> int:
        return mask_of(self.verts)

    def is_valid_in(self, g: Graph) -> bool:
        if any(not 0 <= v < g.n for v in self.verts):
            return False
        return all(g.has_edge(a, b) for a, b in zip(self.verts, self.verts[1:]))

    @classmethod
    def in_graph(cls, g: Graph, verts) -> "Path":
        p = cls(tuple(verts))
        if not p.is_valid_in(g):
            raise ValueError(f"sequence {p.verts} is not a path of the graph")
        return p


@dataclass(frozen=True)
class Cycle:
    """Cycle stored canonically: minimum vertex first, smaller neighbor second."""

    verts: tuple[int, ...]

    def __post_init__(self):
        if len(self.verts) < 3:
            raise ValueError("cycle needs at least three vertices")
        if len(set(self.verts)) != len(self.verts):
            raise ValueError("cycle repeats a vertex")
        if self.verts != canonical_rotation(self.verts):
            raise ValueError(f"cycle sequence {self.verts} is not in canonical form")

    def __len__(self) -> int:
        return len(self.verts)

    def vset(self) -> int:
        return mask_of(self.verts)

    def edge_set(self) -> set[tuple[int, int]]:
        es = set()
        k = len(self.verts)
        for i in range(k):
            a, b = self.verts[i], self.verts[(i + 1) % k]
            es.add((a, b) if a < b else (b, a))
        return es

    def is_valid_in(self, g: Graph) -> bool:
        if any(not 0 <= v < g.n for v in self.verts):
            return False
        k = len(self.verts)
        return all(g.has_edge(self.verts[i], self.verts[(i + 1) % k]) for i in range(k))

    @classmethod
    def in_graph(cls, g: Graph, verts) -> "Cycle":
        c = cls(canonical_rotation(tuple(verts)))
        if not c.is_valid_in(g):
            raise ValueError(f"sequence {tuple(verts)} is not a cycle of the graph")
        return c


def canonical_rotation(verts: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic sequence to start at the minimum vertex with
    the smaller of its two cyclic neighbors in second position."""
    k = len(verts)
    i = verts.index(min(verts))
    rot = verts[i:] + verts[:i]
    if k >= 3 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def component_mask(adj, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside ``allowed`` (flood fill).

    ``start`` need not have its bit set in ``allowed``.
    """
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        f = frontier
        while f:
            b = f & -f
            grow |= adj[b.bit_length() - 1]
            f ^= b
        frontier = grow & allowed & ~comp
        comp |= frontier
    return comp


def connected_components(g: Graph) -> list[int]:
    """Partition V into maximal connected sets, ordered by minimum vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if not seen >> v & 1:
            c = component_mask(g.adj, v, g.full_mask)
            comps.append(c)
            seen |= c
    return comps


def is_connected(g: Graph) -> bool:
    return component_mask(g.adj, 0, g.full_mask) == g.full_mask


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by vertex mask ``s`` plus the old->new index map."""
    if s == 0:
        raise ValueError("induced subgraph of the empty set")
    if s & ~g.full_mask:
        raise ValueError("vertex set contains bits outside the graph")
    old = vertices_of(s)
    idx = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << idx[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), idx


@dataclass(frozen=True)
class ClassPredicates:
    min_degree: int
    max_degree: int
    regular_degree: int | None  # None when not regular
    triangle_free: bool
    c4_free: bool

    def is_regular(self, d: int) -> bool:
        return self.regular_degree == d


def class_predicates(g: Graph) -> ClassPredicates:
    degs = [row.bit_count() for row in g.adj]
    lo, hi = min(degs), max(degs)
    tri_free = True
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                tri_free = False
                break
        if not tri_free:
            break
    # C4 exists iff some vertex pair has >= 2 common neighbors.
    c4_free = True
    for u, v in combinations(range(g.n), 2):
        if (g.adj[u] & g.adj[v]).bit_count() >= 2:
            c4_free = False
            break
    return ClassPredicates(lo, hi, lo if lo == hi else None, tri_free, c4_free)


def _max_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint (s,t)-paths for a
    non-adjacent pair, via unit-capacity max flow on the vertex-split graph.

    Node 2v is the "in" copy of v, node 2v+1 the "out" copy. Every internal
    vertex contributes a unit in->out arc; each edge uv contributes arcs
    u_out->v_in and v_out->u_in. Flow goes from s_out to t_in.
    """
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    succ: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a, b, c):
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = 0
            succ[a].append(b)
            succ[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        # BFS for an augmenting path in the residual graph
        parent = {source: None}
        q = deque([source])
        while q and sink not in parent:
            a = q.popleft()
            for b in succ[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    q.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): n-1 for complete graphs, 0 when disconnected or n = 1,
    otherwise the minimum over non-adjacent pairs of the max number of
    internally vertex-disjoint paths (Menger)."""
    n = g.n
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                k = _max_disjoint_paths(g, s, t)
                if k < best:
                    best = k
                    if best == 0:
                        return 0
    return best
