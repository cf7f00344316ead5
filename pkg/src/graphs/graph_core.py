"""
Graph Core Module

Simple undirected graphs with dense integer vertex ids, edge contraction,
induced and spanning subgraphs, distances and graph-class recognizers.
All values are immutable once built, so they can be shared freely.
"""

from collections import deque
from dataclasses import dataclass
from numbers import Integral
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from utils.exceptions import EdgeNotInGraphError, GraphClassError, PreconditionError, VertexRangeError
from utils.logger import setup_logger

logger = setup_logger(__name__)

INFINITY = float("inf")

Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]
VertexSet = FrozenSet[int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the (min, max) form of an unordered pair."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_adj_sets", "_edges")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        """
        Build a graph from per-vertex neighbor lists.

        Args:
            n (int): Number of vertices
            adjacency (Iterable[Iterable[int]]): Neighbors of each vertex, must be symmetric

        Raises:
            VertexRangeError: A neighbor id is outside [0, n)
            PreconditionError: Adjacency is not symmetric or has a self-loop
        """
        if n < 0:
            raise PreconditionError(f"Vertex count must be non-negative, got {n}")

        rows = [frozenset(neighbors) for neighbors in adjacency]
        if len(rows) != n:
            raise PreconditionError(f"Expected {n} adjacency rows, got {len(rows)}")

        for v, neighbors in enumerate(rows):
            for u in neighbors:
                if not 0 <= u < n:
                    raise VertexRangeError(f"Neighbor {u} of vertex {v} is out of range [0, {n})")
                if u == v:
                    raise PreconditionError(f"Self-loop at vertex {v}")
                if v not in rows[u]:
                    raise PreconditionError(f"Adjacency is not symmetric for edge {v}-{u}")

        self.n = n
        self._adj_sets = tuple(rows)
        self._adj = tuple(tuple(sorted(neighbors)) for neighbors in rows)
        self._edges = tuple(
            (v, u) for v in range(n) for u in self._adj[v] if v < u
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """
        Build a graph from an edge list; duplicate edges collapse.

        Args:
            n (int): Number of vertices
            edges (Iterable): Pairs (u, v)

        Returns:
            Graph: The simple graph with those edges
        """
        rows = [set() for _ in range(n)]
        for u, v in edges:
            check_vertex(n, u)
            check_vertex(n, v)
            u, v = int(u), int(v)
            if u == v:
                raise PreconditionError(f"Self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [()] * n)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors of v."""
        check_vertex(self.n, v)
        return self._adj[v]

    def adjacency_set(self, v: int) -> FrozenSet[int]:
        return self._adj_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        check_vertex(self.n, u)
        check_vertex(self.n, v)
        return v in self._adj_sets[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> Tuple[Edge, ...]:
        """All edges as canonical pairs in lexicographic order."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class ContractionMap:
    """Which original vertex went into which vertex of G/S."""

    component_of: Tuple[int, ...]
    component_sizes: Tuple[int, ...]

    def members(self, result_vertex: int) -> Tuple[int, ...]:
        """Original vertices merged into result_vertex, ascending."""
        return tuple(v for v, c in enumerate(self.component_of) if c == result_vertex)

    def contracted_vertices(self) -> Tuple[int, ...]:
        """Result vertices formed from at least two original vertices."""
        return tuple(c for c, size in enumerate(self.component_sizes) if size >= 2)


def check_vertex(n: int, v: int) -> None:
    if not isinstance(v, Integral) or isinstance(v, bool) or not 0 <= v < n:
        raise VertexRangeError(f"Vertex {v!r} is out of range [0, {n})")


def vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Validate vertex ids against g and freeze them."""
    members = frozenset(vertices)
    for v in members:
        check_vertex(g.n, v)
    return frozenset(int(v) for v in members)


def edge_set(g: Graph, pairs: Iterable[Iterable[int]]) -> EdgeSet:
    """
    Canonicalize pairs and check every one is an edge of g.

    Raises:
        EdgeNotInGraphError: Some pair is not an edge of g
    """
    edges = set()
    for u, v in pairs:
        check_vertex(g.n, u)
        check_vertex(g.n, v)
        if not g.has_edge(u, v):
            raise EdgeNotInGraphError(f"{u}-{v} is not an edge of the graph")
        edges.add(canonical_edge(int(u), int(v)))
    return frozenset(edges)


def edge_endpoints(s: Iterable[Edge]) -> VertexSet:
    """V(S): all endpoints of the edges in s."""
    return frozenset(v for edge in s for v in edge)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    G[keep] with dense relabeling in ascending id order.

    Returns:
        Tuple[Graph, Dict[int, int]]: Subgraph and old-id -> new-id map
    """
    kept = sorted(vertex_set(g, keep))
    relabel = {old: new for new, old in enumerate(kept)}
    rows = [
        [relabel[u] for u in g.neighbors(old) if u in relabel]
        for old in kept
    ]
    return Graph(len(kept), rows), relabel


def delete_vertices(g: Graph, u: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """G - U with dense relabeling; the map covers exactly the surviving vertices."""
    removed = vertex_set(g, u)
    return induced_subgraph(g, (v for v in g.vertices() if v not in removed))


def spanning_on_edges(g: Graph, s: Iterable[Iterable[int]]) -> Graph:
    """G|_S: the vertex set of g with edge set exactly s."""
    return Graph.from_edges(g.n, edge_set(g, s))


def connected_components(g: Graph) -> List[VertexSet]:
    """Connected components listed by ascending minimum id."""
    seen = [False] * g.n
    components = []
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adjacency_set(v):
                if not seen[u]:
                    seen[u] = True
                    members.append(u)
                    queue.append(u)
        components.append(frozenset(members))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def contract(g: Graph, s: Iterable[Iterable[int]]) -> Tuple[Graph, ContractionMap]:
    """
    Contract the edge set s: G/S.

    Each connected component of G|_S becomes one vertex; two result vertices
    are adjacent iff some edge of g joins their components. Result ids follow
    the ascending minimum original id of each component.

    Args:
        g (Graph): Host graph
        s (Iterable): Edges of g to contract

    Returns:
        Tuple[Graph, ContractionMap]: Contracted graph and the vertex mapping
    """
    spanning = spanning_on_edges(g, s)
    components = connected_components(spanning)

    component_of = [0] * g.n
    for index, members in enumerate(components):
        for v in members:
            component_of[v] = index

    rows = [set() for _ in components]
    for u, v in g.edges():
        cu, cv = component_of[u], component_of[v]
        if cu != cv:
            rows[cu].add(cv)
            rows[cv].add(cu)

    mapping = ContractionMap(
        component_of=tuple(component_of),
        component_sizes=tuple(len(members) for members in components),
    )
    return Graph(len(components), rows), mapping


def _bfs_distances(g: Graph, sources: Iterable[int]) -> List[float]:
    dist = [INFINITY] * g.n
    queue = deque()
    for v in sources:
        dist[v] = 0
        queue.append(v)
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] == INFINITY:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Length of a shortest u-v path, INFINITY when disconnected."""
    check_vertex(g.n, u)
    check_vertex(g.n, v)
    return _bfs_distances(g, [u])[v]


def set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> float:
    """dist_G(A, B): minimum distance between a vertex of A and a vertex of B."""
    sources = vertex_set(g, a)
    targets = vertex_set(g, b)
    if not sources or not targets:
        return INFINITY
    dist = _bfs_distances(g, sources)
    return min(dist[v] for v in targets)


def closed_neighborhood(g: Graph, u: Iterable[int]) -> VertexSet:
    """N_G[U]: U together with every vertex adjacent to U."""
    members = vertex_set(g, u)
    result = set(members)
    for v in members:
        result.update(g.adjacency_set(v))
    return frozenset(result)


def open_neighborhood(g: Graph, u: Iterable[int]) -> VertexSet:
    """N_G(U) = N_G[U] minus U."""
    members = vertex_set(g, u)
    return closed_neighborhood(g, members) - members


def complement(g: Graph) -> Graph:
    rows = [
        [u for u in g.vertices() if u != v and u not in g.adjacency_set(v)]
        for v in g.vertices()
    ]
    return Graph(g.n, rows)


def is_bipartite(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Two-color g if possible.

    Each component is colored from its smallest vertex, which lands on the
    first side; so the side holding vertex 0 is always listed first.

    Returns:
        Optional[Tuple[VertexSet, VertexSet]]: The bipartition, or None when an odd cycle exists
    """
    color = [-1] * g.n
    for start in g.vertices():
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    left = frozenset(v for v in g.vertices() if color[v] == 0)
    right = frozenset(v for v in g.vertices() if color[v] == 1)
    return left, right


def require_bipartite(g: Graph) -> Tuple[VertexSet, VertexSet]:
    sides = is_bipartite(g)
    if sides is None:
        raise GraphClassError("Graph is not bipartite")
    return sides


def lex_bfs(g: Graph) -> List[int]:
    """
    Lexicographic breadth-first search by partition refinement.

    Ties are broken toward the smallest vertex id, so the order is deterministic.
    """
    partition = [list(g.vertices())]
    order = []
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        order.append(v)

        neighbors = g.adjacency_set(v)
        refined = []
        for block in partition:
            inside = [x for x in block if x in neighbors]
            outside = [x for x in block if x not in neighbors]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        partition = refined
    return order


def is_perfect_elimination_ordering(g: Graph, ordering: List[int]) -> bool:
    """Check that every vertex's later neighbors form a clique."""
    if sorted(ordering) != list(g.vertices()):
        return False
    position = {v: i for i, v in enumerate(ordering)}
    for v in ordering:
        later = [u for u in g.neighbors(v) if position[u] > position[v]]
        if not later:
            continue
        # enough to check the earliest later neighbor sees all the others
        parent = min(later, key=position.__getitem__)
        parent_adj = g.adjacency_set(parent)
        if any(u != parent and u not in parent_adj for u in later):
            return False
    return True


def is_chordal(g: Graph) -> Optional[List[int]]:
    """
    Recognize chordal graphs.

    Returns:
        Optional[List[int]]: A perfect elimination ordering, or None if g has an induced cycle of length >= 4
    """
    ordering = list(reversed(lex_bfs(g)))
    if is_perfect_elimination_ordering(g, ordering):
        return ordering
    return None


def require_chordal(g: Graph) -> List[int]:
    ordering = is_chordal(g)
    if ordering is None:
        raise GraphClassError("Graph is not chordal")
    return ordering


def triangles(g: Graph) -> List[Tuple[int, int, int]]:
    """All triangles as ascending triples, in lexicographic order."""
    found = []
    for u, v in g.edges():
        for w in g.neighbors(v):
            if w > v and w in g.adjacency_set(u):
                found.append((u, v, w))
    return found


def is_c3_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adjacency_set(u) & g.adjacency_set(v):
            return False
    return True


def is_c3_plus_p1_free(g: Graph) -> bool:
    """True iff every vertex outside a triangle is adjacent to some vertex of it."""
    for triangle in triangles(g):
        dominated = closed_neighborhood(g, triangle)
        if len(dominated) != g.n:
            return False
    return True


def is_forest(g: Graph) -> bool:
    """Every component has exactly one edge fewer than it has vertices."""
    return g.num_edges == g.n - len(connected_components(g))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Tuple[Graph, Dict]:
    """
    Convert a networkx graph, relabeling nodes densely in sorted order.

    Returns:
        Tuple[Graph, Dict]: Graph and node -> vertex id map
    """
    nodes = sorted(h.nodes())
    relabel = {node: i for i, node in enumerate(nodes)}
    edges = [(relabel[a], relabel[b]) for a, b in h.edges() if a != b]
    return Graph.from_edges(len(nodes), edges), relabel
