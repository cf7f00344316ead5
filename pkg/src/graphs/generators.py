"""
Graph Generators Module

Deterministic (seeded) graph families for the gen command and the property
suites, plus exhaustive catalogs of small graphs.
Independent module that can be tested separately.
"""

from itertools import combinations
from typing import Dict, Iterator, List, Optional

import networkx as nx
import numpy as np

from src.graphs.graph_core import Graph, from_networkx, is_bipartite, is_connected
from utils.logger import setup_logger

logger = setup_logger(__name__)

FAMILIES = ("bipartite", "tree", "chordal", "triangle-free", "cycle", "path", "star")

# graph atlas covers every graph on up to 7 vertices
ATLAS_MAX_VERTICES = 7


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """
    Random labeled tree: each vertex attaches to an earlier one, then labels are shuffled.

    Args:
        n (int): Number of vertices
        rng (np.random.Generator): Seeded generator

    Returns:
        Graph: A tree on n vertices
    """
    labels = rng.permutation(n)
    edges = []
    for v in range(1, n):
        parent = int(rng.integers(0, v))
        edges.append((int(labels[v]), int(labels[parent])))
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(n: int, p: float, rng: np.random.Generator, connected: bool = True) -> Graph:
    """
    Random bipartite graph.

    With connected=True a random spanning tree seeds the graph and fixes the
    bipartition; further cross edges are added with probability p.
    """
    if connected and n >= 1:
        tree = random_tree(n, rng)
        left, _ = is_bipartite(tree)
        edges = set(tree.edges())
    else:
        left = frozenset(v for v in range(n) if rng.random() < 0.5)
        edges = set()

    for u, v in combinations(range(n), 2):
        if (u in left) != (v in left) and (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_triangle_free(n: int, p: float, rng: np.random.Generator, connected: bool = False) -> Graph:
    """
    Edge sampling with triangle rejection.

    Candidate pairs are visited in random order; a sampled pair is rejected
    when its endpoints already share a neighbor.
    """
    adjacency = [set() for _ in range(n)]
    if connected and n >= 1:
        for u, v in random_tree(n, rng).edges():
            adjacency[u].add(v)
            adjacency[v].add(u)

    pairs = list(combinations(range(n), 2))
    for index in rng.permutation(len(pairs)):
        u, v = pairs[int(index)]
        if v in adjacency[u] or rng.random() >= p:
            continue
        if adjacency[u] & adjacency[v]:
            continue
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def random_chordal(n: int, p: float, rng: np.random.Generator, host_size: Optional[int] = None) -> Graph:
    """
    Subtree intersection model: vertices are random subtrees of a random host
    tree, adjacent when their subtrees share a node. Every such graph is chordal.

    Args:
        n (int): Number of vertices
        p (float): Probability of growing a subtree by one more host node
        rng (np.random.Generator): Seeded generator
        host_size (int): Nodes of the host tree (defaults to n)
    """
    host = random_tree(host_size or max(n, 1), rng)
    subtrees = []
    for _ in range(n):
        start = int(rng.integers(0, host.n))
        nodes = {start}
        frontier = [u for u in host.neighbors(start)]
        while frontier and rng.random() < p:
            pick = frontier.pop(int(rng.integers(0, len(frontier))))
            if pick in nodes:
                continue
            nodes.add(pick)
            frontier.extend(u for u in host.neighbors(pick) if u not in nodes)
        subtrees.append(nodes)

    edges = [(u, v) for u, v in combinations(range(n), 2) if subtrees[u] & subtrees[v]]
    return Graph.from_edges(n, edges)


def generate(family: str, n: int, p: float = 0.3, seed: Optional[int] = None) -> Graph:
    """
    Build one graph of the named family.

    Args:
        family (str): One of FAMILIES
        n (int): Number of vertices
        p (float): Edge/growth probability for random families
        seed (int): RNG seed

    Returns:
        Graph: Generated graph

    Raises:
        ValueError: Unknown family or invalid parameters
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown family '{family}', expected one of {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")

    rng = make_rng(seed)
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "star":
        return star_graph(n)
    if family == "tree":
        return random_tree(n, rng)
    if family == "bipartite":
        return random_bipartite(n, p, rng, connected=True)
    if family == "triangle-free":
        return random_triangle_free(n, p, rng)
    return random_chordal(n, p, rng)


def atlas_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Every graph on min_n..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > ATLAS_MAX_VERTICES:
        raise ValueError(f"The graph atlas only covers up to {ATLAS_MAX_VERTICES} vertices")
    for h in nx.graph_atlas_g():
        if min_n <= h.number_of_nodes() <= max_n:
            yield from_networkx(h)[0]


def _bipartite_graphs_by_enumeration(n: int) -> List[Graph]:
    """Connected bipartite graphs on n vertices up to isomorphism, via bipartition enumeration."""
    buckets: Dict[str, List[nx.Graph]] = {}
    found = []
    for a in range(1, n // 2 + 1):
        b = n - a
        slots = [(i, a + j) for i in range(a) for j in range(b)]
        # a connected graph on n vertices needs at least n - 1 edges
        for mask in range(1 << len(slots)):
            if bin(mask).count("1") < n - 1:
                continue
            edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
            candidate = Graph.from_edges(n, edges)
            if not is_connected(candidate):
                continue
            h = nx.Graph(edges)
            key = nx.weisfeiler_lehman_graph_hash(h)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            found.append(candidate)
    return found


def connected_bipartite_catalog(max_n: int, min_n: int = 2) -> List[Graph]:
    """
    All connected bipartite graphs with min_n..max_n vertices, up to isomorphism.

    Up to 7 vertices the networkx atlas is filtered; beyond that the catalog is
    enumerated over bipartitions and deduplicated by isomorphism.
    """
    catalog = []
    atlas_top = min(max_n, ATLAS_MAX_VERTICES)
    if min_n <= atlas_top:
        for g in atlas_graphs(atlas_top, min_n):
            if is_connected(g) and is_bipartite(g) is not None:
                catalog.append(g)
    for n in range(max(min_n, ATLAS_MAX_VERTICES + 1), max_n + 1):
        logger.info(f"Enumerating connected bipartite graphs on {n} vertices")
        catalog.extend(_bipartite_graphs_by_enumeration(n))
    return catalog


if __name__ == "__main__":
    # quick look at a few generated graphs
    for name in FAMILIES:
        print(name, generate(name, 8, p=0.4, seed=1))
    print("connected bipartite graphs, n <= 6:", len(connected_bipartite_catalog(6)))
