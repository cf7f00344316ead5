"""
Graph Invariants Module

Independence number, clique number and vertex cover number: exact solvers
for desk-scale graphs plus polynomial evaluators for bipartite graphs
(maximum matching and Koenig) and chordal graphs (perfect elimination
ordering). Also the criticality check used to certify blocker witnesses.
"""

from collections import deque
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.graphs.graph_core import (
    Graph,
    canonical_edge,
    complement,
    contract,
    delete_vertices,
    edge_set,
    is_bipartite,
    is_c3_free,
    is_chordal,
    require_bipartite,
    require_chordal,
    vertex_set,
)
from utils.exceptions import BlockerError, GraphClassError, SizeGuardError, WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)

DEFAULT_EXACT_MAX_VERTICES = 30


class ParameterKind(str, Enum):
    """The graph parameter a blocker problem targets."""

    ALPHA = "alpha"
    OMEGA = "omega"


class Operation(str, Enum):
    CONTRACT = "contract"
    DELETE = "delete"


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    members = vertex_set(g, vertices)
    return all(not (g.adjacency_set(v) & members) for v in members)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    members = sorted(vertex_set(g, vertices))
    return all(g.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1:])


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    members = vertex_set(g, vertices)
    return all(u in members or v in members for u, v in g.edges())


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _alpha_of_masks(adjacency: Tuple[int, ...]):
    """Memoized branching solver over vertex bitmasks of one graph."""

    @lru_cache(maxsize=None)
    def solve(mask: int) -> int:
        if mask == 0:
            return 0

        best_v, best_degree = -1, -1
        remaining = mask
        while remaining:
            low = remaining & -remaining
            v = low.bit_length() - 1
            remaining ^= low
            degree = _popcount(adjacency[v] & mask)
            if degree <= 1:
                # a vertex of degree <= 1 is always in some maximum independent set
                return 1 + solve(mask & ~(adjacency[v] | low))
            if degree > best_degree:
                best_v, best_degree = v, degree

        bit = 1 << best_v
        exclude = solve(mask & ~bit)
        include = 1 + solve(mask & ~(adjacency[best_v] | bit))
        return max(exclude, include)

    return solve


def alpha_exact(g: Graph, max_vertices: int = DEFAULT_EXACT_MAX_VERTICES) -> Tuple[int, FrozenSet[int]]:
    """
    Exact independence number by branching on a maximum-degree vertex.

    The witness is the lexicographically smallest maximum independent set:
    vertices are fixed in ascending order, each taken whenever alpha can still
    be reached with it.

    Args:
        g (Graph): Any graph
        max_vertices (int): Refuse larger graphs (exponential routine)

    Returns:
        Tuple[int, FrozenSet[int]]: alpha(g) and a maximum independent set

    Raises:
        SizeGuardError: g has more than max_vertices vertices
    """
    if g.n > max_vertices:
        raise SizeGuardError(f"Exact solver limited to {max_vertices} vertices, graph has {g.n}")

    adjacency = tuple(sum(1 << u for u in g.neighbors(v)) for v in g.vertices())
    solve = _alpha_of_masks(adjacency)
    full = (1 << g.n) - 1
    alpha = solve(full)

    witness = []
    mask, needed = full, alpha
    for v in g.vertices():
        bit = 1 << v
        if not mask & bit:
            continue
        reduced = mask & ~(adjacency[v] | bit)
        if 1 + solve(reduced) == needed:
            witness.append(v)
            mask, needed = reduced, needed - 1
        else:
            mask &= ~bit
        if needed == 0:
            break

    return alpha, frozenset(witness)


def omega_exact(g: Graph, max_vertices: int = DEFAULT_EXACT_MAX_VERTICES) -> Tuple[int, FrozenSet[int]]:
    """Clique number as the independence number of the complement."""
    return alpha_exact(complement(g), max_vertices=max_vertices)


class HopcroftKarp:
    """
    Maximum-cardinality matching in a bipartite graph.

    Layered BFS from free left vertices, then DFS along the layers to add a
    maximal set of shortest augmenting paths; repeats until no path is left.
    """

    def __init__(self, g: Graph):
        """
        Args:
            g (Graph): A bipartite graph

        Raises:
            GraphClassError: g is not bipartite
        """
        self.graph = g
        left, _ = require_bipartite(g)
        self.left = sorted(left)
        self.mate: List[Optional[int]] = [None] * g.n
        self.layer: Dict[int, float] = {}

    def _build_layers(self) -> bool:
        infinity = float("inf")
        queue = deque()
        for u in self.left:
            if self.mate[u] is None:
                self.layer[u] = 0
                queue.append(u)
            else:
                self.layer[u] = infinity

        found_free = False
        while queue:
            u = queue.popleft()
            for v in self.graph.neighbors(u):
                partner = self.mate[v]
                if partner is None:
                    found_free = True
                elif self.layer[partner] == infinity:
                    self.layer[partner] = self.layer[u] + 1
                    queue.append(partner)
        return found_free

    def _augment(self, root: int) -> bool:
        """Depth-first search for one augmenting path from a free left vertex, with an explicit stack."""
        stack = [(root, iter(self.graph.neighbors(root)))]
        # path[i] is the right vertex leading from stack[i] to stack[i + 1]
        path: List[int] = []
        while stack:
            u, neighbours = stack[-1]
            descended = False
            for v in neighbours:
                partner = self.mate[v]
                if partner is None:
                    path.append(v)
                    for (left, _), right in zip(stack, path):
                        self.mate[left] = right
                        self.mate[right] = left
                    return True
                if self.layer[partner] == self.layer[u] + 1:
                    path.append(v)
                    stack.append((partner, iter(self.graph.neighbors(partner))))
                    descended = True
                    break
            if not descended:
                # do not revisit a dead end in this phase
                self.layer[u] = float("inf")
                stack.pop()
                if path:
                    path.pop()
        return False

    def __call__(self) -> FrozenSet[Tuple[int, int]]:
        self.mate = [None] * self.graph.n
        while self._build_layers():
            for u in self.left:
                if self.mate[u] is None:
                    self._augment(u)
        return frozenset(
            canonical_edge(u, self.mate[u]) for u in self.left if self.mate[u] is not None
        )


def max_matching_bipartite(g: Graph) -> FrozenSet[Tuple[int, int]]:
    """
    Maximum matching of a bipartite graph (Hopcroft-Karp).

    Returns:
        FrozenSet[Tuple[int, int]]: Pairwise disjoint canonical edges, |M| = mu(g)
    """
    return HopcroftKarp(g)()


def is_matching(g: Graph, edges: Iterable[Tuple[int, int]]) -> bool:
    try:
        matching = edge_set(g, edges)
    except BlockerError:
        return False
    endpoints = [v for edge in matching for v in edge]
    return len(endpoints) == len(set(endpoints))


def min_vertex_cover_bipartite(g: Graph, matching: Optional[Iterable[Tuple[int, int]]] = None) -> FrozenSet[int]:
    """
    Koenig's minimum vertex cover from a maximum matching.

    Z is everything reachable from free left vertices by alternating paths
    (non-matching edges left to right, matching edges right to left);
    the cover is (L minus Z) plus (R intersect Z).
    """
    left, right = require_bipartite(g)
    if matching is None:
        matching = max_matching_bipartite(g)
    mate = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u

    reached = set(u for u in left if u not in mate)
    queue = deque(sorted(reached))
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v in reached or mate.get(u) == v:
                continue
            reached.add(v)
            partner = mate.get(v)
            if partner is not None and partner not in reached:
                reached.add(partner)
                queue.append(partner)

    return frozenset((left - reached) | (right & reached))


def alpha_bipartite(g: Graph) -> Tuple[int, FrozenSet[int]]:
    """
    alpha(g) = |V(g)| - mu(g) for bipartite g.

    The witness is the complement of Koenig's minimum vertex cover.

    Raises:
        GraphClassError: g is not bipartite
    """
    matching = max_matching_bipartite(g)
    cover = min_vertex_cover_bipartite(g, matching)
    independent = frozenset(g.vertices()) - cover
    return g.n - len(matching), independent


def alpha_chordal(g: Graph) -> Tuple[int, FrozenSet[int]]:
    """
    Greedy independence number along a perfect elimination ordering.

    Raises:
        GraphClassError: g is not chordal
    """
    ordering = require_chordal(g)
    marked = [False] * g.n
    chosen = []
    for v in ordering:
        if marked[v]:
            continue
        chosen.append(v)
        marked[v] = True
        for u in g.neighbors(v):
            marked[u] = True
    return len(chosen), frozenset(chosen)


def pi_value(g: Graph, pi: ParameterKind, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES) -> Tuple[int, FrozenSet[int]]:
    """
    Evaluate alpha or omega, using a polynomial evaluator when the class allows.

    Args:
        g (Graph): Graph to evaluate
        pi (ParameterKind): alpha or omega
        exact_max_vertices (int): Guard for the exponential fallback

    Returns:
        Tuple[int, FrozenSet[int]]: Value and witness set
    """
    pi = ParameterKind(pi)
    if pi is ParameterKind.ALPHA:
        if is_bipartite(g) is not None:
            return alpha_bipartite(g)
        if is_chordal(g) is not None:
            return alpha_chordal(g)
        return alpha_exact(g, max_vertices=exact_max_vertices)
    return omega_exact(g, max_vertices=exact_max_vertices)


def pi_at_most(g: Graph, pi: ParameterKind, bound: int, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES) -> bool:
    """Decide pi(g) <= bound, answering the small omega bounds by recognition."""
    pi = ParameterKind(pi)
    if bound < 0:
        return False
    if bound == 0:
        return g.n == 0
    if pi is ParameterKind.OMEGA:
        if bound == 1:
            return g.num_edges == 0
        if bound == 2:
            return is_c3_free(g)
    return pi_value(g, pi, exact_max_vertices)[0] <= bound


def tau(g: Graph, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES) -> int:
    """Vertex cover number |V(g)| - alpha(g)."""
    return g.n - pi_value(g, ParameterKind.ALPHA, exact_max_vertices)[0]


def normalize_witness(g: Graph, op: Operation, witness: Iterable) -> FrozenSet:
    """
    Validate a witness against g: an edge set for contraction, a vertex set for deletion.

    Raises:
        WitnessError: The witness does not fit g
    """
    op = Operation(op)
    try:
        if op is Operation.CONTRACT:
            return edge_set(g, witness)
        return vertex_set(g, witness)
    except WitnessError:
        raise
    except (BlockerError, TypeError) as error:
        raise WitnessError(f"Ill-formed {op.value} witness: {error}") from error


def apply_operation(g: Graph, op: Operation, witness: Iterable) -> Graph:
    """G/S for contraction, G - U for deletion."""
    op = Operation(op)
    normalized = normalize_witness(g, op, witness)
    if op is Operation.CONTRACT:
        return contract(g, normalized)[0]
    return delete_vertices(g, normalized)[0]


def check_critical(
    g: Graph,
    op: Operation,
    witness: Iterable,
    pi: ParameterKind,
    d: int,
    exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES,
    pi_before: Optional[int] = None,
) -> bool:
    """
    True iff applying the witness lowers pi by at least d.

    Args:
        g (Graph): Host graph
        op (Operation): contract or delete
        witness (Iterable): Edge set or vertex set of g
        pi (ParameterKind): alpha or omega
        d (int): Required drop
        exact_max_vertices (int): Guard for exact evaluation
        pi_before (int): pi(g) if already known

    Returns:
        bool: pi(modified) <= pi(g) - d
    """
    modified = apply_operation(g, op, witness)
    if pi_before is None:
        pi_before = pi_value(g, pi, exact_max_vertices)[0]
    return pi_at_most(modified, pi, pi_before - d, exact_max_vertices)


if __name__ == "__main__":
    from src.graphs.generators import cycle_graph

    c5 = cycle_graph(5)
    print("alpha(C5) =", alpha_exact(c5))
    print("omega(C5) =", omega_exact(c5))
    c6 = cycle_graph(6)
    print("mu(C6) =", len(max_matching_bipartite(c6)), "alpha(C6) =", alpha_bipartite(c6))
