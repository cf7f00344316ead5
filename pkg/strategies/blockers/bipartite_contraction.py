"""
Bipartite Contraction Blocker Module

Polynomial-time d-Contraction Blocker(alpha) for connected bipartite graphs
and fixed small d:

  * build_tree_witness grows a tree around a maximum matching; contracting
    its 2d or 2d+1 edges always lowers alpha by d once |V| >= 2d+2.
  * alpha_after_contraction_bipartite evaluates alpha(G/S) by guessing which
    contracted vertices join the independent set and solving the bipartite
    remainder with a matching.
  * solve_bipartite_contraction_alpha dispatches between the small-graph,
    infeasible, large-budget and enumeration cases.
"""

from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from src.graphs.graph_core import (
    Graph,
    canonical_edge,
    contract,
    edge_set,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
    require_bipartite,
)
from src.parameters.invariants import (
    DEFAULT_EXACT_MAX_VERTICES,
    Operation,
    ParameterKind,
    alpha_bipartite,
    alpha_exact,
    check_critical,
    is_independent_set,
    is_matching,
    max_matching_bipartite,
)
from strategies.blockers.blocker_types import BlockerResult, TreeWitness
from utils.exceptions import CapabilityError, GraphClassError, PreconditionError, WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)

DEFAULT_MAX_D = 3


def build_tree_witness(g: Graph, m: Iterable[Tuple[int, int]], d: int) -> TreeWitness:
    """
    Grow a tree whose matched vertices keep their matching partners.

    Starts from the smallest matching edge; while the tree has at most 2d-1
    edges, attach the smallest outside neighbor w through its smallest tree
    neighbor w', and when w is matched also attach its partner.

    Args:
        g (Graph): Connected bipartite graph with at least 2d+2 vertices
        m (Iterable): A maximum matching of g
        d (int): Required drop, d >= 1

    Returns:
        TreeWitness: Tree with 2d or 2d+1 edges

    Raises:
        PreconditionError: Any precondition fails
    """
    if d < 1:
        raise PreconditionError(f"d must be at least 1, got {d}")
    if is_bipartite(g) is None or not is_connected(g):
        raise PreconditionError("Tree construction needs a connected bipartite graph")
    if g.n < 2 * d + 2:
        raise PreconditionError(f"Tree construction needs at least {2 * d + 2} vertices, graph has {g.n}")

    matching = sorted(canonical_edge(u, v) for u, v in m)
    if not matching or not is_matching(g, matching):
        raise PreconditionError("A non-empty matching of the graph is required")
    if len(matching) != len(max_matching_bipartite(g)):
        raise PreconditionError("The matching is not maximum")

    mate = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u

    u, u_prime = matching[0]
    tree_vertices = {u, u_prime}
    tree_edges = {(u, u_prime)}

    while len(tree_edges) <= 2 * d - 1:
        outside = sorted(
            w for t in tree_vertices for w in g.neighbors(t) if w not in tree_vertices
        )
        if not outside:
            raise PreconditionError("Graph ran out of vertices while growing the tree")
        w = outside[0]
        w_prime = min(t for t in g.neighbors(w) if t in tree_vertices)

        if w in mate:
            partner = mate[w]
            tree_vertices.update((partner, w))
            tree_edges.update((canonical_edge(w_prime, w), canonical_edge(partner, w)))
        else:
            tree_vertices.add(w)
            tree_edges.add(canonical_edge(w_prime, w))

    logger.debug(f"Tree witness with {len(tree_edges)} edges for d={d}")
    return TreeWitness.from_edges(g, tree_edges)


def alpha_after_contraction_bipartite(g: Graph, s: Iterable[Tuple[int, int]]) -> int:
    """
    alpha(G/S) for bipartite G.

    U holds the vertices of G/S built from two or more original vertices.
    Every independent set splits into an independent U' inside U and a set in
    G/S - (U + N(U')), which is an induced subgraph of G - V(S) and therefore
    bipartite.

    Args:
        g (Graph): Bipartite host graph
        s (Iterable): Edges of g to contract

    Returns:
        int: alpha(G/S)

    Raises:
        GraphClassError: g is not bipartite
    """
    require_bipartite(g)
    contracted, mapping = contract(g, edge_set(g, s))
    merged = mapping.contracted_vertices()
    merged_set = frozenset(merged)

    beta = 0
    for size in range(len(merged) + 1):
        for chosen in combinations(merged, size):
            if not is_independent_set(contracted, chosen):
                continue
            removed = merged_set | open_neighborhood(contracted, chosen)
            remainder, _ = induced_subgraph(
                contracted, (v for v in contracted.vertices() if v not in removed)
            )
            beta = max(beta, alpha_bipartite(remainder)[0] + size)
    return beta


class BipartiteContractionSolver:
    """d-Contraction Blocker(alpha) on connected bipartite graphs."""

    def __init__(self, max_d: int = DEFAULT_MAX_D):
        """
        Args:
            max_d (int): Largest supported threshold; enumeration grows like |E|^(2d)
        """
        if max_d < 1:
            raise ValueError("max_d must be at least 1")
        self.max_d = max_d

    def check_instance(self, g: Graph, k: int, d: int) -> None:
        """
        Raises:
            GraphClassError: g is disconnected or not bipartite
            CapabilityError: d exceeds max_d
            PreconditionError: k < 0 or d < 1
        """
        if is_bipartite(g) is None:
            raise GraphClassError("The bipartite solver needs a bipartite graph")
        if not is_connected(g):
            raise GraphClassError("The bipartite solver needs a connected graph")
        if d < 1 or k < 0:
            raise PreconditionError(f"Need k >= 0 and d >= 1, got k={k}, d={d}")
        if d > self.max_d:
            raise CapabilityError(f"The bipartite solver supports d <= {self.max_d}, got d={d}")

    def solve(self, g: Graph, k: int, d: int) -> BlockerResult:
        """
        Decide whether at most k contractions lower alpha(g) by d.

        Args:
            g (Graph): Connected bipartite graph
            k (int): Budget
            d (int): Required drop

        Returns:
            BlockerResult: Answer, with a verified witness on yes
        """
        self.check_instance(g, k, d)
        alpha_g = alpha_bipartite(g)[0]

        if k == 0:
            return self._no(alpha_g, "zero budget")

        if g.n <= 2 * d + 1:
            witness = self._first_critical_set(g, k, alpha_g - d, exact=True)
            if witness is None:
                return self._no(alpha_g, "small graph, exhaustive")
            return self._yes(g, d, witness, alpha_g, "small graph, exhaustive")

        if alpha_g <= d:
            return self._no(alpha_g, "alpha(G) <= d")

        if k >= 2 * d + 1:
            tree = build_tree_witness(g, max_matching_bipartite(g), d)
            return self._yes(g, d, tree.edges, alpha_g, "tree witness")

        witness = self._first_critical_set(g, k, alpha_g - d, exact=False)
        if witness is None:
            return self._no(alpha_g, "enumeration")
        return self._yes(g, d, witness, alpha_g, "enumeration")

    def _first_critical_set(self, g: Graph, k: int, target: int, exact: bool) -> Optional[FrozenSet]:
        edges = g.edges()
        for size in range(1, min(k, len(edges)) + 1):
            for candidate in combinations(edges, size):
                if exact:
                    value = alpha_exact(contract(g, candidate)[0])[0]
                else:
                    value = alpha_after_contraction_bipartite(g, candidate)
                if value <= target:
                    return frozenset(candidate)
        return None

    def _no(self, alpha_g: int, note: str) -> BlockerResult:
        return BlockerResult(answer=False, pi_before=alpha_g, engine="bipartite", notes=(note,))

    def _yes(self, g: Graph, d: int, witness: FrozenSet, alpha_g: int, note: str) -> BlockerResult:
        pi_after = alpha_after_contraction_bipartite(g, witness)
        verified = pi_after <= alpha_g - d
        if verified and g.n <= DEFAULT_EXACT_MAX_VERTICES:
            # independent cross-check while the exact solver is affordable
            verified = check_critical(g, Operation.CONTRACT, witness, ParameterKind.ALPHA, d, pi_before=alpha_g)
        if not verified:
            raise WitnessError(f"Witness {sorted(witness)} failed re-verification")
        return BlockerResult(
            answer=True,
            witness=frozenset(witness),
            pi_before=alpha_g,
            pi_after=pi_after,
            engine="bipartite",
            notes=(note,),
        )


def solve_bipartite_contraction_alpha(g: Graph, k: int, d: int, max_d: int = DEFAULT_MAX_D) -> BlockerResult:
    return BipartiteContractionSolver(max_d=max_d).solve(g, k, d)
