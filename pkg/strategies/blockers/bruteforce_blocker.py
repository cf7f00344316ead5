"""
Brute-Force Blocker Module

Reference solver for d-Contraction Blocker and d-Deletion Blocker on
desk-scale graphs. Witnesses are searched by increasing size, lexicographic
within a size, so the first hit is a minimum witness.

The search skips candidates that cannot change the answer or the first witness:
  - Contraction candidates span forests. Any edge set has a spanning forest
    with the same components, hence the same contracted graph, and no more edges.
  - Twins (equal open or equal closed neighbourhoods) are used in ascending
    order. Swapping a used twin for a smaller unused one gives an isomorphic
    result and a lexicographically smaller candidate.
  - A candidate whose image of some maximum independent set (or clique) of the
    input is still larger than the target cannot be a witness.
"""

from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from networkx.utils import UnionFind

from src.graphs.graph_core import (
    Graph,
    canonical_edge,
    contract,
    delete_vertices,
    induced_subgraph,
    is_bipartite,
    is_chordal,
)
from src.parameters.invariants import (
    DEFAULT_EXACT_MAX_VERTICES,
    Operation,
    ParameterKind,
    check_critical,
    normalize_witness,
    pi_at_most,
    pi_value,
)
from strategies.blockers.blocker_types import BlockerInstance, BlockerResult
from utils.exceptions import SizeGuardError, WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def spans_forest(edges: Iterable[Tuple[int, int]]) -> bool:
    forest = UnionFind()
    for u, v in edges:
        if forest[u] == forest[v]:
            return False
        forest.union(u, v)
    return True


def spanning_forest_edges(g: Graph, s: Iterable[Tuple[int, int]]) -> FrozenSet[Tuple[int, int]]:
    """A spanning forest of G|_S, keeping edges in lexicographic order (Kruskal)."""
    forest = UnionFind()
    kept = []
    for u, v in sorted(normalize_witness(g, Operation.CONTRACT, s)):
        if forest[u] != forest[v]:
            forest.union(u, v)
            kept.append((u, v))
    return frozenset(kept)


def twin_classes(g: Graph) -> List[Tuple[int, ...]]:
    """
    Classes of interchangeable vertices, each sorted, only classes of two or more.

    True twins share their closed neighbourhood, false twins their open one;
    exchanging two twins is an automorphism of g.
    """
    by_closed: Dict[FrozenSet[int], List[int]] = {}
    for v in g.vertices():
        by_closed.setdefault(g.adjacency_set(v) | {v}, []).append(v)
    grouped = {v for members in by_closed.values() if len(members) > 1 for v in members}

    by_open: Dict[FrozenSet[int], List[int]] = {}
    for v in g.vertices():
        if v not in grouped:
            by_open.setdefault(g.adjacency_set(v), []).append(v)

    return sorted(tuple(members) for members in list(by_closed.values()) + list(by_open.values()) if len(members) > 1)


def _smaller_twins(twins: Iterable[Tuple[int, ...]]) -> Dict[int, Tuple[int, ...]]:
    smaller = {}
    for members in twins:
        for position, v in enumerate(members):
            if position:
                smaller[v] = members[:position]
    return smaller


def _gaps(touched, smaller: Dict[int, Tuple[int, ...]]) -> set:
    """Twins below a touched vertex that are not touched themselves."""
    return {w for v in touched for w in smaller.get(v, ()) if w not in touched}


def _forest_candidates(g: Graph, size: int, smaller: Dict[int, Tuple[int, ...]]) -> Iterator[Tuple]:
    edges = g.edges()
    last_use: Dict[int, int] = {}
    for index, (u, v) in enumerate(edges):
        last_use[u] = last_use[v] = index

    def extend(start: int, chosen: Tuple[int, ...], touched: FrozenSet[int]) -> Iterator[Tuple]:
        if len(chosen) == size:
            yield tuple(edges[i] for i in chosen)
            return
        stop = len(edges) - (size - len(chosen)) + 1
        missing = _gaps(touched, smaller)
        if missing:
            # a missing twin has to be touched by this edge or a later one
            stop = min(stop, min(last_use.get(w, -1) for w in missing) + 1)
        forest = UnionFind()
        for i in chosen:
            forest.union(*edges[i])
        slots = size - len(chosen) - 1

        for index in range(start, stop):
            u, v = edges[index]
            if forest[u] == forest[v]:
                continue
            grown = touched | {u, v}
            if smaller:
                left_open = _gaps(grown, smaller)
                if len(left_open) > 2 * slots or any(last_use.get(w, -1) <= index for w in left_open):
                    continue
            yield from extend(index + 1, chosen + (index,), grown)

    yield from extend(0, (), frozenset())


def _vertex_candidates(n: int, size: int, smaller: Dict[int, Tuple[int, ...]]) -> Iterator[Tuple]:
    def extend(start: int, chosen: Tuple[int, ...]) -> Iterator[Tuple]:
        if len(chosen) == size:
            yield chosen
            return
        for v in range(start, n - (size - len(chosen)) + 1):
            if any(w not in chosen for w in smaller.get(v, ())):
                continue
            yield from extend(v + 1, chosen + (v,))

    yield from extend(0, ())


def apply_candidate(g: Graph, op: Operation, candidate) -> Graph:
    if op is Operation.CONTRACT:
        return contract(g, candidate)[0]
    return delete_vertices(g, candidate)[0]


def enumerate_candidates(
    g: Graph,
    op: Operation,
    max_size: int,
    forests_only: bool = True,
    twins: Iterable[Tuple[int, ...]] = (),
) -> Iterator[Tuple]:
    """
    Candidate witnesses by increasing size, lexicographic within a size.

    Args:
        g (Graph): Host graph
        op (Operation): contract (edge sets) or delete (vertex sets)
        max_size (int): Largest candidate size
        forests_only (bool): Skip edge sets that contain a cycle
        twins (Iterable): Twin classes of g; when given, candidates touching a
            twin but not all smaller twins of its class are skipped
    """
    smaller = _smaller_twins(twins)
    if op is Operation.CONTRACT:
        for size in range(1, min(max_size, g.num_edges) + 1):
            if forests_only:
                yield from _forest_candidates(g, size, smaller)
            else:
                for candidate in combinations(g.edges(), size):
                    if not smaller or not _gaps({v for edge in candidate for v in edge}, smaller):
                        yield candidate
    else:
        for size in range(1, min(max_size, g.n) + 1):
            if smaller:
                yield from _vertex_candidates(g.n, size, smaller)
            else:
                yield from combinations(range(g.n), size)


def count_candidates(g: Graph, op: Operation, max_size: int) -> int:
    """Number of raw candidate sets up to max_size, before any pruning."""
    pool = g.num_edges if op is Operation.CONTRACT else g.n
    return sum(comb(pool, size) for size in range(1, min(max_size, pool) + 1))


def maximum_sets(
    g: Graph, pi: ParameterKind, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> List[FrozenSet[int]]:
    """
    Maximum independent sets (alpha) or maximum cliques (omega) of g.

    Starts from the evaluator's witness; every vertex not covered yet gets a
    maximum set through it when one exists.
    """
    pi = ParameterKind(pi)
    best, first = pi_value(g, pi, exact_max_vertices)
    found = [first]
    covered = set(first)
    for v in g.vertices():
        if v in covered:
            continue
        if pi is ParameterKind.ALPHA:
            keep = [u for u in g.vertices() if u != v and not g.has_edge(u, v)]
        else:
            keep = g.neighbors(v)
        rest, relabel = induced_subgraph(g, keep)
        value, witness = pi_value(rest, pi, exact_max_vertices)
        if value + 1 == best:
            original = {new: old for old, new in relabel.items()}
            members = frozenset(original[u] for u in witness) | {v}
            found.append(members)
            covered |= members
    return found


def keeps_image_above(
    g: Graph, op: Operation, pi: ParameterKind, candidate, kept: FrozenSet[int], target: int
) -> bool:
    """
    Whether the image of the maximum set `kept` under the candidate is still
    an independent set (clique) with more than target vertices.
    """
    if op is Operation.DELETE:
        return len(kept.difference(candidate)) > target

    parts = UnionFind()
    for u, v in candidate:
        parts.union(u, v)
    if pi is ParameterKind.OMEGA:
        return len({parts[v] for v in kept}) > target

    owner = {}
    for v in kept:
        root = parts[v]
        if root in owner:
            return False
        owner[root] = v
    for edge in candidate:
        for t in edge:
            root = parts[t]
            if root not in owner:
                continue
            for w in g.neighbors(t):
                other = parts[w]
                if other != root and other in owner:
                    return False
    return len(kept) > target


class BruteForceBlocker:
    """Exhaustive blocker solver with size guards."""

    def __init__(
        self,
        exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES,
        contract_max_vertices: int = 16,
        delete_max_vertices: int = 20,
        max_candidates: int = 3_000_000,
    ):
        """
        Args:
            exact_max_vertices (int): Guard for the exact alpha/omega solver
            contract_max_vertices (int): Vertex limit for contraction search needing exact evaluation
            delete_max_vertices (int): Vertex limit for deletion search needing exact evaluation
            max_candidates (int): Limit on the number of candidate witnesses examined by one search
        """
        self.exact_max_vertices = exact_max_vertices
        self.contract_max_vertices = contract_max_vertices
        self.delete_max_vertices = delete_max_vertices
        self.max_candidates = max_candidates

    def _has_polynomial_evaluator(self, inst: BlockerInstance) -> bool:
        """Whether every modified graph stays in a class with a fast alpha."""
        if inst.pi is not ParameterKind.ALPHA:
            return False
        if is_chordal(inst.graph) is not None:
            # chordal graphs are closed under contraction and deletion
            return True
        return inst.operation is Operation.DELETE and is_bipartite(inst.graph) is not None

    def check_guards(self, inst: BlockerInstance) -> None:
        """
        Vertex guard, checked before the search; the candidate limit is enforced while searching.

        Raises:
            SizeGuardError: The instance is too large for exhaustive search
        """
        if self._has_polynomial_evaluator(inst):
            return
        limit = self.contract_max_vertices if inst.operation is Operation.CONTRACT else self.delete_max_vertices
        if inst.graph.n > limit:
            raise SizeGuardError(
                f"Brute-force {inst.operation.value} search limited to {limit} vertices, graph has {inst.graph.n}"
            )

    def solve(self, inst: BlockerInstance) -> BlockerResult:
        """
        Solve a blocker instance by exhaustive search.

        Args:
            inst (BlockerInstance): Instance to solve

        Returns:
            BlockerResult: Minimum, lexicographically first witness on yes

        Raises:
            SizeGuardError: Too many vertices, or more than max_candidates candidates examined
        """
        self.check_guards(inst)
        g = inst.graph
        pi_before = pi_value(g, inst.pi, self.exact_max_vertices)[0]
        target = pi_before - inst.d

        # k = 0 leaves the graph unchanged and d >= 1
        if inst.k == 0 or target < 0:
            return BlockerResult(answer=False, pi_before=pi_before, engine="brute")

        family = maximum_sets(g, inst.pi, self.exact_max_vertices)
        twins = twin_classes(g)
        logger.debug(
            f"Searching up to {count_candidates(g, inst.operation, inst.k)} raw candidates "
            f"with {len(family)} maximum sets and {len(twins)} twin classes"
        )

        checked = 0
        for candidate in enumerate_candidates(g, inst.operation, inst.k, twins=twins):
            checked += 1
            if checked > self.max_candidates:
                raise SizeGuardError(
                    f"Search examined {self.max_candidates} candidate witnesses without settling the instance"
                )
            if any(keeps_image_above(g, inst.operation, inst.pi, candidate, kept, target) for kept in family):
                continue
            modified = apply_candidate(g, inst.operation, candidate)
            if pi_at_most(modified, inst.pi, target, self.exact_max_vertices):
                witness = frozenset(candidate)
                logger.debug(f"Witness {sorted(witness)} found after {checked} candidates")
                return self._verified_result(inst, witness, pi_before)

        logger.debug(f"No witness among {checked} candidates")
        return BlockerResult(answer=False, pi_before=pi_before, engine="brute")

    def _verified_result(self, inst: BlockerInstance, witness: FrozenSet, pi_before: int) -> BlockerResult:
        if not check_critical(inst.graph, inst.operation, witness, inst.pi, inst.d,
                              self.exact_max_vertices, pi_before=pi_before):
            raise WitnessError(f"Witness {sorted(witness)} failed re-verification")
        modified = apply_candidate(inst.graph, inst.operation, witness)
        pi_after = pi_value(modified, inst.pi, self.exact_max_vertices)[0]
        return BlockerResult(
            answer=True,
            witness=witness,
            pi_before=pi_before,
            pi_after=pi_after,
            engine="brute",
        )

    def critical_sets(
        self,
        g: Graph,
        op: Operation,
        pi: ParameterKind,
        d: int = 1,
        max_size: Optional[int] = None,
        forests_only: bool = False,
    ) -> List[FrozenSet]:
        """
        Every inclusion-minimal critical witness up to max_size.

        A candidate is minimal when no smaller critical set found so far is a
        subset of it; since sizes grow monotonically this covers all proper subsets.
        """
        op, pi = Operation(op), ParameterKind(pi)
        pool = g.num_edges if op is Operation.CONTRACT else g.n
        max_size = pool if max_size is None else max_size
        pi_before = pi_value(g, pi, self.exact_max_vertices)[0]
        target = pi_before - d
        if target < 0:
            return []
        family = maximum_sets(g, pi, self.exact_max_vertices)

        minimal: List[FrozenSet] = []
        for candidate in enumerate_candidates(g, op, max_size, forests_only=forests_only):
            members = frozenset(candidate)
            if any(found <= members for found in minimal):
                continue
            if any(keeps_image_above(g, op, pi, candidate, kept, target) for kept in family):
                continue
            modified = apply_candidate(g, op, candidate)
            if pi_at_most(modified, pi, target, self.exact_max_vertices):
                minimal.append(members)
        return minimal


def solve_bruteforce(inst: BlockerInstance, **limits) -> BlockerResult:
    """Module-level entry point; keyword limits go to BruteForceBlocker."""
    return BruteForceBlocker(**limits).solve(inst)


def minimalize_contraction_set(
    g: Graph,
    s: Iterable[Tuple[int, int]],
    pi: ParameterKind,
    d: int = 1,
    exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES,
) -> FrozenSet[Tuple[int, int]]:
    """
    Shrink a critical edge set to an inclusion-minimal critical one.

    First restrict to a spanning forest of G|_S (same contraction), then drop
    edges greedily while the set stays critical.

    Raises:
        WitnessError: s is not critical to begin with
    """
    pi_before = pi_value(g, pi, exact_max_vertices)[0]
    current = set(spanning_forest_edges(g, s))
    if not check_critical(g, Operation.CONTRACT, current, pi, d, exact_max_vertices, pi_before):
        raise WitnessError("Edge set is not contraction-critical")

    changed = True
    while changed:
        changed = False
        for edge in sorted(current):
            trial = current - {edge}
            if check_critical(g, Operation.CONTRACT, trial, pi, d, exact_max_vertices, pi_before):
                current = trial
                changed = True
                break
    return frozenset(canonical_edge(u, v) for u, v in current)


def minimalize_deletion_set(
    g: Graph,
    w: Iterable[int],
    pi: ParameterKind,
    d: int = 1,
    exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES,
) -> FrozenSet[int]:
    """Greedy analogue of minimalize_contraction_set for vertex deletion."""
    pi_before = pi_value(g, pi, exact_max_vertices)[0]
    current = set(normalize_witness(g, Operation.DELETE, w))
    if not check_critical(g, Operation.DELETE, current, pi, d, exact_max_vertices, pi_before):
        raise WitnessError("Vertex set is not deletion-critical")

    for v in sorted(current):
        trial = current - {v}
        if check_critical(g, Operation.DELETE, trial, pi, d, exact_max_vertices, pi_before):
            current = trial
    return frozenset(current)
