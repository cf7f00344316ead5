"""
Chordal Gadget Module

Encodes a Weighted Positive 2-SAT instance as a chordal graph whose
independence number can be lowered by one, with at most k contractions or
at most k deletions, exactly when the instance is satisfiable with at most k
true variables.

Vertex layout, fixed so that files are byte-stable:
    for each variable x in order: v_x, then the 2k+1 vertices of K_x
    then one vertex v_c per clause, in clause order (the clique K_C)

Edges: G_x = {v_x} + K_x is a clique, K_C is a clique, and v_c is complete
to K_x and K_y for c = (x or y).
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from src.graphs.graph_core import Graph, canonical_edge, edge_endpoints, vertex_set
from src.parameters.invariants import (
    DEFAULT_EXACT_MAX_VERTICES,
    Operation,
    ParameterKind,
    check_critical,
    normalize_witness,
)
from strategies.blockers.bruteforce_blocker import minimalize_contraction_set
from strategies.reductions.wp2sat import Assignment, Wp2SatInstance, check_assignment, is_satisfying
from utils.exceptions import WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ChordalGadget:
    """
    Attributes:
        phi: Source instance
        graph: The gadget
        var_vertex: v_x per variable
        var_clique: K_x per variable, ascending ids
        clause_vertex: v_c per clause
    """

    phi: Wp2SatInstance
    graph: Graph
    var_vertex: Tuple[int, ...]
    var_clique: Tuple[Tuple[int, ...], ...]
    clause_vertex: Tuple[int, ...]

    @property
    def k(self) -> int:
        return self.phi.k

    @property
    def expected_alpha(self) -> int:
        """|X| + 1, or |X| when there is no clause to add to the variable picks."""
        return self.phi.num_vars + (1 if self.phi.clauses else 0)

    @property
    def is_degenerate(self) -> bool:
        return self.phi.k == 0 or not self.phi.clauses

    def block(self, x: int) -> FrozenSet[int]:
        """G_x = {v_x} + K_x."""
        return frozenset((self.var_vertex[x],) + self.var_clique[x])

    def variable_of(self, v: int) -> Optional[int]:
        """Variable whose block contains v, None for clause vertices."""
        block_size = 2 * self.phi.k + 2
        x = v // block_size
        return x if x < self.phi.num_vars else None

    def role_map(self) -> Dict[str, Dict]:
        """Vertex id (as a JSON key) to its role and the variable or clause it encodes."""
        roles = {}
        for x, v in enumerate(self.var_vertex):
            roles[str(v)] = {"role": "v_x", "variable": self.phi.label(x)}
            for u in self.var_clique[x]:
                roles[str(u)] = {"role": "K_x", "variable": self.phi.label(x)}
        for index, v in enumerate(self.clause_vertex):
            x, y = self.phi.clauses[index]
            roles[str(v)] = {"role": "v_c", "clause": [self.phi.label(x), self.phi.label(y)]}
        return roles


def build_chordal_gadget(phi: Wp2SatInstance) -> ChordalGadget:
    """
    Build the chordal gadget of phi.

    Args:
        phi (Wp2SatInstance): Source instance

    Returns:
        ChordalGadget: num_vars * (2k+2) + num_clauses vertices
    """
    if phi.k == 0:
        logger.warning("Building a gadget with k = 0; every K_x has a single vertex")
    isolated = phi.isolated_variables()
    if isolated:
        logger.warning(f"Variables {[phi.label(x) for x in isolated]} appear in no clause")
    if not phi.clauses:
        logger.warning("Instance has no clauses; alpha of the gadget equals the number of variables")

    clique_size = 2 * phi.k + 1
    var_vertex, var_clique = [], []
    next_id = 0
    for _ in range(phi.num_vars):
        var_vertex.append(next_id)
        var_clique.append(tuple(range(next_id + 1, next_id + 1 + clique_size)))
        next_id += clique_size + 1
    clause_vertex = tuple(range(next_id, next_id + phi.num_clauses))

    edges = []
    for x in range(phi.num_vars):
        members = (var_vertex[x],) + var_clique[x]
        edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1:])
    edges.extend(
        (a, b) for i, a in enumerate(clause_vertex) for b in clause_vertex[i + 1:]
    )
    for index, (x, y) in enumerate(phi.clauses):
        edges.extend((clause_vertex[index], u) for u in var_clique[x] + var_clique[y])

    graph = Graph.from_edges(next_id + phi.num_clauses, edges)
    logger.debug(f"Chordal gadget with {graph.n} vertices and {graph.num_edges} edges")
    return ChordalGadget(
        phi=phi,
        graph=graph,
        var_vertex=tuple(var_vertex),
        var_clique=tuple(var_clique),
        clause_vertex=clause_vertex,
    )


def assignment_to_contraction_witness(gadget: ChordalGadget, a: Assignment) -> FrozenSet[Tuple[int, int]]:
    """
    One edge from v_x to the smallest vertex of K_x per true variable.

    Raises:
        WitnessError: a is not satisfying or exceeds k
    """
    check_assignment(gadget.phi, a)
    if not a.true_vars:
        logger.warning("Empty assignment gives an empty witness")
    return frozenset(
        canonical_edge(gadget.var_vertex[x], gadget.var_clique[x][0]) for x in sorted(a.true_vars)
    )


def _complete_assignment(phi: Wp2SatInstance, true_vars: Iterable[int]) -> Assignment:
    """Satisfy every remaining clause through its smaller variable."""
    chosen = set(true_vars)
    for x, y in phi.clauses:
        if x not in chosen and y not in chosen:
            chosen.add(min(x, y))
    return Assignment(frozenset(chosen))


def contraction_witness_to_assignment(
    gadget: ChordalGadget, s: Iterable[Tuple[int, int]], exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> Assignment:
    """
    Read an assignment off an alpha-contraction-critical edge set.

    The set is first made inclusion-minimal. Variables whose block meets V(S)
    are set true; every clause still unsatisfied then gets its smaller variable.

    Raises:
        WitnessError: s is over budget or not critical
    """
    s = normalize_witness(gadget.graph, Operation.CONTRACT, s)
    if len(s) > gadget.k:
        raise WitnessError(f"Witness has {len(s)} edges, budget is {gadget.k}")
    minimal = minimalize_contraction_set(gadget.graph, s, ParameterKind.ALPHA, 1, exact_max_vertices)

    touched = {gadget.variable_of(v) for v in edge_endpoints(minimal)}
    touched.discard(None)
    assignment = _complete_assignment(gadget.phi, touched)

    if not is_satisfying(gadget.phi, assignment) or assignment.size > len(minimal):
        raise WitnessError(
            f"Translated assignment {assignment.to_list()} does not certify the witness {sorted(minimal)}"
        )
    return assignment


def assignment_to_deletion_witness(gadget: ChordalGadget, a: Assignment) -> FrozenSet[int]:
    """
    W = {v_x : x true}.

    Raises:
        WitnessError: a is not satisfying or exceeds k
    """
    check_assignment(gadget.phi, a)
    if not a.true_vars:
        logger.warning("Empty assignment gives an empty witness")
    return frozenset(gadget.var_vertex[x] for x in a.true_vars)


def deletion_witness_to_assignment(
    gadget: ChordalGadget, w: Iterable[int], exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> Assignment:
    """
    Z = {x : v_x in W}, plus the smaller variable of each clause whose v_c is in W.

    Raises:
        WitnessError: w is over budget or not critical
    """
    w = vertex_set(gadget.graph, w)
    if len(w) > gadget.k:
        raise WitnessError(f"Witness has {len(w)} vertices, budget is {gadget.k}")
    if not check_critical(gadget.graph, Operation.DELETE, w, ParameterKind.ALPHA, 1, exact_max_vertices):
        raise WitnessError("Vertex set is not deletion-critical")

    chosen = {x for x, v in enumerate(gadget.var_vertex) if v in w}
    for index, v in enumerate(gadget.clause_vertex):
        if v in w:
            chosen.add(min(gadget.phi.clauses[index]))
    assignment = Assignment(frozenset(chosen))

    if not is_satisfying(gadget.phi, assignment) or assignment.size > len(w):
        raise WitnessError(f"Translated assignment {assignment.to_list()} does not certify the witness {sorted(w)}")
    return assignment


if __name__ == "__main__":
    from strategies.reductions.wp2sat import figure_instance

    gadget = build_chordal_gadget(figure_instance())
    print(f"{gadget.graph.n} vertices, expected alpha {gadget.expected_alpha}")
    s = assignment_to_contraction_witness(gadget, Assignment(frozenset({1})))
    print("contraction witness:", sorted(s), "->", contraction_witness_to_assignment(gadget, s).to_list())
