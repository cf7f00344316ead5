"""
Weighted Positive 2-SAT Module

Instances whose clauses are pairs of positive literals, satisfied by making at
most k variables true. This is Vertex Cover restated: variables are vertices,
clauses are edges.

Text format:
    p wp2sat <num_vars> <num_clauses> <k>
    u v        (one line per clause, 0-based variable indices)
Lines starting with '#' are ignored; a 'c names a b c ...' line labels variables.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Optional, Tuple

from src.graphs.graph_core import Graph, canonical_edge, vertex_set
from src.graphs.graph_io import content_lines
from src.parameters.invariants import DEFAULT_EXACT_MAX_VERTICES, alpha_exact
from utils.exceptions import GraphParseError, PreconditionError, SizeGuardError, WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)

DEFAULT_MAX_VARS = 20


@dataclass(frozen=True)
class Wp2SatInstance:
    """
    Clauses are unordered variable pairs kept in input order; the gadget
    layout follows that order.
    """

    num_vars: int
    clauses: Tuple[Tuple[int, int], ...]
    k: int
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.num_vars < 0 or self.k < 0:
            raise PreconditionError(f"num_vars and k must be non-negative, got {self.num_vars}, {self.k}")

        clauses = []
        for clause in self.clauses:
            x, y = (int(v) for v in clause)
            if x == y:
                raise PreconditionError(f"Clause ({x}, {y}) repeats a variable")
            if not (0 <= x < self.num_vars and 0 <= y < self.num_vars):
                raise PreconditionError(f"Clause ({x}, {y}) uses a variable outside [0, {self.num_vars})")
            clauses.append(canonical_edge(x, y))
        if len(set(clauses)) != len(clauses):
            raise PreconditionError("Duplicate clauses")
        object.__setattr__(self, "clauses", tuple(clauses))

        if self.names is not None:
            names = tuple(str(name) for name in self.names)
            if len(names) != self.num_vars or len(set(names)) != len(names):
                raise PreconditionError("Variable names must be distinct, one per variable")
            object.__setattr__(self, "names", names)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def label(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def isolated_variables(self) -> Tuple[int, ...]:
        used = {v for clause in self.clauses for v in clause}
        return tuple(x for x in range(self.num_vars) if x not in used)


@dataclass(frozen=True)
class Assignment:
    """The set of variables made true."""

    true_vars: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "true_vars", frozenset(int(x) for x in self.true_vars))

    @property
    def size(self) -> int:
        return len(self.true_vars)

    def to_list(self):
        return sorted(self.true_vars)


def is_satisfying(phi: Wp2SatInstance, a: Assignment) -> bool:
    """Every clause has a true literal (the budget is not checked)."""
    return all(x in a.true_vars or y in a.true_vars for x, y in phi.clauses)


def check_assignment(phi: Wp2SatInstance, a: Assignment) -> None:
    """
    Raises:
        WitnessError: a is out of range, not satisfying, or exceeds k
    """
    if any(not 0 <= x < phi.num_vars for x in a.true_vars):
        raise WitnessError(f"Assignment {a.to_list()} names a variable outside [0, {phi.num_vars})")
    if not is_satisfying(phi, a):
        raise WitnessError(f"Assignment {a.to_list()} leaves a clause unsatisfied")
    if a.size > phi.k:
        raise WitnessError(f"Assignment makes {a.size} variables true, budget is {phi.k}")


def vc_to_wp2sat(g: Graph, k: int) -> Wp2SatInstance:
    """One variable per vertex, one clause per edge."""
    return Wp2SatInstance(num_vars=g.n, clauses=g.edges(), k=k)


def wp2sat_to_vc(phi: Wp2SatInstance) -> Tuple[Graph, int]:
    return Graph.from_edges(phi.num_vars, phi.clauses), phi.k


def solve_wp2sat_bruteforce(phi: Wp2SatInstance, max_vars: int = DEFAULT_MAX_VARS) -> Optional[Assignment]:
    """
    Smallest satisfying assignment within budget, lexicographic among equals.

    Args:
        phi (Wp2SatInstance): Instance to solve
        max_vars (int): Size guard on the number of variables

    Returns:
        Assignment or None: None when no assignment with at most k true variables exists

    Raises:
        SizeGuardError: More than max_vars variables
    """
    if phi.num_vars > max_vars:
        raise SizeGuardError(f"WP2SAT brute force limited to {max_vars} variables, instance has {phi.num_vars}")

    for size in range(min(phi.k, phi.num_vars) + 1):
        for chosen in combinations(range(phi.num_vars), size):
            candidate = Assignment(frozenset(chosen))
            if is_satisfying(phi, candidate):
                return candidate
    return None


def vertex_cover_bruteforce(
    g: Graph, k: int, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> Optional[FrozenSet[int]]:
    """A minimum vertex cover if it has at most k vertices, else None."""
    alpha, independent = alpha_exact(g, max_vertices=exact_max_vertices)
    if g.n - alpha > k:
        return None
    return vertex_set(g, (v for v in g.vertices() if v not in independent))


def figure_instance() -> Wp2SatInstance:
    """Variables w, x, y, z; clauses (w or x), (x or y), (x or z); k = 1."""
    return Wp2SatInstance(
        num_vars=4,
        clauses=((0, 1), (1, 2), (1, 3)),
        k=1,
        names=("w", "x", "y", "z"),
    )


def parse_wp2sat(text: str) -> Wp2SatInstance:
    """
    Parse the WP2SAT text format.

    Raises:
        GraphParseError: Malformed header or clause line, or an invalid instance
    """
    names = None
    lines = []
    for number, line in content_lines(text):
        parts = line.split()
        if parts[0] == "c":
            if len(parts) > 1 and parts[1] == "names":
                names = tuple(parts[2:])
            continue
        lines.append((number, parts))

    if not lines or lines[0][1][:2] != ["p", "wp2sat"] or len(lines[0][1]) != 5:
        number = lines[0][0] if lines else 1
        raise GraphParseError("expected header 'p wp2sat <num_vars> <num_clauses> <k>'", number)

    header_number, header = lines[0]
    try:
        num_vars, num_clauses, k = (int(token) for token in header[2:])
    except ValueError:
        raise GraphParseError("non-integer token in header", header_number) from None

    body = lines[1:]
    if len(body) != num_clauses:
        last = body[-1][0] if body else header_number
        raise GraphParseError(f"header announces {num_clauses} clauses but {len(body)} clause lines follow", last)

    clauses = []
    for number, parts in body:
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got '{' '.join(parts)}'", number)
        try:
            clauses.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphParseError(f"non-integer token in '{' '.join(parts)}'", number) from None

    try:
        return Wp2SatInstance(num_vars=num_vars, clauses=tuple(clauses), k=k, names=names)
    except PreconditionError as error:
        raise GraphParseError(str(error), header_number) from error


def serialize_wp2sat(phi: Wp2SatInstance) -> str:
    lines = [f"p wp2sat {phi.num_vars} {phi.num_clauses} {phi.k}"]
    if phi.names is not None:
        lines.append("c names " + " ".join(phi.names))
    lines.extend(f"{x} {y}" for x, y in phi.clauses)
    return "\n".join(lines) + "\n"
