"""
Blocker Types Module

Problem statement, answer and tree-witness records shared by the solvers.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from src.graphs.graph_core import Graph, connected_components, spanning_on_edges
from src.parameters.invariants import Operation, ParameterKind
from utils.exceptions import PreconditionError


@dataclass(frozen=True)
class BlockerInstance:
    """Can at most k operations lower pi(graph) by at least d?"""

    graph: Graph
    operation: Operation
    pi: ParameterKind
    k: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "operation", Operation(self.operation))
        object.__setattr__(self, "pi", ParameterKind(self.pi))
        if self.k < 0:
            raise PreconditionError(f"Budget k must be non-negative, got {self.k}")
        if self.d < 1:
            raise PreconditionError(f"Threshold d must be at least 1, got {self.d}")

    def summary(self) -> Dict:
        return {
            "n": self.graph.n,
            "m": self.graph.num_edges,
            "operation": self.operation.value,
            "pi": self.pi.value,
            "k": self.k,
            "d": self.d,
        }


@dataclass(frozen=True)
class BlockerResult:
    """
    Answer to a blocker instance.

    A yes answer always carries a witness of size <= k that has been checked
    with check_critical.
    """

    answer: bool
    witness: Optional[FrozenSet] = None
    pi_before: int = 0
    pi_after: Optional[int] = None
    engine: str = "brute"
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def answer_text(self) -> str:
        return "yes" if self.answer else "no"

    def witness_list(self):
        """Witness as a sorted JSON-friendly list (pairs for edges, ids for vertices)."""
        if self.witness is None:
            return None
        return [list(item) if isinstance(item, tuple) else item for item in sorted(self.witness)]

    def to_dict(self) -> Dict:
        return {
            "answer": self.answer_text,
            "witness": self.witness_list(),
            "pi_before": self.pi_before,
            "pi_after": self.pi_after,
            "engine": self.engine,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class TreeWitness:
    """A tree inside the host graph, given by its edges."""

    edges: FrozenSet[Tuple[int, int]]
    vertices: FrozenSet[int]

    @classmethod
    def from_edges(cls, g: Graph, edges) -> "TreeWitness":
        """
        Raises:
            PreconditionError: The edges do not form a tree
        """
        edges = frozenset(edges)
        vertices = frozenset(v for edge in edges for v in edge)
        spanning = spanning_on_edges(g, edges)
        touched = [c for c in connected_components(spanning) if len(c) > 1]
        if len(touched) != 1 or len(vertices) != len(edges) + 1:
            raise PreconditionError("Edge set does not form a tree")
        return cls(edges=edges, vertices=vertices)

    @property
    def size(self) -> int:
        return len(self.edges)
