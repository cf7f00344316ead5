"""
Apex Gadget Module

Adds a universal vertex w to a triangle-free graph. The result is
(C3+P1)-free with clique number 3, and k contractions bring the clique number
down to 2 exactly when the base graph has a vertex cover of size k.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from src.graphs.graph_core import (
    Graph,
    canonical_edge,
    connected_components,
    is_c3_free,
    spanning_on_edges,
    vertex_set,
)
from src.parameters.invariants import DEFAULT_EXACT_MAX_VERTICES, ParameterKind, is_vertex_cover
from strategies.blockers.bruteforce_blocker import minimalize_contraction_set
from utils.exceptions import PreconditionError, WitnessError
from utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ApexGadget:
    base: Graph
    graph: Graph
    w: int

    @property
    def base_n(self) -> int:
        return self.base.n

    def role_map(self) -> Dict[str, Dict]:
        roles = {str(v): {"role": "base", "vertex": v} for v in self.base.vertices()}
        roles[str(self.w)] = {"role": "w"}
        return roles


def build_apex_gadget(g: Graph) -> ApexGadget:
    """
    G' = g plus a vertex w (id g.n) adjacent to every vertex of g.

    Raises:
        PreconditionError: g has a triangle, or g has no edge (degenerate)
    """
    if not is_c3_free(g):
        raise PreconditionError("Base graph must be triangle-free")
    if g.num_edges == 0:
        raise PreconditionError("Base graph has no edge; the gadget would be degenerate")

    w = g.n
    edges = list(g.edges()) + [(v, w) for v in g.vertices()]
    return ApexGadget(base=g, graph=Graph.from_edges(g.n + 1, edges), w=w)


def vc_witness_to_contraction_witness(gadget: ApexGadget, cover: Iterable[int]) -> FrozenSet[Tuple[int, int]]:
    """
    S = {vw : v in cover}.

    Raises:
        WitnessError: cover is not a vertex cover of the base graph
    """
    cover = vertex_set(gadget.base, cover)
    if not is_vertex_cover(gadget.base, cover):
        raise WitnessError(f"{sorted(cover)} is not a vertex cover of the base graph")
    return frozenset(canonical_edge(v, gadget.w) for v in cover)


def contraction_witness_to_vc(
    gadget: ApexGadget, s: Iterable[Tuple[int, int]], exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> FrozenSet[int]:
    """
    Read a vertex cover off an omega-contraction-critical edge set.

    After minimalization every component of G'|_S is a tree; the component of
    w gives all its vertices but w, every other component all but its
    smallest vertex. The cover has exactly as many vertices as the minimal set
    has edges.

    Raises:
        WitnessError: s is not critical, or the translation fails to cover
    """
    minimal = minimalize_contraction_set(gadget.graph, s, ParameterKind.OMEGA, 1, exact_max_vertices)

    cover = set()
    for component in connected_components(spanning_on_edges(gadget.graph, minimal)):
        if len(component) < 2:
            continue
        spared = gadget.w if gadget.w in component else min(component)
        cover.update(v for v in component if v != spared)

    if len(cover) != len(minimal) or not is_vertex_cover(gadget.base, cover):
        raise WitnessError(f"Translated set {sorted(cover)} is not a cover of size {len(minimal)}")
    return frozenset(cover)


if __name__ == "__main__":
    from src.graphs.generators import path_graph

    gadget = build_apex_gadget(path_graph(3))
    s = vc_witness_to_contraction_witness(gadget, {1})
    print("S =", sorted(s), "-> cover", sorted(contraction_witness_to_vc(gadget, s)))
