import pytest

from src.graphs.generators import atlas_graphs, complete_graph, cycle_graph, path_graph
from src.graphs.graph_core import Graph, is_c3_free, is_c3_plus_p1_free
from src.parameters.invariants import Operation, ParameterKind, check_critical, is_vertex_cover, omega_exact
from strategies.blockers.blocker_types import BlockerInstance
from strategies.blockers.bruteforce_blocker import solve_bruteforce
from strategies.reductions.apex_gadget import (
    build_apex_gadget,
    contraction_witness_to_vc,
    vc_witness_to_contraction_witness,
)
from strategies.reductions.wp2sat import vertex_cover_bruteforce
from utils.exceptions import PreconditionError, WitnessError


def test_apex_on_path():
    gadget = build_apex_gadget(path_graph(3))
    assert gadget.w == 3 and gadget.base_n == 3
    assert gadget.graph.degree(3) == 3
    assert gadget.graph.num_edges == 5
    assert omega_exact(gadget.graph)[0] == 3
    assert is_c3_plus_p1_free(gadget.graph)
    assert gadget.role_map()["3"] == {"role": "w"}
    assert gadget.role_map()["0"] == {"role": "base", "vertex": 0}


def test_preconditions():
    with pytest.raises(PreconditionError):
        build_apex_gadget(complete_graph(3))
    with pytest.raises(PreconditionError):
        build_apex_gadget(Graph.empty(3))


def test_cover_roundtrip():
    gadget = build_apex_gadget(path_graph(3))
    s = vc_witness_to_contraction_witness(gadget, {1})
    assert s == frozenset({(1, 3)})
    assert check_critical(gadget.graph, Operation.CONTRACT, s, ParameterKind.OMEGA, 1)
    assert contraction_witness_to_vc(gadget, s) == frozenset({1})


def test_non_cover_rejected():
    gadget = build_apex_gadget(path_graph(3))
    with pytest.raises(WitnessError):
        vc_witness_to_contraction_witness(gadget, {0})


def test_non_critical_witness_rejected():
    gadget = build_apex_gadget(path_graph(3))
    # merging 0 and 1 keeps the triangle on {01, 2, w}
    with pytest.raises(WitnessError):
        contraction_witness_to_vc(gadget, [(0, 1)])


def test_witness_without_w_translates():
    gadget = build_apex_gadget(cycle_graph(4))
    cover = contraction_witness_to_vc(gadget, [(0, 1), (1, 2), (2, 3)])
    assert cover == frozenset({1, 2, 3})
    assert is_vertex_cover(gadget.base, cover)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_blocker_answer_matches_vertex_cover(n):
    for base in atlas_graphs(n, min_n=n):
        if base.num_edges == 0 or not is_c3_free(base):
            continue
        gadget = build_apex_gadget(base)
        for k in range(4):
            result = solve_bruteforce(BlockerInstance(gadget.graph, Operation.CONTRACT, ParameterKind.OMEGA, k, 1))
            assert result.answer == (vertex_cover_bruteforce(base, k) is not None)
            if result.answer:
                cover = contraction_witness_to_vc(gadget, result.witness)
                assert len(cover) <= k and is_vertex_cover(base, cover)
