import networkx as nx
import pytest

from src.graphs.generators import (
    atlas_graphs,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    make_rng,
    random_bipartite,
    random_chordal,
    random_graph,
)
from src.graphs.graph_core import Graph, contract, is_bipartite, to_networkx
from src.parameters.invariants import (
    Operation,
    ParameterKind,
    alpha_bipartite,
    alpha_chordal,
    alpha_exact,
    apply_operation,
    check_critical,
    is_clique,
    is_independent_set,
    is_matching,
    is_vertex_cover,
    max_matching_bipartite,
    min_vertex_cover_bipartite,
    normalize_witness,
    omega_exact,
    pi_at_most,
    pi_value,
    tau,
)
from utils.exceptions import GraphClassError, SizeGuardError, WitnessError


def test_alpha_exact_small_cases(c5, p4, k4):
    assert alpha_exact(c5) == (2, frozenset({0, 2}))
    assert alpha_exact(p4) == (2, frozenset({0, 2}))
    assert alpha_exact(k4)[0] == 1
    assert alpha_exact(Graph.empty(0)) == (0, frozenset())
    assert alpha_exact(Graph.empty(3)) == (3, frozenset({0, 1, 2}))


def test_omega_exact(k4, c5, p3):
    assert omega_exact(k4)[0] == 4
    assert omega_exact(c5)[0] == 2
    assert omega_exact(p3)[0] == 2


def test_exact_solver_guard():
    with pytest.raises(SizeGuardError):
        alpha_exact(Graph.empty(31))
    assert alpha_exact(Graph.empty(31), max_vertices=31)[0] == 31


@pytest.mark.parametrize("seed", range(25))
def test_alpha_exact_matches_networkx(seed):
    rng = make_rng(seed)
    g = random_graph(int(rng.integers(1, 11)), float(rng.uniform(0.1, 0.8)), rng)
    alpha, witness = alpha_exact(g)
    assert is_independent_set(g, witness) and len(witness) == alpha
    clique_in_complement = max(len(c) for c in nx.find_cliques(nx.complement(to_networkx(g))))
    assert alpha == clique_in_complement
    assert omega_exact(g)[0] == max(len(c) for c in nx.find_cliques(to_networkx(g)))


@pytest.mark.parametrize("seed", range(25))
def test_koenig_relations(seed):
    rng = make_rng(seed)
    g = random_bipartite(int(rng.integers(1, 13)), float(rng.uniform(0.1, 0.7)), rng, connected=False)
    matching = max_matching_bipartite(g)
    assert is_matching(g, matching)
    left, _ = is_bipartite(g)
    reference = nx.bipartite.maximum_matching(to_networkx(g), top_nodes=left)
    assert len(matching) == len(reference) // 2

    cover = min_vertex_cover_bipartite(g, matching)
    assert is_vertex_cover(g, cover)
    assert len(cover) == len(matching)
    alpha = alpha_exact(g)[0]
    assert len(cover) + alpha == g.n
    assert alpha_bipartite(g)[0] == alpha
    assert tau(g) == len(cover)


def test_alpha_bipartite_witness(c6):
    alpha, witness = alpha_bipartite(c6)
    assert alpha == 3
    assert is_independent_set(c6, witness) and len(witness) == 3


def test_alpha_bipartite_rejects_odd_cycle(c5):
    with pytest.raises(GraphClassError):
        alpha_bipartite(c5)


@pytest.mark.parametrize("seed", range(20))
def test_alpha_chordal_matches_exact(seed):
    rng = make_rng(seed)
    g = random_chordal(int(rng.integers(1, 14)), 0.5, rng)
    alpha, witness = alpha_chordal(g)
    assert alpha == alpha_exact(g)[0]
    assert is_independent_set(g, witness) and len(witness) == alpha


def test_alpha_chordal_rejects_c4(c4):
    with pytest.raises(GraphClassError):
        alpha_chordal(c4)


def test_predicates(k3, p3):
    assert is_clique(k3, [0, 1, 2])
    assert not is_clique(p3, [0, 1, 2])
    assert is_vertex_cover(p3, [1])
    assert not is_vertex_cover(p3, [0])
    assert not is_matching(p3, [(0, 1), (1, 2)])
    assert not is_matching(p3, [(0, 2)])


def test_pi_value_dispatch(c5, c6):
    assert pi_value(c6, ParameterKind.ALPHA)[0] == 3
    assert pi_value(complete_bipartite_graph(2, 3), "alpha")[0] == 3
    assert pi_value(c5, ParameterKind.ALPHA)[0] == 2
    assert pi_value(complete_graph(5), ParameterKind.OMEGA)[0] == 5


def test_pi_at_most(k3, c5):
    assert pi_at_most(c5, ParameterKind.OMEGA, 2)
    assert not pi_at_most(k3, ParameterKind.OMEGA, 2)
    assert not pi_at_most(c5, ParameterKind.OMEGA, 1)
    assert pi_at_most(Graph.empty(3), ParameterKind.OMEGA, 1)
    assert not pi_at_most(c5, ParameterKind.ALPHA, -1)
    assert pi_at_most(Graph.empty(0), ParameterKind.ALPHA, 0)


def test_check_critical_examples(c6, k3, claw):
    assert check_critical(c6, Operation.CONTRACT, [(0, 1)], ParameterKind.ALPHA, 1)
    assert not check_critical(c6, Operation.CONTRACT, [(0, 1)], ParameterKind.ALPHA, 2)
    assert not check_critical(k3, Operation.DELETE, [0], ParameterKind.ALPHA, 1)
    assert check_critical(k3, Operation.DELETE, [0], ParameterKind.OMEGA, 1)
    assert check_critical(claw, Operation.DELETE, [1], ParameterKind.ALPHA, 1)
    assert not check_critical(claw, Operation.DELETE, [0], ParameterKind.ALPHA, 1)


def test_apply_operation(c4):
    assert apply_operation(c4, Operation.CONTRACT, [(0, 1)]) == complete_graph(3)
    assert apply_operation(c4, "delete", [0]).num_edges == 2


def test_normalize_witness_rejects_non_edges(p3):
    with pytest.raises(WitnessError):
        normalize_witness(p3, Operation.CONTRACT, [(0, 2)])
    with pytest.raises(WitnessError):
        normalize_witness(p3, Operation.DELETE, [5])
    assert normalize_witness(p3, Operation.CONTRACT, [(1, 0)]) == frozenset({(0, 1)})


def test_cycle_matching_sizes():
    assert len(max_matching_bipartite(cycle_graph(8))) == 4
    assert len(max_matching_bipartite(complete_bipartite_graph(3, 5))) == 3


def test_matching_on_long_path_needs_no_recursion(long_scrambled_path):
    g = long_scrambled_path
    matching = max_matching_bipartite(g)
    assert len(matching) == 1500
    assert is_matching(g, matching)
    assert alpha_bipartite(g)[0] == 1500


def test_single_edge_contraction_lowers_alpha_by_at_most_one():
    for g in atlas_graphs(7, min_n=2):
        alpha = alpha_exact(g)[0]
        for edge in g.edges():
            after = alpha_exact(contract(g, [edge])[0])[0]
            assert alpha - 1 <= after <= alpha
