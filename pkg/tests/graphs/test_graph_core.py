import networkx as nx
import pytest

from src.graphs.generators import atlas_graphs, complete_graph, cycle_graph, make_rng, path_graph, random_graph
from src.graphs.graph_core import (
    INFINITY,
    Graph,
    complement,
    connected_components,
    contract,
    delete_vertices,
    distance,
    edge_set,
    from_networkx,
    induced_subgraph,
    is_bipartite,
    is_c3_free,
    is_c3_plus_p1_free,
    is_chordal,
    is_connected,
    is_forest,
    is_perfect_elimination_ordering,
    lex_bfs,
    open_neighborhood,
    set_distance,
    to_networkx,
    triangles,
)
from utils.exceptions import EdgeNotInGraphError, PreconditionError, VertexRangeError


def test_from_edges_collapses_duplicates_and_sorts():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges() == ((0, 1), (1, 2))
    assert g.num_edges == 2
    assert g.neighbors(1) == (0, 2)


def test_from_edges_rejects_self_loop_and_bad_ids():
    with pytest.raises(PreconditionError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(VertexRangeError):
        Graph.from_edges(2, [(0, 2)])


def test_asymmetric_adjacency_rejected():
    with pytest.raises(PreconditionError):
        Graph(2, [[1], []])


def test_contract_single_edge_of_p3(p3):
    contracted, mapping = contract(p3, [(0, 1)])
    assert contracted == complete_graph(2)
    assert mapping.component_of == (0, 0, 1)
    assert mapping.contracted_vertices() == (0,)
    assert mapping.members(0) == (0, 1)


def test_contract_c4_edge_gives_triangle(c4):
    contracted, _ = contract(c4, [(1, 2)])
    assert contracted == complete_graph(3)


def test_contract_all_edges_gives_single_vertex(c6):
    contracted, mapping = contract(c6, c6.edges())
    assert contracted.n == 1
    assert mapping.component_sizes == (6,)


def test_contract_ids_follow_component_minimum():
    g = path_graph(5)
    contracted, mapping = contract(g, [(3, 4)])
    assert mapping.component_of == (0, 1, 2, 3, 3)
    assert contracted == path_graph(4)


def test_contract_empty_set_is_identity(c5):
    assert contract(c5, [])[0] == c5


def test_contract_non_edge_raises(p3):
    with pytest.raises(EdgeNotInGraphError):
        contract(p3, [(0, 2)])


def test_edge_set_canonicalizes(p3):
    assert edge_set(p3, [(1, 0), (2, 1)]) == frozenset({(0, 1), (1, 2)})


def test_delete_center_of_claw(claw):
    remaining, relabel = delete_vertices(claw, [0])
    assert remaining.n == 3 and remaining.num_edges == 0
    assert relabel == {1: 0, 2: 1, 3: 2}


def test_induced_subgraph_relabels(c5):
    sub, relabel = induced_subgraph(c5, [4, 0, 1])
    assert relabel == {0: 0, 1: 1, 4: 2}
    assert sub.edges() == ((0, 1), (0, 2))


def test_components_ordered_by_minimum():
    g = Graph.from_edges(5, [(3, 4), (0, 2)])
    assert connected_components(g) == [frozenset({0, 2}), frozenset({1}), frozenset({3, 4})]
    assert not is_connected(g)


def test_set_distance(c6):
    assert set_distance(c6, [0], [3]) == 3
    assert set_distance(c6, [0, 1], [3, 4]) == 2
    assert set_distance(c6, [0], [0, 3]) == 0
    assert set_distance(Graph.empty(2), [0], [1]) == INFINITY


def test_open_neighborhood(p4):
    assert open_neighborhood(p4, [1]) == frozenset({0, 2})
    assert open_neighborhood(p4, [1, 2]) == frozenset({0, 3})


def test_complement_of_c4_is_two_edges(c4):
    assert complement(c4).edges() == ((0, 2), (1, 3))


def test_bipartite_recognition(c5, c6):
    assert is_bipartite(c5) is None
    left, right = is_bipartite(c6)
    assert left == frozenset({0, 2, 4})
    assert right == frozenset({1, 3, 5})


def test_chordal_recognition(c4, k4, paw):
    assert is_chordal(c4) is None
    assert is_chordal(k4) is not None
    ordering = is_chordal(paw)
    assert is_perfect_elimination_ordering(paw, ordering)


def test_lex_bfs_starts_at_zero_and_visits_all(c6):
    order = lex_bfs(c6)
    assert order[0] == 0
    assert sorted(order) == list(range(6))


@pytest.mark.parametrize("seed", range(20))
def test_recognizers_agree_with_networkx(seed):
    rng = make_rng(seed)
    g = random_graph(int(rng.integers(1, 9)), 0.45, rng)
    h = to_networkx(g)
    assert (is_chordal(g) is not None) == nx.is_chordal(h)
    assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
    assert len(triangles(g)) == sum(nx.triangles(h).values()) // 3
    assert is_forest(g) == nx.is_forest(h)


def test_triangle_predicates(k3, paw, c5):
    assert triangles(k3) == [(0, 1, 2)]
    assert not is_c3_free(k3)
    assert is_c3_free(c5)
    assert is_c3_plus_p1_free(paw)
    triangle_plus_isolated = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
    assert not is_c3_plus_p1_free(triangle_plus_isolated)


def test_networkx_roundtrip():
    h = nx.Graph([("b", "a"), ("c", "b")])
    g, relabel = from_networkx(h)
    assert relabel == {"a": 0, "b": 1, "c": 2}
    assert g == path_graph(3)
    assert nx.is_isomorphic(to_networkx(cycle_graph(5)), nx.cycle_graph(5))


def test_distance(c6, p4):
    assert distance(c6, 0, 3) == 3
    assert distance(c6, 1, 5) == 2
    assert distance(p4, 2, 2) == 0
    assert distance(Graph.from_edges(3, [(0, 1)]), 0, 2) == INFINITY
    with pytest.raises(VertexRangeError):
        distance(p4, 0, 4)


def test_distance_matches_networkx():
    rng = make_rng(11)
    for _ in range(100):
        g = random_graph(int(rng.integers(2, 10)), 0.3, rng)
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
        for u in g.vertices():
            for v in g.vertices():
                assert distance(g, u, v) == lengths[u].get(v, INFINITY)


def _sample_edge_sets(g, rng, max_size=3):
    edges = g.edges()
    for size in range(1, min(max_size, len(edges)) + 1):
        picked = rng.choice(len(edges), size=size, replace=False)
        yield [edges[i] for i in sorted(picked)]


def test_contracted_adjacency_is_distance_one_between_parts():
    rng = make_rng(5)
    for g in atlas_graphs(7, min_n=2):
        for s in _sample_edge_sets(g, rng):
            result, mapping = contract(g, s)
            parts = [mapping.members(x) for x in result.vertices()]
            for x in result.vertices():
                for y in range(x + 1, result.n):
                    assert result.has_edge(x, y) == (set_distance(g, parts[x], parts[y]) == 1)


def test_same_partition_gives_same_contraction():
    rng = make_rng(6)
    for g in atlas_graphs(6, min_n=2):
        for s in _sample_edge_sets(g, rng):
            _, mapping = contract(g, s)
            part = mapping.component_of
            # every edge inside a part, then a spanning tree of each part
            closure = [(u, v) for u, v in g.edges() if part[u] == part[v]]
            tree = list(nx.minimum_spanning_tree(nx.Graph(s)).edges())
            assert contract(g, closure) == contract(g, s)
            assert contract(g, tree) == contract(g, s)


def test_is_chordal_matches_networkx_on_many_graphs():
    rng = make_rng(2024)
    for _ in range(1000):
        g = random_graph(int(rng.integers(1, 11)), float(rng.uniform(0.2, 0.8)), rng)
        assert (is_chordal(g) is not None) == nx.is_chordal(to_networkx(g))
