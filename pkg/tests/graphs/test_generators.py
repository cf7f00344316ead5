import networkx as nx
import pytest

from src.graphs.generators import (
    FAMILIES,
    atlas_graphs,
    connected_bipartite_catalog,
    cycle_graph,
    generate,
    make_rng,
    random_bipartite,
    random_chordal,
    random_tree,
    random_triangle_free,
    star_graph,
)
from src.graphs.graph_core import is_bipartite, is_c3_free, is_chordal, is_connected, is_forest, to_networkx


def test_fixed_families():
    assert generate("cycle", 6) == cycle_graph(6)
    assert generate("path", 4).edges() == ((0, 1), (1, 2), (2, 3))
    assert star_graph(5).degree(0) == 4


@pytest.mark.parametrize("family", FAMILIES)
def test_generation_is_seeded(family):
    assert generate(family, 9, p=0.4, seed=3) == generate(family, 9, p=0.4, seed=3)


def test_generate_rejects_bad_parameters():
    with pytest.raises(ValueError):
        generate("petersen", 10)
    with pytest.raises(ValueError):
        generate("tree", 0)
    with pytest.raises(ValueError):
        generate("bipartite", 5, p=1.5)


@pytest.mark.parametrize("seed", range(10))
def test_random_families_land_in_their_class(seed):
    rng = make_rng(seed)
    tree = random_tree(10, rng)
    assert is_forest(tree) and is_connected(tree)

    bipartite = random_bipartite(10, 0.3, rng, connected=True)
    assert is_bipartite(bipartite) is not None and is_connected(bipartite)

    assert is_c3_free(random_triangle_free(10, 0.5, rng))
    assert is_chordal(random_chordal(10, 0.6, rng)) is not None


def test_cli_examples():
    assert is_chordal(generate("chordal", 10, seed=1)) is not None
    assert is_c3_free(generate("triangle-free", 8, p=0.3, seed=2))


def test_atlas_covers_all_graphs_on_four_vertices():
    assert len([g for g in atlas_graphs(4, min_n=4)]) == 11


def test_connected_bipartite_catalog_counts():
    catalog = connected_bipartite_catalog(6)
    by_size = {}
    for g in catalog:
        by_size[g.n] = by_size.get(g.n, 0) + 1
    assert by_size == {2: 1, 3: 1, 4: 3, 5: 5, 6: 17}
    assert all(nx.is_connected(to_networkx(g)) and nx.is_bipartite(to_networkx(g)) for g in catalog)
