import pytest

from src.graphs.generators import cycle_graph
from src.graphs.graph_io import InstanceStore, parse_edge_list, serialize_edge_list
from utils.exceptions import GraphParseError


def test_parse_with_comments_and_duplicates():
    text = "# a triangle\n3 4\n0 1\n\n1 2\n2 0\n1 0\n"
    g = parse_edge_list(text)
    assert g.n == 3
    assert g.edges() == ((0, 1), (0, 2), (1, 2))


def test_serialize_is_canonical():
    text = serialize_edge_list(cycle_graph(4))
    assert text == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert parse_edge_list(text) == cycle_graph(4)


def test_serialize_edgeless():
    assert serialize_edge_list(parse_edge_list("2 0\n")) == "2 0\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3\n", 1),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 -1\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line_number == line
    assert str(info.value).startswith(f"line {line}:")


def test_instance_store_roundtrip(tmp_path):
    store = InstanceStore(tmp_path / "instances")
    path = store.save_graph(cycle_graph(5), "c5.el")
    assert path.endswith("c5.el")
    assert store.load_graph("c5.el") == cycle_graph(5)

    store.save_json({"b": 1, "a": [1, 2]}, "meta.json")
    assert store.load_json("meta.json") == {"a": [1, 2], "b": 1}


def test_instance_store_accepts_paths(tmp_path):
    store = InstanceStore(tmp_path / "unused")
    target = tmp_path / "direct" / "p.el"
    store.save_text("2 1\n0 1\n", target)
    assert store.load_graph(target).num_edges == 1


def test_instance_store_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        InstanceStore(tmp_path).load_graph("nope.el")


def test_bundled_instances_parse(instances_dir):
    store = InstanceStore(instances_dir)
    assert store.load_graph("c6.el") == cycle_graph(6)
    assert store.load_graph("k3.el").num_edges == 3
    assert store.load_graph("star4.el").degree(0) == 4
