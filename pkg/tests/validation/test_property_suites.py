import pandas as pd
import pytest

from src.graphs.generators import cycle_graph
from src.graphs.graph_io import parse_edge_list
from utils.settings import SolverSettings
from validation.property_suites import RECORD_COLUMNS, SUITES, PropertySuiteRunner, fingerprint, graph_instance

SMALL_RUNS = {
    "koenig": {"count": 25, "max_n": 8},
    "forest-criticality": {"count": 0, "max_n": 4},
    "bipartite-oracle": {"count": 0, "max_n": 4},
    "tree-witness": {"count": 10, "max_n": 8},
    "gadget-thm2": {"count": 4, "max_n": 3},
    "gadget-thm3": {"count": 4, "max_n": 3},
    "gadget-thm6": {"count": 10, "max_n": 5},
    "roundtrips": {"count": 4, "max_n": 3},
}


@pytest.fixture(scope="module")
def runner():
    return PropertySuiteRunner(SolverSettings())


def test_every_suite_has_a_small_run():
    assert set(SMALL_RUNS) == set(SUITES)


@pytest.mark.parametrize("suite", SUITES)
def test_small_runs_pass(runner, suite):
    records = runner.run(suite, seed=0, **SMALL_RUNS[suite])
    assert list(records.columns) == RECORD_COLUMNS
    assert (records["suite"] == suite).all()
    checked = records[~records["skipped"].astype(bool)]
    assert checked["passed"].astype(bool).all(), checked[~checked["passed"].astype(bool)]["detail"].tolist()


def test_runs_are_seeded(runner):
    first = runner.run("koenig", seed=5, count=10, max_n=6)
    second = runner.run("koenig", seed=5, count=10, max_n=6)
    pd.testing.assert_frame_equal(first, second)
    assert len(first) == 10


def test_defaults_come_from_settings():
    settings = SolverSettings({"suite_defaults": {"tree-witness": {"seed": 1, "count": 3, "max_n": 6}}})
    records = PropertySuiteRunner(settings).run("tree-witness")
    assert len(records) == 3


def test_unknown_suite(runner):
    with pytest.raises(ValueError):
        runner.run("gadget-thm9")


def test_bipartite_oracle_covers_both_thresholds(runner):
    records = runner.run("bipartite-oracle", max_n=3)
    # P2 and P3, d in {1, 2}, k in 0..5
    assert len(records) == 2 * 2 * 6
    assert set(records["d"]) == {1, 2}


def test_fingerprint_is_stable():
    assert fingerprint("koenig", "2 1\n0 1\n") == fingerprint("koenig", "2 1\n0 1\n")
    assert fingerprint("koenig", "2 1\n0 1\n") != fingerprint("roundtrips", "2 1\n0 1\n")
    assert len(fingerprint("koenig", "")) == 32


def test_graph_instance_stays_parseable(c4):
    text = graph_instance(c4, k=2, d=1)
    assert text.startswith("# d=1\n# k=2\n")
    assert parse_edge_list(text) == cycle_graph(4)


@pytest.mark.parametrize("suite", ["gadget-thm2", "gadget-thm3", "gadget-thm6", "roundtrips"])
def test_guarded_instances_are_skipped_in_every_gadget_suite(suite):
    runner = PropertySuiteRunner(SolverSettings({"bruteforce_max_candidates": 0}))
    records = runner.run(suite, seed=0, count=6, max_n=3)
    skipped = records[records["skipped"].astype(bool)]
    assert not skipped.empty
    assert skipped["detail"].str.startswith("SizeGuardError").all()
    assert records["passed"].astype(bool).all()


def test_forest_criticality_searches_every_edge_count(runner, monkeypatch):
    budgets = []
    critical_sets = runner.brute.critical_sets

    def recording(g, *args, **kwargs):
        budgets.append((kwargs["max_size"], g.num_edges))
        return critical_sets(g, *args, **kwargs)

    monkeypatch.setattr(runner.brute, "critical_sets", recording)
    runner.run("forest-criticality", max_n=4)
    assert budgets and all(size == edges for size, edges in budgets)
    # K4 has more edges than vertices
    assert (6, 6) in budgets
