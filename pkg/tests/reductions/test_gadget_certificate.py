from dataclasses import replace

from src.graphs.generators import cycle_graph
from src.graphs.graph_core import Graph
from strategies.reductions.apex_gadget import build_apex_gadget
from strategies.reductions.chordal_gadget import build_chordal_gadget
from strategies.reductions.gadget_certificate import (
    GadgetCertificate,
    certify_apex_gadget,
    certify_chordal_gadget,
)
from strategies.reductions.wp2sat import Wp2SatInstance


def test_figure_gadget_passes(figure_phi):
    cert = certify_chordal_gadget(build_chordal_gadget(figure_phi))
    assert cert.overall_status == "pass"
    assert cert.passed
    assert cert.checks["alpha"] == {"status": "pass", "value": 5, "expected": 5}
    assert "alpha_exact" in cert.checks


def test_exact_check_skipped_on_large_gadgets(figure_phi):
    cert = certify_chordal_gadget(build_chordal_gadget(figure_phi), exact_max_vertices=10)
    assert "alpha_exact" not in cert.checks
    assert cert.overall_status == "pass"


def test_degenerate_gadget_only_warns():
    cert = certify_chordal_gadget(build_chordal_gadget(Wp2SatInstance(num_vars=3, clauses=((0, 1),), k=0)))
    assert cert.checks["non_degenerate"]["status"] == "warning"
    assert "isolated variables" in cert.checks["non_degenerate"]["message"]
    assert cert.overall_status == "warning"
    assert cert.passed


def test_tampered_gadget_fails(figure_phi):
    gadget = build_chordal_gadget(figure_phi)
    edges = [e for e in gadget.graph.edges() if e != (16, 17)]
    broken = replace(gadget, graph=Graph.from_edges(gadget.graph.n, edges))
    cert = certify_chordal_gadget(broken)
    assert cert.checks["clause_clique"]["status"] == "error"
    assert cert.overall_status == "error"
    assert not cert.passed


def test_apex_certificate():
    cert = certify_apex_gadget(build_apex_gadget(cycle_graph(5)))
    assert cert.overall_status == "pass"
    assert cert.checks["omega"]["value"] == 3

    skipped = certify_apex_gadget(build_apex_gadget(cycle_graph(5)), exact_max_vertices=4)
    assert skipped.checks["omega"]["status"] == "warning"
    assert skipped.passed


def test_roundtrip_records_feed_the_status():
    cert = GadgetCertificate("chordal", 3, 2)
    cert.add_check("chordal", True)
    cert.record_roundtrip("assignment->contraction", True, size=1)
    assert cert.overall_status == "pass"
    cert.record_roundtrip("contraction->assignment", False)
    assert cert.overall_status == "error"
    payload = cert.to_dict()
    assert set(payload) == {"kind", "n", "m", "checks", "roundtrips", "overall_status"}
    assert payload["roundtrips"][0] == {"direction": "assignment->contraction", "status": "pass", "size": 1}
