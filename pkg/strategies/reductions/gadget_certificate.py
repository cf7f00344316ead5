"""
Gadget Certificate Module

Structural checks on built gadgets, reported per check with a pass / warning /
error status and an overall status, plus records of witness round-trips.
"""

from typing import Dict, List, Optional

from src.graphs.graph_core import is_c3_free, is_c3_plus_p1_free, is_chordal
from src.parameters.invariants import (
    DEFAULT_EXACT_MAX_VERTICES,
    alpha_chordal,
    alpha_exact,
    is_clique,
    omega_exact,
)
from strategies.reductions.apex_gadget import ApexGadget
from strategies.reductions.chordal_gadget import ChordalGadget
from utils.logger import setup_logger

logger = setup_logger(__name__)


def _overall(statuses: List[str]) -> str:
    if "error" in statuses:
        return "error"
    if "warning" in statuses:
        return "warning"
    return "pass"


class GadgetCertificate:
    """Collected check results for one gadget."""

    def __init__(self, kind: str, n: int, m: int):
        self.kind = kind
        self.n = n
        self.m = m
        self.checks: Dict[str, Dict] = {}
        self.roundtrips: List[Dict] = []

    def add_check(self, name: str, passed: bool, message: Optional[str] = None, warn_only: bool = False, **details):
        status = "pass" if passed else ("warning" if warn_only else "error")
        entry = {"status": status, **details}
        if message and not passed:
            entry["message"] = message
        self.checks[name] = entry
        if status == "error":
            logger.error(f"{self.kind} gadget check '{name}' failed: {message}")
        return entry

    def record_roundtrip(self, direction: str, passed: bool, **details) -> Dict:
        """Append the outcome of a witness translation round-trip."""
        entry = {"direction": direction, "status": "pass" if passed else "error", **details}
        self.roundtrips.append(entry)
        return entry

    @property
    def overall_status(self) -> str:
        statuses = [c["status"] for c in self.checks.values()]
        statuses.extend(r["status"] for r in self.roundtrips)
        return _overall(statuses)

    @property
    def passed(self) -> bool:
        return self.overall_status != "error"

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "checks": self.checks,
            "roundtrips": self.roundtrips,
            "overall_status": self.overall_status,
        }


def certify_chordal_gadget(
    gadget: ChordalGadget, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> GadgetCertificate:
    """
    Check chordality, alpha = |X| + 1, the clique blocks and the clause adjacencies.

    alpha is taken from the elimination-order evaluator and cross-checked with
    the exact solver when the gadget is small enough.
    """
    g = gadget.graph
    cert = GadgetCertificate("chordal", g.n, g.num_edges)

    peo = is_chordal(g)
    cert.add_check("chordal", peo is not None, "graph has an induced cycle of length >= 4")

    expected = gadget.expected_alpha
    if peo is not None:
        alpha = alpha_chordal(g)[0]
        cert.add_check("alpha", alpha == expected, f"alpha = {alpha}, expected {expected}",
                       value=alpha, expected=expected)
    if g.n <= exact_max_vertices:
        exact = alpha_exact(g, max_vertices=exact_max_vertices)[0]
        cert.add_check("alpha_exact", exact == expected, f"exact alpha = {exact}, expected {expected}",
                       value=exact, expected=expected)

    blocks_ok = all(
        is_clique(g, gadget.block(x)) and len(gadget.var_clique[x]) == 2 * gadget.k + 1
        for x in range(gadget.phi.num_vars)
    )
    cert.add_check("variable_blocks", blocks_ok, "some {v_x} + K_x is not a clique of size 2k+2")
    cert.add_check("clause_clique", is_clique(g, gadget.clause_vertex), "clause vertices do not form a clique")

    complete = all(
        g.has_edge(gadget.clause_vertex[index], u)
        for index, (x, y) in enumerate(gadget.phi.clauses)
        for u in gadget.var_clique[x] + gadget.var_clique[y]
    )
    cert.add_check("clause_completeness", complete, "some v_c misses a vertex of K_x or K_y")

    reasons = []
    if gadget.k == 0:
        reasons.append("k = 0")
    if not gadget.phi.clauses:
        reasons.append("no clauses")
    if gadget.phi.isolated_variables():
        reasons.append("isolated variables")
    cert.add_check("non_degenerate", not reasons, ", ".join(reasons), warn_only=True)
    return cert


def certify_apex_gadget(
    gadget: ApexGadget, exact_max_vertices: int = DEFAULT_EXACT_MAX_VERTICES
) -> GadgetCertificate:
    """Check (C3+P1)-freeness, omega = 3 and universality of w."""
    g = gadget.graph
    cert = GadgetCertificate("apex", g.n, g.num_edges)

    cert.add_check("base_c3_free", is_c3_free(gadget.base), "base graph has a triangle")
    cert.add_check("c3_plus_p1_free", is_c3_plus_p1_free(g), "gadget has an induced C3 + P1")
    cert.add_check(
        "universal_w",
        g.degree(gadget.w) == g.n - 1,
        f"w has degree {g.degree(gadget.w)}, expected {g.n - 1}",
    )

    if g.n <= exact_max_vertices:
        omega = omega_exact(g, max_vertices=exact_max_vertices)[0]
        cert.add_check("omega", omega == 3, f"omega = {omega}, expected 3", value=omega, expected=3)
    else:
        cert.add_check("omega", False, f"skipped: {g.n} vertices exceed the exact limit", warn_only=True)
    return cert
