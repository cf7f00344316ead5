"""
Property Suites Module

Seeded cross-check sweeps behind `main_blocker_cli.py verify`. Every suite
returns one record per checked instance as a pandas DataFrame; a record with
passed == False is a counterexample whose `instance` column reproduces it.
"""

import hashlib
import json
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from src.graphs.generators import (
    atlas_graphs,
    connected_bipartite_catalog,
    make_rng,
    random_bipartite,
    random_triangle_free,
)
from src.graphs.graph_core import Graph
from src.graphs.graph_io import serialize_edge_list
from src.parameters.invariants import (
    Operation,
    ParameterKind,
    alpha_bipartite,
    alpha_exact,
    check_critical,
    is_vertex_cover,
    max_matching_bipartite,
    min_vertex_cover_bipartite,
)
from strategies.blockers.bipartite_contraction import (
    BipartiteContractionSolver,
    alpha_after_contraction_bipartite,
    build_tree_witness,
)
from strategies.blockers.blocker_types import BlockerInstance
from strategies.blockers.bruteforce_blocker import BruteForceBlocker, spans_forest
from strategies.reductions.apex_gadget import (
    build_apex_gadget,
    contraction_witness_to_vc,
    vc_witness_to_contraction_witness,
)
from strategies.reductions.chordal_gadget import (
    assignment_to_contraction_witness,
    assignment_to_deletion_witness,
    build_chordal_gadget,
    contraction_witness_to_assignment,
    deletion_witness_to_assignment,
)
from strategies.reductions.gadget_certificate import certify_apex_gadget, certify_chordal_gadget
from strategies.reductions.wp2sat import (
    check_assignment,
    serialize_wp2sat,
    solve_wp2sat_bruteforce,
    vc_to_wp2sat,
    vertex_cover_bruteforce,
)
from utils.exceptions import BlockerError, SizeGuardError, WitnessError
from utils.logger import setup_logger
from utils.settings import SolverSettings

logger = setup_logger(__name__)

SUITES = (
    "koenig",
    "forest-criticality",
    "bipartite-oracle",
    "tree-witness",
    "gadget-thm2",
    "gadget-thm3",
    "gadget-thm6",
    "roundtrips",
)

RECORD_COLUMNS = ["suite", "instance", "n", "m", "k", "d", "expected", "observed", "passed", "skipped", "detail"]


def fingerprint(suite: str, instance: str) -> str:
    """md5 of the canonical JSON form of a suite instance."""
    payload = json.dumps({"suite": suite, "instance": instance}, sort_keys=True, separators=(",", ":"))
    return hashlib.md5(payload.encode()).hexdigest()


def graph_instance(g: Graph, **params) -> str:
    """Edge-list text preceded by '# key=value' comment lines, so it stays parseable."""
    header = "".join(f"# {key}={value}\n" for key, value in sorted(params.items()))
    return header + serialize_edge_list(g)


def _triangle_free_with_edge(rng: np.random.Generator, n: int) -> Graph:
    while True:
        g = random_triangle_free(n, float(rng.uniform(0.2, 0.7)), rng)
        if g.num_edges:
            return g


class PropertySuiteRunner:
    """Runs the named suites with limits taken from SolverSettings."""

    def __init__(self, settings: Optional[SolverSettings] = None):
        self.settings = settings or SolverSettings.from_json()
        self.brute = BruteForceBlocker(**self.settings.solver_limits())
        self.exact_max_vertices = self.settings.exact_max_vertices
        self._suites: Dict[str, Callable] = {
            "koenig": self.koenig,
            "forest-criticality": self.forest_criticality,
            "bipartite-oracle": self.bipartite_oracle,
            "tree-witness": self.tree_witness,
            "gadget-thm2": lambda seed, count, max_n: self.chordal_gadget(Operation.CONTRACT, seed, count, max_n),
            "gadget-thm3": lambda seed, count, max_n: self.chordal_gadget(Operation.DELETE, seed, count, max_n),
            "gadget-thm6": self.apex_gadget,
            "roundtrips": self.roundtrips,
        }

    def run(self, suite: str, seed: Optional[int] = None, count: Optional[int] = None,
            max_n: Optional[int] = None) -> pd.DataFrame:
        """
        Run one suite; unset parameters come from the suite defaults in config.

        Raises:
            ValueError: Unknown suite name
        """
        if suite not in self._suites:
            raise ValueError(f"Unknown suite '{suite}', expected one of {', '.join(SUITES)}")
        defaults = self.settings.suite_defaults(suite)
        seed = defaults.get("seed", 0) if seed is None else seed
        count = defaults.get("count", 100) if count is None else count
        max_n = defaults.get("max_n", 6) if max_n is None else max_n

        logger.info(f"Running suite {suite} (seed={seed}, count={count}, max_n={max_n})")
        records = self._suites[suite](seed, count, max_n)
        frame = pd.DataFrame(records, columns=RECORD_COLUMNS)
        frame["suite"] = suite
        return frame

    @staticmethod
    def _record(instance: str, g: Graph, passed: bool, detail: str = "", k=None, d=None,
                expected=None, observed=None, skipped: bool = False) -> Dict:
        return {
            "suite": None,
            "instance": instance,
            "n": g.n,
            "m": g.num_edges,
            "k": k,
            "d": d,
            "expected": expected,
            "observed": observed,
            "passed": passed,
            "skipped": skipped,
            "detail": detail,
        }

    @classmethod
    def _skipped(cls, instance: str, g: Graph, error: SizeGuardError, **params) -> Dict:
        """Record for an instance a size guard kept from being checked."""
        logger.warning(f"Skipped instance on {g.n} vertices: {error}")
        return cls._record(instance, g, True, f"{type(error).__name__}: {error}", skipped=True, **params)

    def koenig(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """mu = tau and tau + alpha = |V| on random bipartite graphs, alpha refereed by the exact solver."""
        rng = make_rng(seed)
        records = []
        for _ in range(count):
            n = int(rng.integers(1, max_n + 1))
            g = random_bipartite(n, float(rng.uniform(0.1, 0.7)), rng, connected=False)
            mu = len(max_matching_bipartite(g))
            cover = min_vertex_cover_bipartite(g)
            alpha = alpha_exact(g, self.exact_max_vertices)[0]
            passed = (
                mu == len(cover)
                and is_vertex_cover(g, cover)
                and len(cover) + alpha == g.n
                and alpha_bipartite(g)[0] == alpha
            )
            records.append(self._record(graph_instance(g), g, passed, f"mu={mu} tau={len(cover)} alpha={alpha}",
                                        expected=g.n, observed=len(cover) + alpha))
        return records

    def forest_criticality(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """Every minimal alpha-contraction-critical set on every small graph spans a forest."""
        records = []
        for g in atlas_graphs(max_n, min_n=2):
            if g.num_edges == 0:
                continue
            minimal = self.brute.critical_sets(
                g, Operation.CONTRACT, ParameterKind.ALPHA, d=1,
                max_size=g.num_edges, forests_only=False,
            )
            cyclic = [sorted(s) for s in minimal if not spans_forest(s)]
            records.append(self._record(graph_instance(g), g, not cyclic,
                                        f"{len(minimal)} minimal sets" + (f", cyclic: {cyclic}" if cyclic else ""),
                                        d=1, expected=0, observed=len(cyclic)))
        return records

    def bipartite_oracle(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """The polynomial bipartite solver agrees with brute force on the whole catalog."""
        solver = BipartiteContractionSolver(max_d=self.settings.bipartite_max_d)
        records = []
        for g in connected_bipartite_catalog(max_n):
            for d in (1, 2):
                for k in range(6):
                    instance = graph_instance(g, k=k, d=d)
                    expected = self.brute.solve(BlockerInstance(g, Operation.CONTRACT, ParameterKind.ALPHA, k, d))
                    observed = solver.solve(g, k, d)
                    records.append(self._record(
                        instance, g, expected.answer == observed.answer, "; ".join(observed.notes),
                        k=k, d=d, expected=expected.answer_text, observed=observed.answer_text,
                    ))
        return records

    def tree_witness(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """The matching-grown tree has 2d or 2d+1 edges and its contraction lowers alpha by d."""
        rng = make_rng(seed)
        records = []
        for _ in range(count):
            d = int(rng.choice([1, 2]))
            n = int(rng.integers(2 * d + 2, max(max_n, 2 * d + 2) + 1))
            g = random_bipartite(n, float(rng.uniform(0.1, 0.6)), rng, connected=True)
            alpha = alpha_bipartite(g)[0]
            tree = build_tree_witness(g, max_matching_bipartite(g), d)
            after = alpha_after_contraction_bipartite(g, tree.edges)
            passed = (
                2 * d <= tree.size <= 2 * d + 1
                and after <= alpha - d
                and check_critical(g, Operation.CONTRACT, tree.edges, ParameterKind.ALPHA, d,
                                   self.exact_max_vertices, pi_before=alpha)
            )
            records.append(self._record(graph_instance(g, d=d), g, passed,
                                        f"tree of {tree.size} edges, alpha {alpha} -> {after}",
                                        k=tree.size, d=d, expected=alpha - d, observed=after))
        return records

    def chordal_gadget(self, op: Operation, seed: int, count: int, max_n: int) -> List[Dict]:
        """WP2SAT satisfiable within k iff the chordal gadget is a yes-instance for op."""
        rng = make_rng(seed)
        records = []
        for _ in range(count):
            base = _triangle_free_with_edge(rng, int(rng.integers(2, max(max_n, 2) + 1)))
            k = int(rng.integers(0, 4))
            phi = vc_to_wp2sat(base, k)
            gadget = build_chordal_gadget(phi)
            certificate = certify_chordal_gadget(gadget, self.exact_max_vertices)
            satisfiable = solve_wp2sat_bruteforce(phi, self.settings.wp2sat_max_vars) is not None
            instance = serialize_wp2sat(phi)
            try:
                result = self.brute.solve(BlockerInstance(gadget.graph, op, ParameterKind.ALPHA, k, 1))
            except SizeGuardError as error:
                records.append(self._skipped(instance, gadget.graph, error, k=k, d=1))
                continue
            passed = certificate.passed and satisfiable == result.answer
            records.append(self._record(
                instance, gadget.graph, passed, f"certificate {certificate.overall_status}",
                k=k, d=1, expected="yes" if satisfiable else "no", observed=result.answer_text,
            ))
        return records

    def apex_gadget(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """Vertex cover of size k iff k contractions lower omega of the apex gadget."""
        rng = make_rng(seed)
        records = []
        for _ in range(count):
            base = _triangle_free_with_edge(rng, int(rng.integers(2, max(max_n, 2) + 1)))
            k = int(rng.integers(0, 5))
            gadget = build_apex_gadget(base)
            certificate = certify_apex_gadget(gadget, self.exact_max_vertices)
            has_cover = vertex_cover_bruteforce(base, k, self.exact_max_vertices) is not None
            instance = graph_instance(base, k=k)
            try:
                result = self.brute.solve(BlockerInstance(gadget.graph, Operation.CONTRACT, ParameterKind.OMEGA, k, 1))
            except SizeGuardError as error:
                records.append(self._skipped(instance, gadget.graph, error, k=k, d=1))
                continue
            passed = certificate.passed and has_cover == result.answer
            records.append(self._record(
                instance, gadget.graph, passed, f"certificate {certificate.overall_status}",
                k=k, d=1, expected="yes" if has_cover else "no", observed=result.answer_text,
            ))
        return records

    def roundtrips(self, seed: int, count: int, max_n: int) -> List[Dict]:
        """Witness translations in both directions for every gadget kind, on yes-instances."""
        rng = make_rng(seed)
        records = []
        for _ in range(count):
            base = _triangle_free_with_edge(rng, int(rng.integers(2, max(max_n, 2) + 1)))
            k = int(rng.integers(1, 4))
            phi = vc_to_wp2sat(base, k)
            assignment = solve_wp2sat_bruteforce(phi, self.settings.wp2sat_max_vars)
            if assignment is None:
                continue

            chordal = build_chordal_gadget(phi)
            apex = build_apex_gadget(base)
            certificates = (certify_chordal_gadget(chordal, self.exact_max_vertices),
                            certify_apex_gadget(apex, self.exact_max_vertices))
            chordal_cert, apex_cert = certificates
            try:
                s = assignment_to_contraction_witness(chordal, assignment)
                back = contraction_witness_to_assignment(chordal, s, self.exact_max_vertices)
                check_assignment(phi, back)
                chordal_cert.record_roundtrip("assignment->contraction->assignment", True, size=back.size)

                w = assignment_to_deletion_witness(chordal, assignment)
                back = deletion_witness_to_assignment(chordal, w, self.exact_max_vertices)
                check_assignment(phi, back)
                chordal_cert.record_roundtrip("assignment->deletion->assignment", True, size=back.size)

                for op in (Operation.CONTRACT, Operation.DELETE):
                    found = self.brute.solve(BlockerInstance(chordal.graph, op, ParameterKind.ALPHA, k, 1))
                    if not found.answer:
                        raise WitnessError(f"Gadget {op.value} search found no witness for a satisfiable instance")
                    if op is Operation.CONTRACT:
                        translated = contraction_witness_to_assignment(chordal, found.witness, self.exact_max_vertices)
                        again = assignment_to_contraction_witness(chordal, translated)
                    else:
                        translated = deletion_witness_to_assignment(chordal, found.witness, self.exact_max_vertices)
                        again = assignment_to_deletion_witness(chordal, translated)
                    ok = len(again) <= k and check_critical(chordal.graph, op, again, ParameterKind.ALPHA, 1,
                                                            self.exact_max_vertices)
                    chordal_cert.record_roundtrip(f"{op.value}->assignment->{op.value}", ok, size=len(again))

                cover = frozenset(assignment.true_vars)
                s = vc_witness_to_contraction_witness(apex, cover)
                back_cover = contraction_witness_to_vc(apex, s, self.exact_max_vertices)
                apex_cert.record_roundtrip("cover->contraction->cover", len(back_cover) <= k, size=len(back_cover))

                found = self.brute.solve(BlockerInstance(apex.graph, Operation.CONTRACT, ParameterKind.OMEGA, k, 1))
                if not found.answer:
                    raise WitnessError("Apex search found no witness although a cover exists")
                cover = contraction_witness_to_vc(apex, found.witness, self.exact_max_vertices)
                again = vc_witness_to_contraction_witness(apex, cover)
                ok = len(again) <= k and check_critical(apex.graph, Operation.CONTRACT, again,
                                                        ParameterKind.OMEGA, 1, self.exact_max_vertices)
                apex_cert.record_roundtrip("contraction->cover->contraction", ok, size=len(again))
                detail = ", ".join(f"{c.kind} {c.overall_status}" for c in certificates)
                passed = all(c.passed for c in certificates)
            except SizeGuardError as error:
                records.append(self._skipped(serialize_wp2sat(phi), chordal.graph, error, k=k, d=1))
                continue
            except BlockerError as error:
                detail, passed = f"{type(error).__name__}: {error}", False

            records.append(self._record(serialize_wp2sat(phi), chordal.graph, passed, detail, k=k, d=1))
        return records
