"""
Main Blocker Controller

Command-line entry point:

    solve   decide a contraction/deletion blocker instance
    reduce  build a hardness gadget from a VC or WP2SAT instance
    verify  run a seeded property suite
    gen     write a seeded random graph

Reports go to stdout as JSON, diagnostics to stderr.
Exit codes: 0 yes/success, 1 no/counterexample found, 2 error.
"""

import argparse
import re
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from src.graphs.generators import FAMILIES, generate
from src.graphs.graph_core import is_bipartite
from src.graphs.graph_io import InstanceStore, parse_edge_list, serialize_edge_list
from src.parameters.invariants import Operation, ParameterKind, alpha_bipartite, check_critical
from strategies.blockers.bipartite_contraction import alpha_after_contraction_bipartite
from strategies.blockers.blocker_engine import ENGINES, solve
from strategies.blockers.blocker_types import BlockerInstance, BlockerResult
from strategies.reductions.apex_gadget import build_apex_gadget
from strategies.reductions.chordal_gadget import build_chordal_gadget
from strategies.reductions.gadget_certificate import certify_apex_gadget, certify_chordal_gadget
from strategies.reductions.wp2sat import parse_wp2sat, vc_to_wp2sat, wp2sat_to_vc
from utils.exceptions import PreconditionError, WitnessError
from utils.logger import setup_logger
from utils.settings import SolverSettings
from validation.property_suites import SUITES, PropertySuiteRunner
from validation.run_report import RunReport
from validation.suite_summary import summarize_suite

logger = setup_logger(__name__)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

REDUCTION_TARGETS = ("chordal-contract", "chordal-delete", "apex-omega")
WP2SAT_SUITES = ("gadget-thm2", "gadget-thm3", "roundtrips")
COUNTEREXAMPLE_DIR = "data/counterexamples"

_K_COMMENT = re.compile(r"^\s*#\s*k\s*=\s*(\d+)\s*$", re.MULTILINE)


class MainBlockerController:
    """Runs one CLI command and builds its report."""

    def __init__(self, settings: SolverSettings, store: Optional[InstanceStore] = None):
        self.settings = settings
        self.store = store or InstanceStore()

    def cmd_solve(self, args) -> Tuple[RunReport, int]:
        g = self.store.load_graph(args.graph)
        inst = BlockerInstance(g, args.op, args.pi, args.k, args.d)
        result = solve(inst, engine=args.engine, settings=self.settings)

        report = RunReport(command="solve", arguments=_echo(args), instance=inst.summary())
        report.answer = result.answer_text
        report.pi_before = result.pi_before
        report.pi_after = result.pi_after
        report.details = {"engine": result.engine, "notes": list(result.notes)}
        if result.answer:
            self.verify_witness(inst, result)
            report.witness = result.witness_list()
            report.verification = "passed"
        return report, EXIT_YES if result.answer else EXIT_NO

    def verify_witness(self, inst: BlockerInstance, result: BlockerResult) -> None:
        """
        Re-check a yes answer before it is printed.

        Raises:
            WitnessError: The witness is over budget or not critical
        """
        witness = result.witness or frozenset()
        if len(witness) > inst.k:
            raise WitnessError(f"Witness of size {len(witness)} exceeds the budget {inst.k}")

        g = inst.graph
        # above the exact limit only the contracted-bipartite evaluator applies
        bipartite_contraction = (
            g.n > self.settings.exact_max_vertices
            and inst.operation is Operation.CONTRACT
            and inst.pi is ParameterKind.ALPHA
            and is_bipartite(g) is not None
        )
        if bipartite_contraction:
            ok = alpha_after_contraction_bipartite(g, witness) <= alpha_bipartite(g)[0] - inst.d
        else:
            ok = check_critical(g, inst.operation, witness, inst.pi, inst.d, self.settings.exact_max_vertices)
        if not ok:
            logger.error(f"Witness {sorted(witness)} failed re-verification")
            raise WitnessError(f"Witness {sorted(witness)} failed re-verification")

    def cmd_reduce(self, args) -> Tuple[RunReport, int]:
        text = self.store.load_text(args.input)
        if args.source == "wp2sat":
            phi = parse_wp2sat(text)
            base, _ = wp2sat_to_vc(phi)
        else:
            base = parse_edge_list(text)
            phi = vc_to_wp2sat(base, self._budget(args, text)) if args.to != "apex-omega" else None

        if args.to == "apex-omega":
            gadget = build_apex_gadget(base)
            certificate = certify_apex_gadget(gadget, self.settings.exact_max_vertices)
            sidecar = {"target": args.to, "w": gadget.w, "base_n": gadget.base_n}
        else:
            gadget = build_chordal_gadget(phi)
            certificate = certify_chordal_gadget(gadget, self.settings.exact_max_vertices)
            sidecar = {
                "target": args.to,
                "operation": "contract" if args.to == "chordal-contract" else "delete",
                "k": gadget.k,
                "expected_alpha": gadget.expected_alpha,
                "variables": [gadget.phi.label(x) for x in range(gadget.phi.num_vars)],
            }
        sidecar["roles"] = gadget.role_map()
        sidecar["certificate"] = certificate.to_dict()

        graph_path = self.store.save_graph(gadget.graph, args.out)
        sidecar_path = self.store.save_json(sidecar, _sidecar_name(args.out))

        report = RunReport(command="reduce", arguments=_echo(args))
        report.instance = {"n": gadget.graph.n, "m": gadget.graph.num_edges}
        report.verification = "passed" if certificate.passed else "failed"
        report.details = {
            "gadget_file": graph_path,
            "sidecar_file": sidecar_path,
            "certificate": certificate.overall_status,
        }
        if not certificate.passed:
            report.status = "error"
            report.error = "Gadget certificate failed"
            return report, EXIT_ERROR
        return report, EXIT_YES

    def _budget(self, args, text: str) -> int:
        if args.k is not None:
            return args.k
        match = _K_COMMENT.search(text)
        if match is None:
            raise PreconditionError("A chordal gadget from a VC instance needs --k or a '# k=N' line in the file")
        return int(match.group(1))

    def cmd_verify(self, args) -> Tuple[RunReport, int]:
        runner = PropertySuiteRunner(self.settings)
        records = runner.run(args.suite, seed=args.seed, count=args.count, max_n=args.max_n)
        summary = summarize_suite(records)

        extension = "wp2sat" if args.suite in WP2SAT_SUITES else "el"
        counterexample_store = InstanceStore(COUNTEREXAMPLE_DIR)
        for entry in summary["counterexamples"]:
            entry["file"] = counterexample_store.save_text(
                entry["instance"], f"{args.suite}-{entry['fingerprint']}.{extension}"
            )

        report = RunReport(command="verify", arguments=_echo(args), details=summary)
        passed = summary["failures"] == 0 and summary["skipped"] == 0
        report.answer = "pass" if passed else "fail"
        report.verification = "passed" if passed else "failed"
        if summary["failures"]:
            logger.error(f"Suite {args.suite}: {summary['failures']} counterexamples")
        if summary["skipped"]:
            logger.error(f"Suite {args.suite}: {summary['skipped']} instances skipped by a size guard")
        return report, EXIT_YES if passed else EXIT_NO

    def cmd_gen(self, args) -> Tuple[RunReport, int]:
        g = generate(args.family, args.n, p=args.p, seed=args.seed)
        report = RunReport(command="gen", arguments=_echo(args), instance={"n": g.n, "m": g.num_edges})
        if args.out is not None:
            report.details = {"file": self.store.save_graph(g, args.out)}
        else:
            report.details = {"edge_list": serialize_edge_list(g)}
        return report, EXIT_YES


def _echo(args) -> Dict:
    return {key: value for key, value in sorted(vars(args).items()) if key not in ("handler",)}


def _sidecar_name(out) -> str:
    path = Path(out)
    return str(path.with_name(path.name + ".roles.json"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main_blocker_cli.py", description="Blocker problems for alpha and omega")
    parser.add_argument("--config", default=None, help="Settings JSON (default config/defaults.json)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-file", action="store_true", help="Also log to logs/<date>.log")
    commands = parser.add_subparsers(dest="command", required=True)

    solve_cmd = commands.add_parser("solve", help="Decide a blocker instance")
    solve_cmd.add_argument("--graph", required=True)
    solve_cmd.add_argument("--op", required=True, choices=[op.value for op in Operation])
    solve_cmd.add_argument("--pi", required=True, choices=[pi.value for pi in ParameterKind])
    solve_cmd.add_argument("--k", required=True, type=int)
    solve_cmd.add_argument("--d", required=True, type=int)
    solve_cmd.add_argument("--engine", default="auto", choices=ENGINES)
    solve_cmd.set_defaults(handler=MainBlockerController.cmd_solve)

    reduce_cmd = commands.add_parser("reduce", help="Build a gadget")
    reduce_cmd.add_argument("--from", dest="source", required=True, choices=("vc", "wp2sat"))
    reduce_cmd.add_argument("--to", required=True, choices=REDUCTION_TARGETS)
    reduce_cmd.add_argument("--in", dest="input", required=True)
    reduce_cmd.add_argument("--out", required=True)
    reduce_cmd.add_argument("--k", type=int, default=None, help="Budget for --from vc to a chordal gadget")
    reduce_cmd.set_defaults(handler=MainBlockerController.cmd_reduce)

    verify_cmd = commands.add_parser("verify", help="Run a property suite")
    verify_cmd.add_argument("--suite", required=True, choices=SUITES)
    verify_cmd.add_argument("--seed", type=int, default=None)
    verify_cmd.add_argument("--count", type=int, default=None)
    verify_cmd.add_argument("--max-n", dest="max_n", type=int, default=None)
    verify_cmd.set_defaults(handler=MainBlockerController.cmd_verify)

    gen_cmd = commands.add_parser("gen", help="Generate a graph")
    gen_cmd.add_argument("--family", required=True, choices=FAMILIES)
    gen_cmd.add_argument("--n", required=True, type=int)
    gen_cmd.add_argument("--p", type=float, default=0.3)
    gen_cmd.add_argument("--seed", type=int, default=0)
    gen_cmd.add_argument("--out", default=None)
    gen_cmd.set_defaults(handler=MainBlockerController.cmd_gen)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        settings = SolverSettings.from_json(args.config)
        setup_logger(__name__, save_file=args.log_file, level=args.log_level or settings.log_level)
        report, code = args.handler(MainBlockerController(settings), args)
    except (ValueError, OSError) as error:
        logger.error(f"{args.command} failed: {error}")
        report, code = RunReport.failure(args.command, _echo(args), error), EXIT_ERROR

    report.elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    report.generated_at = datetime.now().isoformat(timespec="seconds")
    print(report.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
