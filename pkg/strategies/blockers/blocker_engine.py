"""
Blocker Engine Module

Chooses between the polynomial bipartite solver and brute force.
"""

from typing import Optional

from src.graphs.graph_core import is_bipartite, is_connected
from src.parameters.invariants import Operation, ParameterKind
from strategies.blockers.bipartite_contraction import BipartiteContractionSolver
from strategies.blockers.blocker_types import BlockerInstance, BlockerResult
from strategies.blockers.bruteforce_blocker import BruteForceBlocker
from utils.exceptions import GraphClassError, PreconditionError
from utils.logger import setup_logger
from utils.settings import SolverSettings

logger = setup_logger(__name__)

ENGINES = ("auto", "brute", "bipartite")


def bipartite_engine_applies(inst: BlockerInstance, max_d: int) -> bool:
    return (
        inst.operation is Operation.CONTRACT
        and inst.pi is ParameterKind.ALPHA
        and inst.d <= max_d
        and is_connected(inst.graph)
        and is_bipartite(inst.graph) is not None
    )


def solve(inst: BlockerInstance, engine: str = "auto", settings: Optional[SolverSettings] = None) -> BlockerResult:
    """
    Solve a blocker instance with the requested engine.

    Args:
        inst (BlockerInstance): Instance to solve
        engine (str): auto, brute or bipartite
        settings (SolverSettings): Limits; defaults from config/defaults.json

    Returns:
        BlockerResult: Solver answer

    Raises:
        GraphClassError: engine=bipartite on an instance it cannot handle
    """
    if engine not in ENGINES:
        raise PreconditionError(f"Unknown engine '{engine}', expected one of {', '.join(ENGINES)}")
    settings = settings or SolverSettings.from_json()
    max_d = settings.bipartite_max_d

    if engine == "bipartite":
        if inst.operation is not Operation.CONTRACT or inst.pi is not ParameterKind.ALPHA:
            raise GraphClassError("The bipartite engine only solves contraction blocking of alpha")
        chosen = "bipartite"
    elif engine == "auto":
        chosen = "bipartite" if bipartite_engine_applies(inst, max_d) else "brute"
    else:
        chosen = "brute"

    logger.info(f"Solving {inst.summary()} with the {chosen} engine")
    if chosen == "bipartite":
        return BipartiteContractionSolver(max_d=max_d).solve(inst.graph, inst.k, inst.d)
    return BruteForceBlocker(**settings.solver_limits()).solve(inst)
