import logging

from src.core.solver.linear_model import LinearModel
from src.core.solver.solve_result import SolveStatus
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)


def find_irreducible_subset(model: LinearModel, solver: MilpSolver) -> list[str]:
    """
    Deletion filter: drop each row in turn and keep it dropped while the
    remainder stays infeasible. The surviving rows form an irreducible
    infeasible subset (together with the variable bounds).
    """
    dropped: set[int] = set()
    for index in range(model.num_constraints):
        trial = model.without_constraints(dropped | {index})
        result = solver.solve_milp(trial)
        if result.status is SolveStatus.INFEASIBLE:
            dropped.add(index)
    kept = [
        row.name
        for index, row in enumerate(model.constraints)
        if index not in dropped
    ]
    logger.info("Irreducible infeasible subset has %d rows", len(kept))
    return kept
