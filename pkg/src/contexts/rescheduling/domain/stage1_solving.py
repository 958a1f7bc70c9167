import logging
from dataclasses import replace

from src.contexts.rescheduling.domain.stage1_audit import (
    audit_capacity,
    audit_conservation,
    audit_disruption_units,
    audit_headways,
)
from src.contexts.rescheduling.domain.stage1_extraction import extract_stage1
from src.contexts.rescheduling.domain.stage1_model import Stage1Model
from src.contexts.rescheduling.domain.stage1_solution import Stage1Solution
from src.core.exceptions.custom_exceptions import (
    SolverStatusException,
    Stage1InfeasibleException,
)
from src.core.solver.irreducible_subset import find_irreducible_subset
from src.core.solver.solve_result import SolveStatus
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)

DIAGNOSIS_ROW_LIMIT = 2000


def solve_stage1(stage1: Stage1Model, solver: MilpSolver) -> Stage1Solution:
    result = solver.solve_milp(stage1.model)
    logger.info(
        "Stage-1 solve: %s after %d nodes, %s iterations, %.2fs",
        result.status.value,
        result.statistics.nodes,
        result.statistics.iterations,
        result.statistics.wall_time,
    )
    if result.status is SolveStatus.INFEASIBLE:
        rows = []
        if stage1.model.num_constraints <= DIAGNOSIS_ROW_LIMIT:
            rows = find_irreducible_subset(stage1.model, solver)
        else:
            logger.warning(
                "Skipping infeasibility diagnosis: %d rows exceed %d",
                stage1.model.num_constraints,
                DIAGNOSIS_ROW_LIMIT,
            )
        raise Stage1InfeasibleException("[reschedule] stage-1 model is infeasible", rows)
    if not result.is_optimal:
        raise SolverStatusException(result.status.value, "reschedule")

    solution = extract_stage1(stage1, result)
    flows = [flow for flow in stage1.scenario.flows if flow.id in stage1.stranded]
    findings = (
        audit_disruption_units(solution.timetable, stage1.area)
        + audit_headways(solution.timetable, stage1.scenario.headways)
        + audit_capacity(solution.timetable, solution.assignment, stage1.indicators)
        + audit_conservation(solution.assignment, flows)
    )
    for finding in findings:
        logger.warning("Audit: %s", finding)
    return replace(solution, audit=tuple(findings))
