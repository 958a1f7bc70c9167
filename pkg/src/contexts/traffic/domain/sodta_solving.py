import logging

from src.contexts.traffic.domain.sodta_model import SodtaModel
from src.contexts.traffic.domain.sodta_solution import SodtaSolution, completion_step
from src.core.exceptions.custom_exceptions import (
    SolverStatusException,
    UnreachableSinkException,
)
from src.core.solver.solve_result import SolveStatus
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-6


def solve_sodta(sodta: SodtaModel, solver: MilpSolver) -> SodtaSolution:
    if sodta.model.num_variables == 0:
        logger.info("SO-DTA model is empty: no response vehicles to route")
        return SodtaSolution(0.0, sodta.network.time_step_seconds, {}, {}, {}, {})
    result = solver.solve_lp(sodta.model)
    logger.info(
        "SO-DTA solve: %s after %s iterations, %.2fs",
        result.status.value,
        result.statistics.iterations,
        result.statistics.wall_time,
    )
    if result.status is SolveStatus.INFEASIBLE:
        raise UnreachableSinkException(
            "[sodta] not every vehicle can reach its sink within the horizon"
        )
    if not result.is_optimal:
        raise SolverStatusException(result.status.value, "sodta")

    residual = sodta.model.max_violation(result.values)
    if residual > RESIDUAL_TOLERANCE:
        logger.warning("SO-DTA solution violates its rows by %.2e", residual)
    occupancy = {key: result.value(var) for key, var in sodta.occupancy.items()}
    flows = {key: result.value(var) for key, var in sodta.flow.items()}
    curves = {}
    fleet = {}
    nct = {}
    for vehicle_class in sodta.classes:
        m = vehicle_class.id
        fleet[m] = sodta.demand.total(m)
        curves[m] = tuple(
            occupancy.get((vehicle_class.sink_cell, t, m), 0.0) for t in sodta.network.steps
        )
        nct[m] = completion_step(curves[m], fleet[m])
    solution = SodtaSolution(
        total_travel_time=float(result.objective),
        time_step_seconds=sodta.network.time_step_seconds,
        occupancy=occupancy,
        flows=flows,
        curves=curves,
        fleet=fleet,
        nct_steps=nct,
        residual=residual,
    )
    logger.info(
        "SO-DTA optimum: %.1f vehicle-minutes, longest completion %s min",
        solution.travel_time_minutes(),
        solution.max_nct_minutes(),
    )
    return solution
