import logging
import time

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from src.core.solver.linear_model import LinearModel, Sense
from src.core.solver.solve_result import SolveResult, SolveStatistics, SolveStatus
from src.core.solver.solver_config import SolverConfig
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)

# scipy reports 4 for numerical trouble or any other HiGHS failure
_HIGHS_STATUS = {
    0: SolveStatus.OPTIMAL,
    1: SolveStatus.ITERATION_LIMIT,
    2: SolveStatus.INFEASIBLE,
    3: SolveStatus.UNBOUNDED,
}


def _status(code: int) -> SolveStatus:
    return _HIGHS_STATUS.get(code, SolveStatus.ERROR)


def _bound_term(marginals, bounds: np.ndarray) -> float:
    finite = np.isfinite(bounds)
    return float(np.asarray(marginals)[finite] @ bounds[finite])


class HighsSolver(MilpSolver):
    """Adapter over scipy's HiGHS bindings (`milp` and `linprog`)."""

    def __init__(self, config: SolverConfig):
        self._config = config

    def solve_lp(self, model: LinearModel) -> SolveResult:
        started = time.perf_counter()
        c, matrix, row_lower, row_upper, lower, upper, _ = model.relaxed().to_arrays()
        le_rows = [i for i, row in enumerate(model.constraints) if row.sense is Sense.LE]
        ge_rows = [i for i, row in enumerate(model.constraints) if row.sense is Sense.GE]
        eq_rows = [i for i, row in enumerate(model.constraints) if row.sense is Sense.EQ]
        a_ub = None
        b_ub = None
        if le_rows or ge_rows:
            a_ub = sparse.vstack([matrix[le_rows], -matrix[ge_rows]]).tocsr()
            b_ub = np.concatenate([row_upper[le_rows], -row_lower[ge_rows]])
        a_eq = matrix[eq_rows] if eq_rows else None
        b_eq = row_lower[eq_rows] if eq_rows else None
        bounds = [
            (None if np.isinf(lo) else lo, None if np.isinf(hi) else hi)
            for lo, hi in zip(lower, upper)
        ]
        result = linprog(
            c,
            A_ub=a_ub,
            b_ub=b_ub,
            A_eq=a_eq,
            b_eq=b_eq,
            bounds=bounds,
            method="highs",
            options={"time_limit": self._config.time_limit},
        )
        statistics = SolveStatistics(
            iterations=int(getattr(result, "nit", 0) or 0),
            wall_time=time.perf_counter() - started,
        )
        status = _status(result.status)
        if status is not SolveStatus.OPTIMAL:
            return SolveResult(status=status, statistics=statistics)

        values = np.asarray(result.x, dtype=float)
        duals = np.zeros(model.num_constraints)
        if le_rows or ge_rows:
            marginals = np.asarray(result.ineqlin.marginals)
            duals[le_rows] = marginals[: len(le_rows)]
            duals[ge_rows] = -marginals[len(le_rows):]
        if eq_rows:
            duals[eq_rows] = np.asarray(result.eqlin.marginals)
        rhs = np.array([row.rhs for row in model.constraints], dtype=float)
        dual_objective = (
            model.objective_constant
            + float(duals @ rhs)
            + _bound_term(result.lower.marginals, lower)
            + _bound_term(result.upper.marginals, upper)
        )
        return SolveResult(
            status=SolveStatus.OPTIMAL,
            objective=model.objective_value(values),
            values=values,
            statistics=statistics,
            duals=duals,
            dual_objective=dual_objective,
        )

    def solve_milp(self, model: LinearModel) -> SolveResult:
        started = time.perf_counter()
        c, matrix, row_lower, row_upper, lower, upper, integrality = model.to_arrays()
        constraints = (
            [LinearConstraint(matrix, row_lower, row_upper)]
            if model.num_constraints
            else []
        )
        result = milp(
            c,
            integrality=integrality,
            bounds=Bounds(lower, upper),
            constraints=constraints,
            options={
                "disp": False,
                "mip_rel_gap": 0.0,
                "time_limit": self._config.time_limit,
            },
        )
        status = _status(result.status)
        # milp exposes the branch-and-bound node count but no simplex iterations
        statistics = SolveStatistics(
            iterations=None,
            nodes=int(getattr(result, "mip_node_count", 0) or 0),
            wall_time=time.perf_counter() - started,
        )
        logger.info("HiGHS finished with status %s (%s)", status.value, result.message)
        if result.x is None:
            return SolveResult(status=status, statistics=statistics)
        values = np.asarray(result.x, dtype=float)
        integral = integrality.astype(bool)
        values[integral] = np.round(values[integral])
        return SolveResult(
            status=status,
            objective=model.objective_value(values),
            values=values,
            statistics=statistics,
        )
