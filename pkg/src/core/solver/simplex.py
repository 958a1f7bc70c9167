import logging
import math
import time
from dataclasses import dataclass

import numpy as np

from src.core.solver.linear_model import LinearModel, Sense
from src.core.solver.solve_result import SolveResult, SolveStatistics, SolveStatus

logger = logging.getLogger(__name__)


@dataclass
class StandardForm:
    """
    min c'x' s.t. A x' = b, x' >= 0, with b >= 0 after row flips.

    Original variable j is recovered as constants[j] + sum(sign * x'[col])
    over columns[j]. Rows past len(model.constraints) are upper-bound rows.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    costs: np.ndarray
    offset: float
    columns: list[list[tuple[int, float]]]
    constants: np.ndarray
    row_flip: np.ndarray
    slack_of_row: list[int | None]
    num_model_rows: int


def to_standard_form(model: LinearModel) -> StandardForm:
    """Shifts bounds, splits free variables, adds bound rows and slacks."""
    columns: list[list[tuple[int, float]]] = []
    constants = np.zeros(model.num_variables)
    bound_rows: list[tuple[int, float]] = []
    num_struct = 0
    for var in model.variables:
        if math.isfinite(var.lower):
            columns.append([(num_struct, 1.0)])
            constants[var.id] = var.lower
            if math.isfinite(var.upper):
                bound_rows.append((num_struct, var.upper - var.lower))
            num_struct += 1
        elif math.isfinite(var.upper):
            columns.append([(num_struct, -1.0)])
            constants[var.id] = var.upper
            num_struct += 1
        else:
            columns.append([(num_struct, 1.0), (num_struct + 1, -1.0)])
            num_struct += 2

    senses = [row.sense for row in model.constraints] + [Sense.LE] * len(bound_rows)
    num_rows = len(senses)
    num_slack = sum(1 for sense in senses if sense is not Sense.EQ)
    matrix = np.zeros((num_rows, num_struct + num_slack))
    rhs = np.zeros(num_rows)

    for index, row in enumerate(model.constraints):
        shift = 0.0
        for var, coef in row.coefficients.items():
            shift += coef * constants[var]
            for col, sign in columns[var]:
                matrix[index, col] += coef * sign
        rhs[index] = row.rhs - shift
    for offset, (col, width) in enumerate(bound_rows):
        matrix[model.num_constraints + offset, col] = 1.0
        rhs[model.num_constraints + offset] = width

    slack_of_row: list[int | None] = []
    slack_col = num_struct
    for index, sense in enumerate(senses):
        if sense is Sense.EQ:
            slack_of_row.append(None)
            continue
        matrix[index, slack_col] = 1.0 if sense is Sense.LE else -1.0
        slack_of_row.append(slack_col)
        slack_col += 1

    costs = np.zeros(matrix.shape[1])
    offset = model.objective_constant
    for var in model.variables:
        offset += var.cost * constants[var.id]
        for col, sign in columns[var.id]:
            costs[col] += var.cost * sign

    row_flip = np.where(rhs < 0, -1.0, 1.0)
    return StandardForm(
        matrix=matrix,
        rhs=rhs,
        costs=costs,
        offset=offset,
        columns=columns,
        constants=constants,
        row_flip=row_flip,
        slack_of_row=slack_of_row,
        num_model_rows=model.num_constraints,
    )


class _IterationLimit(Exception):
    pass


class SimplexSolver:
    """
    Dense-tableau two-phase primal simplex with Bland's rule for both the
    entering column and the leaving row, so degenerate instances terminate.
    """

    def __init__(self, eps: float = 1e-6, iter_limit: int = 100000, tol: float = 1e-9):
        self._eps = eps
        self._iter_limit = iter_limit
        self._tol = tol

    def solve(self, model: LinearModel) -> SolveResult:
        started = time.perf_counter()
        form = to_standard_form(model.relaxed())
        run = _TableauRun(self._eps, self._iter_limit, self._tol)
        try:
            status, values, duals = run.execute(form)
        except _IterationLimit:
            logger.warning("Simplex stopped at the iteration limit (%d)", self._iter_limit)
            return self._result(SolveStatus.ITERATION_LIMIT, run.iterations, started)
        if status is not SolveStatus.OPTIMAL:
            return self._result(status, run.iterations, started)

        primal = form.constants.copy()
        for var_id, parts in enumerate(form.columns):
            for col, sign in parts:
                primal[var_id] += sign * values[col]
        objective = model.objective_value(primal)

        model_duals, dual_objective = None, None
        if duals is not None:
            model_duals = duals[: form.num_model_rows]
            dual_objective = float(duals @ form.rhs) + form.offset
        return SolveResult(
            status=SolveStatus.OPTIMAL,
            objective=objective,
            values=primal,
            statistics=SolveStatistics(
                iterations=run.iterations, wall_time=time.perf_counter() - started
            ),
            duals=model_duals,
            dual_objective=dual_objective,
        )

    def _result(self, status: SolveStatus, iterations: int, started: float) -> SolveResult:
        return SolveResult(
            status=status,
            statistics=SolveStatistics(
                iterations=iterations, wall_time=time.perf_counter() - started
            ),
        )


class _TableauRun:
    def __init__(self, eps: float, iter_limit: int, tol: float):
        self._eps = eps
        self._iter_limit = iter_limit
        self._tol = tol
        self.iterations = 0

    def execute(self, form: StandardForm):
        tol = self._tol
        flipped = form.matrix * form.row_flip[:, None]
        rhs = form.rhs * form.row_flip
        num_rows, num_cols = flipped.shape

        basis = np.full(num_rows, -1, dtype=int)
        for row, slack in enumerate(form.slack_of_row):
            if slack is not None and flipped[row, slack] > 0:
                basis[row] = slack
        artificial_rows = np.nonzero(basis < 0)[0]
        num_art = len(artificial_rows)

        # rows: constraints, phase-2 objective, phase-1 objective
        tableau = np.zeros((num_rows + 2, num_cols + num_art + 1))
        tableau[:num_rows, :num_cols] = flipped
        tableau[:num_rows, -1] = rhs
        for k, row in enumerate(artificial_rows):
            tableau[row, num_cols + k] = 1.0
            basis[row] = num_cols + k
        tableau[num_rows, :num_cols] = form.costs
        if num_art:
            tableau[-1, num_cols : num_cols + num_art] = 1.0
            tableau[-1] -= tableau[artificial_rows].sum(axis=0)

            status = self._iterate(tableau, basis, num_rows, num_cols, phase=1)
            if status is not SolveStatus.OPTIMAL:
                return SolveStatus.INFEASIBLE, None, None
            infeasibility = -tableau[-1, -1]
            if infeasibility > self._eps * max(1.0, float(np.abs(rhs).max(initial=0.0))):
                return SolveStatus.INFEASIBLE, None, None

        kept_rows = self._drive_out_artificials(tableau, basis, num_rows, num_cols)
        tableau = np.vstack([tableau[kept_rows], tableau[num_rows : num_rows + 1]])
        tableau = np.hstack([tableau[:, :num_cols], tableau[:, -1:]])
        basis = basis[kept_rows]
        num_rows = len(kept_rows)

        status = self._iterate(tableau, basis, num_rows, num_cols, phase=2)
        if status is not SolveStatus.OPTIMAL:
            return status, None, None

        values = np.zeros(num_cols)
        values[basis] = tableau[:num_rows, -1]
        values[np.abs(values) < tol] = 0.0

        duals = np.zeros(len(form.rhs))
        try:
            basic = flipped[kept_rows][:, basis]
            reduced = np.linalg.solve(basic.T, form.costs[basis])
            duals[kept_rows] = reduced * form.row_flip[kept_rows]
        except np.linalg.LinAlgError:
            duals = None
        return SolveStatus.OPTIMAL, values, duals

    def _iterate(self, tableau, basis, num_rows, num_cols, phase: int) -> SolveStatus:
        objective = tableau[-1] if phase == 1 else tableau[num_rows]
        while True:
            entering = np.nonzero(objective[:num_cols] < -self._tol)[0]
            if entering.size == 0:
                return SolveStatus.OPTIMAL
            col = int(entering[0])
            column = tableau[:num_rows, col]
            positive = np.nonzero(column > self._tol)[0]
            if positive.size == 0:
                return SolveStatus.UNBOUNDED
            ratios = tableau[positive, -1] / column[positive]
            best = ratios.min()
            ties = positive[ratios <= best + self._tol * max(1.0, abs(best))]
            row = int(ties[np.argmin(basis[ties])])
            self._pivot(tableau, basis, row, col)

    def _pivot(self, tableau, basis, row: int, col: int) -> None:
        self.iterations += 1
        if self.iterations > self._iter_limit:
            raise _IterationLimit()
        tableau[row] /= tableau[row, col]
        factors = tableau[:, col].copy()
        factors[row] = 0.0
        tableau -= np.outer(factors, tableau[row])
        basis[row] = col

    def _drive_out_artificials(self, tableau, basis, num_rows, num_cols) -> np.ndarray:
        kept = []
        for row in range(num_rows):
            if basis[row] < num_cols:
                kept.append(row)
                continue
            candidates = np.nonzero(np.abs(tableau[row, :num_cols]) > self._tol)[0]
            if candidates.size == 0:
                continue
            self._pivot(tableau, basis, row, int(candidates[0]))
            kept.append(row)
        return np.array(kept, dtype=int)
