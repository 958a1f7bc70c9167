import heapq
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from src.core.solver.linear_model import LinearModel
from src.core.solver.simplex import SimplexSolver
from src.core.solver.solve_result import SolveResult, SolveStatistics, SolveStatus
from src.core.solver.solver_config import SolverConfig
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 500


@dataclass
class Node:
    id: int
    bound: float
    depth: int
    lower: dict[int, float] = field(default_factory=dict)
    upper: dict[int, float] = field(default_factory=dict)


@dataclass
class _Incumbent:
    objective: float = math.inf
    values: np.ndarray | None = None

    def offer(self, objective: float, values: np.ndarray) -> bool:
        # monotone: only strict improvements are accepted
        if objective < self.objective:
            self.objective, self.values = objective, values
            return True
        return False


class BranchAndBoundSolver:
    """
    Best-bound branch and bound over LP relaxations.

    Nodes are kept in a heap ordered by (parent bound, node id); branching
    picks the most fractional integer variable, lowest id on ties. With
    threads > 1 a batch of nodes is relaxed concurrently and the results
    are applied in pop order, so the reported optimum never depends on
    thread timing.
    """

    def __init__(self, lp_solver: SimplexSolver, config: SolverConfig):
        self._lp = lp_solver
        self._config = config

    def solve(self, model: LinearModel) -> SolveResult:
        started = time.perf_counter()
        integral = np.array([var.is_integral for var in model.variables], dtype=bool)
        incumbent = _Incumbent()
        heap: list[tuple[float, int, Node]] = []
        next_id = 1
        nodes = 0
        iterations = 0
        root = Node(id=0, bound=-math.inf, depth=0)
        heapq.heappush(heap, (root.bound, root.id, root))

        executor = (
            ThreadPoolExecutor(max_workers=self._config.threads)
            if self._config.threads > 1
            else None
        )
        try:
            while heap:
                if nodes >= self._config.node_limit:
                    logger.warning("Branch and bound hit the node limit (%d)", nodes)
                    return self._finish(
                        SolveStatus.NODE_LIMIT, incumbent, iterations, nodes, started
                    )
                batch = self._pop_batch(heap, incumbent)
                if not batch:
                    break
                results = (
                    list(executor.map(lambda n: self._relax(model, n), batch))
                    if executor
                    else [self._relax(model, node) for node in batch]
                )
                for node, result in zip(batch, results):
                    nodes += 1
                    iterations += result.statistics.iterations
                    if nodes % PROGRESS_EVERY == 0:
                        logger.info(
                            "B&B nodes=%d open=%d incumbent=%s",
                            nodes,
                            len(heap),
                            incumbent.objective,
                        )
                    if result.status is SolveStatus.ITERATION_LIMIT:
                        return self._finish(
                            SolveStatus.ITERATION_LIMIT, incumbent, iterations, nodes, started
                        )
                    if result.status is SolveStatus.UNBOUNDED and node.id == 0:
                        return self._finish(
                            SolveStatus.UNBOUNDED, incumbent, iterations, nodes, started
                        )
                    if not result.is_optimal:
                        continue
                    if self._dominated(result.objective, incumbent):
                        continue
                    branch_var = self._branching_variable(result.values, integral)
                    if branch_var is None:
                        values = result.values.copy()
                        values[integral] = np.round(values[integral])
                        incumbent.offer(model.objective_value(values), values)
                        continue
                    for child in self._children(node, branch_var, result, next_id, model):
                        heapq.heappush(heap, (child.bound, child.id, child))
                    next_id += 2
        finally:
            if executor:
                executor.shutdown(wait=True)

        status = SolveStatus.OPTIMAL if incumbent.values is not None else SolveStatus.INFEASIBLE
        return self._finish(status, incumbent, iterations, nodes, started)

    def _pop_batch(self, heap, incumbent: _Incumbent) -> list[Node]:
        batch = []
        while heap and len(batch) < self._config.threads:
            _, _, node = heapq.heappop(heap)
            if not self._dominated(node.bound, incumbent):
                batch.append(node)
        return batch

    def _dominated(self, bound: float, incumbent: _Incumbent) -> bool:
        if incumbent.values is None:
            return False
        slack = max(self._config.eps, 1e-9 * abs(incumbent.objective))
        return bound >= incumbent.objective - slack

    def _relax(self, model: LinearModel, node: Node) -> SolveResult:
        return self._lp.solve(model.with_bounds(node.lower, node.upper))

    def _branching_variable(self, values: np.ndarray, integral: np.ndarray) -> int | None:
        fraction = np.abs(values - np.round(values))
        fractional = integral & (fraction > self._config.eps_int)
        if not fractional.any():
            return None
        distance = np.minimum(values - np.floor(values), np.ceil(values) - values)
        score = np.where(fractional, distance, -1.0)
        return int(np.argmax(score))

    def _children(self, node: Node, var: int, result: SolveResult, next_id: int, model):
        value = result.values[var]
        down_upper = dict(node.upper)
        down_upper[var] = min(model.variables[var].upper, math.floor(value))
        up_lower = dict(node.lower)
        up_lower[var] = max(model.variables[var].lower, math.ceil(value))
        return (
            Node(next_id, result.objective, node.depth + 1, dict(node.lower), down_upper),
            Node(next_id + 1, result.objective, node.depth + 1, up_lower, dict(node.upper)),
        )

    def _finish(self, status, incumbent: _Incumbent, iterations, nodes, started) -> SolveResult:
        has_solution = incumbent.values is not None
        return SolveResult(
            status=status,
            objective=incumbent.objective if has_solution else None,
            values=incumbent.values,
            statistics=SolveStatistics(
                iterations=iterations,
                nodes=nodes,
                wall_time=time.perf_counter() - started,
            ),
        )


class EmbeddedSolver(MilpSolver):
    """Simplex and branch and bound implemented in this package."""

    def __init__(self, config: SolverConfig):
        self._config = config
        self._simplex = SimplexSolver(eps=config.eps, iter_limit=config.iter_limit)

    def solve_lp(self, model: LinearModel) -> SolveResult:
        return self._simplex.solve(model.relaxed())

    def solve_milp(self, model: LinearModel) -> SolveResult:
        if not model.has_integers:
            return self.solve_lp(model)
        return BranchAndBoundSolver(self._simplex, self._config).solve(model)
