from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    ITERATION_LIMIT = "iteration-limit"
    NODE_LIMIT = "node-limit"
    ERROR = "error"


@dataclass(frozen=True)
class SolveStatistics:
    """Counters a backend reports; `iterations` is None when it does not expose them."""

    iterations: int | None = 0
    nodes: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    objective: float | None = None
    values: np.ndarray | None = None
    statistics: SolveStatistics = field(default_factory=SolveStatistics)
    duals: np.ndarray | None = None
    dual_objective: float | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    def value(self, var_id: int) -> float:
        if self.values is None:
            raise ValueError(f"No primal values available (status {self.status.value})")
        return float(self.values[var_id])

    def same_solution(self, other: "SolveResult") -> bool:
        """Equality on everything except wall time."""
        if self.status is not other.status or self.objective != other.objective:
            return False
        if (self.values is None) != (other.values is None):
            return False
        if self.values is not None and not np.array_equal(self.values, other.values):
            return False
        return (
            self.statistics.iterations == other.statistics.iterations
            and self.statistics.nodes == other.statistics.nodes
        )
