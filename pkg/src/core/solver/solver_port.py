from abc import ABC, abstractmethod

from src.core.solver.linear_model import LinearModel
from src.core.solver.solve_result import SolveResult


class MilpSolver(ABC):
    """
    Port for linear and mixed-integer solvers.
    Defines the contract that solver adapters must implement.
    """

    @abstractmethod
    def solve_lp(self, model: LinearModel) -> SolveResult:
        raise NotImplementedError

    @abstractmethod
    def solve_milp(self, model: LinearModel) -> SolveResult:
        raise NotImplementedError
