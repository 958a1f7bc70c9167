from src.core.solver.branch_and_bound import EmbeddedSolver
from src.core.solver.highs_backend import HighsSolver
from src.core.solver.solver_config import SolverConfig
from src.core.solver.solver_port import MilpSolver


def build_solver(config: SolverConfig) -> MilpSolver:
    """Returns the solver adapter selected by `config.backend`."""
    if config.backend == "highs":
        return HighsSolver(config)
    return EmbeddedSolver(config)
