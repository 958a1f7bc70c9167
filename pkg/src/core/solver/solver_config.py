from dataclasses import dataclass, replace

from src.core.config.settings import settings
from src.core.exceptions.custom_exceptions import SolverConfigException

BACKENDS = ("embedded", "highs")


@dataclass(frozen=True)
class SolverConfig:
    eps: float = settings.SOLVER_EPS
    eps_int: float = settings.SOLVER_EPS_INT
    node_limit: int = settings.SOLVER_NODE_LIMIT
    iter_limit: int = settings.SOLVER_ITER_LIMIT
    threads: int = settings.SOLVER_THREADS
    seed: int = settings.SOLVER_SEED
    backend: str = settings.SOLVER_BACKEND
    time_limit: float = settings.SOLVER_TIME_LIMIT

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise SolverConfigException(
                f"Unknown solver backend {self.backend!r}; expected one of {BACKENDS}"
            )
        if self.eps <= 0 or self.eps_int <= 0:
            raise SolverConfigException("Solver tolerances must be positive")
        if self.threads < 1:
            raise SolverConfigException("Solver threads must be at least 1")
        if self.node_limit < 1 or self.iter_limit < 1:
            raise SolverConfigException("Solver limits must be positive")

    def overridden(self, **changes) -> "SolverConfig":
        """Returns a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
