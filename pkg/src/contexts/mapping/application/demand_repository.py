from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.mapping.domain.demand_matrix import DemandMatrix


class DemandRepository(ABC):
    """
    Port for demand matrix persistence operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def save(self, matrix: DemandMatrix, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def load_entries(self, path: Path) -> dict[tuple[int, int, str], int]:
        raise NotImplementedError
