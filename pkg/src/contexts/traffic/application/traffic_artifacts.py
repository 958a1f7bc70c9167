from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.traffic.domain.sodta_solution import SodtaSolution


class TrafficArtifactWriter(ABC):
    """
    Port for stage-2 output operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def write_curves(self, solution: SodtaSolution, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_nct(self, solution: SodtaSolution, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_cells(self, solution: SodtaSolution, path: Path) -> None:
        raise NotImplementedError
