from abc import ABC, abstractmethod
from pathlib import Path

from src.core.solver.linear_model import LinearModel


class ModelExporter(ABC):
    """
    Port for model export operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def export(self, model: LinearModel, path: Path) -> Path:
        raise NotImplementedError
