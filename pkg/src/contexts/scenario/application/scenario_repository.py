from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.scenario.domain.scenario import Scenario


class ScenarioRepository(ABC):
    """
    Port for scenario persistence operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def load(self, path: Path) -> Scenario:
        raise NotImplementedError

    @abstractmethod
    def save(self, scenario: Scenario, path: Path) -> None:
        raise NotImplementedError
