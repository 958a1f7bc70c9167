from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.disruption.domain.indicator_set import IndicatorSet


class IndicatorWriter(ABC):
    """
    Port for indicator dump operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def write(self, indicators: IndicatorSet, path: Path) -> None:
        raise NotImplementedError
