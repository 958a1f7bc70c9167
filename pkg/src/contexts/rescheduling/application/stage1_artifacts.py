from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.rescheduling.domain.accumulation_series import AccumulationSeries
from src.contexts.rescheduling.domain.passenger_assignment import PassengerAssignment
from src.contexts.rescheduling.domain.rescheduled_timetable import RescheduledTimetable


class Stage1ArtifactWriter(ABC):
    """
    Port for stage-1 output operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def write_timetable(self, timetable: RescheduledTimetable, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_assignment(self, assignment: PassengerAssignment, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_accumulation(self, series: AccumulationSeries, path: Path) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_terminal_accumulation(self, series: AccumulationSeries, path: Path) -> None:
        raise NotImplementedError


class TerminalAccumulationReader(ABC):
    """
    Port for reading stored terminal accumulation.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def read(self, path: Path) -> dict[tuple[str, int, int], int]:
        raise NotImplementedError
