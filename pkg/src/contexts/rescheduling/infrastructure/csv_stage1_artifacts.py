from pathlib import Path

from src.contexts.rescheduling.application.stage1_artifacts import (
    Stage1ArtifactWriter,
    TerminalAccumulationReader,
)
from src.contexts.rescheduling.domain.accumulation_series import AccumulationSeries
from src.contexts.rescheduling.domain.passenger_assignment import PassengerAssignment
from src.contexts.rescheduling.domain.rescheduled_timetable import RescheduledTimetable
from src.core.exceptions.custom_exceptions import ScenarioParseException
from src.core.io.csv_tables import read_rows, write_rows

TIMETABLE_HEADER = (
    "service_id", "direction", "kind", "activated", "turn_station", "station", "arr", "dep",
)
ASSIGNMENT_HEADER = ("flow_id", "service_id", "passengers")
ACCUMULATION_HEADER = ("station", "t", "A", "D", "G", "inst_G")
TERMINAL_HEADER = ("flow_id", "station", "t", "value")


class CsvStage1ArtifactWriter(Stage1ArtifactWriter):
    def write_timetable(self, timetable: RescheduledTimetable, path: Path) -> None:
        write_rows(path, TIMETABLE_HEADER, timetable.rows())

    def write_assignment(self, assignment: PassengerAssignment, path: Path) -> None:
        write_rows(path, ASSIGNMENT_HEADER, assignment.rows())

    def write_accumulation(self, series: AccumulationSeries, path: Path) -> None:
        write_rows(path, ACCUMULATION_HEADER, series.rows())

    def write_terminal_accumulation(self, series: AccumulationSeries, path: Path) -> None:
        write_rows(path, TERMINAL_HEADER, series.terminal_rows())


class CsvTerminalAccumulationReader(TerminalAccumulationReader):
    def read(self, path: Path) -> dict[tuple[str, int, int], int]:
        terminal = {}
        for line, row in enumerate(read_rows(path, TERMINAL_HEADER), start=2):
            try:
                key = (row["flow_id"], int(row["station"]), int(row["t"]))
                terminal[key] = int(row["value"])
            except (TypeError, ValueError) as exc:
                raise ScenarioParseException(str(exc), f"{path}: line {line}") from exc
        return terminal
