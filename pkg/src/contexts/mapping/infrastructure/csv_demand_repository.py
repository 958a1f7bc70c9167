from pathlib import Path

from src.contexts.mapping.application.demand_repository import DemandRepository
from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import parse_class_id
from src.core.exceptions.custom_exceptions import ScenarioParseException
from src.core.io.csv_tables import read_rows, write_rows

HEADER = ("period", "source_cell", "class", "vehicles")


class CsvDemandRepository(DemandRepository):
    def save(self, matrix: DemandMatrix, path: Path) -> None:
        write_rows(path, HEADER, matrix.rows())

    def load_entries(self, path: Path) -> dict[tuple[int, int, str], int]:
        entries = {}
        for line, row in enumerate(read_rows(path, HEADER), start=2):
            try:
                parse_class_id(row["class"])
                key = (int(row["period"]), int(row["source_cell"]), row["class"])
                entries[key] = int(row["vehicles"])
            except (TypeError, ValueError) as exc:
                raise ScenarioParseException(str(exc), f"{path}: line {line}") from exc
        return entries
