from pathlib import Path

from src.contexts.traffic.application.traffic_artifacts import TrafficArtifactWriter
from src.contexts.traffic.domain.sodta_solution import SodtaSolution
from src.core.io.csv_tables import write_rows

CURVES_HEADER = ("class", "t", "cumulative_arrivals")
NCT_HEADER = ("class", "vehicles", "nct_minutes")
CELLS_HEADER = ("t", "cell", "class", "y")


class CsvTrafficArtifactWriter(TrafficArtifactWriter):
    def write_curves(self, solution: SodtaSolution, path: Path) -> None:
        write_rows(path, CURVES_HEADER, solution.curve_rows())

    def write_nct(self, solution: SodtaSolution, path: Path) -> None:
        write_rows(path, NCT_HEADER, solution.nct_rows())

    def write_cells(self, solution: SodtaSolution, path: Path) -> None:
        write_rows(path, CELLS_HEADER, solution.cell_rows())
