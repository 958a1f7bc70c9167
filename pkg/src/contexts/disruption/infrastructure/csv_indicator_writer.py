from pathlib import Path

from src.contexts.disruption.application.indicator_writer import IndicatorWriter
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.core.io.csv_tables import write_rows

HEADER = ("p", "u", "r", "t", "kind", "value")


class CsvIndicatorWriter(IndicatorWriter):
    def write(self, indicators: IndicatorSet, path: Path) -> None:
        write_rows(path, HEADER, indicators.to_rows())
