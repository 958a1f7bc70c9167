import csv
from pathlib import Path
from typing import Iterable

from src.core.exceptions.custom_exceptions import (
    MissingArtifactException,
    ScenarioParseException,
)


def write_rows(path: Path, header: tuple[str, ...], rows: Iterable[tuple]) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def read_rows(path: Path, header: tuple[str, ...]) -> list[dict[str, str]]:
    """Rows of a CSV artifact whose first line must equal `header`."""
    path = Path(path)
    if not path.exists():
        raise MissingArtifactException(str(path))
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != header:
            raise ScenarioParseException(
                f"expected header {','.join(header)}", f"{path}: line 1"
            )
        return list(reader)
