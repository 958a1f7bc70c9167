import csv

from src.contexts.disruption.application.precompute_disruption_use_case import (
    PrecomputeDisruptionUseCase,
)
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.contexts.disruption.infrastructure.csv_indicator_writer import (
    HEADER,
    CsvIndicatorWriter,
)
from tests.factories import load_fixture


def test_indicator_dump_expands_step_functions(tmp_path):
    """
    Test that the dump holds one row per nonzero point and repeats accumulated rows up to the horizon end.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    indicators = PrecomputeDisruptionUseCase().execute(scenario).indicators
    path = tmp_path / "indicators.csv"

    # Act
    CsvIndicatorWriter().write(indicators, path)

    # Assert
    with path.open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert tuple(rows[0]) == HEADER
    assert ["F1", "P2", "2", "494", "transfer", "1"] in rows
    assert ["-", "P2", "-", "-", "conflict", "1"] in rows
    assert ["-", "P2|P2~T", "2", "-", "turnaround", "1"] in rows
    arrival_acc = [row for row in rows if row[0] == "F1" and row[4] == "arrival_acc"]
    assert [int(row[3]) for row in arrival_acc] == list(range(490, 541))
    assert ["F1", "P2", "-", "-", "departure_gate", "1"] in rows


def test_indicator_rows_cover_every_gate():
    """
    Test that the three static assignment gates each appear in the rows.
    """
    # Arrange
    indicators = IndicatorSet(
        horizon_start=480,
        horizon_end=490,
        flow_ids=("F1",),
        service_ids=("U1",),
        conflict={},
        links={},
        waiting_gate={("U1", "F1"): 1},
        direction_gate={("U1", "F1"): 1},
        departure_gate={("U1", "F1"): 0},
    )

    # Act
    rows = list(indicators.to_rows())

    # Assert
    assert rows == [
        ("F1", "U1", "-", "-", "wait_gate", 1),
        ("F1", "U1", "-", "-", "direction_gate", 1),
        ("F1", "U1", "-", "-", "departure_gate", 0),
    ]
