from dataclasses import replace

import numpy as np
import pytest

from src.contexts.disruption.domain.conflict_detection import detect_conflict
from src.contexts.disruption.domain.service_classification import classify_services
from src.contexts.disruption.domain.spatio_temporal_area import build_area
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.train_service import TrainService
from src.core.exceptions.custom_exceptions import InvalidDisruptionException
from tests.factories import load_fixture, make_line

TAU_BEGIN, TAU_END = 500, 520


def random_service(rng: np.random.Generator, index: int, num_stations: int) -> TrainService:
    arrival, departure = {}, {}
    for station in range(1, num_stations + 1):
        if rng.random() < 0.3:
            arrival[station] = departure[station] = UNVISITED
            continue
        arrive = int(rng.integers(480, 541))
        arrival[station] = arrive
        departure[station] = arrive + int(rng.integers(0, 3))
    visited = [r for r in arrival if arrival[r] != UNVISITED]
    origin = int(rng.choice(visited)) if visited else 1
    if not visited:
        arrival[1] = departure[1] = int(rng.integers(480, 541))
    return TrainService(
        id=f"S{index}",
        direction=int(rng.integers(0, 2)),
        origin_station=origin,
        arrival=arrival,
        departure=departure,
    )


def reference_conflict(service: TrainService, s_begin: int, s_end: int) -> int:
    for station in range(s_begin, s_end + 1):
        for time in (service.arrival[station], service.departure[station]):
            if time != UNVISITED and TAU_BEGIN < time < TAU_END:
                return 1
    return 0


def reference_group(service: TrainService, s_begin: int, s_end: int) -> str:
    if reference_conflict(service, s_begin, s_end):
        return "overlapping"
    at_origin = (
        service.arrival[service.origin_station],
        service.departure[service.origin_station],
    )
    if any(t != UNVISITED and t > TAU_END for t in at_origin):
        return "after"
    if any(t != UNVISITED and t < TAU_BEGIN for t in at_origin):
        return "before"
    return "overlapping"


def test_conflict_and_groups_match_a_direct_reading_of_the_rules():
    """
    Test detection and classification on a thousand random services against a plain transcription.
    """
    # Arrange
    rng = np.random.default_rng(2024)
    line = make_line(num_stations=6)
    area = build_area(DisruptionSpec(2, 5, TAU_BEGIN, TAU_END), line)
    services = [random_service(rng, k, 6) for k in range(1000)]

    # Act
    classification = classify_services(services, area)

    # Assert
    for service in services:
        assert detect_conflict(service, area) == reference_conflict(service, 2, 5)
        assert classification.group_of(service.id) == reference_group(service, 2, 5)
    total = len(classification.before) + len(classification.overlapping) + len(classification.after)
    assert total == len(services)


def test_window_bounds_are_exclusive():
    """
    Test that an event exactly at tau_begin or tau_end is not a conflict.
    """
    # Arrange
    line = make_line()
    area = build_area(DisruptionSpec(2, 3, TAU_BEGIN, TAU_END), line)
    arrival = {1: 495, 2: TAU_BEGIN, 3: TAU_END, 4: 525}
    service = TrainService("S", 1, 1, arrival, dict(arrival))

    # Act & Assert
    assert detect_conflict(service, area) == 0
    assert detect_conflict(replace(service, departure={**arrival, 2: TAU_BEGIN + 1}), area) == 1


def test_fixture_classification():
    """
    Test the conflict flags and groups of the toy scenario.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    area = build_area(scenario.disruption, scenario.line)

    # Act
    conflicts = {s.id: detect_conflict(s, area) for s in scenario.services}
    classification = classify_services(scenario.services, area)

    # Assert
    assert conflicts == {"P1": 0, "P2": 1, "P3": 0, "N1": 1, "N2": 0}
    assert classification.before == ("P1",)
    assert classification.overlapping == ("P2", "N1")
    assert classification.after == ("P3", "N2")


def test_area_partitions_the_line():
    """
    Test the operational and closed station sets of a disruption between stations 2 and 4.
    """
    # Arrange
    line = make_line(num_stations=5)

    # Act
    area = build_area(DisruptionSpec(2, 4, TAU_BEGIN, TAU_END), line)

    # Assert
    assert area.closed_stations == [3]
    assert area.operational_positive_side == [1, 2]
    assert area.operational_negative_side == [4, 5]
    assert [(u.from_station, u.to_station) for u in area.units] == [(2, 3), (3, 4)]
    assert area.units[0].overlaps(490, 501)
    assert not area.units[0].overlaps(490, TAU_BEGIN)


@pytest.mark.parametrize(
    "disruption",
    [DisruptionSpec(3, 3, TAU_BEGIN, TAU_END), DisruptionSpec(2, 4, TAU_END, TAU_BEGIN)],
)
def test_invalid_disruptions_are_rejected(disruption):
    """
    Test that an empty station range or an empty window cannot build an area.
    """
    # Act & Assert
    with pytest.raises(InvalidDisruptionException):
        build_area(disruption, make_line(num_stations=5))
