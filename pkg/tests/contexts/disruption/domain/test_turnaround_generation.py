from dataclasses import replace

import pytest

from src.contexts.disruption.domain.candidate_timetable import (
    build_candidate_timetable,
    truncate_service,
)
from src.contexts.disruption.domain.spatio_temporal_area import build_area
from src.contexts.disruption.domain.turnaround_generation import generate_turnarounds
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE
from src.contexts.scenario.domain.train_service import ServiceKind
from src.core.exceptions.custom_exceptions import TurnaroundGenerationException
from tests.factories import load_fixture


def fixture_turnarounds(scenario=None):
    scenario = scenario or load_fixture("toy_scenario.json")
    area = build_area(scenario.disruption, scenario.line)
    turnarounds = generate_turnarounds(
        scenario.services, area, scenario.line, scenario.disruption.turnback_minutes
    )
    return scenario, area, turnarounds


def test_children_reverse_at_the_boundary_after_the_turnback_time():
    """
    Test that each conflicting service gets one reverse child leaving its turn station.
    """
    # Act
    _, _, turnarounds = fixture_turnarounds()

    # Assert
    assert [child.id for child in turnarounds.children] == ["P2~T", "N1~T"]
    p2_child = turnarounds.child_of("P2")
    assert p2_child.direction == NEGATIVE
    assert p2_child.kind is ServiceKind.TURNAROUND
    assert p2_child.times_at(2) == (497, 497)
    assert p2_child.times_at(1) == (499, 499)
    assert p2_child.times_at(3) == (UNVISITED, UNVISITED)
    n1_child = turnarounds.child_of("N1")
    assert n1_child.direction == POSITIVE
    assert n1_child.departure_at(4) == 495
    assert n1_child.arrival_at(5) == 497
    assert turnarounds.links == {("P2", "P2~T", 2): 1, ("N1", "N1~T", 4): 1}
    assert turnarounds.child_of("P1") is None


def test_boundary_without_turnback_track_fails():
    """
    Test that a conflicting service cannot turn at a station lacking a turnback track.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    line = replace(scenario.line, turnback_capable=frozenset({1, 5}))

    # Act & Assert
    with pytest.raises(TurnaroundGenerationException) as excinfo:
        fixture_turnarounds(replace(scenario, line=line))
    assert excinfo.value.station in (2, 4)


def test_truncation_keeps_the_operational_side():
    """
    Test that a conflicting positive service keeps stations up to s_begin and loses its departure there.
    """
    # Arrange
    scenario, area, _ = fixture_turnarounds()

    # Act
    truncated = truncate_service(scenario.service("P2"), area)

    # Assert
    assert truncated.times_at(1) == (492, 492)
    assert truncated.times_at(2) == (494, UNVISITED)
    for station in (3, 4, 5):
        assert truncated.times_at(station) == (UNVISITED, UNVISITED)


def test_candidate_timetable_collects_normal_truncated_and_children():
    """
    Test the candidate service list and its conflict flags.
    """
    # Arrange
    scenario, area, turnarounds = fixture_turnarounds()

    # Act
    candidate = build_candidate_timetable(scenario.services, area, turnarounds)

    # Assert
    assert [s.id for s in candidate.services] == ["P1", "P2", "P3", "N1", "N2", "P2~T", "N1~T"]
    assert candidate.service("P1") == scenario.service("P1")
    assert candidate.normal_service("P2") == scenario.service("P2")
    assert candidate.service("N1").departure_at(4) == UNVISITED
    assert candidate.is_turnaround("N1~T")
    assert not candidate.is_turnaround("N1")
    assert candidate.conflict["P2"] == 1
    assert candidate.conflict["P3"] == 0
    assert candidate.latest_time() == scenario.service("P3").arrival_at(5)
