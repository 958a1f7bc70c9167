"""Post-hoc checks of an extracted stage-1 solution, independent of the MILP rows."""

from itertools import combinations

from src.contexts.disruption.domain.headway_compatibility import headway_compat
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.rescheduling.domain.passenger_assignment import PassengerAssignment
from src.contexts.rescheduling.domain.rescheduled_timetable import RescheduledTimetable
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow


def audit_disruption_units(timetable: RescheduledTimetable, area: SpatioTemporalArea) -> list[str]:
    """Activated services must neither run through a unit nor stop at a closed station in the window."""
    findings = []
    for outcome in timetable.activated():
        service = outcome.service
        for unit in area.units:
            a, b = unit.from_station, unit.to_station
            if not service.is_positive:
                a, b = b, a
            start, end = service.departure_at(a), service.arrival_at(b)
            if start != UNVISITED and end != UNVISITED and unit.overlaps(start, end):
                findings.append(f"{service.id} runs {a}->{b} during the disruption")
        for station in area.closed_stations:
            for time in service.times_at(station):
                if time != UNVISITED and area.in_window(time):
                    findings.append(f"{service.id} stops at closed station {station}")
    return findings


def audit_headways(
    timetable: RescheduledTimetable, headways: MinimumHeadways
) -> list[str]:
    findings = []
    for first, second in combinations(timetable.activated(), 2):
        if first.direction != second.direction:
            continue
        for station in timetable.stations:
            if headway_compat(first.service, second.service, station, headways):
                findings.append(f"{first.id} and {second.id} too close at station {station}")
    return findings


def audit_capacity(
    timetable: RescheduledTimetable,
    assignment: PassengerAssignment,
    indicators: IndicatorSet,
) -> list[str]:
    load: dict[tuple[str, int], int] = {}
    for (p, u, r), phi in indicators.onboard.items():
        if phi:
            load[(u, r)] = load.get((u, r), 0) + assignment.passengers(p, u)
    findings = []
    for (u, r), passengers in sorted(load.items()):
        capacity = timetable.outcome(u).service.capacity
        if passengers > capacity:
            findings.append(f"{u} carries {passengers} > {capacity} at station {r}")
    return findings


def audit_conservation(
    assignment: PassengerAssignment, flows: list[PassengerFlow]
) -> list[str]:
    return [
        f"flow {flow.id} assigns {assignment.total(flow.id)} of {flow.size}"
        for flow in flows
        if assignment.total(flow.id) != flow.size
    ]
