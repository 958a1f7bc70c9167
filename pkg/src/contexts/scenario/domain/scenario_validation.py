from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.validation_report import (
    ValidationEntry,
    ValidationReport,
)


def validate_scenario(scenario: Scenario) -> ValidationReport:
    """Collects every violated type invariant; an empty report means the scenario is sound."""
    entries: list[ValidationEntry] = []
    entries += _check_line(scenario)
    for service in scenario.services:
        entries += _check_service(scenario, service)
    for flow in scenario.flows:
        entries += _check_flow(scenario, flow)
    entries += _check_disruption(scenario)
    entries += _check_headways(scenario)
    entries += _check_road(scenario)
    return ValidationReport(tuple(entries))


def _check_line(scenario: Scenario) -> list[ValidationEntry]:
    line = scenario.line
    out = []
    if list(line.stations) != list(range(1, len(line.stations) + 1)):
        out.append(
            ValidationEntry(
                "line-stations", "station ids must be consecutive integers from 1"
            )
        )
    for a, b in zip(line.stations, line.stations[1:]):
        for pair in ((a, b), (b, a)):
            runtime = line.section_runtimes.get(pair)
            if runtime is None:
                out.append(
                    ValidationEntry("runtime-missing", f"section {pair[0]}-{pair[1]}")
                )
            elif runtime <= 0:
                out.append(
                    ValidationEntry(
                        "runtime-nonpositive", f"section {pair[0]}-{pair[1]} = {runtime}"
                    )
                )
    for station, dwell in line.dwell_times.items():
        if dwell < 0:
            out.append(ValidationEntry("dwell-negative", f"station {station} = {dwell}"))
    return out


def _check_service(scenario: Scenario, service) -> list[ValidationEntry]:
    out = []
    if service.direction not in (POSITIVE, NEGATIVE):
        out.append(
            ValidationEntry("service-direction", f"service {service.id}: {service.direction}")
        )
    if service.capacity < 1:
        out.append(ValidationEntry("service-capacity", f"service {service.id}"))
    visited = []
    for station in scenario.line.stations:
        arrival, departure = service.times_at(station)
        if (arrival == UNVISITED) != (departure == UNVISITED):
            out.append(
                ValidationEntry(
                    "service-sentinel",
                    f"service {service.id} station {station}: only one of arrival/departure is -1",
                )
            )
            continue
        if arrival == UNVISITED:
            continue
        visited.append(station)
        if arrival > departure:
            out.append(
                ValidationEntry(
                    "service-order",
                    f"service {service.id} station {station}: arrival after departure",
                )
            )
        for time in (arrival, departure):
            if not scenario.horizon_start <= time <= scenario.horizon_end:
                out.append(
                    ValidationEntry(
                        "service-horizon",
                        f"service {service.id} station {station}: time {time} outside horizon",
                    )
                )
                break
    if visited and visited != list(range(visited[0], visited[-1] + 1)):
        out.append(
            ValidationEntry(
                "service-contiguity", f"service {service.id}: visited stations have a gap"
            )
        )
    if len(visited) > 1:
        ordered = visited if service.direction == POSITIVE else visited[::-1]
        for a, b in zip(ordered, ordered[1:]):
            if service.arrival_at(b) < service.departure_at(a):
                out.append(
                    ValidationEntry(
                        "service-travel-order",
                        f"service {service.id}: reaches {b} before leaving {a}",
                    )
                )
        expected_origin = ordered[0]
        if service.origin_station != expected_origin:
            out.append(
                ValidationEntry(
                    "service-origin",
                    f"service {service.id}: origin {service.origin_station} is not its first stop",
                )
            )
    return out


def _check_flow(scenario: Scenario, flow) -> list[ValidationEntry]:
    out = []
    if flow.origin == flow.destination:
        out.append(ValidationEntry("flow-od", f"flow {flow.id}: origin equals destination"))
    elif (flow.direction == POSITIVE) != (flow.origin < flow.destination):
        out.append(
            ValidationEntry(
                "flow-direction",
                f"flow {flow.id}: direction {flow.direction} inconsistent with "
                f"{flow.origin}->{flow.destination}",
            )
        )
    if flow.size < 1:
        out.append(ValidationEntry("flow-size", f"flow {flow.id}: size {flow.size}"))
    if not scenario.horizon_start <= flow.production_time <= scenario.horizon_end:
        out.append(
            ValidationEntry("flow-horizon", f"flow {flow.id}: production time outside horizon")
        )
    return out


def _check_disruption(scenario: Scenario) -> list[ValidationEntry]:
    d = scenario.disruption
    line = scenario.line
    out = []
    if not (line.first_station <= d.s_begin < d.s_end <= line.last_station):
        out.append(
            ValidationEntry(
                "disruption-stations", f"[{d.s_begin}, {d.s_end}] not an ordered range on the line"
            )
        )
    if not d.tau_begin < d.tau_end:
        out.append(ValidationEntry("disruption-window", "tau_begin must precede tau_end"))
    elif not (scenario.horizon_start <= d.tau_begin and d.tau_end <= scenario.horizon_end):
        out.append(ValidationEntry("disruption-window", "window outside planning horizon"))
    if d.turnback_minutes < 0:
        out.append(ValidationEntry("disruption-turnback", "turnback time must be >= 0"))
    if scenario.horizon_start >= scenario.horizon_end:
        out.append(ValidationEntry("horizon", "horizon start must precede its end"))
    return out


def _check_headways(scenario: Scenario) -> list[ValidationEntry]:
    h = scenario.headways
    values = (h.arrival_arrival, h.arrival_departure, h.departure_arrival, h.departure_departure)
    if any(value < 0 for value in values):
        return [ValidationEntry("headway-negative", "minimum headways must be >= 0")]
    return []


def _check_road(scenario: Scenario) -> list[ValidationEntry]:
    out = []
    vehicle = scenario.vehicle
    if vehicle.wave_speed > vehicle.free_flow_speed or vehicle.wave_speed <= 0:
        out.append(ValidationEntry("vehicle-speeds", "require 0 < wave speed <= free-flow speed"))
    if vehicle.capacity < 1 or vehicle.dispatch_period_minutes < 1:
        out.append(ValidationEntry("vehicle-capacity", "capacity and dispatch period must be positive"))
    road = scenario.road
    if road is None:
        return out
    for segment in road.segments:
        if segment.length_m <= 0 or segment.lanes < 1:
            out.append(ValidationEntry("road-segment", f"segment {segment.id}: length/lanes"))
    for signal in road.signals:
        if not 0 < signal.green <= signal.cycle or not 0 <= signal.offset < signal.cycle:
            out.append(
                ValidationEntry(
                    "signal-plan",
                    f"cell {signal.cell}: need 0 < green <= cycle and 0 <= offset < cycle",
                )
            )
    if road.time_step_seconds <= 0 or road.horizon_steps <= 0:
        out.append(ValidationEntry("road-time", "time step and horizon must be positive"))
    return out
