import logging
from dataclasses import replace

from src.contexts.rescheduling.domain.accumulation_series import (
    AccumulationSeries,
    forward_fill,
)
from src.contexts.rescheduling.domain.passenger_assignment import PassengerAssignment
from src.contexts.rescheduling.domain.rescheduled_timetable import (
    RescheduledTimetable,
    ServiceOutcome,
)
from src.contexts.rescheduling.domain.stage1_model import Stage1Model
from src.contexts.rescheduling.domain.stage1_solution import Stage1Solution
from src.contexts.scenario.domain.train_service import ServiceKind
from src.core.solver.solve_result import SolveResult

logger = logging.getLogger(__name__)


def _integral(result: SolveResult, var_id: int) -> int:
    return int(round(result.value(var_id)))


def extract_timetable(stage1: Stage1Model, result: SolveResult) -> RescheduledTimetable:
    outcomes = []
    stations = stage1.scenario.line.stations
    for service in stage1.candidate.services:
        u = service.id
        activated = _integral(result, stage1.activation[u]) == 1
        arrival = {r: _integral(result, stage1.arrival_time[(u, r)]) for r in stations}
        departure = {r: _integral(result, stage1.departure_time[(u, r)]) for r in stations}
        conflict = stage1.indicators.conflict[u]
        if service.kind is ServiceKind.TURNAROUND:
            turn = service.turn_station
        elif conflict and activated:
            turn = stage1.area.turn_station(service.direction)
        else:
            turn = None
        outcomes.append(
            ServiceOutcome(
                service=replace(service, arrival=arrival, departure=departure),
                activated=activated,
                conflict=conflict,
                turn_station=turn,
            )
        )
    return RescheduledTimetable(tuple(outcomes), stage1.area, tuple(stations))


def extract_assignment(stage1: Stage1Model, result: SolveResult) -> PassengerAssignment:
    boarded = {pair: _integral(result, var) for pair, var in stage1.assignment.items()}
    stranded = {p: _integral(result, var) for p, var in stage1.stranded.items()}
    return PassengerAssignment(boarded, stranded)


def _average_waiting(stage1: Stage1Model, assignment: PassengerAssignment) -> dict[int, float]:
    """Mean wait per origin station; stranded passengers wait until the horizon ends."""
    waited: dict[int, float] = {}
    produced: dict[int, int] = {}
    horizon_end = stage1.scenario.horizon_end
    for flow in stage1.scenario.flows:
        if flow.id not in stage1.stranded:
            continue
        total = sum(
            stage1.indicators.waiting[(p, u)] * n
            for (p, u), n in assignment.boarded.items()
            if p == flow.id
        )
        total += (horizon_end - flow.production_time) * assignment.stranded[flow.id]
        waited[flow.origin] = waited.get(flow.origin, 0.0) + total
        produced[flow.origin] = produced.get(flow.origin, 0) + flow.size
    return {r: waited[r] / produced[r] for r in sorted(produced) if produced[r]}


def extract_accumulation(
    stage1: Stage1Model, result: SolveResult, assignment: PassengerAssignment
) -> AccumulationSeries:
    times = list(stage1.scenario.horizon)
    arrivals = {}
    departures = {}
    for station in stage1.scenario.line.stations:
        events = stage1.event_times.get(station, [])
        arrivals[station] = forward_fill(
            times, events, [_integral(result, stage1.arrivals[(station, t)]) for t in events]
        )
        departures[station] = forward_fill(
            times, events, [_integral(result, stage1.departures[(station, t)]) for t in events]
        )
    terminal = {}
    for key, var in stage1.terminal.items():
        value = _integral(result, var)
        if value:
            terminal[key] = value
    return AccumulationSeries(
        stations=tuple(stage1.scenario.line.stations),
        times=tuple(times),
        arrivals=arrivals,
        departures=departures,
        terminal=terminal,
        average_waiting=_average_waiting(stage1, assignment),
    )


def extract_stage1(stage1: Stage1Model, result: SolveResult) -> Stage1Solution:
    """Reads the timetable, assignment and accumulation series out of an optimal solve."""
    assignment = extract_assignment(stage1, result)
    solution = Stage1Solution(
        timetable=extract_timetable(stage1, result),
        assignment=assignment,
        accumulation=extract_accumulation(stage1, result, assignment),
        objective=float(result.objective),
        time_big_m=stage1.time_big_m,
        objective_big_m=stage1.objective_big_m,
        statistics=result.statistics,
    )
    logger.info(
        "Stage-1 optimum %.1f: %d activated services, %d stranded passengers",
        solution.objective,
        len(solution.timetable.activated()),
        assignment.total_stranded(),
    )
    return solution
