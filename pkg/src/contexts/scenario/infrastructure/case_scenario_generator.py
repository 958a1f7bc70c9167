"""
Synthetic 13-station case: timetable, periodic OD demand and a signalised
road corridor between the two disruption boundary stations.
"""

import numpy as np

from src.contexts.scenario.domain.clock import UNVISITED, parse_clock
from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE, LineTopology
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.stage1_options import Stage1Options
from src.contexts.scenario.domain.train_service import TrainService
from src.contexts.traffic.domain.road_network_spec import (
    ResponseVehicleSpec,
    RoadNetworkSpec,
    RoadSegment,
    SignalSpec,
)
from src.core.solver.solver_config import SolverConfig

STATION_NAMES = (
    "GLZ", "GJZ", "BJX", "FTSR", "FTKJY", "KYL", "FSY",
    "QLZ", "LLQ", "MM", "BWG", "JXW", "BJXZ",
)
RUNTIME_MINUTES = 2
DWELL_MINUTES = 1
HORIZON = ("07:20", "09:30")
DISRUPTION = (4, 10, "08:00", "09:00")
POSITIVE_TRAINS = 58
NEGATIVE_TRAINS = 60
SLOT_MINUTES = 15

# (origin, destination, passengers per minute); every crossing OD ends up at a
# boundary station, so the terminal accumulation runs at about 12 * 27 per minute
CROSSING_RATE = 27
CROSSING_ODS = tuple(
    (origin, destination, CROSSING_RATE)
    for origin, destination in (
        (2, 5), (1, 6), (3, 7), (2, 8), (1, 9), (3, 12),
        (12, 9), (13, 8), (11, 7), (12, 6), (13, 5), (11, 2),
    )
)
LOCAL_ODS = ((1, 3, 4), (3, 1, 4), (11, 13, 4), (13, 11, 4))

# (first green step, cell) of the four fixed-time signals, cycle 5 and green 2
SIGNAL_TABLE = ((0, 3), (0, 4), (4, 11), (4, 20))


def _line() -> LineTopology:
    stations = tuple(range(1, 14))
    runtimes = {}
    for a, b in zip(stations, stations[1:]):
        runtimes[(a, b)] = RUNTIME_MINUTES
        runtimes[(b, a)] = RUNTIME_MINUTES
    return LineTopology(
        stations=stations,
        turnback_capable=frozenset({1, 4, 10, 13}),
        section_runtimes=runtimes,
        dwell_times={r: DWELL_MINUTES for r in stations[1:-1]},
        train_capacity=1000,
        names=dict(zip(stations, STATION_NAMES)),
    )


def timetabled_service(
    line: LineTopology, service_id: str, direction: int, start: int, horizon: tuple[int, int]
) -> TrainService | None:
    arrival = {r: UNVISITED for r in line.stations}
    departure = dict(arrival)
    route = line.stations_towards(line.terminal(1 - direction), direction)
    time = start
    for index, station in enumerate(route):
        if index > 0:
            time += line.runtime(route[index - 1], station)
        arrive = time
        if 0 < index < len(route) - 1:
            time += line.dwell(station)
        if horizon[0] <= arrive and time <= horizon[1]:
            arrival[station], departure[station] = arrive, time
    visited = [r for r in route if arrival[r] != UNVISITED]
    if not visited:
        return None
    return TrainService(
        id=service_id,
        direction=direction,
        origin_station=visited[0],
        arrival=arrival,
        departure=departure,
        capacity=line.train_capacity,
    )


def _services(line: LineTopology, horizon: tuple[int, int]) -> tuple[TrainService, ...]:
    services = []
    span = horizon[1] - horizon[0] + 35
    for k in range(POSITIVE_TRAINS):
        start = horizon[0] - 34 + (span * k) // POSITIVE_TRAINS
        service = timetabled_service(line, f"P{k + 1:02d}", POSITIVE, start, horizon)
        if service:
            services.append(service)
    for k in range(NEGATIVE_TRAINS):
        start = horizon[0] - 33 + (span * k) // NEGATIVE_TRAINS
        service = timetabled_service(line, f"N{k + 1:02d}", NEGATIVE, start, horizon)
        if service:
            services.append(service)
    return tuple(services)


def _flows(rng: np.random.Generator, horizon: tuple[int, int]) -> tuple[PassengerFlow, ...]:
    flows = []
    for slot, start in enumerate(range(horizon[0], horizon[1] - SLOT_MINUTES + 1, SLOT_MINUTES)):
        for origin, destination, rate in CROSSING_ODS + LOCAL_ODS:
            size = int(round(rate * SLOT_MINUTES * rng.uniform(0.8, 1.2)))
            flows.append(
                PassengerFlow.between(
                    f"F{origin:02d}-{destination:02d}-{slot}",
                    origin,
                    destination,
                    start,
                    max(size, 1),
                )
            )
    return tuple(flows)


def _road() -> RoadNetworkSpec:
    nodes = tuple(f"N{r}" for r in range(4, 11)) + ("BF", "BR")
    segments = []
    for r in range(4, 10):
        segments.append(RoadSegment(f"F{r}-{r + 1}", f"N{r}", f"N{r + 1}", 800.0))
    for r in range(10, 4, -1):
        segments.append(RoadSegment(f"R{r}-{r - 1}", f"N{r}", f"N{r - 1}", 800.0))
    segments += [
        RoadSegment("BF1", "N5", "BF", 1200.0),
        RoadSegment("BF2", "BF", "N8", 1200.0),
        RoadSegment("BR1", "N9", "BR", 1200.0),
        RoadSegment("BR2", "BR", "N6", 1200.0),
    ]
    return RoadNetworkSpec(
        nodes=nodes,
        segments=tuple(segments),
        station_nodes={r: f"N{r}" for r in range(4, 11)},
        signals=tuple(SignalSpec(cell, 5, 2, offset) for offset, cell in SIGNAL_TABLE),
        time_step_seconds=20,
        horizon_steps=300,
        shared_capacity=True,
    )


def generate_case_scenario(seed: int = 0) -> Scenario:
    """Builds the 13-station case with 118 services and a 12-class road demand shape."""
    rng = np.random.default_rng(seed)
    horizon = (parse_clock(HORIZON[0]), parse_clock(HORIZON[1]))
    line = _line()
    s_begin, s_end, tau_begin, tau_end = DISRUPTION
    return Scenario(
        line=line,
        services=_services(line, horizon),
        flows=_flows(rng, horizon),
        disruption=DisruptionSpec(
            s_begin=s_begin,
            s_end=s_end,
            tau_begin=parse_clock(tau_begin),
            tau_end=parse_clock(tau_end),
            turnback_minutes=3,
        ),
        horizon_start=horizon[0],
        horizon_end=horizon[1],
        headways=MinimumHeadways(1, 1, 1, 1),
        road=_road(),
        vehicle=ResponseVehicleSpec(),
        solver=SolverConfig().overridden(backend="highs", seed=seed),
        stage1=Stage1Options(max_candidate_trains=4),
    )
