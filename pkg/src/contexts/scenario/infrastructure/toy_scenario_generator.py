"""Small random scenarios for the exhaustive-enumeration checks."""

import numpy as np

from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE, LineTopology
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.stage1_options import Stage1Options
from src.contexts.scenario.infrastructure.case_scenario_generator import timetabled_service
from src.core.solver.solver_config import SolverConfig

HORIZON_START = 360
HORIZON_MINUTES = 90
MIN_SPACING = 4


def _line(rng: np.random.Generator, num_stations: int) -> LineTopology:
    stations = tuple(range(1, num_stations + 1))
    runtimes = {}
    for a, b in zip(stations, stations[1:]):
        minutes = int(rng.integers(2, 4))
        runtimes[(a, b)] = minutes
        runtimes[(b, a)] = minutes
    return LineTopology(
        stations=stations,
        turnback_capable=frozenset(stations),
        section_runtimes=runtimes,
        dwell_times={r: 1 for r in stations[1:-1]},
        train_capacity=int(rng.integers(20, 61)),
    )


def _starts(rng: np.random.Generator, count: int) -> list[int]:
    """Departure minutes at least MIN_SPACING apart, so equal run times keep every headway."""
    slots = rng.choice(np.arange(0, 40, MIN_SPACING), size=count, replace=False)
    return sorted(HORIZON_START + int(slot) for slot in slots)


def generate_toy_scenario(
    seed: int,
    max_services: int = 4,
    max_flows: int = 6,
    max_stations: int = 6,
    objective_big_m: float | None = None,
) -> Scenario:
    rng = np.random.default_rng(seed)
    num_stations = int(rng.integers(4, max_stations + 1))
    line = _line(rng, num_stations)
    horizon = (HORIZON_START, HORIZON_START + HORIZON_MINUTES)

    num_services = int(rng.integers(1, max_services + 1))
    directions = [int(d) for d in rng.choice([POSITIVE, NEGATIVE], size=num_services)]
    services = []
    for direction in (POSITIVE, NEGATIVE):
        count = directions.count(direction)
        for k, start in enumerate(_starts(rng, count)):
            prefix = "P" if direction == POSITIVE else "N"
            service = timetabled_service(line, f"{prefix}{k + 1}", direction, start, horizon)
            if service is not None:
                services.append(service)

    s_begin = int(rng.integers(2, num_stations - 1))
    s_end = int(rng.integers(s_begin + 1, num_stations))
    tau_begin = HORIZON_START + int(rng.integers(5, 30))
    tau_end = tau_begin + int(rng.integers(10, 26))

    flows = []
    for k in range(int(rng.integers(1, max_flows + 1))):
        origin, destination = (int(r) for r in rng.choice(line.stations, size=2, replace=False))
        flows.append(
            PassengerFlow.between(
                f"F{k + 1}",
                origin,
                destination,
                HORIZON_START + int(rng.integers(0, 45)),
                int(rng.integers(1, 31)),
            )
        )

    return Scenario(
        line=line,
        services=tuple(services),
        flows=tuple(flows),
        disruption=DisruptionSpec(s_begin, s_end, tau_begin, tau_end, turnback_minutes=2),
        horizon_start=horizon[0],
        horizon_end=horizon[1],
        headways=MinimumHeadways(1, 1, 1, 1),
        solver=SolverConfig().overridden(seed=seed),
        stage1=Stage1Options(objective_big_m=objective_big_m),
    )
