"""Builders shared by the test modules."""

from pathlib import Path

from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass, build_classes
from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import POSITIVE, LineTopology
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.stage1_options import Stage1Options
from src.contexts.scenario.domain.train_service import TrainService
from src.contexts.scenario.infrastructure.case_scenario_generator import timetabled_service
from src.contexts.scenario.infrastructure.json_scenario_repository import (
    JsonScenarioRepository,
)
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.contexts.traffic.domain.network_builder import apply_signals, build_network
from src.contexts.traffic.domain.road_network_spec import (
    ResponseVehicleSpec,
    RoadNetworkSpec,
    RoadSegment,
    SignalSpec,
)
from src.core.solver.solver_config import SolverConfig

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Non-binding capacities: about 5500 vehicles per step and 4000 per cell.
FREE_FLOW_VEHICLE = ResponseVehicleSpec(length_m=0.1, max_flow_per_lane_vph=1e6)


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_fixture(name: str) -> Scenario:
    return JsonScenarioRepository().load(fixture_path(name))


def make_line(num_stations: int = 4, runtime: int = 2, dwell: int = 1, capacity: int = 100) -> LineTopology:
    stations = tuple(range(1, num_stations + 1))
    runtimes = {}
    for a, b in zip(stations, stations[1:]):
        runtimes[(a, b)] = runtime
        runtimes[(b, a)] = runtime
    return LineTopology(
        stations=stations,
        turnback_capable=frozenset(stations),
        section_runtimes=runtimes,
        dwell_times={r: dwell for r in stations[1:-1]},
        train_capacity=capacity,
    )


def make_service(
    line: LineTopology,
    service_id: str,
    start: int,
    direction: int = POSITIVE,
    horizon: tuple[int, int] = (480, 540),
) -> TrainService:
    return timetabled_service(line, service_id, direction, start, horizon)


def make_scenario(
    line: LineTopology,
    services: list[TrainService],
    flows: list[PassengerFlow],
    disruption: DisruptionSpec,
    horizon: tuple[int, int] = (480, 540),
    stage1: Stage1Options | None = None,
) -> Scenario:
    return Scenario(
        line=line,
        services=tuple(services),
        flows=tuple(flows),
        disruption=disruption,
        horizon_start=horizon[0],
        horizon_end=horizon[1],
        headways=MinimumHeadways(1, 1, 1, 1),
        solver=SolverConfig(backend="highs"),
        stage1=stage1 or Stage1Options(),
    )


def corridor_spec(
    lengths: list[float],
    lanes: int = 1,
    signals: tuple[SignalSpec, ...] = (),
    horizon_steps: int = 60,
) -> RoadNetworkSpec:
    """A single chain of segments from station 1 to station 2."""
    nodes = tuple(f"J{k}" for k in range(len(lengths) + 1))
    segments = tuple(
        RoadSegment(f"S{k}", nodes[k], nodes[k + 1], length, lanes)
        for k, length in enumerate(lengths)
    )
    return RoadNetworkSpec(
        nodes=nodes,
        segments=segments,
        station_nodes={1: nodes[0], 2: nodes[-1]},
        signals=signals,
        horizon_steps=horizon_steps,
    )


def two_route_spec(
    short_lanes: int = 1,
    detour_lanes: int = 2,
    detour_length: float = 400.0,
    horizon_steps: int = 90,
) -> RoadNetworkSpec:
    """Station 1 at A, station 2 at B: a direct link and a detour through D."""
    return RoadNetworkSpec(
        nodes=("A", "B", "D"),
        segments=(
            RoadSegment("AB", "A", "B", 400.0, short_lanes),
            RoadSegment("AD", "A", "D", detour_length, detour_lanes),
            RoadSegment("DB", "D", "B", detour_length, detour_lanes),
        ),
        station_nodes={1: "A", 2: "B"},
        horizon_steps=horizon_steps,
    )


def make_network(spec: RoadNetworkSpec, vehicle: ResponseVehicleSpec | None = None) -> CellNetwork:
    network = build_network(spec, vehicle or ResponseVehicleSpec())
    return apply_signals(network, spec.signals)


def forward_classes(network: CellNetwork) -> tuple[VehicleClass, ...]:
    return build_classes([(1, 2)], network)


def make_demand(vehicle_class: VehicleClass, vehicles_per_period: list[int]) -> DemandMatrix:
    entries = {
        (period, vehicle_class.source_cell, vehicle_class.id): n
        for period, n in enumerate(vehicles_per_period)
        if n
    }
    return DemandMatrix(
        period_minutes=5,
        vehicle_capacity=40,
        window_start=0,
        periods=max(len(vehicles_per_period), 1),
        entries=entries,
    )
