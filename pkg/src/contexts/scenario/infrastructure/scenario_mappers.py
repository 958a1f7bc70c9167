from src.contexts.scenario.domain.clock import UNVISITED, format_clock, parse_clock
from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE, LineTopology
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.stage1_options import Stage1Options
from src.contexts.scenario.domain.train_service import TrainService
from src.contexts.scenario.infrastructure.scenario_document import (
    DisruptionDocument,
    FlowDocument,
    HeadwaysDocument,
    HorizonDocument,
    LineDocument,
    RoadDocument,
    ScenarioDocument,
    SectionRuntimeDocument,
    SegmentDocument,
    ServiceDocument,
    SignalDocument,
    SolverDocument,
    VehicleDocument,
)
from src.contexts.traffic.domain.road_network_spec import (
    ResponseVehicleSpec,
    RoadNetworkSpec,
    RoadSegment,
    SignalSpec,
)
from src.core.exceptions.custom_exceptions import (
    DanglingReferenceException,
    ScenarioParseException,
)
from src.core.solver.solver_config import SolverConfig


def _stop_time(value) -> int:
    if value is None or value == UNVISITED:
        return UNVISITED
    return parse_clock(value)


def _station(value: str | int, stations: set[int], owner: str) -> int:
    try:
        station = int(value)
    except ValueError:
        raise ScenarioParseException(f"station key {value!r} is not an integer", owner)
    if station not in stations:
        raise DanglingReferenceException("station", station, owner)
    return station


def line_document_to_domain(document: LineDocument) -> LineTopology:
    """Transforms a line document into a LineTopology entity."""
    stations = set(document.stations)
    runtimes = {}
    for section in document.section_runtimes:
        owner = f"line.section_runtimes {section.from_station}-{section.to_station}"
        pair = (
            _station(section.from_station, stations, owner),
            _station(section.to_station, stations, owner),
        )
        runtimes[pair] = section.minutes
    for station in document.turnback_capable:
        _station(station, stations, "line.turnback_capable")
    return LineTopology(
        stations=tuple(document.stations),
        turnback_capable=frozenset(document.turnback_capable),
        section_runtimes=runtimes,
        dwell_times={
            _station(key, stations, "line.dwell_times"): value
            for key, value in document.dwell_times.items()
        },
        train_capacity=document.train_capacity,
        names={
            _station(key, stations, "line.names"): value
            for key, value in document.names.items()
        },
    )


def service_document_to_domain(
    document: ServiceDocument, line: LineTopology
) -> TrainService:
    """Transforms a service document into a TrainService, filling -1 at unvisited stations."""
    stations = set(line.stations)
    owner = f"service {document.id}"
    _station(document.origin_station, stations, owner)
    arrival = {station: UNVISITED for station in line.stations}
    departure = {station: UNVISITED for station in line.stations}
    for key, value in document.arrival.items():
        arrival[_station(key, stations, owner)] = _stop_time(value)
    for key, value in document.departure.items():
        departure[_station(key, stations, owner)] = _stop_time(value)
    return TrainService(
        id=document.id,
        direction=document.direction,
        origin_station=document.origin_station,
        arrival=arrival,
        departure=departure,
        capacity=document.capacity if document.capacity is not None else line.train_capacity,
    )


def flow_document_to_domain(document: FlowDocument, line: LineTopology) -> PassengerFlow:
    """Transforms a flow document into a PassengerFlow entity."""
    stations = set(line.stations)
    owner = f"flow {document.id}"
    origin = _station(document.origin, stations, owner)
    destination = _station(document.destination, stations, owner)
    direction = document.direction
    if direction is None:
        direction = POSITIVE if origin < destination else NEGATIVE
    return PassengerFlow(
        id=document.id,
        origin=origin,
        destination=destination,
        production_time=parse_clock(document.production_time),
        size=document.size,
        direction=direction,
    )


def road_document_to_domain(document: RoadDocument, line: LineTopology) -> RoadNetworkSpec:
    """Transforms a road document into a RoadNetworkSpec."""
    nodes = set(document.nodes)
    for segment in document.segments:
        for node in (segment.from_node, segment.to_node):
            if node not in nodes:
                raise DanglingReferenceException("node", node, f"road segment {segment.id}")
    stations = set(line.stations)
    station_nodes = {}
    for key, node in document.stations.items():
        station = _station(key, stations, "road.stations")
        if node not in nodes:
            raise DanglingReferenceException("node", node, f"road station {station}")
        station_nodes[station] = node
    return RoadNetworkSpec(
        nodes=tuple(document.nodes),
        segments=tuple(
            RoadSegment(s.id, s.from_node, s.to_node, s.length_m, s.lanes)
            for s in document.segments
        ),
        station_nodes=station_nodes,
        signals=tuple(
            SignalSpec(s.cell, s.cycle, s.green, s.offset) for s in document.signals
        ),
        time_step_seconds=document.time_step_seconds,
        horizon_steps=document.horizon_steps,
        holding_weights=(
            tuple(document.holding_weights) if document.holding_weights is not None else None
        ),
        shared_capacity=document.shared_capacity,
        demand_window=document.demand_window,
        baseline_routes={
            key: tuple(route) for key, route in document.baseline_routes.items()
        },
    )


def solver_document_to_domain(document: SolverDocument) -> tuple[SolverConfig, Stage1Options]:
    """Splits the solver block into generic solver settings and stage-1 model options."""
    config = SolverConfig().overridden(
        eps=document.eps,
        eps_int=document.eps_int,
        node_limit=document.node_limit,
        iter_limit=document.iter_limit,
        threads=document.threads,
        seed=document.seed,
        backend=document.backend,
        time_limit=document.time_limit,
    )
    options = Stage1Options(
        objective_big_m=document.objective_big_m,
        weight_wait_by_size=document.weight_wait_by_size,
        accumulation_form=document.accumulation_form,
        max_candidate_trains=document.max_candidate_trains,
    )
    return config, options


def scenario_document_to_domain(document: ScenarioDocument) -> Scenario:
    """Transforms a parsed scenario document into a Scenario with every reference resolved."""
    line = line_document_to_domain(document.line)
    seen = set()
    for service in document.services:
        if service.id in seen:
            raise ScenarioParseException(f"duplicate service id {service.id}", "services")
        seen.add(service.id)
    seen = set()
    for flow in document.flows:
        if flow.id in seen:
            raise ScenarioParseException(f"duplicate flow id {flow.id}", "flows")
        seen.add(flow.id)
    stations = set(line.stations)
    disruption = document.disruption
    for station in (disruption.s_begin, disruption.s_end):
        _station(station, stations, "disruption")
    solver, stage1 = solver_document_to_domain(document.solver)
    vehicle = document.vehicle
    headways = document.headways
    return Scenario(
        line=line,
        services=tuple(service_document_to_domain(s, line) for s in document.services),
        flows=tuple(flow_document_to_domain(f, line) for f in document.flows),
        disruption=DisruptionSpec(
            s_begin=disruption.s_begin,
            s_end=disruption.s_end,
            tau_begin=parse_clock(disruption.tau_begin),
            tau_end=parse_clock(disruption.tau_end),
            turnback_minutes=disruption.turnback_minutes,
        ),
        horizon_start=parse_clock(document.horizon.start),
        horizon_end=parse_clock(document.horizon.end),
        headways=MinimumHeadways(headways.AA, headways.AD, headways.DA, headways.DD),
        road=road_document_to_domain(document.road, line) if document.road else None,
        vehicle=ResponseVehicleSpec(
            capacity=vehicle.capacity,
            dispatch_period_minutes=vehicle.dispatch_period_minutes,
            length_m=vehicle.length_m,
            free_flow_speed=vehicle.free_flow_speed,
            wave_speed=vehicle.wave_speed,
            max_flow_per_lane_vph=vehicle.max_flow_per_lane_vph,
        ),
        solver=solver,
        stage1=stage1,
    )


def _stop_document(time: int) -> str | int:
    return UNVISITED if time == UNVISITED else format_clock(time)


def scenario_domain_to_document(scenario: Scenario) -> ScenarioDocument:
    """Transforms a Scenario into its on-disk document; unvisited stations are omitted."""
    line = scenario.line
    road = scenario.road
    return ScenarioDocument(
        line=LineDocument(
            stations=list(line.stations),
            names={str(k): v for k, v in sorted(line.names.items())},
            turnback_capable=sorted(line.turnback_capable),
            section_runtimes=[
                SectionRuntimeDocument(from_station=a, to_station=b, minutes=m)
                for (a, b), m in sorted(line.section_runtimes.items())
            ],
            dwell_times={str(k): v for k, v in sorted(line.dwell_times.items())},
            train_capacity=line.train_capacity,
        ),
        services=[
            ServiceDocument(
                id=s.id,
                direction=s.direction,
                origin_station=s.origin_station,
                capacity=s.capacity,
                arrival={
                    str(r): _stop_document(t)
                    for r, t in sorted(s.arrival.items())
                    if t != UNVISITED
                },
                departure={
                    str(r): _stop_document(t)
                    for r, t in sorted(s.departure.items())
                    if t != UNVISITED
                },
            )
            for s in scenario.services
        ],
        flows=[
            FlowDocument(
                id=f.id,
                origin=f.origin,
                destination=f.destination,
                production_time=format_clock(f.production_time),
                size=f.size,
                direction=f.direction,
            )
            for f in scenario.flows
        ],
        disruption=DisruptionDocument(
            s_begin=scenario.disruption.s_begin,
            s_end=scenario.disruption.s_end,
            tau_begin=format_clock(scenario.disruption.tau_begin),
            tau_end=format_clock(scenario.disruption.tau_end),
            turnback_minutes=scenario.disruption.turnback_minutes,
        ),
        horizon=HorizonDocument(
            start=format_clock(scenario.horizon_start),
            end=format_clock(scenario.horizon_end),
        ),
        headways=HeadwaysDocument(
            AA=scenario.headways.arrival_arrival,
            AD=scenario.headways.arrival_departure,
            DA=scenario.headways.departure_arrival,
            DD=scenario.headways.departure_departure,
        ),
        road=(
            RoadDocument(
                nodes=list(road.nodes),
                segments=[
                    SegmentDocument(
                        id=s.id,
                        from_node=s.from_node,
                        to_node=s.to_node,
                        length_m=s.length_m,
                        lanes=s.lanes,
                    )
                    for s in road.segments
                ],
                stations={str(k): v for k, v in sorted(road.station_nodes.items())},
                signals=[
                    SignalDocument(cell=s.cell, cycle=s.cycle, green=s.green, offset=s.offset)
                    for s in road.signals
                ],
                time_step_seconds=road.time_step_seconds,
                horizon_steps=road.horizon_steps,
                holding_weights=(
                    list(road.holding_weights) if road.holding_weights is not None else None
                ),
                shared_capacity=road.shared_capacity,
                demand_window=road.demand_window,
                baseline_routes={k: list(v) for k, v in sorted(road.baseline_routes.items())},
            )
            if road
            else None
        ),
        vehicle=VehicleDocument(
            capacity=scenario.vehicle.capacity,
            dispatch_period_minutes=scenario.vehicle.dispatch_period_minutes,
            length_m=scenario.vehicle.length_m,
            free_flow_speed=scenario.vehicle.free_flow_speed,
            wave_speed=scenario.vehicle.wave_speed,
            max_flow_per_lane_vph=scenario.vehicle.max_flow_per_lane_vph,
        ),
        solver=SolverDocument(
            eps=scenario.solver.eps,
            eps_int=scenario.solver.eps_int,
            node_limit=scenario.solver.node_limit,
            iter_limit=scenario.solver.iter_limit,
            threads=scenario.solver.threads,
            seed=scenario.solver.seed,
            backend=scenario.solver.backend,
            time_limit=scenario.solver.time_limit,
            objective_big_m=scenario.stage1.objective_big_m,
            weight_wait_by_size=scenario.stage1.weight_wait_by_size,
            accumulation_form=scenario.stage1.accumulation_form,
            max_candidate_trains=scenario.stage1.max_candidate_trains,
        ),
    )
