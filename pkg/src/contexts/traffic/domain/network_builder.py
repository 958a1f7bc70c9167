import logging
import math
from dataclasses import replace

from networkx.utils import UnionFind

from src.contexts.traffic.domain.cell_network import Cell, CellKind, CellNetwork
from src.contexts.traffic.domain.road_network_spec import (
    ResponseVehicleSpec,
    RoadNetworkSpec,
    RoadSegment,
    SignalSpec,
)
from src.core.exceptions.custom_exceptions import (
    ScenarioParseException,
    SignalPlanException,
)

logger = logging.getLogger(__name__)


def cell_capacities(
    segment: RoadSegment, vehicle: ResponseVehicleSpec, step_seconds: int, cell_length: float
) -> tuple[int, int]:
    """(vehicles leaving per step, vehicles fitting in one cell) for a segment's cells."""
    outflow = math.floor(vehicle.max_flow_per_lane_vph * segment.lanes * step_seconds / 3600)
    jam = math.floor(cell_length * segment.lanes / vehicle.length_m)
    return outflow, jam


def build_network(spec: RoadNetworkSpec, vehicle: ResponseVehicleSpec) -> CellNetwork:
    if vehicle.wave_speed > vehicle.free_flow_speed:
        raise ScenarioParseException(
            "backward wave speed must not exceed free-flow speed", "vehicle.wave_speed"
        )
    step = spec.time_step_seconds
    cell_length = vehicle.free_flow_speed * step
    junctions = UnionFind(spec.nodes)
    segments = []
    for segment in spec.segments:
        if segment.length_m < cell_length:
            logger.warning(
                "Segment %s (%.0f m) is shorter than one %.0f m cell; merging node %s into %s",
                segment.id,
                segment.length_m,
                cell_length,
                segment.to_node,
                segment.from_node,
            )
            junctions.union(segment.from_node, segment.to_node)
        else:
            segments.append(segment)

    cells: list[Cell] = []
    connectors: list[tuple[int, int]] = []
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    outflow: dict[str, int] = {}
    for segment in segments:
        count = math.ceil(segment.length_m / cell_length)
        q, n = cell_capacities(segment, vehicle, step, cell_length)
        ids = list(range(len(cells) + 1, len(cells) + count + 1))
        cells.extend(Cell(i, CellKind.ORDINARY, q, n, segment.id) for i in ids)
        connectors.extend(zip(ids, ids[1:]))
        first[segment.id], last[segment.id], outflow[segment.id] = ids[0], ids[-1], q

    for a in segments:
        for b in segments:
            turning_back = junctions[b.to_node] == junctions[a.from_node]
            if a is not b and junctions[a.to_node] == junctions[b.from_node] and not turning_back:
                connectors.append((last[a.id], first[b.id]))

    stations = sorted(spec.station_nodes)
    for station in stations:
        node = junctions[spec.station_nodes[station]]
        leaving = [s for s in segments if junctions[s.from_node] == node]
        source = len(cells) + 1
        capacity = max((outflow[s.id] for s in leaving), default=0)
        cells.append(Cell(source, CellKind.SOURCE, capacity, station=station))
        connectors.extend((source, first[s.id]) for s in leaving)
    for station in stations:
        node = junctions[spec.station_nodes[station]]
        sink = len(cells) + 1
        cells.append(Cell(sink, CellKind.SINK, 0, station=station))
        connectors.extend((last[s.id], sink) for s in segments if junctions[s.to_node] == node)

    network = CellNetwork(
        cells=tuple(cells),
        connectors=tuple(connectors),
        time_step_seconds=step,
        horizon_steps=spec.horizon_steps,
        free_flow_speed=vehicle.free_flow_speed,
        wave_speed=vehicle.wave_speed,
        cell_length_m=cell_length,
        holding_weights=spec.holding_weights,
        shared_capacity=spec.shared_capacity,
    )
    logger.info(
        "Cell network: %d ordinary cells of %.0f m, %d stations, %d connectors",
        len(network.ordinary_cells()),
        cell_length,
        len(stations),
        len(connectors),
    )
    return network


def apply_signals(network: CellNetwork, signals: tuple[SignalSpec, ...]) -> CellNetwork:
    """Attaches fixed-time plans; a signalised cell releases nothing on red steps."""
    plan = dict(network.signals)
    for signal in signals:
        if not network.has_cell(signal.cell) or network.cell(signal.cell).kind is not CellKind.ORDINARY:
            raise SignalPlanException(
                f"Signal plan references unknown or non-ordinary cell {signal.cell}"
            )
        if not 0 < signal.green <= signal.cycle:
            raise SignalPlanException(
                f"Signal at cell {signal.cell}: green {signal.green} must lie in 1..{signal.cycle}"
            )
        if not 0 <= signal.offset < signal.cycle:
            raise SignalPlanException(
                f"Signal at cell {signal.cell}: offset {signal.offset} must lie in 0..{signal.cycle - 1}"
            )
        if signal.cell in plan:
            raise SignalPlanException(f"Cell {signal.cell} has two signal plans")
        plan[signal.cell] = signal
    return replace(network, signals=plan)
