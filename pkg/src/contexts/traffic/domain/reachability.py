import networkx as nx

from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.core.exceptions.custom_exceptions import UnreachableSinkException


def check_reachability(
    network: CellNetwork, classes: tuple[VehicleClass, ...], demand: DemandMatrix
) -> None:
    """
    Fails fast when a class with demand cannot reach its sink: no path
    around permanently red cells, or its last dispatch plus the free-flow
    hop count runs past the horizon.
    """
    graph = network.graph(without=network.blocked_cells())
    injections = demand.injections(network.time_step_seconds)
    for vehicle_class in classes:
        steps = [step for (step, _, m), n in injections.items() if m == vehicle_class.id and n]
        if not steps:
            continue
        source, sink = vehicle_class.source_cell, vehicle_class.sink_cell
        if source not in graph or sink not in graph or not nx.has_path(graph, source, sink):
            raise UnreachableSinkException(
                f"[sodta] class {vehicle_class.id}: sink cell {sink} is unreachable "
                f"from source cell {source}"
            )
        hops = nx.shortest_path_length(graph, source, sink)
        if max(steps) + 1 + hops > network.horizon_steps:
            raise UnreachableSinkException(
                f"[sodta] class {vehicle_class.id}: vehicles dispatched at step {max(steps)} "
                f"need {hops + 1} steps, beyond the {network.horizon_steps}-step horizon"
            )
