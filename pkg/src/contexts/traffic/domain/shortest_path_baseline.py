import logging
from dataclasses import dataclass

import networkx as nx

from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.cell_network import CellKind, CellNetwork
from src.contexts.traffic.domain.sodta_solution import completion_step
from src.core.exceptions.custom_exceptions import RouteDisconnectedException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaselineResult:
    routes: dict[str, tuple[int, ...]]
    total_travel_time: float
    time_step_seconds: int
    curves: dict[str, tuple[float, ...]]
    completed: bool

    def travel_time_minutes(self) -> float:
        return self.total_travel_time * self.time_step_seconds / 60


def _check_route(network: CellNetwork, vehicle_class: VehicleClass, route: tuple[int, ...]) -> None:
    if not route or route[0] != vehicle_class.source_cell or route[-1] != vehicle_class.sink_cell:
        raise RouteDisconnectedException(
            f"[baseline] route of class {vehicle_class.id} must run from cell "
            f"{vehicle_class.source_cell} to cell {vehicle_class.sink_cell}"
        )
    connectors = set(network.connectors)
    blocked = network.blocked_cells()
    for a, b in zip(route, route[1:]):
        if (a, b) not in connectors or b in blocked:
            raise RouteDisconnectedException(
                f"[baseline] route of class {vehicle_class.id} is disconnected at {a}->{b}"
            )


def baseline_routes(
    network: CellNetwork,
    classes: tuple[VehicleClass, ...],
    given: dict[str, tuple[int, ...]] | None = None,
) -> dict[str, tuple[int, ...]]:
    """Given routes are checked; the others are min-hop paths avoiding permanently red cells."""
    given = given or {}
    routes = {}
    for vehicle_class in classes:
        if vehicle_class.id in given:
            route = tuple(given[vehicle_class.id])
            _check_route(network, vehicle_class, route)
        else:
            excluded = network.blocked_cells() | {
                cell.id
                for cell in network.cells
                if cell.kind is not CellKind.ORDINARY
                and cell.id not in (vehicle_class.source_cell, vehicle_class.sink_cell)
            }
            graph = network.graph(without=excluded)
            try:
                route = tuple(
                    nx.shortest_path(graph, vehicle_class.source_cell, vehicle_class.sink_cell)
                )
            except (nx.NetworkXNoPath, nx.NodeNotFound) as exc:
                raise RouteDisconnectedException(
                    f"[baseline] class {vehicle_class.id} has no route to its sink"
                ) from exc
        routes[vehicle_class.id] = route
    return routes


def simulate_baseline(
    network: CellNetwork,
    classes: tuple[VehicleClass, ...],
    demand: DemandMatrix,
    routes: dict[str, tuple[int, ...]],
) -> BaselineResult:
    """
    Steps the cell transmission model forward with every class held to its
    route. A cell sends at most its (signal-dependent) outflow capacity and
    an ordinary cell receives at most min(Q, w/v * (N - occupancy)), split
    among upstream senders in proportion to what they send. The limits
    apply per (cell, class) unless the network shares capacity, in which
    case classes split them in proportion to occupancy.
    """
    injections = demand.injections(network.time_step_seconds)
    successor = {m: dict(zip(route, route[1:])) for m, route in routes.items()}

    def pool(i: int, m: str) -> int | tuple[int, str]:
        return i if network.shared_capacity else (i, m)

    occupancy: dict[tuple[int, str], float] = {}
    curves: dict[str, list[float]] = {c.id: [] for c in classes}
    total = 0.0
    for t in network.steps:
        waiting = sum(
            value for (i, _), value in occupancy.items() if not network.cell(i).is_sink
        )
        total += network.holding_weight(t) * waiting
        for vehicle_class in classes:
            curves[vehicle_class.id].append(
                occupancy.get((vehicle_class.sink_cell, vehicle_class.id), 0.0)
            )
        if t == network.horizon_steps:
            break

        held: dict[int | tuple[int, str], float] = {}
        for (i, m), value in occupancy.items():
            held[pool(i, m)] = held.get(pool(i, m), 0.0) + value
        sending: dict[tuple[int, str], float] = {}
        for (i, m), value in occupancy.items():
            if value <= 0 or network.cell(i).is_sink:
                continue
            capacity = network.outflow_capacity(i, t)
            sending[(i, m)] = value * min(1.0, capacity / held[pool(i, m)])

        requested: dict[int | tuple[int, str], float] = {}
        for (i, m), value in sending.items():
            key = pool(successor[m][i], m)
            requested[key] = requested.get(key, 0.0) + value
        admitted: dict[int | tuple[int, str], float] = {}
        for key, value in requested.items():
            cell = network.cell(key if isinstance(key, int) else key[0])
            if cell.is_sink or value <= 0:
                admitted[key] = 1.0
                continue
            receiving = min(
                cell.outflow_capacity,
                network.wave_ratio * (cell.jam_occupancy - held.get(key, 0.0)),
            )
            admitted[key] = min(1.0, max(receiving, 0.0) / value)

        for (i, m), value in sending.items():
            j = successor[m][i]
            moved = value * admitted[pool(j, m)]
            occupancy[(i, m)] -= moved
            occupancy[(j, m)] = occupancy.get((j, m), 0.0) + moved
        for (step, cell, m), vehicles in sorted(injections.items()):
            if step == t:
                occupancy[(cell, m)] = occupancy.get((cell, m), 0.0) + vehicles

    result_curves = {m: tuple(curve) for m, curve in curves.items()}
    completed = all(
        completion_step(result_curves[c.id], demand.total(c.id)) is not None for c in classes
    )
    if not completed:
        logger.warning("Fixed-route baseline leaves vehicles on the road at the horizon end")
    result = BaselineResult(
        routes=routes,
        total_travel_time=total,
        time_step_seconds=network.time_step_seconds,
        curves=result_curves,
        completed=completed,
    )
    logger.info("Fixed-route baseline: %.1f vehicle-minutes", result.travel_time_minutes())
    return result


def shortest_path_baseline(
    network: CellNetwork,
    classes: tuple[VehicleClass, ...],
    demand: DemandMatrix,
    given: dict[str, tuple[int, ...]] | None = None,
) -> BaselineResult:
    return simulate_baseline(network, classes, demand, baseline_routes(network, classes, given))
