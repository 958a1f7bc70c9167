import logging
from dataclasses import dataclass, field

import networkx as nx

from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.cell_network import CellKind, CellNetwork
from src.core.solver.linear_model import LinearModel, Sense

logger = logging.getLogger(__name__)


@dataclass
class SodtaModel:
    """The system-optimal assignment LP and the ids of its occupancy and flow variables."""

    model: LinearModel
    network: CellNetwork
    classes: tuple[VehicleClass, ...]
    demand: DemandMatrix
    occupancy: dict[tuple[int, int, str], int] = field(default_factory=dict)
    flow: dict[tuple[int, int, int, str], int] = field(default_factory=dict)
    cells: dict[str, list[int]] = field(default_factory=dict)


def class_cells(network: CellNetwork, vehicle_class: VehicleClass) -> list[int]:
    """Cells on some path from the class source to the class sink, avoiding blocked cells."""
    excluded = network.blocked_cells()
    excluded |= {
        cell.id
        for cell in network.cells
        if cell.kind is not CellKind.ORDINARY
        and cell.id not in (vehicle_class.source_cell, vehicle_class.sink_cell)
    }
    graph = network.graph(without=excluded)
    if vehicle_class.source_cell not in graph or vehicle_class.sink_cell not in graph:
        return []
    downstream = nx.descendants(graph, vehicle_class.source_cell) | {vehicle_class.source_cell}
    upstream = nx.ancestors(graph, vehicle_class.sink_cell) | {vehicle_class.sink_cell}
    return sorted(downstream & upstream)


class SodtaBuilder:
    def __init__(
        self, network: CellNetwork, classes: tuple[VehicleClass, ...], demand: DemandMatrix
    ):
        self.network = network
        self.sodta = SodtaModel(LinearModel(name="sodta"), network, classes, demand)
        self.model = self.sodta.model
        self.injections = demand.injections(network.time_step_seconds)

    def build(self) -> SodtaModel:
        for vehicle_class in self.sodta.classes:
            cells = class_cells(self.network, vehicle_class)
            self.sodta.cells[vehicle_class.id] = cells
            self._variables(vehicle_class, cells)
        for vehicle_class in self.sodta.classes:
            self._conservation(vehicle_class)
            self._arrivals(vehicle_class)
            self._occupancy_bound(vehicle_class)
        if self.network.shared_capacity:
            self._shared_capacity()
        else:
            for vehicle_class in self.sodta.classes:
                self._class_capacity(vehicle_class)
        logger.info(
            "SO-DTA model: %d classes, %d variables, %d rows",
            len(self.sodta.classes),
            self.model.num_variables,
            self.model.num_constraints,
        )
        return self.sodta

    def _variables(self, vehicle_class: VehicleClass, cells: list[int]) -> None:
        m = vehicle_class.id
        allowed = set(cells)
        for t in self.network.steps:
            for i in cells:
                weight = 0.0 if self.network.cell(i).is_sink else self.network.holding_weight(t)
                self.sodta.occupancy[(i, t, m)] = self.model.add_variable(
                    f"y[{i},{t},{m}]", cost=weight
                )
        for t in self.network.steps[:-1]:
            for i, j in self.network.connectors:
                if i in allowed and j in allowed:
                    self.sodta.flow[(i, j, t, m)] = self.model.add_variable(f"z[{i},{j},{t},{m}]")

    def _outgoing(self, i: int, t: int, m: str) -> list[int]:
        flow = self.sodta.flow
        return [flow[(i, j, t, m)] for j in self.network.successors(i) if (i, j, t, m) in flow]

    def _incoming(self, j: int, t: int, m: str) -> list[int]:
        flow = self.sodta.flow
        return [flow[(i, j, t, m)] for i in self.network.predecessors(j) if (i, j, t, m) in flow]

    def _conservation(self, vehicle_class: VehicleClass) -> None:
        m = vehicle_class.id
        y = self.sodta.occupancy
        for i in self.sodta.cells[m]:
            self.model.add_constraint(f"empty[{i},{m}]", {y[(i, 0, m)]: 1.0}, Sense.EQ, 0)
            for t in self.network.steps[1:]:
                row = {y[(i, t, m)]: 1.0, y[(i, t - 1, m)]: -1.0}
                for z in self._incoming(i, t - 1, m):
                    row[z] = -1.0
                for z in self._outgoing(i, t - 1, m):
                    row[z] = 1.0
                injected = 0
                if i == vehicle_class.source_cell:
                    injected = self.injections.get((t - 1, i, m), 0)
                self.model.add_constraint(f"conservation[{i},{t},{m}]", row, Sense.EQ, injected)

    def _arrivals(self, vehicle_class: VehicleClass) -> None:
        m = vehicle_class.id
        if not self.sodta.cells[m]:
            return
        last = self.network.horizon_steps
        self.model.add_constraint(
            f"arrivals[{m}]",
            {self.sodta.occupancy[(vehicle_class.sink_cell, last, m)]: 1.0},
            Sense.EQ,
            self.sodta.demand.total(m),
        )

    def _occupancy_bound(self, vehicle_class: VehicleClass) -> None:
        m = vehicle_class.id
        for i in self.sodta.cells[m]:
            for t in self.network.steps[:-1]:
                outgoing = self._outgoing(i, t, m)
                if not outgoing:
                    continue
                row = {z: 1.0 for z in outgoing}
                row[self.sodta.occupancy[(i, t, m)]] = -1.0
                self.model.add_constraint(f"sending[{i},{t},{m}]", row, Sense.LE, 0)

    def _class_capacity(self, vehicle_class: VehicleClass) -> None:
        m = vehicle_class.id
        ratio = self.network.wave_ratio
        for i in self.sodta.cells[m]:
            cell = self.network.cell(i)
            for t in self.network.steps[:-1]:
                outgoing = self._outgoing(i, t, m)
                if outgoing:
                    self.model.add_constraint(
                        f"outflow[{i},{t},{m}]",
                        {z: 1.0 for z in outgoing},
                        Sense.LE,
                        self.network.outflow_capacity(i, t),
                    )
                incoming = self._incoming(i, t, m)
                if incoming and cell.kind is CellKind.ORDINARY:
                    self.model.add_constraint(
                        f"inflow[{i},{t},{m}]",
                        {z: 1.0 for z in incoming},
                        Sense.LE,
                        cell.outflow_capacity,
                    )
                    row = {z: 1.0 for z in incoming}
                    row[self.sodta.occupancy[(i, t, m)]] = ratio
                    self.model.add_constraint(
                        f"receiving[{i},{t},{m}]", row, Sense.LE, ratio * cell.jam_occupancy
                    )

    def _shared_capacity(self) -> None:
        ratio = self.network.wave_ratio
        used = sorted({i for cells in self.sodta.cells.values() for i in cells})
        classes = [c.id for c in self.sodta.classes]
        for i in used:
            cell = self.network.cell(i)
            for t in self.network.steps[:-1]:
                outgoing = [z for m in classes for z in self._outgoing(i, t, m)]
                if outgoing:
                    self.model.add_constraint(
                        f"outflow[{i},{t}]",
                        {z: 1.0 for z in outgoing},
                        Sense.LE,
                        self.network.outflow_capacity(i, t),
                    )
                incoming = [z for m in classes for z in self._incoming(i, t, m)]
                if incoming and cell.kind is CellKind.ORDINARY:
                    self.model.add_constraint(
                        f"inflow[{i},{t}]", {z: 1.0 for z in incoming}, Sense.LE, cell.outflow_capacity
                    )
                    row = {z: 1.0 for z in incoming}
                    for m in classes:
                        if (i, t, m) in self.sodta.occupancy:
                            row[self.sodta.occupancy[(i, t, m)]] = ratio
                    self.model.add_constraint(
                        f"receiving[{i},{t}]", row, Sense.LE, ratio * cell.jam_occupancy
                    )


def build_sodta(
    network: CellNetwork, classes: tuple[VehicleClass, ...], demand: DemandMatrix
) -> SodtaModel:
    return SodtaBuilder(network, classes, demand).build()
