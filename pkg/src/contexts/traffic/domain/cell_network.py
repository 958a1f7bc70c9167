from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

from src.contexts.traffic.domain.road_network_spec import SignalSpec


class CellKind(Enum):
    ORDINARY = "ordinary"
    SOURCE = "source"
    SINK = "sink"


@dataclass(frozen=True)
class Cell:
    id: int
    kind: CellKind
    outflow_capacity: int
    jam_occupancy: int | None = None
    segment_id: str | None = None
    station: int | None = None

    @property
    def is_sink(self) -> bool:
        return self.kind is CellKind.SINK

    @property
    def is_source(self) -> bool:
        return self.kind is CellKind.SOURCE


@dataclass(frozen=True)
class CellNetwork:
    """
    Road cells and connectors of the cell transmission model.

    Source and sink cells have no jam occupancy. Signalised cells lose their
    outflow capacity during red steps.
    """

    cells: tuple[Cell, ...]
    connectors: tuple[tuple[int, int], ...]
    time_step_seconds: int
    horizon_steps: int
    free_flow_speed: float
    wave_speed: float
    cell_length_m: float
    signals: dict[int, SignalSpec] = field(default_factory=dict)
    holding_weights: tuple[float, ...] | None = None
    shared_capacity: bool = False

    @cached_property
    def _by_id(self) -> dict[int, Cell]:
        return {cell.id: cell for cell in self.cells}

    @cached_property
    def _adjacency(self) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
        successors = {cell.id: [] for cell in self.cells}
        predecessors = {cell.id: [] for cell in self.cells}
        for i, j in self.connectors:
            successors[i].append(j)
            predecessors[j].append(i)
        return successors, predecessors

    @property
    def steps(self) -> range:
        return range(self.horizon_steps + 1)

    @property
    def wave_ratio(self) -> float:
        return self.wave_speed / self.free_flow_speed

    def cell(self, cell_id: int) -> Cell:
        return self._by_id[cell_id]

    def has_cell(self, cell_id: int) -> bool:
        return cell_id in self._by_id

    def successors(self, cell_id: int) -> list[int]:
        return self._adjacency[0][cell_id]

    def predecessors(self, cell_id: int) -> list[int]:
        return self._adjacency[1][cell_id]

    def ordinary_cells(self) -> list[Cell]:
        return [cell for cell in self.cells if cell.kind is CellKind.ORDINARY]

    def source_cell(self, station: int) -> int | None:
        return self._anchored(CellKind.SOURCE, station)

    def sink_cell(self, station: int) -> int | None:
        return self._anchored(CellKind.SINK, station)

    def _anchored(self, kind: CellKind, station: int) -> int | None:
        for cell in self.cells:
            if cell.kind is kind and cell.station == station:
                return cell.id
        return None

    def is_green(self, cell_id: int, step: int) -> bool:
        signal = self.signals.get(cell_id)
        if signal is None:
            return True
        if step < signal.offset:
            return False
        return (step - signal.offset) % signal.cycle < signal.green

    def outflow_capacity(self, cell_id: int, step: int) -> int:
        if not self.is_green(cell_id, step):
            return 0
        return self.cell(cell_id).outflow_capacity

    def holding_weight(self, step: int) -> float:
        if self.holding_weights is None or step >= len(self.holding_weights):
            return 1.0
        return self.holding_weights[step]

    def blocked_cells(self) -> set[int]:
        """Signalised cells that never turn green inside the horizon."""
        return {
            cell_id
            for cell_id in self.signals
            if not any(self.is_green(cell_id, t) for t in range(self.horizon_steps))
        }

    def graph(self, without: set[int] | None = None) -> nx.DiGraph:
        without = without or set()
        graph = nx.DiGraph()
        graph.add_nodes_from(cell.id for cell in self.cells if cell.id not in without)
        graph.add_edges_from(
            (i, j) for i, j in self.connectors if i not in without and j not in without
        )
        return graph
