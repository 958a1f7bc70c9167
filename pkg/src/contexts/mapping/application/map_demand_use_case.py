import logging
import math
from pathlib import Path

from src.contexts.disruption.domain.spatio_temporal_area import build_area
from src.contexts.mapping.application.demand_repository import DemandRepository
from src.contexts.mapping.domain.demand_mapping import demand_map, demand_window, mapped_ods
from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import (
    VehicleClass,
    build_classes,
    parse_class_id,
)
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.traffic.domain.cell_network import CellNetwork

logger = logging.getLogger(__name__)


def _window(scenario: Scenario) -> tuple[int, int]:
    area = build_area(scenario.disruption, scenario.line)
    mode = scenario.road.demand_window if scenario.road is not None else "disruption"
    return demand_window(area, (scenario.horizon_start, scenario.horizon_end), mode)


class MapDemandUseCase:
    def execute(
        self,
        scenario: Scenario,
        terminal: dict[tuple[str, int, int], int],
        network: CellNetwork,
    ) -> tuple[tuple[VehicleClass, ...], DemandMatrix]:
        area = build_area(scenario.disruption, scenario.line)
        flows = {flow.id: flow for flow in scenario.flows}
        classes = build_classes(mapped_ods(terminal, flows, area), network)
        matrix = demand_map(
            terminal,
            flows,
            area,
            classes,
            scenario.vehicle.capacity,
            scenario.vehicle.dispatch_period_minutes,
            _window(scenario),
        )
        served = tuple(c for c in classes if matrix.total(c.id))
        if len(served) < len(classes):
            logger.info("%d classes have no vehicles in the demand window", len(classes) - len(served))
        return served, matrix


class LoadDemandUseCase:
    """Rebuilds classes and the demand matrix from a stored demand file."""

    def __init__(self, demand_repository: DemandRepository):
        self._demand_repository = demand_repository

    def execute(
        self, scenario: Scenario, network: CellNetwork, path: Path
    ) -> tuple[tuple[VehicleClass, ...], DemandMatrix]:
        entries = self._demand_repository.load_entries(path)
        classes = build_classes([parse_class_id(m) for (_, _, m) in entries], network)
        start, end = _window(scenario)
        period = scenario.vehicle.dispatch_period_minutes
        matrix = DemandMatrix(
            period_minutes=period,
            vehicle_capacity=scenario.vehicle.capacity,
            window_start=start,
            periods=max(math.ceil((end - start) / period), 1),
            entries=entries,
        )
        return classes, matrix
