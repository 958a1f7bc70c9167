from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.contexts.traffic.domain.shortest_path_baseline import (
    BaselineResult,
    shortest_path_baseline,
)


class EvaluateBaselineUseCase:
    def execute(
        self,
        network: CellNetwork,
        classes: tuple[VehicleClass, ...],
        demand: DemandMatrix,
        routes: dict[str, tuple[int, ...]] | None = None,
    ) -> BaselineResult:
        return shortest_path_baseline(network, classes, demand, routes)
