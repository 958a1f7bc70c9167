from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.contexts.traffic.domain.reachability import check_reachability
from src.contexts.traffic.domain.sodta_model import build_sodta
from src.contexts.traffic.domain.sodta_solution import SodtaSolution
from src.contexts.traffic.domain.sodta_solving import solve_sodta
from src.core.solver.solver_port import MilpSolver


class DispatchResponseVehiclesUseCase:
    def __init__(self, solver: MilpSolver):
        self._solver = solver

    def execute(
        self,
        network: CellNetwork,
        classes: tuple[VehicleClass, ...],
        demand: DemandMatrix,
    ) -> SodtaSolution:
        check_reachability(network, classes, demand)
        return solve_sodta(build_sodta(network, classes, demand), self._solver)
