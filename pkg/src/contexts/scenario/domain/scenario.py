from dataclasses import dataclass, field

from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import LineTopology
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.stage1_options import Stage1Options
from src.contexts.scenario.domain.train_service import TrainService
from src.contexts.traffic.domain.road_network_spec import (
    ResponseVehicleSpec,
    RoadNetworkSpec,
)
from src.core.solver.solver_config import SolverConfig


@dataclass(frozen=True)
class Scenario:
    line: LineTopology
    services: tuple[TrainService, ...]
    flows: tuple[PassengerFlow, ...]
    disruption: DisruptionSpec
    horizon_start: int
    horizon_end: int
    headways: MinimumHeadways = field(default_factory=MinimumHeadways)
    road: RoadNetworkSpec | None = None
    vehicle: ResponseVehicleSpec = field(default_factory=ResponseVehicleSpec)
    solver: SolverConfig = field(default_factory=SolverConfig)
    stage1: Stage1Options = field(default_factory=Stage1Options)

    @property
    def horizon(self) -> range:
        return range(self.horizon_start, self.horizon_end + 1)

    @property
    def horizon_length(self) -> int:
        return self.horizon_end - self.horizon_start

    def service(self, service_id: str) -> TrainService:
        for service in self.services:
            if service.id == service_id:
                return service
        raise KeyError(service_id)

    def flow(self, flow_id: str) -> PassengerFlow:
        for flow in self.flows:
            if flow.id == flow_id:
                return flow
        raise KeyError(flow_id)
