from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.contexts.traffic.domain.network_builder import apply_signals, build_network
from src.core.exceptions.custom_exceptions import ScenarioParseException


class BuildRoadNetworkUseCase:
    def execute(self, scenario: Scenario) -> CellNetwork:
        if scenario.road is None:
            raise ScenarioParseException("stage 2 needs a road network", "road")
        network = build_network(scenario.road, scenario.vehicle)
        return apply_signals(network, scenario.road.signals)
