from pathlib import Path

from src.contexts.scenario.application.scenario_repository import (
    ScenarioRepository,
)
from src.contexts.scenario.domain.scenario import Scenario


class LoadScenarioUseCase:
    def __init__(self, scenario_repository: ScenarioRepository):
        self._scenario_repository = scenario_repository

    def execute(self, path: Path) -> Scenario:
        return self._scenario_repository.load(path)


class SaveScenarioUseCase:
    def __init__(self, scenario_repository: ScenarioRepository):
        self._scenario_repository = scenario_repository

    def execute(self, scenario: Scenario, path: Path) -> None:
        self._scenario_repository.save(scenario, path)
