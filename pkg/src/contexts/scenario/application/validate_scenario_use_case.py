import logging
from pathlib import Path

from src.contexts.scenario.application.scenario_repository import (
    ScenarioRepository,
)
from src.contexts.scenario.domain.scenario_validation import validate_scenario
from src.contexts.scenario.domain.validation_report import ValidationReport

logger = logging.getLogger(__name__)


class ValidateScenarioUseCase:
    def __init__(self, scenario_repository: ScenarioRepository):
        self._scenario_repository = scenario_repository

    def execute(self, path: Path) -> ValidationReport:
        scenario = self._scenario_repository.load(path)
        report = validate_scenario(scenario)
        if not report.is_empty:
            logger.warning("Scenario %s has %d violations", path, len(report.entries))
        return report
