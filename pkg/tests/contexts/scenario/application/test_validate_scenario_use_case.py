from dataclasses import replace
from pathlib import Path
from unittest.mock import Mock

from src.contexts.scenario.application.load_scenario_use_case import (
    LoadScenarioUseCase,
    SaveScenarioUseCase,
)
from src.contexts.scenario.application.validate_scenario_use_case import (
    ValidateScenarioUseCase,
)
from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from tests.factories import load_fixture


def test_validate_scenario_reports_violations(caplog):
    """
    Test that the use case loads through the port and returns the collected violations.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    broken = replace(scenario, disruption=DisruptionSpec(2, 4, 510, 500))
    mock_scenario_repository = Mock()
    mock_scenario_repository.load.return_value = broken
    use_case = ValidateScenarioUseCase(scenario_repository=mock_scenario_repository)

    # Act
    report = use_case.execute(Path("case.json"))

    # Assert
    mock_scenario_repository.load.assert_called_once_with(Path("case.json"))
    assert report.codes() == ["disruption-window"]
    assert "1 violations" in caplog.text


def test_load_and_save_delegate_to_the_repository():
    """
    Test that the load and save use cases only forward to the repository port.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    mock_scenario_repository = Mock()
    mock_scenario_repository.load.return_value = scenario

    # Act
    loaded = LoadScenarioUseCase(mock_scenario_repository).execute(Path("in.json"))
    SaveScenarioUseCase(mock_scenario_repository).execute(loaded, Path("out.json"))

    # Assert
    assert loaded is scenario
    mock_scenario_repository.save.assert_called_once_with(scenario, Path("out.json"))
