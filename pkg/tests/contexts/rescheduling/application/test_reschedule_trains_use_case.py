from unittest.mock import Mock

import pytest

from src.contexts.disruption.application.precompute_disruption_use_case import (
    PrecomputeDisruptionUseCase,
)
from src.contexts.rescheduling.application.reschedule_trains_use_case import (
    RescheduleTrainsUseCase,
)
from src.core.exceptions.custom_exceptions import (
    SolverStatusException,
    Stage1InfeasibleException,
)
from src.core.solver.highs_backend import HighsSolver
from src.core.solver.linear_model import LinearModel
from src.core.solver.solve_result import SolveResult, SolveStatus
from src.core.solver.solver_config import SolverConfig
from tests.factories import load_fixture


def test_reschedule_exports_the_model_before_solving(tmp_path):
    """
    Test that the use case hands the built model to the exporter and returns the solved plan.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    mock_model_exporter = Mock()
    mock_model_exporter.export.return_value = tmp_path / "stage1.mps"
    use_case = RescheduleTrainsUseCase(
        solver=HighsSolver(SolverConfig(backend="highs")), model_exporter=mock_model_exporter
    )

    # Act
    solution = use_case.execute(scenario, precomputation, export_path=tmp_path / "stage1.mps")

    # Assert
    mock_model_exporter.export.assert_called_once()
    exported_model, exported_path = mock_model_exporter.export.call_args[0]
    assert isinstance(exported_model, LinearModel)
    assert exported_path == tmp_path / "stage1.mps"
    assert solution.assignment.total_stranded() == 0


def test_reschedule_without_export_path_skips_the_exporter():
    """
    Test that no export happens unless a path is given.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    mock_model_exporter = Mock()
    use_case = RescheduleTrainsUseCase(
        solver=HighsSolver(SolverConfig(backend="highs")), model_exporter=mock_model_exporter
    )

    # Act
    use_case.execute(scenario, precomputation)

    # Assert
    mock_model_exporter.export.assert_not_called()


def test_infeasible_solve_raises_with_diagnosis():
    """
    Test that an infeasible status becomes a stage-1 infeasibility error.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    mock_solver = Mock()
    mock_solver.solve_milp.return_value = SolveResult(SolveStatus.INFEASIBLE)
    use_case = RescheduleTrainsUseCase(solver=mock_solver)

    # Act & Assert
    with pytest.raises(Stage1InfeasibleException) as excinfo:
        use_case.execute(scenario, precomputation)
    assert "[reschedule]" in str(excinfo.value)
    # every row can be dropped while the mock keeps answering infeasible
    assert excinfo.value.irreducible_rows == []


def test_solver_limit_raises_status_error():
    """
    Test that a solve ending on a limit is reported with its status.
    """
    # Arrange
    scenario = load_fixture("toy_scenario.json")
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    mock_solver = Mock()
    mock_solver.solve_milp.return_value = SolveResult(SolveStatus.NODE_LIMIT)
    use_case = RescheduleTrainsUseCase(solver=mock_solver)

    # Act & Assert
    with pytest.raises(SolverStatusException) as excinfo:
        use_case.execute(scenario, precomputation)
    assert excinfo.value.status == "node-limit"
    assert excinfo.value.stage == "reschedule"
