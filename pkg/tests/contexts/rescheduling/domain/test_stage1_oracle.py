import itertools
from dataclasses import replace

import numpy as np
import pytest

from src.contexts.disruption.application.precompute_disruption_use_case import (
    PrecomputeDisruptionUseCase,
)
from src.contexts.rescheduling.domain.stage1_builder import build_stage1
from src.contexts.rescheduling.domain.stage1_solving import solve_stage1
from src.contexts.scenario.infrastructure.toy_scenario_generator import (
    generate_toy_scenario,
)
from src.core.solver.branch_and_bound import EmbeddedSolver
from src.core.solver.highs_backend import HighsSolver
from src.core.solver.solver_config import SolverConfig

HIGHS = HighsSolver(SolverConfig(backend="highs"))


def enumerated_optimum(stage1) -> float:
    """Best objective over every activation pattern, each solved with the activations fixed."""
    fixed, free = [], []
    for service_id, var in stage1.activation.items():
        if stage1.indicators.conflict.get(service_id, 0) or stage1.candidate.is_turnaround(service_id):
            free.append(var)
        else:
            fixed.append(var)
    best = np.inf
    for pattern in itertools.product((0.0, 1.0), repeat=len(free)):
        bounds = {var: 1.0 for var in fixed}
        bounds.update(zip(free, pattern))
        result = HIGHS.solve_milp(stage1.model.with_bounds(lower=bounds, upper=bounds))
        if result.is_optimal:
            best = min(best, result.objective)
    return best


@pytest.mark.parametrize("seed", range(50))
def test_stage1_optimum_matches_activation_enumeration(seed):
    """
    Test that the stage-1 optimum equals the best of all activation patterns solved one by one.
    """
    # Arrange
    scenario = generate_toy_scenario(seed)
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    stage1 = build_stage1(scenario, precomputation)

    # Act
    solution = solve_stage1(stage1, HIGHS)

    # Assert
    assert solution.objective == pytest.approx(enumerated_optimum(stage1), abs=1e-6)
    assert solution.audit == ()


@pytest.mark.parametrize("seed", range(5))
def test_embedded_solver_matches_enumeration_on_small_instances(seed):
    """
    Test the in-process branch and bound on the stage-1 model of small random scenarios.
    """
    # Arrange
    scenario = generate_toy_scenario(seed, max_services=2, max_flows=3, max_stations=4)
    scenario = replace(scenario, solver=scenario.solver.overridden(backend="embedded"))
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)
    stage1 = build_stage1(scenario, precomputation)

    # Act
    solution = solve_stage1(stage1, EmbeddedSolver(scenario.solver))

    # Assert
    assert solution.objective == pytest.approx(enumerated_optimum(stage1), abs=1e-6)


@pytest.mark.parametrize("seed", range(20))
def test_accumulation_series_are_consistent(seed):
    """
    Test that cumulative counts never decrease, departures never exceed arrivals and closed stations stay empty.
    """
    # Arrange
    scenario = generate_toy_scenario(seed)
    precomputation = PrecomputeDisruptionUseCase().execute(scenario)

    # Act
    series = solve_stage1(build_stage1(scenario, precomputation), HIGHS).accumulation

    # Assert
    for station in series.stations:
        arrivals = np.array(series.arrivals[station])
        departures = np.array(series.departures[station])
        assert np.all(np.diff(arrivals) >= 0)
        assert np.all(np.diff(departures) >= 0)
        assert np.all(departures <= arrivals)
        if precomputation.area.is_closed(station):
            assert not arrivals.any()
    assert len(series.times) == scenario.horizon_length + 1
