import numpy as np
import pytest

from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import build_classes
from src.contexts.traffic.application.dispatch_response_vehicles_use_case import (
    DispatchResponseVehiclesUseCase,
)
from src.contexts.traffic.domain.road_network_spec import RoadNetworkSpec, RoadSegment, SignalSpec
from src.contexts.traffic.domain.shortest_path_baseline import shortest_path_baseline
from src.contexts.traffic.domain.sodta_model import build_sodta, class_cells
from src.contexts.traffic.domain.sodta_solution import completion_step
from src.core.exceptions.custom_exceptions import UnreachableSinkException
from src.core.solver.highs_backend import HighsSolver
from src.core.solver.solver_config import SolverConfig
from tests.factories import (
    FREE_FLOW_VEHICLE,
    corridor_spec,
    forward_classes,
    make_demand,
    make_network,
    two_route_spec,
)

DISPATCH = DispatchResponseVehiclesUseCase(solver=HighsSolver(SolverConfig(backend="highs")))


def dispatch(spec, vehicles_per_period, vehicle=None):
    network = make_network(spec, vehicle)
    classes = forward_classes(network)
    demand = make_demand(classes[0], vehicles_per_period)
    return network, classes, demand, DISPATCH.execute(network, classes, demand)


def test_single_vehicle_crosses_one_cell():
    """
    Test the smallest corridor: a source, one ordinary cell and a sink.
    """
    # Act
    network, classes, demand, solution = dispatch(corridor_spec([400.0], horizon_steps=10), [1])
    baseline = shortest_path_baseline(network, classes, demand)

    # Assert
    assert solution.nct_steps["1-2"] == 3
    assert solution.nct_minutes("1-2") == pytest.approx(1.0)
    assert solution.total_travel_time == pytest.approx(2.0)
    assert baseline.total_travel_time == pytest.approx(2.0)
    assert solution.curves["1-2"][:4] == pytest.approx((0.0, 0.0, 0.0, 1.0))


def test_bottleneck_holds_the_overflow_one_step():
    """
    Test that one vehicle above the cell outflow capacity arrives one step later.
    """
    # Act
    _, _, _, solution = dispatch(corridor_spec([400.0], horizon_steps=10), [12])

    # Assert
    curve = solution.curves["1-2"]
    assert curve[3] == pytest.approx(11.0)
    assert curve[4] == pytest.approx(12.0)
    assert solution.nct_steps["1-2"] == 4


def test_red_steps_release_nothing():
    """
    Test that signalised cells send no vehicles while red.
    """
    # Arrange
    signals = (SignalSpec(1, 5, 2, 0), SignalSpec(2, 5, 2, 0), SignalSpec(3, 5, 2, 4))
    spec = corridor_spec([400.0] * 4, signals=signals, horizon_steps=80)

    # Act
    network, _, _, solution = dispatch(spec, [20, 10])

    # Assert
    for (i, _, t, _), value in solution.flows.items():
        if i in network.signals and not network.is_green(i, t):
            assert value == pytest.approx(0.0, abs=1e-9)
    assert solution.curves["1-2"][-1] == pytest.approx(30.0)
    assert solution.residual <= 1e-6


@pytest.mark.parametrize("seed", range(10))
def test_free_flow_corridor_matches_the_simulation(seed):
    """
    Test that with slack capacities the optimal arrivals equal the step-by-step simulation.
    """
    # Arrange
    rng = np.random.default_rng(seed)
    lengths = [float(rng.choice([400, 800, 1200])) for _ in range(int(rng.integers(1, 5)))]
    vehicles = [int(v) for v in rng.integers(0, 21, size=4)]
    vehicles[0] = max(vehicles[0], 1)

    # Act
    network, classes, demand, solution = dispatch(
        corridor_spec(lengths, horizon_steps=80), vehicles, FREE_FLOW_VEHICLE
    )
    baseline = shortest_path_baseline(network, classes, demand)

    # Assert
    assert solution.curves["1-2"] == pytest.approx(baseline.curves["1-2"], abs=1e-6)
    assert solution.total_travel_time == pytest.approx(baseline.total_travel_time, abs=1e-6)


@pytest.mark.parametrize("seed", range(20))
def test_optimum_never_exceeds_the_fixed_route_baseline(seed):
    """
    Test that the system optimum is at most the travel time of a completed shortest-path run.
    """
    # Arrange
    rng = np.random.default_rng(seed)
    spec = two_route_spec(
        short_lanes=int(rng.integers(1, 3)),
        detour_lanes=int(rng.integers(1, 4)),
        detour_length=float(rng.choice([400, 800])),
        horizon_steps=120,
    )
    vehicles = [int(v) for v in rng.integers(0, 41, size=3)]
    vehicles[0] = max(vehicles[0], 1)

    # Act
    network, classes, demand, solution = dispatch(spec, vehicles)
    baseline = shortest_path_baseline(network, classes, demand)

    # Assert
    assert baseline.completed
    assert solution.total_travel_time <= baseline.total_travel_time + 1e-6
    assert solution.residual <= 1e-6


def test_detour_relieves_the_single_lane_link():
    """
    Test that splitting over the detour beats keeping every vehicle on the direct link.
    """
    # Act
    network, classes, demand, solution = dispatch(two_route_spec(), [66])
    baseline = shortest_path_baseline(network, classes, demand)

    # Assert
    assert baseline.routes["1-2"] == (network.source_cell(1), 1, network.sink_cell(2))
    assert solution.total_travel_time < baseline.total_travel_time - 1.0
    assert solution.nct_steps["1-2"] < completion_step(baseline.curves["1-2"], 66)
    assert any(value > 1e-6 for (i, j, _, _), value in solution.flows.items() if (i, j) == (2, 3))


@pytest.mark.parametrize("shared", [False, True])
def test_single_route_classes_match_the_baseline(shared):
    """
    Test two classes sharing the last link when neither has a second route.
    """
    # Arrange
    spec = RoadNetworkSpec(
        nodes=("J0", "J1", "J2"),
        segments=(RoadSegment("S0", "J0", "J1", 400.0), RoadSegment("S1", "J1", "J2", 400.0)),
        station_nodes={1: "J0", 3: "J1", 2: "J2"},
        horizon_steps=60,
        shared_capacity=shared,
    )
    network = make_network(spec)
    classes = build_classes([(1, 2), (3, 2)], network)
    demand = DemandMatrix(5, 40, 0, 1, {(0, c.source_cell, c.id): 30 for c in classes})

    # Act
    solution = DISPATCH.execute(network, classes, demand)
    baseline = shortest_path_baseline(network, classes, demand)

    # Assert
    assert baseline.completed
    if shared:
        assert solution.total_travel_time <= baseline.total_travel_time + 1e-6
    else:
        assert solution.total_travel_time == pytest.approx(baseline.total_travel_time, abs=1e-6)


def test_class_cells_cover_both_routes():
    """
    Test the cells a class may use: every cell on some source-to-sink path.
    """
    # Arrange
    network = make_network(two_route_spec())
    classes = forward_classes(network)

    # Act
    cells = class_cells(network, classes[0])

    # Assert
    assert cells == sorted([1, 2, 3, classes[0].source_cell, classes[0].sink_cell])


def test_no_classes_give_an_empty_model():
    """
    Test that nothing to dispatch yields an empty solution without calling the solver.
    """
    # Arrange
    network = make_network(corridor_spec([400.0]))
    demand = DemandMatrix(5, 40, 0, 1)

    # Act
    sodta = build_sodta(network, (), demand)
    solution = DISPATCH.execute(network, (), demand)

    # Assert
    assert sodta.model.num_variables == 0
    assert solution.total_travel_time == 0.0
    assert solution.curves == {}
    assert solution.max_nct_minutes() is None


def test_permanently_red_cell_makes_the_sink_unreachable():
    """
    Test the reachability check around a blocked cell.
    """
    # Arrange
    spec = corridor_spec([400.0], signals=(SignalSpec(1, 30, 2, 20),), horizon_steps=10)

    # Act & Assert
    with pytest.raises(UnreachableSinkException) as excinfo:
        dispatch(spec, [1])
    assert "unreachable" in str(excinfo.value)


def test_horizon_too_short_for_the_path():
    """
    Test the free-flow hop count check against the horizon.
    """
    # Arrange
    spec = corridor_spec([400.0, 400.0, 400.0], horizon_steps=3)

    # Act & Assert
    with pytest.raises(UnreachableSinkException) as excinfo:
        dispatch(spec, [1])
    assert "horizon" in str(excinfo.value)
