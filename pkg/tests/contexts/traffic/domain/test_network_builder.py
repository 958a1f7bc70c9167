from dataclasses import replace

import pytest

from src.contexts.scenario.infrastructure.case_scenario_generator import (
    generate_case_scenario,
)
from src.contexts.traffic.application.build_road_network_use_case import (
    BuildRoadNetworkUseCase,
)
from src.contexts.traffic.domain.cell_network import CellKind
from src.contexts.traffic.domain.network_builder import apply_signals
from src.contexts.traffic.domain.road_network_spec import SignalSpec
from src.core.exceptions.custom_exceptions import (
    ScenarioParseException,
    SignalPlanException,
)
from tests.factories import corridor_spec, load_fixture, make_network, two_route_spec


def test_case_network_dimensions():
    """
    Test cell size, capacities and numbering of the 13-station case road network.
    """
    # Arrange
    scenario = generate_case_scenario(0)

    # Act
    network = BuildRoadNetworkUseCase().execute(scenario)

    # Assert
    ordinary = network.ordinary_cells()
    assert network.cell_length_m == 400.0
    assert len(ordinary) == 36
    assert {cell.outflow_capacity for cell in ordinary} == {11}
    assert {cell.jam_occupancy for cell in ordinary} == {33}
    assert [network.source_cell(r) for r in range(4, 11)] == list(range(37, 44))
    assert [network.sink_cell(r) for r in range(4, 11)] == list(range(44, 51))
    assert network.source_cell(1) is None
    assert set(network.signals) == {3, 4, 11, 20}


def test_segments_are_split_into_cells_and_joined_at_nodes():
    """
    Test the cells and connectors of the two-route network.
    """
    # Act
    network = make_network(two_route_spec())

    # Assert
    assert [(c.id, c.segment_id) for c in network.ordinary_cells()] == [(1, "AB"), (2, "AD"), (3, "DB")]
    assert network.cell(2).outflow_capacity == 22
    assert network.cell(2).jam_occupancy == 66
    source, sink = network.source_cell(1), network.sink_cell(2)
    assert network.successors(source) == [1, 2]
    assert network.cell(source).outflow_capacity == 22
    assert sorted(network.predecessors(sink)) == [1, 3]
    assert (2, 3) in network.connectors
    assert network.cell(sink).kind is CellKind.SINK


def test_turning_back_onto_the_reverse_segment_is_not_connected():
    """
    Test that a segment does not feed the segment running straight back.
    """
    # Arrange
    network = BuildRoadNetworkUseCase().execute(load_fixture("toy_scenario.json"))
    ab_last = max(c.id for c in network.ordinary_cells() if c.segment_id == "AB")
    ba_first = min(c.id for c in network.ordinary_cells() if c.segment_id == "BA")
    bc_first = min(c.id for c in network.ordinary_cells() if c.segment_id == "BC")

    # Act & Assert
    assert (ab_last, ba_first) not in network.connectors
    assert (ab_last, bc_first) in network.connectors


def test_short_segments_merge_their_end_nodes(caplog):
    """
    Test that a segment shorter than one cell disappears and its nodes become one junction.
    """
    # Act
    network = make_network(corridor_spec([400.0, 100.0]))

    # Assert
    assert len(network.ordinary_cells()) == 1
    assert network.predecessors(network.sink_cell(2)) == [1]
    assert "shorter than one" in caplog.text


def test_signal_phases_repeat_from_their_offset():
    """
    Test the green steps of a signal with cycle 5, green 2 and first green at step 4.
    """
    # Arrange
    network = make_network(corridor_spec([400.0], signals=(SignalSpec(1, 5, 2, 4),)))

    # Act
    greens = [t for t in range(15) if network.is_green(1, t)]

    # Assert
    assert greens == [4, 5, 9, 10, 14]
    assert network.outflow_capacity(1, 6) == 0
    assert network.outflow_capacity(1, 9) == 11


def test_signal_never_green_in_horizon_blocks_the_cell():
    """
    Test that a cell still red at the end of the horizon is blocked.
    """
    # Act
    network = make_network(corridor_spec([400.0], signals=(SignalSpec(1, 30, 2, 20),), horizon_steps=10))

    # Assert
    assert network.blocked_cells() == {1}


@pytest.mark.parametrize(
    "signal",
    [
        SignalSpec(99, 5, 2, 0),
        SignalSpec(2, 5, 2, 0),
        SignalSpec(1, 5, 6, 0),
        SignalSpec(1, 5, 0, 0),
        SignalSpec(1, 5, 2, 5),
    ],
)
def test_invalid_signal_plans(signal):
    """
    Test unknown cells, signals on source cells and out-of-range phases.
    """
    # Arrange
    network = make_network(corridor_spec([400.0]))

    # Act & Assert
    with pytest.raises(SignalPlanException):
        apply_signals(network, (signal,))


def test_two_plans_on_one_cell_are_rejected():
    """
    Test that a cell carries at most one signal plan.
    """
    # Arrange
    network = make_network(corridor_spec([400.0]))

    # Act & Assert
    with pytest.raises(SignalPlanException) as excinfo:
        apply_signals(network, (SignalSpec(1, 5, 2, 0), SignalSpec(1, 4, 1, 0)))
    assert "two signal plans" in str(excinfo.value)


def test_scenario_without_road_cannot_build_a_network():
    """
    Test that stage 2 needs a road block.
    """
    # Arrange
    scenario = replace(load_fixture("toy_scenario.json"), road=None)

    # Act & Assert
    with pytest.raises(ScenarioParseException):
        BuildRoadNetworkUseCase().execute(scenario)
