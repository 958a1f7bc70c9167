import pytest

from src.contexts.traffic.domain.road_network_spec import SignalSpec
from src.contexts.traffic.domain.shortest_path_baseline import (
    baseline_routes,
    shortest_path_baseline,
)
from src.core.exceptions.custom_exceptions import RouteDisconnectedException
from tests.factories import (
    corridor_spec,
    forward_classes,
    make_demand,
    make_network,
    two_route_spec,
)


def test_default_route_is_the_fewest_cells():
    """
    Test that without a given route the class takes the min-hop path.
    """
    # Arrange
    network = make_network(two_route_spec())
    classes = forward_classes(network)

    # Act
    routes = baseline_routes(network, classes)

    # Assert
    assert routes == {"1-2": (network.source_cell(1), 1, network.sink_cell(2))}


def test_given_detour_is_followed():
    """
    Test that a single vehicle held to the detour arrives one step later than on the direct link.
    """
    # Arrange
    network = make_network(two_route_spec())
    classes = forward_classes(network)
    demand = make_demand(classes[0], [1])
    detour = (network.source_cell(1), 2, 3, network.sink_cell(2))

    # Act
    direct = shortest_path_baseline(network, classes, demand)
    held = shortest_path_baseline(network, classes, demand, {"1-2": detour})

    # Assert
    assert held.routes["1-2"] == detour
    assert direct.curves["1-2"][3] == pytest.approx(1.0)
    assert held.curves["1-2"][3] == pytest.approx(0.0)
    assert held.curves["1-2"][4] == pytest.approx(1.0)
    assert held.total_travel_time == pytest.approx(3.0)
    assert direct.total_travel_time == pytest.approx(2.0)


@pytest.mark.parametrize(
    "route",
    [
        lambda net: (net.source_cell(1), 3, net.sink_cell(2)),
        lambda net: (1, net.sink_cell(2)),
        lambda net: (net.source_cell(1), 1),
        lambda net: (),
    ],
)
def test_invalid_given_routes(route):
    """
    Test given routes with a missing connector or wrong end cells.
    """
    # Arrange
    network = make_network(two_route_spec())
    classes = forward_classes(network)

    # Act & Assert
    with pytest.raises(RouteDisconnectedException):
        baseline_routes(network, classes, {"1-2": route(network)})


def test_blocked_corridor_has_no_route():
    """
    Test that a permanently red cell leaves the class without a route.
    """
    # Arrange
    network = make_network(
        corridor_spec([400.0], signals=(SignalSpec(1, 30, 2, 20),), horizon_steps=10)
    )

    # Act & Assert
    with pytest.raises(RouteDisconnectedException) as excinfo:
        baseline_routes(network, forward_classes(network))
    assert "no route" in str(excinfo.value)


def test_overflow_queues_at_the_source():
    """
    Test that vehicles above the cell capacity wait in the source cell.
    """
    # Arrange
    network = make_network(corridor_spec([400.0], horizon_steps=10))
    classes = forward_classes(network)
    demand = make_demand(classes[0], [12])

    # Act
    result = shortest_path_baseline(network, classes, demand)

    # Assert
    assert result.curves["1-2"][3] == pytest.approx(11.0)
    assert result.curves["1-2"][4] == pytest.approx(12.0)
    assert result.total_travel_time == pytest.approx(25.0)
    assert result.completed


def test_short_horizon_leaves_vehicles_on_the_road(caplog):
    """
    Test the completion flag when the horizon ends before the last arrival.
    """
    # Arrange
    network = make_network(corridor_spec([400.0, 400.0], horizon_steps=2))
    classes = forward_classes(network)

    # Act
    result = shortest_path_baseline(network, classes, make_demand(classes[0], [1]))

    # Assert
    assert not result.completed
    assert "on the road" in caplog.text
