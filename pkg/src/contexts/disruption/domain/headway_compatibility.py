from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.minimum_headways import MinimumHeadways
from src.contexts.scenario.domain.train_service import TrainService


def headway_compat(
    u: TrainService, v: TrainService, station: int, headways: MinimumHeadways
) -> int:
    """1 when any of the four arrival/departure gaps at `station` is below its minimum."""
    u_arrival, u_departure = u.times_at(station)
    v_arrival, v_departure = v.times_at(station)
    pairs = (
        (u_arrival, v_arrival, headways.arrival_arrival),
        (u_arrival, v_departure, headways.arrival_departure),
        (u_departure, v_arrival, headways.departure_arrival),
        (u_departure, v_departure, headways.departure_departure),
    )
    for first, second, minimum in pairs:
        if first == UNVISITED or second == UNVISITED:
            continue
        if abs(first - second) < minimum:
            return 1
    return 0
