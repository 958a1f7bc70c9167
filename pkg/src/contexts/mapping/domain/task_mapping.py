from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.passenger_flow import PassengerFlow


def boarding_shift(flow: PassengerFlow, area: SpatioTemporalArea) -> int:
    """1 when the flow reaches its near boundary station before its destination."""
    if flow.is_positive:
        return int(flow.origin < area.s_begin < flow.destination)
    return int(flow.origin > area.s_end > flow.destination)


def alighting_shift(flow: PassengerFlow, area: SpatioTemporalArea) -> int:
    """1 when the destination lies beyond the far boundary station."""
    if flow.is_positive:
        return int(flow.destination > area.s_end)
    return int(flow.destination < area.s_begin)


def task_map(flow: PassengerFlow, area: SpatioTemporalArea) -> tuple[int, int]:
    """
    Origin and destination of the road trip a flow needs: boundary stations
    replace the parts of the journey the metro still serves.
    """
    f = flow.direction
    near = boarding_shift(flow, area)
    far = alighting_shift(flow, area)
    origin = near * (f * area.s_begin + (1 - f) * area.s_end) + (1 - near) * flow.origin
    destination = far * ((1 - f) * area.s_begin + f * area.s_end) + (1 - far) * flow.destination
    return origin, destination
