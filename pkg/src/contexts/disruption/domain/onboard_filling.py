from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.passenger_flow import PassengerFlow


def fill_onboard(
    flow: PassengerFlow, conflict: int, area: SpatioTemporalArea
) -> list[int]:
    """
    Stations after whose arrival the flow is still on board, walking from the
    origin in the travel direction. The run stops one short of the
    destination, or at the turn station when the train conflicts.
    """
    if flow.is_positive:
        stations = range(flow.origin, flow.destination)
        stop = area.s_begin
    else:
        stations = range(flow.origin, flow.destination, -1)
        stop = area.s_end
    onboard = []
    for station in stations:
        onboard.append(station)
        if conflict and station == stop:
            break
    return onboard
