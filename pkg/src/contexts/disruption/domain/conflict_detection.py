from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.train_service import TrainService


def detect_conflict(service: TrainService, area: SpatioTemporalArea) -> int:
    """
    Returns 1 when any arrival or departure of `service` at a station in
    [s_begin, s_end] falls strictly inside (tau_begin, tau_end), else 0.
    """
    for station in area.disrupted_stations:
        for time in service.times_at(station):
            if time != UNVISITED and area.in_window(time):
                return 1
    return 0
