from dataclasses import dataclass

from src.contexts.disruption.domain.conflict_detection import detect_conflict
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.train_service import TrainService


@dataclass(frozen=True)
class ServiceClassification:
    before: tuple[str, ...]
    overlapping: tuple[str, ...]
    after: tuple[str, ...]

    def group_of(self, service_id: str) -> str:
        if service_id in self.before:
            return "before"
        if service_id in self.after:
            return "after"
        return "overlapping"


def classify_services(
    services: tuple[TrainService, ...] | list[TrainService], area: SpatioTemporalArea
) -> ServiceClassification:
    """
    Partitions services by their relation to the disruption window. Conflicting
    services always land in `overlapping`; the others are split on the
    arrival/departure time at their origin station.
    """
    before, overlapping, after = [], [], []
    for service in services:
        if detect_conflict(service, area):
            overlapping.append(service.id)
            continue
        times = [
            t for t in service.times_at(service.origin_station) if t != UNVISITED
        ]
        if any(t > area.tau_end for t in times):
            after.append(service.id)
        elif any(t < area.tau_begin for t in times):
            before.append(service.id)
        else:
            overlapping.append(service.id)
    return ServiceClassification(tuple(before), tuple(overlapping), tuple(after))
