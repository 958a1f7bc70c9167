from dataclasses import dataclass, replace

from src.contexts.disruption.domain.conflict_detection import detect_conflict
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.disruption.domain.turnaround_generation import TurnaroundSet
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.train_service import ServiceKind, TrainService


@dataclass(frozen=True)
class CandidateTimetable:
    """
    Times every service keeps if it is activated: normal times for services
    clear of the disruption, times truncated at the turn station for
    conflicting ones, and the generated times of turnaround children.
    """

    normal: tuple[TrainService, ...]
    candidates: tuple[TrainService, ...]
    conflict: dict[str, int]
    turnarounds: TurnaroundSet

    @property
    def services(self) -> tuple[TrainService, ...]:
        return self.candidates + self.turnarounds.children

    @property
    def links(self) -> dict[tuple[str, str, int], int]:
        return self.turnarounds.links

    def service(self, service_id: str) -> TrainService:
        for service in self.services:
            if service.id == service_id:
                return service
        raise KeyError(service_id)

    def normal_service(self, service_id: str) -> TrainService:
        for service in self.normal:
            if service.id == service_id:
                return service
        raise KeyError(service_id)

    def is_turnaround(self, service_id: str) -> bool:
        return self.service(service_id).kind is ServiceKind.TURNAROUND

    def latest_time(self) -> int:
        times = [
            t
            for service in self.normal + self.services
            for t in list(service.arrival.values()) + list(service.departure.values())
        ]
        return max(times, default=0)


def truncate_service(service: TrainService, area: SpatioTemporalArea) -> TrainService:
    """Keeps the operational side of the service's direction; departure at the turn station is dropped."""
    keep = set(area.operational_side(service.direction))
    turn = area.turn_station(service.direction)
    arrival = {r: (t if r in keep else UNVISITED) for r, t in service.arrival.items()}
    departure = {
        r: (t if r in keep and r != turn else UNVISITED)
        for r, t in service.departure.items()
    }
    return replace(service, arrival=arrival, departure=departure)


def build_candidate_timetable(
    services: tuple[TrainService, ...], area: SpatioTemporalArea, turnarounds: TurnaroundSet
) -> CandidateTimetable:
    conflict = {}
    candidates = []
    for service in services:
        theta = detect_conflict(service, area)
        conflict[service.id] = theta
        candidates.append(truncate_service(service, area) if theta else service)
    for child in turnarounds.children:
        conflict[child.id] = detect_conflict(child, area)
    return CandidateTimetable(
        normal=tuple(services),
        candidates=tuple(candidates),
        conflict=conflict,
        turnarounds=turnarounds,
    )
