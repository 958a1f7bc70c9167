from dataclasses import dataclass
from typing import Iterator

from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import POSITIVE
from src.contexts.scenario.domain.train_service import ServiceKind, TrainService


@dataclass(frozen=True)
class ServiceOutcome:
    """Final times of one normal or turnaround service; all -1 when not activated."""

    service: TrainService
    activated: bool
    conflict: int
    turn_station: int | None = None

    @property
    def id(self) -> str:
        return self.service.id

    @property
    def direction(self) -> int:
        return self.service.direction

    @property
    def is_turnaround(self) -> bool:
        return self.service.kind is ServiceKind.TURNAROUND

    @property
    def canceled(self) -> bool:
        return not self.is_turnaround and not self.activated

    @property
    def rescheduled(self) -> bool:
        """Conflicting normal service kept in truncated form."""
        return not self.is_turnaround and self.activated and bool(self.conflict)

    @property
    def turned_around(self) -> bool:
        return self.is_turnaround and self.activated


@dataclass(frozen=True)
class RescheduledTimetable:
    outcomes: tuple[ServiceOutcome, ...]
    area: SpatioTemporalArea
    stations: tuple[int, ...]

    def outcome(self, service_id: str) -> ServiceOutcome:
        for outcome in self.outcomes:
            if outcome.id == service_id:
                return outcome
        raise KeyError(service_id)

    def activated(self) -> list[ServiceOutcome]:
        return [o for o in self.outcomes if o.activated]

    def normal(self, direction: int | None = None) -> list[ServiceOutcome]:
        return [
            o
            for o in self.outcomes
            if not o.is_turnaround and (direction is None or o.direction == direction)
        ]

    def canceled(self, direction: int | None = None) -> list[ServiceOutcome]:
        return [o for o in self.normal(direction) if o.canceled]

    def rescheduled(self, direction: int | None = None) -> list[ServiceOutcome]:
        return [o for o in self.normal(direction) if o.rescheduled]

    def turned_around(self, direction: int | None = None) -> list[ServiceOutcome]:
        """Activated children, filtered by the direction of the parent that turned."""
        return [
            o
            for o in self.outcomes
            if o.turned_around and (direction is None or o.direction != direction)
        ]

    def recovery_time(self, direction: int) -> int | None:
        """
        Minutes after the disruption ends until the first unaffected service
        of `direction` departs the boundary station it enters the area from.
        """
        boundary = self.area.s_begin if direction == POSITIVE else self.area.s_end
        crossings = [
            o.service.departure_at(boundary)
            for o in self.normal(direction)
            if o.activated and not o.conflict
        ]
        crossings = [t for t in crossings if t != UNVISITED and t >= self.area.tau_end]
        if not crossings:
            return None
        return min(crossings) - self.area.tau_end

    def rows(self) -> Iterator[tuple]:
        """(service_id, direction, kind, activated, turn_station, station, arr, dep) per station."""
        for outcome in self.outcomes:
            turn = outcome.turn_station if outcome.turn_station is not None else UNVISITED
            for station in self.stations:
                arrival, departure = outcome.service.times_at(station)
                yield (
                    outcome.id,
                    outcome.direction,
                    outcome.service.kind.value,
                    int(outcome.activated),
                    turn,
                    station,
                    arrival,
                    departure,
                )
