from dataclasses import dataclass
from enum import Enum

from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import POSITIVE


class ServiceKind(Enum):
    NORMAL = "normal"
    TURNAROUND = "turnaround"


@dataclass(frozen=True)
class TrainService:
    id: str
    direction: int
    origin_station: int
    arrival: dict[int, int]
    departure: dict[int, int]
    capacity: int = 1000
    kind: ServiceKind = ServiceKind.NORMAL
    parent_id: str | None = None
    turn_station: int | None = None

    @property
    def is_positive(self) -> bool:
        return self.direction == POSITIVE

    def arrival_at(self, station: int) -> int:
        return self.arrival.get(station, UNVISITED)

    def departure_at(self, station: int) -> int:
        return self.departure.get(station, UNVISITED)

    def visits(self, station: int) -> bool:
        return self.arrival_at(station) != UNVISITED or self.departure_at(station) != UNVISITED

    def visited_stations(self) -> list[int]:
        """Visited stations in travel order."""
        stations = sorted(r for r in set(self.arrival) | set(self.departure) if self.visits(r))
        return stations if self.is_positive else stations[::-1]

    def times_at(self, station: int) -> tuple[int, int]:
        return self.arrival_at(station), self.departure_at(station)

    def origin_time(self) -> int:
        """First event at the origin station (arrival, else departure)."""
        arrival = self.arrival_at(self.origin_station)
        return arrival if arrival != UNVISITED else self.departure_at(self.origin_station)
