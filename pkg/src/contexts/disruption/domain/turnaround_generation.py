import logging
from dataclasses import dataclass, field

from src.contexts.disruption.domain.conflict_detection import detect_conflict
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import LineTopology
from src.contexts.scenario.domain.train_service import ServiceKind, TrainService
from src.core.exceptions.custom_exceptions import TurnaroundGenerationException

logger = logging.getLogger(__name__)

TURNAROUND_SUFFIX = "~T"


@dataclass(frozen=True)
class TurnaroundSet:
    children: tuple[TrainService, ...] = ()
    links: dict[tuple[str, str, int], int] = field(default_factory=dict)

    def child_of(self, parent_id: str) -> TrainService | None:
        for child in self.children:
            if child.parent_id == parent_id:
                return child
        return None


def turnaround_service(
    parent: TrainService, station: int, line: LineTopology, turnback_minutes: int
) -> TrainService:
    """
    Builds the reverse-direction run that leaves `station` `turnback_minutes`
    after the parent arrives there and runs to the line terminal.
    """
    direction = 1 - parent.direction
    arrival = {r: UNVISITED for r in line.stations}
    departure = dict(arrival)
    route = line.stations_towards(station, direction)
    time = parent.arrival_at(station) + turnback_minutes
    arrival[station] = departure[station] = time
    for previous, current in zip(route, route[1:]):
        time += line.runtime(previous, current)
        arrival[current] = time
        if current != route[-1]:
            time += line.dwell(current)
        departure[current] = time
    return TrainService(
        id=parent.id + TURNAROUND_SUFFIX,
        direction=direction,
        origin_station=station,
        arrival=arrival,
        departure=departure,
        capacity=parent.capacity,
        kind=ServiceKind.TURNAROUND,
        parent_id=parent.id,
        turn_station=station,
    )


def generate_turnarounds(
    services: tuple[TrainService, ...] | list[TrainService],
    area: SpatioTemporalArea,
    line: LineTopology,
    turnback_minutes: int,
) -> TurnaroundSet:
    """One candidate child per conflicting service that reaches its turn station."""
    children = []
    links = {}
    for service in services:
        if not detect_conflict(service, area):
            continue
        station = area.turn_station(service.direction)
        if service.arrival_at(station) == UNVISITED:
            logger.debug("Service %s never reaches turn station %d", service.id, station)
            continue
        if station not in line.turnback_capable:
            raise TurnaroundGenerationException(station)
        child = turnaround_service(service, station, line, turnback_minutes)
        children.append(child)
        links[(service.id, child.id, station)] = 1
    return TurnaroundSet(tuple(children), links)
