from dataclasses import dataclass, field

POSITIVE = 1
NEGATIVE = 0


@dataclass(frozen=True)
class LineTopology:
    stations: tuple[int, ...]
    turnback_capable: frozenset[int]
    section_runtimes: dict[tuple[int, int], int]
    dwell_times: dict[int, int]
    train_capacity: int = 1000
    names: dict[int, str] = field(default_factory=dict)

    @property
    def num_stations(self) -> int:
        return len(self.stations)

    @property
    def first_station(self) -> int:
        return self.stations[0]

    @property
    def last_station(self) -> int:
        return self.stations[-1]

    def runtime(self, from_station: int, to_station: int) -> int:
        return self.section_runtimes[(from_station, to_station)]

    def dwell(self, station: int) -> int:
        return self.dwell_times.get(station, 0)

    def terminal(self, direction: int) -> int:
        """Line terminal reached by a service travelling in `direction`."""
        return self.last_station if direction == POSITIVE else self.first_station

    def stations_towards(self, start: int, direction: int) -> list[int]:
        """Stations from `start` to the terminal of `direction`, in travel order."""
        if direction == POSITIVE:
            return list(range(start, self.last_station + 1))
        return list(range(start, self.first_station - 1, -1))

    def name(self, station: int) -> str:
        return self.names.get(station, f"S{station}")
