from dataclasses import dataclass

from src.contexts.scenario.domain.disruption_spec import DisruptionSpec
from src.contexts.scenario.domain.line_topology import POSITIVE, LineTopology
from src.core.exceptions.custom_exceptions import InvalidDisruptionException


@dataclass(frozen=True)
class DisruptionUnit:
    """One track section crossed with the disruption window."""

    from_station: int
    to_station: int
    tau_begin: int
    tau_end: int

    def overlaps(self, start: int, end: int) -> bool:
        """True when [start, end] shares an instant with the open window."""
        return max(start, self.tau_begin) < min(end, self.tau_end)


@dataclass(frozen=True)
class SpatioTemporalArea:
    s_begin: int
    s_end: int
    tau_begin: int
    tau_end: int
    first_station: int
    last_station: int
    units: tuple[DisruptionUnit, ...]

    @property
    def disrupted_stations(self) -> list[int]:
        return list(range(self.s_begin, self.s_end + 1))

    @property
    def closed_stations(self) -> list[int]:
        return list(range(self.s_begin + 1, self.s_end))

    @property
    def operational_positive_side(self) -> list[int]:
        return list(range(self.first_station, self.s_begin + 1))

    @property
    def operational_negative_side(self) -> list[int]:
        return list(range(self.s_end, self.last_station + 1))

    @property
    def operational_stations(self) -> list[int]:
        return self.operational_positive_side + self.operational_negative_side

    @property
    def terminal_stations(self) -> tuple[int, int]:
        return self.s_begin, self.s_end

    def is_closed(self, station: int) -> bool:
        return self.s_begin < station < self.s_end

    def is_operational(self, station: int) -> bool:
        return not self.is_closed(station)

    def in_window(self, time: int) -> bool:
        return self.tau_begin < time < self.tau_end

    def operational_side(self, direction: int) -> list[int]:
        """Stations a truncated service of `direction` keeps serving."""
        if direction == POSITIVE:
            return self.operational_positive_side
        return self.operational_negative_side

    def turn_station(self, direction: int) -> int:
        """Boundary station where a conflicting service of `direction` is truncated."""
        return self.s_begin if direction == POSITIVE else self.s_end

    def unit_for(self, a: int, b: int) -> DisruptionUnit | None:
        low, high = min(a, b), max(a, b)
        for unit in self.units:
            if unit.from_station == low and unit.to_station == high:
                return unit
        return None


def build_area(disruption: DisruptionSpec, line: LineTopology) -> SpatioTemporalArea:
    """Splits the disruption rectangle into one unit per disrupted section."""
    if not line.first_station <= disruption.s_begin < disruption.s_end <= line.last_station:
        raise InvalidDisruptionException(
            f"Disrupted stations [{disruption.s_begin}, {disruption.s_end}] "
            f"are not an ordered range on stations {line.first_station}..{line.last_station}"
        )
    if disruption.tau_begin >= disruption.tau_end:
        raise InvalidDisruptionException("Disruption window must have positive length")
    units = tuple(
        DisruptionUnit(r, r + 1, disruption.tau_begin, disruption.tau_end)
        for r in range(disruption.s_begin, disruption.s_end)
    )
    return SpatioTemporalArea(
        s_begin=disruption.s_begin,
        s_end=disruption.s_end,
        tau_begin=disruption.tau_begin,
        tau_end=disruption.tau_end,
        first_station=line.first_station,
        last_station=line.last_station,
        units=units,
    )
