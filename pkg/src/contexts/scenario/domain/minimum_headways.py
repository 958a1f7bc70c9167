from dataclasses import dataclass


@dataclass(frozen=True)
class MinimumHeadways:
    """Minimum separations in minutes between two trains' events at a station."""

    arrival_arrival: int = 1
    arrival_departure: int = 1
    departure_arrival: int = 1
    departure_departure: int = 1
