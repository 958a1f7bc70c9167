from dataclasses import dataclass

from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE


@dataclass(frozen=True)
class PassengerFlow:
    id: str
    origin: int
    destination: int
    production_time: int
    size: int
    direction: int

    @classmethod
    def between(cls, id: str, origin: int, destination: int, production_time: int, size: int):
        direction = POSITIVE if origin < destination else NEGATIVE
        return cls(id, origin, destination, production_time, size, direction)

    @property
    def is_positive(self) -> bool:
        return self.direction == POSITIVE
