from dataclasses import dataclass, field
from typing import Iterator


@dataclass(frozen=True)
class DemandMatrix:
    """
    Response vehicles dispatched per (period, source cell, class).

    Periods of `period_minutes` tile the demand window from `window_start`;
    period k is injected into the road network at step
    k * period_minutes * 60 / time step.
    """

    period_minutes: int
    vehicle_capacity: int
    window_start: int
    periods: int
    entries: dict[tuple[int, int, str], int] = field(default_factory=dict)

    def vehicles(self, period: int, cell: int, class_id: str) -> int:
        return self.entries.get((period, cell, class_id), 0)

    def total(self, class_id: str) -> int:
        return sum(n for (_, _, m), n in self.entries.items() if m == class_id)

    def total_vehicles(self) -> int:
        return sum(self.entries.values())

    def injection_step(self, period: int, step_seconds: int) -> int:
        return period * self.period_minutes * 60 // step_seconds

    def injections(self, step_seconds: int) -> dict[tuple[int, int, str], int]:
        """(step, source cell, class) -> vehicles entering at that step."""
        injected: dict[tuple[int, int, str], int] = {}
        for (period, cell, m), n in self.entries.items():
            key = (self.injection_step(period, step_seconds), cell, m)
            injected[key] = injected.get(key, 0) + n
        return injected

    def rows(self) -> Iterator[tuple[int, int, str, int]]:
        for (period, cell, m), n in sorted(self.entries.items()):
            if n:
                yield period, cell, m, n
