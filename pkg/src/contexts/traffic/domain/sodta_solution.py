from dataclasses import dataclass, field
from typing import Iterator

ARRIVAL_TOLERANCE = 1e-6


def clean(value: float) -> float:
    """Rounded to 6 decimals with negative zero folded to zero."""
    return round(value, 6) + 0.0


@dataclass(frozen=True)
class SodtaSolution:
    """
    Optimal response-vehicle assignment: per-class occupancies, flows and
    cumulative arrivals at the class sink, one entry per time step.
    """

    total_travel_time: float
    time_step_seconds: int
    occupancy: dict[tuple[int, int, str], float]
    flows: dict[tuple[int, int, int, str], float]
    curves: dict[str, tuple[float, ...]]
    fleet: dict[str, int]
    nct_steps: dict[str, int | None] = field(default_factory=dict)
    residual: float = 0.0

    def nct_minutes(self, class_id: str) -> float | None:
        steps = self.nct_steps.get(class_id)
        return None if steps is None else steps * self.time_step_seconds / 60

    def max_nct_minutes(self) -> float | None:
        values = [self.nct_minutes(m) for m in self.curves]
        values = [v for v in values if v is not None]
        return max(values, default=None)

    def travel_time_minutes(self) -> float:
        return self.total_travel_time * self.time_step_seconds / 60

    def curve_rows(self) -> Iterator[tuple[str, int, float]]:
        for m, curve in self.curves.items():
            for t, value in enumerate(curve):
                yield m, t, clean(value)

    def nct_rows(self) -> Iterator[tuple[str, int, str]]:
        for m in self.curves:
            minutes = self.nct_minutes(m)
            yield m, self.fleet.get(m, 0), "-" if minutes is None else f"{minutes:.2f}"

    def cell_rows(self) -> Iterator[tuple[int, int, str, float]]:
        """Nonzero occupancies ordered by step, cell and class."""
        for (i, t, m), value in sorted(self.occupancy.items(), key=lambda kv: (kv[0][1], kv[0][0], kv[0][2])):
            if abs(value) > ARRIVAL_TOLERANCE:
                yield t, i, m, clean(value)


def completion_step(curve: tuple[float, ...], total: int) -> int | None:
    """First step at which the cumulative arrivals reach `total`."""
    if total == 0:
        return 0
    for step, value in enumerate(curve):
        if value >= total - ARRIVAL_TOLERANCE:
            return step
    return None
