from dataclasses import dataclass, field
from typing import Iterator

import numpy as np


def forward_fill(times: list[int], event_times: list[int], event_values: list[int]) -> tuple[int, ...]:
    """Step function through (event_time, value) points, 0 before the first event."""
    if not event_times:
        return tuple(0 for _ in times)
    index = np.searchsorted(np.asarray(event_times), np.asarray(times), side="right") - 1
    values = np.asarray(event_values)
    filled = np.where(index >= 0, values[np.clip(index, 0, None)], 0)
    return tuple(int(v) for v in filled)


@dataclass(frozen=True)
class AccumulationSeries:
    """
    Per-minute station totals over the horizon.

    `arrivals` and `departures` are cumulative counts of passengers who
    reached and left each station; their difference is the accumulation.
    `terminal` holds the instantaneous terminal accumulation per flow,
    keyed (flow, station, minute), nonzero entries only.
    """

    stations: tuple[int, ...]
    times: tuple[int, ...]
    arrivals: dict[int, tuple[int, ...]]
    departures: dict[int, tuple[int, ...]]
    terminal: dict[tuple[str, int, int], int] = field(default_factory=dict)
    average_waiting: dict[int, float] = field(default_factory=dict)

    def accumulation(self, station: int) -> tuple[int, ...]:
        return tuple(a - d for a, d in zip(self.arrivals[station], self.departures[station]))

    def instantaneous(self, station: int) -> tuple[int, ...]:
        per_minute = {}
        for (_, r, t), value in self.terminal.items():
            if r == station:
                per_minute[t] = per_minute.get(t, 0) + value
        return tuple(per_minute.get(t, 0) for t in self.times)

    def arrival_count(self, station: int) -> int:
        return self.arrivals[station][-1] if self.times else 0

    def terminal_rate(self, start: int, end: int) -> float:
        """Terminal accumulation per minute over [start, end]."""
        if end <= start:
            return 0.0
        total = sum(v for (_, _, t), v in self.terminal.items() if start <= t <= end)
        return total / (end - start)

    def rows(self) -> Iterator[tuple[int, int, int, int, int, int]]:
        for station in self.stations:
            accumulation = self.accumulation(station)
            instantaneous = self.instantaneous(station)
            for index, t in enumerate(self.times):
                yield (
                    station,
                    t,
                    self.arrivals[station][index],
                    self.departures[station][index],
                    accumulation[index],
                    instantaneous[index],
                )

    def terminal_rows(self) -> Iterator[tuple[str, int, int, int]]:
        for (p, r, t), value in sorted(self.terminal.items()):
            yield p, r, t, value
