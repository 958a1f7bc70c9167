from dataclasses import dataclass, field
from typing import Iterator

NO_VALUE = "-"


@dataclass(frozen=True)
class IndicatorSet:
    """
    Every parameter the stage-1 model reads, keyed sparsely.

    Instantaneous indicators store their single nonzero points. Accumulated
    indicators are step functions in time and store the minute from which
    they equal 1 ("onsets"); `to_rows` expands them over the horizon.
    """

    horizon_start: int
    horizon_end: int
    flow_ids: tuple[str, ...]
    service_ids: tuple[str, ...]
    conflict: dict[str, int]
    links: dict[tuple[str, str, int], int]
    headway: dict[tuple[str, str, int], int] = field(default_factory=dict)
    onboard: dict[tuple[str, str, int], int] = field(default_factory=dict)
    arrival_instant: dict[tuple[str, int, int], int] = field(default_factory=dict)
    transfer_instant: dict[tuple[str, str, int, int], int] = field(default_factory=dict)
    arrival_onset: dict[tuple[str, int], int] = field(default_factory=dict)
    transfer_onset: dict[tuple[str, str, int], int] = field(default_factory=dict)
    departure_onset: dict[tuple[str, str, int], int] = field(default_factory=dict)
    waiting: dict[tuple[str, str], int] = field(default_factory=dict)
    waiting_gate: dict[tuple[str, str], int] = field(default_factory=dict)
    direction_gate: dict[tuple[str, str], int] = field(default_factory=dict)
    departure_gate: dict[tuple[str, str], int] = field(default_factory=dict)

    def arrival_accumulated(self, flow_id: str, station: int, time: int) -> int:
        onset = self.arrival_onset.get((flow_id, station))
        return int(onset is not None and time >= onset)

    def transfer_accumulated(self, flow_id: str, service_id: str, station: int, time: int) -> int:
        onset = self.transfer_onset.get((flow_id, service_id, station))
        return int(onset is not None and time >= onset)

    def departure_accumulated(self, service_id: str, flow_id: str, station: int, time: int) -> int:
        onset = self.departure_onset.get((service_id, flow_id, station))
        return int(onset is not None and time >= onset)

    def is_boardable(self, flow_id: str, service_id: str) -> bool:
        key = (service_id, flow_id)
        return bool(
            self.direction_gate.get(key)
            and self.waiting_gate.get(key)
            and self.departure_gate.get(key)
        )

    def boardable_pairs(self) -> list[tuple[str, str]]:
        """(flow, service) pairs passing every static assignment gate, flow-major."""
        return [
            (p, u)
            for p in self.flow_ids
            for u in self.service_ids
            if self.is_boardable(p, u)
        ]

    def max_waiting(self) -> int:
        return max(
            (self.waiting[pair] for pair in self.boardable_pairs()),
            default=0,
        )

    def onboard_stations(self, flow_id: str, service_id: str) -> list[int]:
        return sorted(
            r for (p, u, r) in self.onboard if p == flow_id and u == service_id
        )

    def to_rows(self) -> Iterator[tuple]:
        """Expands every indicator into (p, u, r, t, kind, value) rows."""
        for u, value in sorted(self.conflict.items()):
            yield NO_VALUE, u, NO_VALUE, NO_VALUE, "conflict", value
        for (u, v, r), value in sorted(self.links.items()):
            yield NO_VALUE, f"{u}|{v}", r, NO_VALUE, "turnaround", value
        for (u, v, r), value in sorted(self.headway.items()):
            yield NO_VALUE, f"{u}|{v}", r, NO_VALUE, "headway", value
        for (p, u, r), value in sorted(self.onboard.items()):
            yield p, u, r, NO_VALUE, "onboard", value
        for (p, r, t), value in sorted(self.arrival_instant.items()):
            yield p, NO_VALUE, r, t, "arrival", value
        for (p, u, r, t), value in sorted(self.transfer_instant.items()):
            yield p, u, r, t, "transfer", value
        for (p, r), onset in sorted(self.arrival_onset.items()):
            for t in range(onset, self.horizon_end + 1):
                yield p, NO_VALUE, r, t, "arrival_acc", 1
        for (p, u, r), onset in sorted(self.transfer_onset.items()):
            for t in range(onset, self.horizon_end + 1):
                yield p, u, r, t, "transfer_acc", 1
        for (u, p, r), onset in sorted(self.departure_onset.items()):
            for t in range(onset, self.horizon_end + 1):
                yield p, u, r, t, "departure_acc", 1
        for (p, u), value in sorted(self.waiting.items()):
            yield p, u, NO_VALUE, NO_VALUE, "wait", value
        for (u, p), value in sorted(self.waiting_gate.items()):
            yield p, u, NO_VALUE, NO_VALUE, "wait_gate", value
        for (u, p), value in sorted(self.direction_gate.items()):
            yield p, u, NO_VALUE, NO_VALUE, "direction_gate", value
        for (u, p), value in sorted(self.departure_gate.items()):
            yield p, u, NO_VALUE, NO_VALUE, "departure_gate", value
