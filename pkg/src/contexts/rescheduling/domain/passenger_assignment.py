from dataclasses import dataclass
from typing import Iterator

STRANDED = "-"


@dataclass(frozen=True)
class PassengerAssignment:
    boarded: dict[tuple[str, str], int]
    stranded: dict[str, int]

    def passengers(self, flow_id: str, service_id: str) -> int:
        return self.boarded.get((flow_id, service_id), 0)

    def total(self, flow_id: str) -> int:
        on_trains = sum(n for (p, _), n in self.boarded.items() if p == flow_id)
        return on_trains + self.stranded.get(flow_id, 0)

    def total_stranded(self) -> int:
        return sum(self.stranded.values())

    def rows(self) -> Iterator[tuple[str, str, int]]:
        """Nonzero boardings, then one stranded row per flow."""
        for (p, u), n in sorted(self.boarded.items()):
            if n:
                yield p, u, n
        for p, n in sorted(self.stranded.items()):
            yield p, STRANDED, n
