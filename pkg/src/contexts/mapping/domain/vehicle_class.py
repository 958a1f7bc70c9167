from dataclasses import dataclass

from src.contexts.traffic.domain.cell_network import CellNetwork
from src.core.exceptions.custom_exceptions import DemandMappingException


@dataclass(frozen=True)
class VehicleClass:
    """Response vehicles serving one mapped OD pair, injected at `source_cell`."""

    id: str
    origin: int
    destination: int
    source_cell: int
    sink_cell: int


def class_id(origin: int, destination: int) -> str:
    return f"{origin}-{destination}"


def parse_class_id(value: str) -> tuple[int, int]:
    origin, _, destination = value.partition("-")
    return int(origin), int(destination)


def build_classes(ods: list[tuple[int, int]], network: CellNetwork) -> tuple[VehicleClass, ...]:
    """One class per distinct OD pair, ordered by origin then destination."""
    classes = []
    for origin, destination in sorted(set(ods)):
        if origin == destination:
            raise DemandMappingException(
                f"[map] class {class_id(origin, destination)} has identical origin and destination"
            )
        source = network.source_cell(origin)
        sink = network.sink_cell(destination)
        if source is None or sink is None:
            missing = origin if source is None else destination
            raise DemandMappingException(
                f"[map] class {class_id(origin, destination)} has no road cell at station {missing}"
            )
        classes.append(VehicleClass(class_id(origin, destination), origin, destination, source, sink))
    return tuple(classes)
