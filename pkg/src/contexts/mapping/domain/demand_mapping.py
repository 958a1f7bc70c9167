import logging
import math

from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.task_mapping import task_map
from src.contexts.mapping.domain.vehicle_class import VehicleClass, class_id
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.core.exceptions.custom_exceptions import DemandMappingException

logger = logging.getLogger(__name__)


def mapped_ods(
    terminal: dict[tuple[str, int, int], int],
    flows: dict[str, PassengerFlow],
    area: SpatioTemporalArea,
) -> list[tuple[int, int]]:
    """Mapped OD pairs of every flow with terminal accumulation."""
    return sorted({task_map(flows[p], area) for (p, _, _), value in terminal.items() if value})


def demand_map(
    terminal: dict[tuple[str, int, int], int],
    flows: dict[str, PassengerFlow],
    area: SpatioTemporalArea,
    classes: tuple[VehicleClass, ...],
    vehicle_capacity: int,
    period_minutes: int,
    window: tuple[int, int],
) -> DemandMatrix:
    """
    Rounds up the passengers matched to each class, per source cell and
    dispatch period, into whole response vehicles.
    """
    if vehicle_capacity < 1 or period_minutes < 1:
        raise DemandMappingException("[map] vehicle capacity and dispatch period must be positive")
    start, end = window
    periods = max(math.ceil((end - start) / period_minutes), 1)
    by_od = {(c.origin, c.destination): c for c in classes}
    passengers: dict[tuple[int, int, str], int] = {}
    outside = 0
    for (p, station, t), value in sorted(terminal.items()):
        if not value:
            continue
        origin, destination = task_map(flows[p], area)
        vehicle_class = by_od.get((origin, destination))
        if vehicle_class is None:
            raise DemandMappingException(
                f"[map] flow {p} maps to {class_id(origin, destination)}, which has no class"
            )
        if not start <= t < end:
            outside += value
            continue
        key = ((t - start) // period_minutes, vehicle_class.source_cell, vehicle_class.id)
        passengers[key] = passengers.get(key, 0) + value
    if outside:
        logger.info("%d accumulated passengers fall outside the demand window", outside)

    entries = {key: math.ceil(n / vehicle_capacity) for key, n in passengers.items()}
    matrix = DemandMatrix(period_minutes, vehicle_capacity, start, periods, entries)
    logger.info(
        "Demand matrix: %d classes, %d periods, %d vehicles",
        len(classes),
        periods,
        matrix.total_vehicles(),
    )
    return matrix


def demand_window(
    area: SpatioTemporalArea, horizon: tuple[int, int], window: str = "disruption"
) -> tuple[int, int]:
    """Minutes tiled by dispatch periods: the disruption window or the whole horizon."""
    if window == "horizon":
        return horizon
    return area.tau_begin, area.tau_end
