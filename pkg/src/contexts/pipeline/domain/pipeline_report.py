from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.traffic.domain.shortest_path_baseline import BaselineResult
from src.contexts.traffic.domain.sodta_solution import SodtaSolution


def _minutes(value: float | None) -> str:
    return "none" if value is None else f"{value:.2f} min"


def travel_time_gain(optimal: float, baseline: float) -> float | None:
    """Percentage by which the optimal travel time undercuts the baseline."""
    if baseline <= 0:
        return None
    return 100.0 * (baseline - optimal) / baseline


def baseline_report(result: BaselineResult) -> str:
    lines = [
        "Fixed-route baseline",
        f"total travel time: {result.travel_time_minutes():.1f} vehicle-minutes",
        f"all vehicles arrived: {'yes' if result.completed else 'no'}",
    ]
    for class_id, route in result.routes.items():
        lines.append(f"route {class_id}: {' '.join(str(cell) for cell in route)}")
    return "\n".join(lines) + "\n"


def stage2_summary(
    classes: tuple[VehicleClass, ...],
    demand: DemandMatrix,
    solution: SodtaSolution,
    baseline: BaselineResult,
) -> str:
    optimal = solution.travel_time_minutes()
    fixed = baseline.travel_time_minutes()
    gain = travel_time_gain(optimal, fixed)
    lines = [
        "Stage 2: response vehicle dispatch",
        f"vehicle classes: {len(classes)}",
        f"demand matrix: {demand.total_vehicles()} vehicles in {len(demand.entries)} entries",
        f"system-optimal total travel time: {optimal:.1f} vehicle-minutes",
        f"fixed-route total travel time: {fixed:.1f} vehicle-minutes",
        "travel time saved over fixed routes: " + ("n/a" if gain is None else f"{gain:.1f}%"),
        f"max network clearance time: {_minutes(solution.max_nct_minutes())}",
    ]
    for vehicle_class in classes:
        lines.append(
            f"  {vehicle_class.id}: {solution.fleet.get(vehicle_class.id, 0)} vehicles, "
            f"clearance {_minutes(solution.nct_minutes(vehicle_class.id))}"
        )
    return "\n".join(lines) + "\n"


def pipeline_summary(stage1_text: str, stage2_text: str) -> str:
    return stage1_text + "\n" + stage2_text
