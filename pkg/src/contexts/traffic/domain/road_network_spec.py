from dataclasses import dataclass, field


@dataclass(frozen=True)
class RoadSegment:
    id: str
    from_node: str
    to_node: str
    length_m: float
    lanes: int = 1


@dataclass(frozen=True)
class SignalSpec:
    """Fixed-time plan of one signalised cell, all values in time steps."""

    cell: int
    cycle: int
    green: int
    offset: int


@dataclass(frozen=True)
class ResponseVehicleSpec:
    capacity: int = 40
    dispatch_period_minutes: int = 5
    length_m: float = 12.0
    free_flow_speed: float = 20.0
    wave_speed: float = 10.0
    max_flow_per_lane_vph: float = 1992.0


@dataclass(frozen=True)
class RoadNetworkSpec:
    nodes: tuple[str, ...]
    segments: tuple[RoadSegment, ...]
    station_nodes: dict[int, str]
    signals: tuple[SignalSpec, ...] = ()
    time_step_seconds: int = 20
    horizon_steps: int = 360
    holding_weights: tuple[float, ...] | None = None
    shared_capacity: bool = False
    demand_window: str = "disruption"
    baseline_routes: dict[str, tuple[int, ...]] = field(default_factory=dict)
