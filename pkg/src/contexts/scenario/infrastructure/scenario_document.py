from typing import Annotated, Literal

from pydantic import AfterValidator, BaseModel, ConfigDict, Field

from src.contexts.scenario.domain.clock import parse_clock


def _check_clock(value: str) -> str:
    parse_clock(value)
    return value


def _check_stop_time(value: str | int | None) -> str | int | None:
    if value is None or value == -1:
        return value
    if isinstance(value, int):
        raise ValueError("stop times are 'HH:MM' strings or -1")
    return _check_clock(value)


ClockTime = Annotated[str, AfterValidator(_check_clock)]
StopTime = Annotated[str | int | None, AfterValidator(_check_stop_time)]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class SectionRuntimeDocument(_Document):
    from_station: int = Field(alias="from")
    to_station: int = Field(alias="to")
    minutes: int


class LineDocument(_Document):
    stations: list[int]
    names: dict[str, str] = {}
    turnback_capable: list[int] = []
    section_runtimes: list[SectionRuntimeDocument]
    dwell_times: dict[str, int] = {}
    train_capacity: int = 1000


class ServiceDocument(_Document):
    id: str
    direction: Literal[0, 1]
    origin_station: int
    capacity: int | None = None
    arrival: dict[str, StopTime]
    departure: dict[str, StopTime]


class FlowDocument(_Document):
    id: str
    origin: int
    destination: int
    production_time: ClockTime
    size: int
    direction: Literal[0, 1] | None = None


class DisruptionDocument(_Document):
    s_begin: int
    s_end: int
    tau_begin: ClockTime
    tau_end: ClockTime
    turnback_minutes: int = 3


class HorizonDocument(_Document):
    start: ClockTime
    end: ClockTime


class HeadwaysDocument(_Document):
    AA: int = 1
    AD: int = 1
    DA: int = 1
    DD: int = 1


class SegmentDocument(_Document):
    id: str
    from_node: str = Field(alias="from")
    to_node: str = Field(alias="to")
    length_m: float
    lanes: int = 1


class SignalDocument(_Document):
    cell: int
    cycle: int
    green: int
    offset: int


class RoadDocument(_Document):
    nodes: list[str]
    segments: list[SegmentDocument]
    stations: dict[str, str]
    signals: list[SignalDocument] = []
    time_step_seconds: int = 20
    horizon_steps: int = 360
    holding_weights: list[float] | None = None
    shared_capacity: bool = False
    demand_window: Literal["disruption", "horizon"] = "disruption"
    baseline_routes: dict[str, list[int]] = {}


class VehicleDocument(_Document):
    capacity: int = 40
    dispatch_period_minutes: int = 5
    length_m: float = 12.0
    free_flow_speed: float = 20.0
    wave_speed: float = 10.0
    max_flow_per_lane_vph: float = 1992.0


class SolverDocument(_Document):
    eps: float | None = None
    eps_int: float | None = None
    node_limit: int | None = None
    iter_limit: int | None = None
    threads: int | None = None
    seed: int | None = None
    backend: Literal["embedded", "highs"] | None = None
    time_limit: float | None = None
    objective_big_m: float | None = None
    weight_wait_by_size: bool = False
    accumulation_form: Literal["accumulated", "recursive"] = "accumulated"
    max_candidate_trains: int | None = None


class ScenarioDocument(_Document):
    line: LineDocument
    services: list[ServiceDocument]
    flows: list[FlowDocument]
    disruption: DisruptionDocument
    horizon: HorizonDocument
    headways: HeadwaysDocument = HeadwaysDocument()
    road: RoadDocument | None = None
    vehicle: VehicleDocument = VehicleDocument()
    solver: SolverDocument = SolverDocument()
