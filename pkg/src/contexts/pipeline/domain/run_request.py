from dataclasses import dataclass, field
from pathlib import Path

from src.core.exceptions.custom_exceptions import ScenarioParseException

STAGES = ("all", "reschedule", "map", "sodta", "baseline")
STAGE_PLAN = {
    "all": ("reschedule", "map", "sodta", "baseline"),
    "reschedule": ("reschedule",),
    "map": ("map",),
    "sodta": ("sodta",),
    "baseline": ("baseline",),
}


@dataclass(frozen=True)
class RunRequest:
    scenario_path: Path
    output_dir: Path
    stage: str = "all"
    seed: int | None = None
    threads: int | None = None
    eps: float | None = None
    export_mps: bool = False
    dump_indicators: bool = False
    baseline_routes: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def stages(self) -> tuple[str, ...]:
        return STAGE_PLAN[self.stage]


def parse_baseline_route(text: str) -> tuple[str, tuple[int, ...]]:
    """Reads `CLASS=c1,c2,...` into a class id and its cell sequence."""
    class_id, separator, cells = text.partition("=")
    if not separator or not class_id.strip() or not cells.strip():
        raise ScenarioParseException(f"expected CLASS=c1,c2,... got {text!r}", "--baseline-route")
    try:
        route = tuple(int(cell) for cell in cells.split(","))
    except ValueError as exc:
        raise ScenarioParseException(f"cell ids must be integers in {text!r}", "--baseline-route") from exc
    return class_id.strip(), route
