from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from src.contexts.pipeline.domain.run_request import RunRequest
from src.core.solver.solver_config import SolverConfig

RUNNING = "running"
COMPLETED = "completed"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunManifest:
    """
    Metadata of one pipeline run. Written before the first solve and
    rewritten after every committed stage, so the checksums always match the
    artifacts present in the output directory.
    """

    scenario_path: str
    stage: str
    output_dir: str
    solver: dict[str, object]
    seed: int
    started_at: str
    finished_at: str | None = None
    status: str = RUNNING
    checksums: dict[str, str] = field(default_factory=dict)

    @classmethod
    def started(cls, request: RunRequest, solver: SolverConfig) -> "RunManifest":
        return cls(
            scenario_path=str(request.scenario_path),
            stage=request.stage,
            output_dir=str(request.output_dir),
            solver=asdict(solver),
            seed=solver.seed,
            started_at=_now(),
        )

    def record(self, checksums: dict[str, str]) -> None:
        self.checksums.update(checksums)
        self.checksums = dict(sorted(self.checksums.items()))

    def complete(self) -> None:
        self.status = COMPLETED
        self.finished_at = _now()

    def fail(self, stage: str) -> None:
        self.status = f"failed:{stage}"
        self.finished_at = _now()
