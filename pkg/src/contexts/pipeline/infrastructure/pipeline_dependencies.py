from src.contexts.disruption.infrastructure.csv_indicator_writer import CsvIndicatorWriter
from src.contexts.mapping.infrastructure.csv_demand_repository import CsvDemandRepository
from src.contexts.pipeline.application.run_pipeline_use_case import RunPipelineUseCase
from src.contexts.pipeline.infrastructure.file_artifact_store import FileArtifactStore
from src.contexts.rescheduling.infrastructure.csv_stage1_artifacts import (
    CsvStage1ArtifactWriter,
    CsvTerminalAccumulationReader,
)
from src.contexts.rescheduling.infrastructure.mps_model_exporter import MpsModelExporter
from src.contexts.scenario.application.load_scenario_use_case import SaveScenarioUseCase
from src.contexts.scenario.application.validate_scenario_use_case import (
    ValidateScenarioUseCase,
)
from src.contexts.scenario.infrastructure.json_scenario_repository import (
    JsonScenarioRepository,
)
from src.contexts.traffic.infrastructure.csv_traffic_artifacts import CsvTrafficArtifactWriter
from src.core.solver.solver_factory import build_solver


def get_run_pipeline_use_case() -> RunPipelineUseCase:
    return RunPipelineUseCase(
        scenario_repository=JsonScenarioRepository(),
        solver_factory=build_solver,
        store_factory=FileArtifactStore,
        stage1_writer=CsvStage1ArtifactWriter(),
        terminal_reader=CsvTerminalAccumulationReader(),
        demand_repository=CsvDemandRepository(),
        traffic_writer=CsvTrafficArtifactWriter(),
        indicator_writer=CsvIndicatorWriter(),
        model_exporter=MpsModelExporter(),
    )


def get_validate_scenario_use_case() -> ValidateScenarioUseCase:
    return ValidateScenarioUseCase(JsonScenarioRepository())


def get_save_scenario_use_case() -> SaveScenarioUseCase:
    return SaveScenarioUseCase(JsonScenarioRepository())
