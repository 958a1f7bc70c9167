import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from src.contexts.disruption.application.indicator_writer import IndicatorWriter
from src.contexts.disruption.application.precompute_disruption_use_case import (
    PrecomputeDisruptionUseCase,
)
from src.contexts.mapping.application.demand_repository import DemandRepository
from src.contexts.mapping.application.map_demand_use_case import (
    LoadDemandUseCase,
    MapDemandUseCase,
)
from src.contexts.mapping.domain.demand_matrix import DemandMatrix
from src.contexts.mapping.domain.vehicle_class import VehicleClass
from src.contexts.pipeline.application.artifact_store import ArtifactStore
from src.contexts.pipeline.domain.pipeline_report import (
    baseline_report,
    pipeline_summary,
    stage2_summary,
)
from src.contexts.pipeline.domain.run_manifest import RunManifest
from src.contexts.pipeline.domain.run_request import RunRequest
from src.contexts.rescheduling.application.model_exporter import ModelExporter
from src.contexts.rescheduling.application.reschedule_trains_use_case import (
    RescheduleTrainsUseCase,
)
from src.contexts.rescheduling.application.stage1_artifacts import (
    Stage1ArtifactWriter,
    TerminalAccumulationReader,
)
from src.contexts.rescheduling.domain.accumulation_report import stage1_summary
from src.contexts.scenario.application.scenario_repository import ScenarioRepository
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.scenario_validation import validate_scenario
from src.contexts.traffic.application.build_road_network_use_case import (
    BuildRoadNetworkUseCase,
)
from src.contexts.traffic.application.dispatch_response_vehicles_use_case import (
    DispatchResponseVehiclesUseCase,
)
from src.contexts.traffic.application.evaluate_baseline_use_case import (
    EvaluateBaselineUseCase,
)
from src.contexts.traffic.application.traffic_artifacts import TrafficArtifactWriter
from src.contexts.traffic.domain.cell_network import CellNetwork
from src.contexts.traffic.domain.shortest_path_baseline import BaselineResult
from src.contexts.traffic.domain.sodta_solution import SodtaSolution
from src.core.exceptions.custom_exceptions import InvalidScenarioException
from src.core.solver.solver_config import SolverConfig
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)

TERMINAL_ACCUMULATION = "terminal_accumulation.csv"
DEMAND = "demand.csv"


@dataclass
class _RunState:
    """Results handed from one stage to the next inside a single run."""

    scenario: Scenario
    solver: MilpSolver
    store: ArtifactStore
    request: RunRequest
    stage1_text: str | None = None
    terminal: dict[tuple[str, int, int], int] | None = None
    network: CellNetwork | None = None
    classes: tuple[VehicleClass, ...] | None = None
    demand: DemandMatrix | None = None
    sodta: SodtaSolution | None = None
    baseline: BaselineResult | None = None


class RunPipelineUseCase:
    def __init__(
        self,
        scenario_repository: ScenarioRepository,
        solver_factory: Callable[[SolverConfig], MilpSolver],
        store_factory: Callable[[Path], ArtifactStore],
        stage1_writer: Stage1ArtifactWriter,
        terminal_reader: TerminalAccumulationReader,
        demand_repository: DemandRepository,
        traffic_writer: TrafficArtifactWriter,
        indicator_writer: IndicatorWriter,
        model_exporter: ModelExporter,
    ):
        self._scenario_repository = scenario_repository
        self._solver_factory = solver_factory
        self._store_factory = store_factory
        self._stage1_writer = stage1_writer
        self._terminal_reader = terminal_reader
        self._demand_repository = demand_repository
        self._traffic_writer = traffic_writer
        self._indicator_writer = indicator_writer
        self._model_exporter = model_exporter

    def execute(self, request: RunRequest) -> RunManifest:
        scenario = self._scenario_repository.load(request.scenario_path)
        report = validate_scenario(scenario)
        if not report.is_empty:
            raise InvalidScenarioException([entry.render() for entry in report.entries])
        config = scenario.solver.overridden(
            eps=request.eps, threads=request.threads, seed=request.seed
        )
        store = self._store_factory(request.output_dir)
        manifest = RunManifest.started(request, config)
        store.write_manifest(manifest)

        state = _RunState(scenario, self._solver_factory(config), store, request)
        stages = {
            "reschedule": self._reschedule,
            "map": self._map,
            "sodta": self._sodta,
            "baseline": self._baseline,
        }
        current = request.stages[0]
        try:
            for current in request.stages:
                logger.info("Stage %s started", current)
                stages[current](state)
                manifest.record(store.commit())
                store.write_manifest(manifest)
            if request.stage == "all":
                current = "summary"
                stage2 = stage2_summary(state.classes, state.demand, state.sodta, state.baseline)
                store.write_text("summary.txt", pipeline_summary(state.stage1_text, stage2))
                manifest.record(store.commit())
        except Exception:
            logger.error("Stage %s failed; staged artifacts are kept as .partial files", current)
            manifest.fail(current)
            store.write_manifest(manifest)
            raise
        manifest.complete()
        store.write_manifest(manifest)
        logger.info("Run finished: %d artifacts in %s", len(manifest.checksums), request.output_dir)
        return manifest

    def _reschedule(self, state: _RunState) -> None:
        scenario, store = state.scenario, state.store
        precomputation = PrecomputeDisruptionUseCase().execute(scenario)
        if state.request.dump_indicators:
            self._indicator_writer.write(
                precomputation.indicators, store.staging_path("indicators.csv")
            )
        export_path = store.staging_path("stage1.mps") if state.request.export_mps else None
        solution = RescheduleTrainsUseCase(state.solver, self._model_exporter).execute(
            scenario, precomputation, export_path
        )
        self._stage1_writer.write_timetable(solution.timetable, store.staging_path("timetable.csv"))
        self._stage1_writer.write_assignment(
            solution.assignment, store.staging_path("assignment.csv")
        )
        self._stage1_writer.write_accumulation(
            solution.accumulation, store.staging_path("accumulation.csv")
        )
        self._stage1_writer.write_terminal_accumulation(
            solution.accumulation, store.staging_path(TERMINAL_ACCUMULATION)
        )
        state.stage1_text = stage1_summary(solution, scenario.line)
        store.write_text("stage1_summary.txt", state.stage1_text)
        state.terminal = solution.accumulation.terminal

    def _road(self, state: _RunState) -> CellNetwork:
        if state.network is None:
            state.network = BuildRoadNetworkUseCase().execute(state.scenario)
        return state.network

    def _demand(self, state: _RunState) -> tuple[tuple[VehicleClass, ...], DemandMatrix]:
        if state.demand is None:
            state.classes, state.demand = LoadDemandUseCase(self._demand_repository).execute(
                state.scenario, self._road(state), state.store.input_path(DEMAND)
            )
        return state.classes, state.demand

    def _map(self, state: _RunState) -> None:
        if state.terminal is None:
            state.terminal = self._terminal_reader.read(
                state.store.input_path(TERMINAL_ACCUMULATION)
            )
        state.classes, state.demand = MapDemandUseCase().execute(
            state.scenario, state.terminal, self._road(state)
        )
        self._demand_repository.save(state.demand, state.store.staging_path(DEMAND))

    def _sodta(self, state: _RunState) -> None:
        classes, demand = self._demand(state)
        solution = DispatchResponseVehiclesUseCase(state.solver).execute(
            self._road(state), classes, demand
        )
        self._traffic_writer.write_curves(solution, state.store.staging_path("curves.csv"))
        self._traffic_writer.write_nct(solution, state.store.staging_path("nct.csv"))
        self._traffic_writer.write_cells(solution, state.store.staging_path("cells.csv"))
        state.sodta = solution

    def _baseline(self, state: _RunState) -> None:
        classes, demand = self._demand(state)
        routes = dict(state.scenario.road.baseline_routes)
        routes.update(state.request.baseline_routes)
        result = EvaluateBaselineUseCase().execute(
            self._road(state), classes, demand, routes or None
        )
        state.store.write_text("baseline.txt", baseline_report(result))
        state.baseline = result
