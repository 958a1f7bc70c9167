import logging
from pathlib import Path

from src.contexts.disruption.domain.disruption_precomputation import (
    DisruptionPrecomputation,
)
from src.contexts.rescheduling.application.model_exporter import ModelExporter
from src.contexts.rescheduling.domain.stage1_builder import build_stage1
from src.contexts.rescheduling.domain.stage1_solution import Stage1Solution
from src.contexts.rescheduling.domain.stage1_solving import solve_stage1
from src.contexts.scenario.domain.scenario import Scenario
from src.core.solver.solver_port import MilpSolver

logger = logging.getLogger(__name__)


class RescheduleTrainsUseCase:
    def __init__(self, solver: MilpSolver, model_exporter: ModelExporter | None = None):
        self._solver = solver
        self._model_exporter = model_exporter

    def execute(
        self,
        scenario: Scenario,
        precomputation: DisruptionPrecomputation,
        export_path: Path | None = None,
    ) -> Stage1Solution:
        stage1 = build_stage1(scenario, precomputation)
        if export_path is not None and self._model_exporter is not None:
            written = self._model_exporter.export(stage1.model, export_path)
            logger.info("Stage-1 model exported to %s", written)
        return solve_stage1(stage1, self._solver)
