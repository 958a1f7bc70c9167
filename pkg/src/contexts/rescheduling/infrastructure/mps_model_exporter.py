from pathlib import Path

from src.contexts.rescheduling.application.model_exporter import ModelExporter
from src.core.solver.linear_model import LinearModel
from src.core.solver.mps import export_mps


class MpsModelExporter(ModelExporter):
    def export(self, model: LinearModel, path: Path) -> Path:
        return export_mps(model, path)
