from pydantic import BaseModel

from src.contexts.pipeline.domain.run_manifest import RunManifest


class ManifestDocument(BaseModel):
    scenario_path: str
    stage: str
    output_dir: str
    solver: dict[str, object]
    seed: int
    started_at: str
    finished_at: str | None = None
    status: str
    checksums: dict[str, str] = {}


def manifest_domain_to_document(manifest: RunManifest) -> ManifestDocument:
    return ManifestDocument(
        scenario_path=manifest.scenario_path,
        stage=manifest.stage,
        output_dir=manifest.output_dir,
        solver=manifest.solver,
        seed=manifest.seed,
        started_at=manifest.started_at,
        finished_at=manifest.finished_at,
        status=manifest.status,
        checksums=manifest.checksums,
    )


def manifest_document_to_domain(document: ManifestDocument) -> RunManifest:
    return RunManifest(
        scenario_path=document.scenario_path,
        stage=document.stage,
        output_dir=document.output_dir,
        solver=document.solver,
        seed=document.seed,
        started_at=document.started_at,
        finished_at=document.finished_at,
        status=document.status,
        checksums=document.checksums,
    )
