import hashlib
import logging
from pathlib import Path

from src.contexts.pipeline.application.artifact_store import ArtifactStore
from src.contexts.pipeline.domain.run_manifest import RunManifest
from src.contexts.pipeline.infrastructure.manifest_document import (
    ManifestDocument,
    manifest_document_to_domain,
    manifest_domain_to_document,
)
from src.core.exceptions.custom_exceptions import MissingArtifactException

logger = logging.getLogger(__name__)

PARTIAL_SUFFIX = ".partial"
MANIFEST = "manifest.json"


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for block in iter(lambda: handle.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


class FileArtifactStore(ArtifactStore):
    """Artifacts of one output directory; staged files carry a `.partial` suffix until committed."""

    def __init__(self, root: Path):
        self._root = Path(root)
        self._root.mkdir(parents=True, exist_ok=True)
        self._staged: list[str] = []

    def staging_path(self, name: str) -> Path:
        if name not in self._staged:
            self._staged.append(name)
        return self._root / f"{name}{PARTIAL_SUFFIX}"

    def write_text(self, name: str, text: str) -> None:
        self.staging_path(name).write_text(text, encoding="utf-8")

    def input_path(self, name: str) -> Path:
        path = self._root / name
        if not path.is_file():
            raise MissingArtifactException(str(path))
        return path

    def commit(self) -> dict[str, str]:
        checksums = {}
        for name in self._staged:
            target = self._root / name
            (self._root / f"{name}{PARTIAL_SUFFIX}").replace(target)
            checksums[name] = sha256_of(target)
        logger.info("Committed %s", ", ".join(self._staged) or "no artifacts")
        self._staged = []
        return checksums

    def write_manifest(self, manifest: RunManifest) -> None:
        document = manifest_domain_to_document(manifest)
        (self._root / MANIFEST).write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")

    def read_manifest(self) -> RunManifest:
        path = self.input_path(MANIFEST)
        return manifest_document_to_domain(
            ManifestDocument.model_validate_json(path.read_text(encoding="utf-8"))
        )
