from abc import ABC, abstractmethod
from pathlib import Path

from src.contexts.pipeline.domain.run_manifest import RunManifest


class ArtifactStore(ABC):
    """
    Port for run artifact operations.
    Defines the contract that architecture adapters must implement.
    """

    @abstractmethod
    def staging_path(self, name: str) -> Path:
        raise NotImplementedError

    @abstractmethod
    def write_text(self, name: str, text: str) -> None:
        raise NotImplementedError

    @abstractmethod
    def input_path(self, name: str) -> Path:
        raise NotImplementedError

    @abstractmethod
    def commit(self) -> dict[str, str]:
        raise NotImplementedError

    @abstractmethod
    def write_manifest(self, manifest: RunManifest) -> None:
        raise NotImplementedError
