import hashlib
from pathlib import Path

import pytest

from src.contexts.pipeline.domain.run_manifest import RunManifest
from src.contexts.pipeline.domain.run_request import RunRequest
from src.contexts.pipeline.infrastructure.file_artifact_store import FileArtifactStore
from src.core.exceptions.custom_exceptions import MissingArtifactException
from src.core.solver.solver_config import SolverConfig


def test_staged_files_appear_only_after_commit(tmp_path):
    """
    Test the .partial staging and the checksums returned on commit.
    """
    # Arrange
    store = FileArtifactStore(tmp_path / "run")

    # Act
    store.write_text("baseline.txt", "routes\n")
    staged = sorted(p.name for p in (tmp_path / "run").iterdir())
    checksums = store.commit()

    # Assert
    assert staged == ["baseline.txt.partial"]
    assert (tmp_path / "run" / "baseline.txt").read_text() == "routes\n"
    assert checksums == {"baseline.txt": hashlib.sha256(b"routes\n").hexdigest()}
    assert store.commit() == {}


def test_input_path_requires_a_committed_file(tmp_path):
    """
    Test that inputs are the committed files, never the staged ones.
    """
    # Arrange
    store = FileArtifactStore(tmp_path)
    store.write_text("demand.csv", "period,source_cell,class,vehicles\n")

    # Act & Assert
    with pytest.raises(MissingArtifactException):
        store.input_path("demand.csv")
    store.commit()
    assert store.input_path("demand.csv") == tmp_path / "demand.csv"


def test_manifest_is_read_back(tmp_path):
    """
    Test that the stored manifest document maps back to the same manifest.
    """
    # Arrange
    store = FileArtifactStore(tmp_path)
    manifest = RunManifest.started(RunRequest(Path("s.json"), tmp_path), SolverConfig())
    manifest.record({"nct.csv": "abc"})
    manifest.complete()

    # Act
    store.write_manifest(manifest)
    loaded = store.read_manifest()

    # Assert
    assert loaded == manifest
