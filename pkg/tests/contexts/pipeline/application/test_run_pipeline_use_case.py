import json

import pytest

from src.contexts.pipeline.domain.run_request import RunRequest
from src.contexts.pipeline.infrastructure.file_artifact_store import MANIFEST, sha256_of
from src.contexts.pipeline.infrastructure.pipeline_dependencies import (
    get_run_pipeline_use_case,
)
from src.contexts.traffic.infrastructure.csv_traffic_artifacts import (
    CsvTrafficArtifactWriter,
)
from src.core.exceptions.custom_exceptions import (
    InvalidScenarioException,
    MissingArtifactException,
)
from tests.factories import fixture_path

FULL_RUN_ARTIFACTS = {
    "timetable.csv",
    "assignment.csv",
    "accumulation.csv",
    "terminal_accumulation.csv",
    "stage1_summary.txt",
    "demand.csv",
    "curves.csv",
    "nct.csv",
    "cells.csv",
    "baseline.txt",
    "summary.txt",
}


class FailingNctWriter(CsvTrafficArtifactWriter):
    def write_nct(self, solution, path):
        raise OSError("disk full")


def run(scenario, out, stage="all", **options):
    request = RunRequest(scenario_path=fixture_path(scenario), output_dir=out, stage=stage, **options)
    return get_run_pipeline_use_case().execute(request)


def test_full_run_writes_every_artifact(tmp_path):
    """
    Test the artifacts, checksums and summary of a full run on the toy scenario.
    """
    # Act
    manifest = run("toy_scenario.json", tmp_path)

    # Assert
    assert manifest.status == "completed"
    assert set(manifest.checksums) == FULL_RUN_ARTIFACTS
    for name, checksum in manifest.checksums.items():
        assert sha256_of(tmp_path / name) == checksum
    assert not list(tmp_path.glob("*.partial"))
    summary = (tmp_path / "summary.txt").read_text()
    assert "Stage 1: train rescheduling" in summary
    assert "Stage 2: response vehicle dispatch" in summary
    assert "vehicle classes: 2" in summary
    assert "demand matrix: 5 vehicles" in summary
    stored = json.loads((tmp_path / MANIFEST).read_text())
    assert stored["status"] == "completed"
    assert stored["seed"] == 7


def test_repeated_runs_are_byte_identical(tmp_path):
    """
    Test that two runs with the same seed produce the same artifacts.
    """
    # Act
    run("toy_scenario.json", tmp_path / "first")
    run("toy_scenario.json", tmp_path / "second")

    # Assert
    for name in sorted(FULL_RUN_ARTIFACTS):
        first = (tmp_path / "first" / name).read_bytes()
        second = (tmp_path / "second" / name).read_bytes()
        assert first == second, name


def test_stages_run_one_at_a_time_match_the_full_run(tmp_path):
    """
    Test that each stage picks up the previous stage's files from the output directory.
    """
    # Arrange
    run("toy_scenario.json", tmp_path / "full")
    staged = tmp_path / "staged"

    # Act
    for stage in ("reschedule", "map", "sodta", "baseline"):
        manifest = run("toy_scenario.json", staged, stage=stage)
        assert manifest.status == "completed"

    # Assert
    for name in ("terminal_accumulation.csv", "demand.csv", "curves.csv", "nct.csv", "baseline.txt"):
        assert (staged / name).read_bytes() == (tmp_path / "full" / name).read_bytes(), name
    assert not (staged / "summary.txt").exists()


def test_options_add_indicators_and_model_export(tmp_path):
    """
    Test the optional indicator dump and model export of the rescheduling stage.
    """
    # Act
    manifest = run(
        "toy_scenario.json", tmp_path, stage="reschedule", export_mps=True, dump_indicators=True
    )

    # Assert
    assert {"indicators.csv", "stage1.mps"} <= set(manifest.checksums)
    assert (tmp_path / "stage1.mps").stat().st_size > 0


def test_run_without_disruption_dispatches_nothing(tmp_path):
    """
    Test that a disruption touching no train yields an empty dispatch.
    """
    # Act
    run("no_disruption.json", tmp_path)

    # Assert
    summary = (tmp_path / "summary.txt").read_text()
    assert "services affected: 0 of 5 (0.0%)" in summary
    assert "vehicle classes: 0" in summary
    assert "travel time saved over fixed routes: n/a" in summary
    assert "max network clearance time: none" in summary


def test_later_stage_needs_the_earlier_artifacts(tmp_path):
    """
    Test that the mapping stage fails on an output directory without stage-1 results.
    """
    # Act & Assert
    with pytest.raises(MissingArtifactException) as excinfo:
        run("toy_scenario.json", tmp_path, stage="map")
    assert "terminal_accumulation.csv" in excinfo.value.path
    assert json.loads((tmp_path / MANIFEST).read_text())["status"] == "failed:map"


def test_failed_stage_keeps_partial_files(tmp_path):
    """
    Test that a write failure leaves the staged files and marks the manifest failed.
    """
    # Arrange
    run("toy_scenario.json", tmp_path, stage="reschedule")
    run("toy_scenario.json", tmp_path, stage="map")
    use_case = get_run_pipeline_use_case()
    use_case._traffic_writer = FailingNctWriter()
    request = RunRequest(fixture_path("toy_scenario.json"), tmp_path, stage="sodta")

    # Act & Assert
    with pytest.raises(OSError):
        use_case.execute(request)
    assert (tmp_path / "curves.csv.partial").exists()
    assert not (tmp_path / "curves.csv").exists()
    stored = json.loads((tmp_path / MANIFEST).read_text())
    assert stored["status"] == "failed:sodta"
    assert stored["checksums"] == {}


def test_invalid_scenario_stops_before_any_output(tmp_path):
    """
    Test that validation violations are raised before the output directory is touched.
    """
    # Arrange
    scenario = json.loads(fixture_path("toy_scenario.json").read_text())
    scenario["flows"][0]["destination"] = 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(scenario))
    request = RunRequest(path, tmp_path / "out")

    # Act & Assert
    with pytest.raises(InvalidScenarioException) as excinfo:
        get_run_pipeline_use_case().execute(request)
    assert any("flow-od" in violation for violation in excinfo.value.violations)
    assert not (tmp_path / "out").exists()
