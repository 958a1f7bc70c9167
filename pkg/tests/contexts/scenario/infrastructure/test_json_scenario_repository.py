import json

import pytest

from src.contexts.scenario.domain.clock import UNVISITED, parse_clock
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE
from src.contexts.scenario.infrastructure.json_scenario_repository import (
    JsonScenarioRepository,
)
from src.contexts.scenario.infrastructure.scenario_document import ScenarioDocument
from src.core.exceptions.custom_exceptions import (
    DanglingReferenceException,
    ScenarioParseException,
)
from tests.factories import fixture_path

SCHEMA = fixture_path("toy_scenario.json").parent.parent / "schema" / "scenario.schema.json"


def write_variant(tmp_path, change) -> object:
    raw = json.loads(fixture_path("toy_scenario.json").read_text())
    change(raw)
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(raw))
    return path


def test_load_toy_fixture():
    """
    Test that the toy fixture maps into a scenario with minutes and -1 sentinels.
    """
    # Arrange
    repository = JsonScenarioRepository()

    # Act
    scenario = repository.load(fixture_path("toy_scenario.json"))

    # Assert
    assert scenario.line.stations == (1, 2, 3, 4, 5)
    assert scenario.line.name(3) == "Harbour"
    assert len(scenario.services) == 5
    assert len(scenario.flows) == 4
    assert scenario.horizon_start == parse_clock("08:00")
    assert scenario.horizon_end == parse_clock("09:00")
    p1 = scenario.service("P1")
    assert p1.direction == POSITIVE
    assert p1.arrival_at(1) == parse_clock("08:00")
    assert scenario.service("N1").direction == NEGATIVE
    assert scenario.flow("F2").direction == NEGATIVE
    assert scenario.disruption.turnback_minutes == 3
    assert scenario.road.station_nodes == {2: "A", 4: "C"}
    assert scenario.solver.backend == "highs"
    assert scenario.solver.seed == 7


def test_unvisited_stations_are_filled_with_sentinel(tmp_path):
    """
    Test that stations missing from a service's timetable read back as -1.
    """
    # Arrange
    def shorten(raw):
        service = raw["services"][0]
        del service["arrival"]["5"]
        service["departure"]["5"] = -1

    path = write_variant(tmp_path, shorten)

    # Act
    scenario = JsonScenarioRepository().load(path)

    # Assert
    assert scenario.service("P1").times_at(5) == (UNVISITED, UNVISITED)


def test_save_and_load_round_trip(tmp_path):
    """
    Test that a saved scenario loads back equal to the original.
    """
    # Arrange
    repository = JsonScenarioRepository()
    scenario = repository.load(fixture_path("toy_scenario.json"))
    path = tmp_path / "copy.json"

    # Act
    repository.save(scenario, path)
    restored = repository.load(path)

    # Assert
    assert restored == scenario


def test_malformed_json_reports_line_and_column(tmp_path):
    """
    Test that a syntax error carries its location.
    """
    # Arrange
    path = tmp_path / "broken.json"
    path.write_text('{\n  "line": [1, 2\n')

    # Act & Assert
    with pytest.raises(ScenarioParseException) as excinfo:
        JsonScenarioRepository().load(path)
    assert "line 3" in excinfo.value.location


def test_invalid_clock_names_the_field(tmp_path):
    """
    Test that a bad time string is reported with the path of the offending field.
    """
    # Arrange
    path = write_variant(tmp_path, lambda raw: raw["flows"][1].update(production_time="8h08"))

    # Act & Assert
    with pytest.raises(ScenarioParseException) as excinfo:
        JsonScenarioRepository().load(path)
    assert "flows.1.production_time" in excinfo.value.location


def test_unknown_keys_are_rejected(tmp_path):
    """
    Test that misspelled keys do not pass silently.
    """
    # Arrange
    path = write_variant(tmp_path, lambda raw: raw["disruption"].update(tau_ending="08:30"))

    # Act & Assert
    with pytest.raises(ScenarioParseException):
        JsonScenarioRepository().load(path)


def test_dangling_station_reference(tmp_path):
    """
    Test that a flow pointing at a station the line lacks is a dangling reference.
    """
    # Arrange
    path = write_variant(tmp_path, lambda raw: raw["flows"][0].update(destination=9))

    # Act & Assert
    with pytest.raises(DanglingReferenceException) as excinfo:
        JsonScenarioRepository().load(path)
    assert "flow F1" in str(excinfo.value)


def test_dangling_road_node(tmp_path):
    """
    Test that a road segment ending at an undeclared node is a dangling reference.
    """
    # Arrange
    path = write_variant(tmp_path, lambda raw: raw["road"]["segments"][0].update(to="Z"))

    # Act & Assert
    with pytest.raises(DanglingReferenceException):
        JsonScenarioRepository().load(path)


def test_duplicate_service_ids(tmp_path):
    """
    Test that two services sharing an id are rejected.
    """
    # Arrange
    path = write_variant(tmp_path, lambda raw: raw["services"][1].update(id="P1"))

    # Act & Assert
    with pytest.raises(ScenarioParseException) as excinfo:
        JsonScenarioRepository().load(path)
    assert "duplicate service id P1" in str(excinfo.value)


def test_published_schema_lists_every_document_section():
    """
    Test that the JSON Schema shipped with the project covers the same top-level keys as the parser.
    """
    # Arrange
    schema = json.loads(SCHEMA.read_text())

    # Act
    parsed = ScenarioDocument.model_json_schema(by_alias=True)

    # Assert
    assert set(schema["properties"]) == set(parsed["properties"])
    assert set(schema["required"]) == set(parsed["required"])
