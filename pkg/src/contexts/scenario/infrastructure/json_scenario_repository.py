import json
import logging
from pathlib import Path

from pydantic import ValidationError

from src.contexts.scenario.application.scenario_repository import (
    ScenarioRepository,
)
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.infrastructure.scenario_document import ScenarioDocument
from src.contexts.scenario.infrastructure.scenario_mappers import (
    scenario_document_to_domain,
    scenario_domain_to_document,
)
from src.core.exceptions.custom_exceptions import ScenarioParseException

logger = logging.getLogger(__name__)


class JsonScenarioRepository(ScenarioRepository):
    def load(self, path: Path) -> Scenario:
        text = Path(path).read_text(encoding="utf-8")
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioParseException(
                exc.msg, f"{path}: line {exc.lineno}, column {exc.colno}"
            ) from exc
        try:
            document = ScenarioDocument.model_validate(raw)
        except ValidationError as exc:
            error = exc.errors()[0]
            location = ".".join(str(part) for part in error["loc"]) or "<root>"
            raise ScenarioParseException(error["msg"], f"{path}: {location}") from exc
        scenario = scenario_document_to_domain(document)
        logger.info(
            "Loaded scenario %s: %d stations, %d services, %d flows",
            path,
            scenario.line.num_stations,
            len(scenario.services),
            len(scenario.flows),
        )
        return scenario

    def save(self, scenario: Scenario, path: Path) -> None:
        document = scenario_domain_to_document(scenario)
        payload = document.model_dump(by_alias=True, exclude_none=True)
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
