import logging

from src.contexts.disruption.domain.candidate_timetable import (
    build_candidate_timetable,
)
from src.contexts.disruption.domain.disruption_precomputation import (
    DisruptionPrecomputation,
)
from src.contexts.disruption.domain.indicator_builder import build_indicators
from src.contexts.disruption.domain.service_classification import classify_services
from src.contexts.disruption.domain.spatio_temporal_area import build_area
from src.contexts.disruption.domain.turnaround_generation import generate_turnarounds
from src.contexts.scenario.domain.scenario import Scenario

logger = logging.getLogger(__name__)


class PrecomputeDisruptionUseCase:
    def execute(self, scenario: Scenario) -> DisruptionPrecomputation:
        area = build_area(scenario.disruption, scenario.line)
        classification = classify_services(scenario.services, area)
        turnarounds = generate_turnarounds(
            scenario.services,
            area,
            scenario.line,
            scenario.disruption.turnback_minutes,
        )
        candidate = build_candidate_timetable(scenario.services, area, turnarounds)
        indicators = build_indicators(scenario, area, candidate)
        logger.info(
            "Disruption %d-%d: %d before, %d overlapping, %d after, %d turnaround candidates",
            area.s_begin,
            area.s_end,
            len(classification.before),
            len(classification.overlapping),
            len(classification.after),
            len(turnarounds.children),
        )
        return DisruptionPrecomputation(area, classification, candidate, indicators)
