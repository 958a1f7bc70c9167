from dataclasses import dataclass

from src.contexts.disruption.domain.candidate_timetable import CandidateTimetable
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.contexts.disruption.domain.service_classification import (
    ServiceClassification,
)
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea


@dataclass(frozen=True)
class DisruptionPrecomputation:
    area: SpatioTemporalArea
    classification: ServiceClassification
    candidate: CandidateTimetable
    indicators: IndicatorSet
