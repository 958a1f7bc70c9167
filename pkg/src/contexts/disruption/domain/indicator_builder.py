import logging

from src.contexts.disruption.domain.candidate_timetable import CandidateTimetable
from src.contexts.disruption.domain.headway_compatibility import headway_compat
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.contexts.disruption.domain.onboard_filling import fill_onboard
from src.contexts.disruption.domain.spatio_temporal_area import SpatioTemporalArea
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.passenger_flow import PassengerFlow
from src.contexts.scenario.domain.scenario import Scenario

logger = logging.getLogger(__name__)


def operational_flows(
    flows: tuple[PassengerFlow, ...], area: SpatioTemporalArea
) -> tuple[PassengerFlow, ...]:
    """Flows produced at open stations; the rest are dropped with a warning."""
    kept = []
    for flow in flows:
        if area.is_closed(flow.origin):
            logger.warning(
                "Dropping flow %s: origin station %d is closed", flow.id, flow.origin
            )
            continue
        kept.append(flow)
    return tuple(kept)


def build_indicators(
    scenario: Scenario, area: SpatioTemporalArea, candidate: CandidateTimetable
) -> IndicatorSet:
    flows = operational_flows(scenario.flows, area)
    services = candidate.services
    indicators = IndicatorSet(
        horizon_start=scenario.horizon_start,
        horizon_end=scenario.horizon_end,
        flow_ids=tuple(flow.id for flow in flows),
        service_ids=tuple(service.id for service in services),
        conflict=dict(candidate.conflict),
        links=dict(candidate.links),
    )

    for flow in flows:
        indicators.arrival_instant[(flow.id, flow.origin, flow.production_time)] = 1
        indicators.arrival_onset[(flow.id, flow.origin)] = flow.production_time
        for service in services:
            key = (service.id, flow.id)
            indicators.direction_gate[key] = int(service.direction == flow.direction)
            arrival = service.arrival_at(flow.origin)
            if arrival == UNVISITED:
                indicators.waiting_gate[key] = 0
            else:
                wait = arrival - flow.production_time
                indicators.waiting[(flow.id, service.id)] = wait
                indicators.waiting_gate[key] = int(wait >= 0)
            departure = service.departure_at(flow.origin)
            indicators.departure_gate[key] = int(departure != UNVISITED)
            if not indicators.is_boardable(flow.id, service.id):
                continue

            theta = candidate.conflict[service.id]
            onboard = fill_onboard(flow, theta, area)
            for station in onboard:
                indicators.onboard[(flow.id, service.id, station)] = 1
            indicators.departure_onset[(service.id, flow.id, flow.origin)] = departure

            turn = area.turn_station(service.direction)
            turn_arrival = service.arrival_at(turn)
            if theta and turn in onboard and turn_arrival != UNVISITED:
                indicators.transfer_instant[(flow.id, service.id, turn, turn_arrival)] = 1
                indicators.transfer_onset[(flow.id, service.id, turn)] = turn_arrival

    for u in candidate.candidates:
        for v in candidate.turnarounds.children:
            if u.direction != v.direction:
                continue
            for station in scenario.line.stations:
                if headway_compat(u, v, station, scenario.headways):
                    indicators.headway[(u.id, v.id, station)] = 1

    logger.info(
        "Indicators: %d flows, %d services, %d boardable pairs, %d headway conflicts",
        len(flows),
        len(services),
        len(indicators.boardable_pairs()),
        len(indicators.headway),
    )
    return indicators
