from dataclasses import dataclass, field

from src.contexts.disruption.domain.disruption_precomputation import (
    DisruptionPrecomputation,
)
from src.contexts.scenario.domain.scenario import Scenario
from src.core.solver.linear_model import LinearModel


@dataclass
class Stage1Model:
    """The stage-1 MILP together with the variable id of every modelled quantity."""

    model: LinearModel
    scenario: Scenario
    precomputation: DisruptionPrecomputation
    time_big_m: float
    objective_big_m: float
    activation: dict[str, int] = field(default_factory=dict)
    arrival_time: dict[tuple[str, int], int] = field(default_factory=dict)
    departure_time: dict[tuple[str, int], int] = field(default_factory=dict)
    visit: dict[tuple[str, int], int] = field(default_factory=dict)
    assignment: dict[tuple[str, str], int] = field(default_factory=dict)
    stranded: dict[str, int] = field(default_factory=dict)
    load: dict[tuple[str, int], int] = field(default_factory=dict)
    terminal: dict[tuple[str, int, int], int] = field(default_factory=dict)
    arrivals: dict[tuple[int, int], int] = field(default_factory=dict)
    departures: dict[tuple[int, int], int] = field(default_factory=dict)
    accumulation: dict[tuple[int, int], int] = field(default_factory=dict)
    event_times: dict[int, list[int]] = field(default_factory=dict)

    @property
    def indicators(self):
        return self.precomputation.indicators

    @property
    def candidate(self):
        return self.precomputation.candidate

    @property
    def area(self):
        return self.precomputation.area
