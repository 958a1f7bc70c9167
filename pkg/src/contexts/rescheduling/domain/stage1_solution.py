from dataclasses import dataclass, field

from src.contexts.rescheduling.domain.accumulation_series import AccumulationSeries
from src.contexts.rescheduling.domain.passenger_assignment import PassengerAssignment
from src.contexts.rescheduling.domain.rescheduled_timetable import RescheduledTimetable
from src.core.solver.solve_result import SolveStatistics


@dataclass(frozen=True)
class Stage1Solution:
    timetable: RescheduledTimetable
    assignment: PassengerAssignment
    accumulation: AccumulationSeries
    objective: float
    time_big_m: float
    objective_big_m: float
    statistics: SolveStatistics = field(default_factory=SolveStatistics)
    audit: tuple[str, ...] = ()
