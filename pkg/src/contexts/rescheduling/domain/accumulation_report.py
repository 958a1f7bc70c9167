from src.contexts.rescheduling.domain.stage1_solution import Stage1Solution
from src.contexts.scenario.domain.clock import format_clock
from src.contexts.scenario.domain.line_topology import NEGATIVE, POSITIVE, LineTopology

DIRECTION_NAMES = {POSITIVE: "positive", NEGATIVE: "negative"}


def _share(part: int, whole: int) -> str:
    return f"{100.0 * part / whole:.1f}%" if whole else "n/a"


def _minutes(value: int | None) -> str:
    return "none" if value is None else f"{value} min"


def _solver_line(solution: Stage1Solution) -> str:
    statistics = solution.statistics
    if statistics.iterations is None:
        return f"solver: {statistics.nodes} nodes"
    return f"solver: {statistics.nodes} nodes, {statistics.iterations} iterations"


def stage1_summary(solution: Stage1Solution, line: LineTopology) -> str:
    """Text block with service counts, recovery times and passenger accumulation figures."""
    timetable = solution.timetable
    area = timetable.area
    series = solution.accumulation
    lines = [
        "Stage 1: train rescheduling",
        f"objective: {solution.objective:.1f}",
        f"big-M: time {solution.time_big_m:.0f}, objective {solution.objective_big_m:.0f}",
        _solver_line(solution),
        f"disruption: stations {area.s_begin}-{area.s_end}, "
        f"{format_clock(area.tau_begin)}-{format_clock(area.tau_end)}",
    ]
    all_normal = len(timetable.normal())
    affected = len(timetable.canceled()) + len(timetable.rescheduled())
    lines.append(f"services affected: {affected} of {all_normal} ({_share(affected, all_normal)})")
    for direction in (POSITIVE, NEGATIVE):
        total = len(timetable.normal(direction))
        canceled = len(timetable.canceled(direction))
        rescheduled = len(timetable.rescheduled(direction))
        turned = len(timetable.turned_around(direction))
        lines.append(
            f"{DIRECTION_NAMES[direction]}: {total} services, "
            f"{canceled} canceled ({_share(canceled, total)}), "
            f"{rescheduled} rescheduled ({_share(rescheduled, total)}), "
            f"{turned} turned around, "
            f"recovery {_minutes(timetable.recovery_time(direction))}"
        )
    lines.append(f"stranded passengers: {solution.assignment.total_stranded()}")
    rate = series.terminal_rate(area.tau_begin, area.tau_end)
    lines.append(f"terminal accumulation rate: {rate:.1f} passengers/min")
    horizon_minutes = max(len(series.times) - 1, 1)
    lines.append("station  name  arrivals/min  average wait (min)")
    for station in series.stations:
        if area.is_closed(station):
            continue
        arrivals = series.arrival_count(station) / horizon_minutes
        wait = series.average_waiting.get(station, 0.0)
        lines.append(f"{station:>7}  {line.name(station)}  {arrivals:.1f}  {wait:.2f}")
    if solution.audit:
        lines.append(f"audit findings: {len(solution.audit)}")
        lines.extend(f"  {finding}" for finding in solution.audit)
    else:
        lines.append("audit findings: none")
    return "\n".join(lines) + "\n"
