import logging
import math

from src.contexts.disruption.domain.disruption_precomputation import (
    DisruptionPrecomputation,
)
from src.contexts.disruption.domain.indicator_set import IndicatorSet
from src.contexts.rescheduling.domain.stage1_model import Stage1Model
from src.contexts.scenario.domain.clock import UNVISITED
from src.contexts.scenario.domain.line_topology import POSITIVE
from src.contexts.scenario.domain.scenario import Scenario
from src.contexts.scenario.domain.train_service import TrainService
from src.core.exceptions.custom_exceptions import IndicatorIncompleteException
from src.core.solver.linear_model import LinearModel, Sense, VariableKind

logger = logging.getLogger(__name__)

TIME_SLACK = 2


def objective_big_m(scenario: Scenario, indicators: IndicatorSet) -> float:
    """Penalty per stranded passenger; defaults just above every waiting time and the horizon."""
    max_wait = indicators.max_waiting()
    configured = scenario.stage1.objective_big_m
    if configured is None:
        return float(max(max_wait, scenario.horizon_length) + 1)
    if configured < max_wait:
        logger.warning(
            "Objective big-M %.1f is below the largest waiting time %d; "
            "flows with a feasible train may be left stranded",
            configured,
            max_wait,
        )
    return float(configured)


def check_indicators(indicators: IndicatorSet, service_ids: list[str]) -> None:
    """Raises when an indicator the model reads has no entry."""
    for service_id in service_ids:
        if service_id not in indicators.conflict:
            raise IndicatorIncompleteException("conflict", service_id)
    produced = {p for p, _ in indicators.arrival_onset}
    departing = {(u, p) for u, p, _ in indicators.departure_onset}
    for flow_id in indicators.flow_ids:
        if flow_id not in produced:
            raise IndicatorIncompleteException("arrival_onset", flow_id)
        for service_id in indicators.service_ids:
            key = (service_id, flow_id)
            for symbol, gate in (
                ("direction_gate", indicators.direction_gate),
                ("waiting_gate", indicators.waiting_gate),
                ("departure_gate", indicators.departure_gate),
            ):
                if key not in gate:
                    raise IndicatorIncompleteException(symbol, key)
            if not indicators.is_boardable(flow_id, service_id):
                continue
            if (flow_id, service_id) not in indicators.waiting:
                raise IndicatorIncompleteException("waiting", (flow_id, service_id))
            if key not in departing:
                raise IndicatorIncompleteException("departure_onset", key)


class Stage1Builder:
    """
    Assembles the stage-1 MILP family by family.

    Big-M rows carry a switch expression (a constant plus a combination of
    binaries) that is zero exactly when the row must bind. Rows that can
    never bind over the variable bounds are not emitted.
    """

    def __init__(self, scenario: Scenario, precomputation: DisruptionPrecomputation):
        self.scenario = scenario
        self.area = precomputation.area
        self.candidate = precomputation.candidate
        self.indicators = precomputation.indicators
        flow_ids = set(self.indicators.flow_ids)
        self.flows = {flow.id: flow for flow in scenario.flows if flow.id in flow_ids}
        time_big_m = max(scenario.horizon_end, self.candidate.latest_time()) + TIME_SLACK
        self.stage1 = Stage1Model(
            model=LinearModel(name="stage1"),
            scenario=scenario,
            precomputation=precomputation,
            time_big_m=float(time_big_m),
            objective_big_m=objective_big_m(scenario, self.indicators),
        )
        self.model = self.stage1.model

    def build(self) -> Stage1Model:
        check_indicators(self.indicators, [s.id for s in self.candidate.services])
        self._service_variables()
        self._normal_activation()
        self._turnaround_activation()
        self._visit_identification()
        self._headways()
        self._assignment()
        self._capacity()
        self._terminal_accumulation()
        self._station_accumulation()
        logger.info(
            "Stage-1 model: %d variables, %d rows, time big-M %.0f, objective big-M %.0f",
            self.model.num_variables,
            self.model.num_constraints,
            self.stage1.time_big_m,
            self.stage1.objective_big_m,
        )
        return self.stage1

    # rows

    def _emit(self, name: str, coefficients: dict[int, float], sense: Sense, rhs: float) -> None:
        low, high = self._activity_range(coefficients)
        if sense is Sense.GE and low >= rhs:
            return
        if sense is Sense.LE and high <= rhs:
            return
        self.model.add_constraint(name, coefficients, sense, rhs)

    def _activity_range(self, coefficients: dict[int, float]) -> tuple[float, float]:
        low = high = 0.0
        for var_id, coef in coefficients.items():
            if coef == 0.0:
                continue
            var = self.model.variables[var_id]
            ends = (coef * var.lower, coef * var.upper)
            low += min(ends)
            high += max(ends)
        return low, high

    def _pin(
        self, name: str, var_id: int, value: int, const: int, switch: dict[int, int]
    ) -> None:
        """var = value whenever const + sum(coef * binary) is zero."""
        big_m = self.stage1.time_big_m
        ge = {var_id: 1.0}
        le = {var_id: 1.0}
        for binary, coef in switch.items():
            ge[binary] = ge.get(binary, 0.0) + big_m * coef
            le[binary] = le.get(binary, 0.0) - big_m * coef
        self._emit(f"{name}:ge", ge, Sense.GE, value - big_m * const)
        self._emit(f"{name}:le", le, Sense.LE, value + big_m * const)

    def _pin_times(
        self,
        name: str,
        service_id: str,
        station: int,
        times: tuple[int, int],
        const: int,
        switch: dict[int, int],
    ) -> None:
        arrival, departure = times
        self._pin(
            f"{name}_arr[{service_id},{station}]",
            self.stage1.arrival_time[(service_id, station)],
            arrival,
            const,
            switch,
        )
        self._pin(
            f"{name}_dep[{service_id},{station}]",
            self.stage1.departure_time[(service_id, station)],
            departure,
            const,
            switch,
        )

    # families

    def _service_variables(self) -> None:
        upper = self.stage1.time_big_m - TIME_SLACK
        for service in self.candidate.services:
            u = service.id
            self.stage1.activation[u] = self.model.add_variable(f"a[{u}]", VariableKind.BINARY)
            for r in self.scenario.line.stations:
                self.stage1.arrival_time[(u, r)] = self.model.add_variable(
                    f"ta[{u},{r}]", lower=UNVISITED, upper=upper
                )
                self.stage1.departure_time[(u, r)] = self.model.add_variable(
                    f"td[{u},{r}]", lower=UNVISITED, upper=upper
                )
                self.stage1.visit[(u, r)] = self.model.add_variable(
                    f"s[{u},{r}]", VariableKind.BINARY
                )

    def _normal_activation(self) -> None:
        area = self.area
        positive_side = set(area.operational_positive_side)
        negative_side = set(area.operational_negative_side)
        closed = (UNVISITED, UNVISITED)
        for service in self.candidate.candidates:
            u = service.id
            theta = self.indicators.conflict[u]
            f = service.direction
            a = self.stage1.activation[u]
            normal = self.candidate.normal_service(u)
            for r in self.scenario.line.stations:
                times = normal.times_at(r)
                self._pin_times("keep", u, r, times, 1 + theta, {a: -1})

                const = 3 - theta - f
                if r == area.s_begin:
                    self._pin_times("cut_positive", u, r, (times[0], UNVISITED), const, {a: -1})
                elif r in positive_side:
                    self._pin_times("cut_positive", u, r, times, const, {a: -1})
                else:
                    self._pin_times("cut_positive", u, r, closed, const, {a: -1})

                const = 2 - theta + f
                if r == area.s_end:
                    self._pin_times("cut_negative", u, r, (times[0], UNVISITED), const, {a: -1})
                elif r in negative_side:
                    self._pin_times("cut_negative", u, r, times, const, {a: -1})
                else:
                    self._pin_times("cut_negative", u, r, closed, const, {a: -1})

                self._pin_times("cancel", u, r, closed, 0, {a: 1})
            self._emit(f"forced[{u}]", {a: 1.0}, Sense.GE, 1 - theta)

    def _turnaround_activation(self) -> None:
        for (u, v, r), delta in sorted(self.candidate.links.items()):
            parent = self.candidate.service(u)
            theta = self.indicators.conflict[u]
            a_u = self.stage1.activation[u]
            a_v = self.stage1.activation[v]
            if r == self.area.s_begin:
                floor = theta + parent.direction + delta - 3
            else:
                floor = theta - parent.direction + delta - 2
            self._emit(f"trigger[{v},{r}]", {a_v: 1.0, a_u: -1.0}, Sense.GE, floor)
            self._emit(f"orphan[{v}]", {a_v: 1.0, a_u: -1.0}, Sense.LE, 0)
            self._emit(f"orphan_conflict[{v}]", {a_v: 1.0}, Sense.LE, theta)

        for child in self.candidate.turnarounds.children:
            v = child.id
            a_v = self.stage1.activation[v]
            for r in self.scenario.line.stations:
                self._pin_times("turnaround", v, r, child.times_at(r), 1, {a_v: -1})
                self._pin_times("turnaround_cancel", v, r, (UNVISITED, UNVISITED), 0, {a_v: 1})

    def _visit_identification(self) -> None:
        positive_side = set(self.area.operational_positive_side)
        negative_side = set(self.area.operational_negative_side)
        for service in self.candidate.candidates:
            u = service.id
            theta = self.indicators.conflict[u]
            f = service.direction
            a = self.stage1.activation[u]
            for r in self.scenario.line.stations:
                s = self.stage1.visit[(u, r)]
                self._emit(f"visit_kept[{u},{r}]", {s: 1.0, a: -1.0}, Sense.GE, -theta)
                self._emit(f"visit_active[{u},{r}]", {s: 1.0, a: -1.0}, Sense.LE, 0)
                if r in positive_side:
                    self._emit(f"visit_positive[{u},{r}]", {s: 1.0, a: -1.0}, Sense.GE, theta + f - 2)
                else:
                    self._emit(f"skip_positive[{u},{r}]", {s: 1.0, a: 1.0}, Sense.LE, 3 - theta - f)
                if r in negative_side:
                    self._emit(f"visit_negative[{u},{r}]", {s: 1.0, a: -1.0}, Sense.GE, theta - f - 1)
                else:
                    self._emit(f"skip_negative[{u},{r}]", {s: 1.0, a: 1.0}, Sense.LE, 2 - theta + f)

        for child in self.candidate.turnarounds.children:
            self._visit_child(child)

    def _visit_child(self, child: TrainService) -> None:
        v = child.id
        f = child.direction
        a = self.stage1.activation[v]
        linked = sum(
            delta for (_, child_id, _), delta in self.candidate.links.items() if child_id == v
        )
        for r in self.scenario.line.stations:
            s = self.stage1.visit[(v, r)]
            self._emit(f"visit_active[{v},{r}]", {s: 1.0, a: -1.0}, Sense.LE, 0)
            ahead = r >= child.turn_station if f == POSITIVE else r <= child.turn_station
            if f == POSITIVE and ahead:
                self._emit(f"visit_positive[{v},{r}]", {s: 1.0, a: -1.0}, Sense.GE, linked + f - 2)
            elif f == POSITIVE:
                self._emit(f"skip_positive[{v},{r}]", {s: 1.0, a: 1.0}, Sense.LE, 3 - linked - f)
            elif ahead:
                self._emit(f"visit_negative[{v},{r}]", {s: 1.0, a: -1.0}, Sense.GE, linked - f - 1)
            else:
                self._emit(f"skip_negative[{v},{r}]", {s: 1.0, a: 1.0}, Sense.LE, 2 - linked + f)

    def _headways(self) -> None:
        for (u, v, r), theta in sorted(self.indicators.headway.items()):
            self._emit(
                f"headway[{u},{v},{r}]",
                {self.stage1.visit[(u, r)]: 1.0, self.stage1.visit[(v, r)]: 1.0},
                Sense.LE,
                2 - theta,
            )

    def _candidate_services(self, flow_id: str) -> list[str]:
        """Gate-feasible trains of a flow, optionally limited to its earliest ones."""
        services = [
            u for u in self.indicators.service_ids if self.indicators.is_boardable(flow_id, u)
        ]
        limit = self.scenario.stage1.max_candidate_trains
        if limit is None or len(services) <= limit:
            return services
        earliest = sorted(services, key=lambda u: (self.indicators.waiting[(flow_id, u)], u))
        kept = set(earliest[:limit])
        return [u for u in services if u in kept]

    def _assignment(self) -> None:
        weighted = self.scenario.stage1.weight_wait_by_size
        for p in self.indicators.flow_ids:
            flow = self.flows[p]
            n = flow.size
            weight = n if weighted else 1
            stranded = self.model.add_variable(
                f"xs[{p}]",
                VariableKind.INTEGER,
                upper=n,
                cost=self.stage1.objective_big_m * weight,
            )
            self.stage1.stranded[p] = stranded
            conservation = {stranded: 1.0}
            for u in self._candidate_services(p):
                x = self.model.add_variable(
                    f"x[{p},{u}]",
                    VariableKind.INTEGER,
                    upper=n,
                    cost=self.indicators.waiting[(p, u)] * weight,
                )
                self.stage1.assignment[(p, u)] = x
                conservation[x] = 1.0
                departure = self.stage1.departure_time[(u, flow.origin)]
                self._emit(f"board_departure[{p},{u}]", {x: 1.0, departure: -n}, Sense.LE, n)
                self._emit(
                    f"board_active[{p},{u}]",
                    {x: 1.0, self.stage1.activation[u]: -n},
                    Sense.LE,
                    0,
                )
            self.model.add_constraint(f"conservation[{p}]", conservation, Sense.EQ, n)

    def _capacity(self) -> None:
        onboard: dict[tuple[str, int], list[int]] = {}
        for (p, u, r), phi in sorted(self.indicators.onboard.items()):
            x = self.stage1.assignment.get((p, u))
            if phi and x is not None:
                onboard.setdefault((u, r), []).append(x)
        for (u, r), boarded in sorted(onboard.items()):
            load = self.model.add_variable(f"C[{u},{r}]")
            self.stage1.load[(u, r)] = load
            row = {load: 1.0}
            for x in boarded:
                row[x] = row.get(x, 0.0) - 1.0
            self.model.add_constraint(f"load[{u},{r}]", row, Sense.EQ, 0)
            capacity = self.candidate.service(u).capacity
            self._emit(f"capacity[{u},{r}]", {load: 1.0}, Sense.LE, capacity)

    def _terminal_accumulation(self) -> None:
        for station in self.area.terminal_stations:
            support: dict[tuple[str, int], tuple[float, dict[int, float]]] = {}
            for (p, r, t), theta in sorted(self.indicators.arrival_instant.items()):
                flow = self.flows[p]
                crossing = flow.direction if station == self.area.s_begin else 1 - flow.direction
                if r != station or not theta or not crossing:
                    continue
                const, terms = support.get((p, t), (0.0, {}))
                support[(p, t)] = (const + flow.size, terms)
            for (p, u, r, t), theta in sorted(self.indicators.transfer_instant.items()):
                x = self.stage1.assignment.get((p, u))
                if r != station or not theta or x is None:
                    continue
                const, terms = support.get((p, t), (0.0, {}))
                terms[x] = terms.get(x, 0.0) - 1.0
                support[(p, t)] = (const, terms)
            for (p, t), (const, terms) in sorted(support.items()):
                value = self.model.add_variable(f"Gt[{p},{station},{t}]")
                self.stage1.terminal[(p, station, t)] = value
                self.model.add_constraint(
                    f"terminal[{p},{station},{t}]", {value: 1.0, **terms}, Sense.EQ, const
                )

    def _station_accumulation(self) -> None:
        recursive = self.scenario.stage1.accumulation_form == "recursive"
        for station in self.area.operational_stations:
            arrivals, departures, constants = self._station_events(station)
            times = sorted(set(arrivals) | set(departures) | set(constants))
            self.stage1.event_times[station] = times
            previous = None
            for t in times:
                a_var = self.model.add_variable(f"A[{station},{t}]")
                d_var = self.model.add_variable(f"D[{station},{t}]")
                g_var = self.model.add_variable(f"G[{station},{t}]", lower=-math.inf)
                self.stage1.arrivals[(station, t)] = a_var
                self.stage1.departures[(station, t)] = d_var
                self.stage1.accumulation[(station, t)] = g_var
                if recursive:
                    arrived = constants.get(t, 0)
                    a_row = _increment_row(a_var, arrivals.get(t, []))
                    d_row = _increment_row(d_var, departures.get(t, []))
                    if previous is not None:
                        a_row[self.stage1.arrivals[(station, previous)]] = -1.0
                        d_row[self.stage1.departures[(station, previous)]] = -1.0
                else:
                    arrived = sum(n for onset, n in constants.items() if onset <= t)
                    a_row = _increment_row(a_var, _up_to(arrivals, t))
                    d_row = _increment_row(d_var, _up_to(departures, t))
                self.model.add_constraint(f"arrived[{station},{t}]", a_row, Sense.EQ, arrived)
                self.model.add_constraint(f"departed[{station},{t}]", d_row, Sense.EQ, 0)
                self.model.add_constraint(
                    f"accumulated[{station},{t}]",
                    {g_var: 1.0, a_var: -1.0, d_var: 1.0},
                    Sense.EQ,
                    0,
                )
                previous = t

    def _station_events(self, station: int):
        """Per onset minute: transferred and departing assignment variables, produced passengers."""
        arrivals: dict[int, list[int]] = {}
        departures: dict[int, list[int]] = {}
        constants: dict[int, int] = {}
        for (p, r), onset in self.indicators.arrival_onset.items():
            if r == station:
                constants[onset] = constants.get(onset, 0) + self.flows[p].size
        for (p, u, r), onset in self.indicators.transfer_onset.items():
            x = self.stage1.assignment.get((p, u))
            if r == station and x is not None:
                arrivals.setdefault(onset, []).append(x)
        for (u, p, r), onset in self.indicators.departure_onset.items():
            x = self.stage1.assignment.get((p, u))
            if r == station and x is not None:
                departures.setdefault(onset, []).append(x)
        return arrivals, departures, constants


def _up_to(events: dict[int, list[int]], time: int) -> list[int]:
    return [x for onset, xs in events.items() if onset <= time for x in xs]


def _increment_row(var_id: int, increments: list[int]) -> dict[int, float]:
    row = {var_id: 1.0}
    for x in increments:
        row[x] = row.get(x, 0.0) - 1.0
    return row


def build_stage1(scenario: Scenario, precomputation: DisruptionPrecomputation) -> Stage1Model:
    return Stage1Builder(scenario, precomputation).build()
