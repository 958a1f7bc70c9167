import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np
from scipy import sparse

from src.core.exceptions.custom_exceptions import ModelDefinitionException


class VariableKind(Enum):
    CONTINUOUS = "continuous"
    BINARY = "binary"
    INTEGER = "integer"


class Sense(Enum):
    LE = "<="
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class Variable:
    id: int
    name: str
    kind: VariableKind
    lower: float
    upper: float
    cost: float

    @property
    def is_integral(self) -> bool:
        return self.kind is not VariableKind.CONTINUOUS


@dataclass(frozen=True)
class Constraint:
    name: str
    coefficients: dict[int, float]
    sense: Sense
    rhs: float

    def activity(self, values: np.ndarray) -> float:
        return sum(coef * values[var] for var, coef in self.coefficients.items())

    def violation(self, values: np.ndarray) -> float:
        lhs = self.activity(values)
        if self.sense is Sense.LE:
            return max(0.0, lhs - self.rhs)
        if self.sense is Sense.GE:
            return max(0.0, self.rhs - lhs)
        return abs(lhs - self.rhs)


@dataclass
class LinearModel:
    """
    Sparse minimisation model: named variables with bounds and kinds, and
    named linear rows. Rows reference variables by integer id.
    """

    name: str = "model"
    variables: list[Variable] = field(default_factory=list)
    constraints: list[Constraint] = field(default_factory=list)
    objective_constant: float = 0.0
    _names: dict[str, int] = field(default_factory=dict, repr=False)

    def add_variable(
        self,
        name: str,
        kind: VariableKind = VariableKind.CONTINUOUS,
        lower: float = 0.0,
        upper: float = math.inf,
        cost: float = 0.0,
    ) -> int:
        if name in self._names:
            raise ModelDefinitionException(f"Variable {name} declared twice")
        if kind is VariableKind.BINARY:
            lower, upper = max(lower, 0.0), min(upper, 1.0)
        var_id = len(self.variables)
        self.variables.append(Variable(var_id, name, kind, lower, upper, cost))
        self._names[name] = var_id
        return var_id

    def add_constraint(
        self, name: str, coefficients: dict[int, float], sense: Sense, rhs: float
    ) -> int:
        row = {var: coef for var, coef in coefficients.items() if coef != 0.0}
        for var in row:
            if not 0 <= var < len(self.variables):
                raise ModelDefinitionException(
                    f"Constraint {name} references undeclared variable {var}"
                )
        self.constraints.append(Constraint(name, row, sense, float(rhs)))
        return len(self.constraints) - 1

    def index_of(self, name: str) -> int:
        return self._names[name]

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    @property
    def has_integers(self) -> bool:
        return any(var.is_integral for var in self.variables)

    def validate(self) -> None:
        for var in self.variables:
            if var.kind is VariableKind.BINARY and (var.lower < 0 or var.upper > 1):
                raise ModelDefinitionException(
                    f"Binary variable {var.name} has bounds outside [0, 1]"
                )
            if var.lower > var.upper:
                raise ModelDefinitionException(
                    f"Variable {var.name} has empty bounds [{var.lower}, {var.upper}]"
                )
        for row in self.constraints:
            for var in row.coefficients:
                if not 0 <= var < len(self.variables):
                    raise ModelDefinitionException(
                        f"Constraint {row.name} references undeclared variable {var}"
                    )

    def relaxed(self) -> "LinearModel":
        """Returns a copy with every integrality requirement dropped."""
        copy = self.copy()
        copy.variables = [
            replace(var, kind=VariableKind.CONTINUOUS) for var in self.variables
        ]
        return copy

    def with_bounds(
        self, lower: dict[int, float], upper: dict[int, float]
    ) -> "LinearModel":
        copy = self.copy()
        copy.variables = [
            replace(
                var,
                lower=lower.get(var.id, var.lower),
                upper=upper.get(var.id, var.upper),
            )
            for var in self.variables
        ]
        return copy

    def without_constraints(self, dropped: set[int]) -> "LinearModel":
        copy = self.copy()
        copy.constraints = [
            row for index, row in enumerate(self.constraints) if index not in dropped
        ]
        return copy

    def copy(self) -> "LinearModel":
        return LinearModel(
            name=self.name,
            variables=list(self.variables),
            constraints=list(self.constraints),
            objective_constant=self.objective_constant,
            _names=dict(self._names),
        )

    def objective_value(self, values: np.ndarray) -> float:
        return self.objective_constant + float(
            sum(var.cost * values[var.id] for var in self.variables)
        )

    def max_violation(self, values: np.ndarray) -> float:
        worst = 0.0
        for var in self.variables:
            worst = max(worst, var.lower - values[var.id], values[var.id] - var.upper)
        for row in self.constraints:
            worst = max(worst, row.violation(values))
        return worst

    def is_feasible(self, values: np.ndarray, eps: float, eps_int: float) -> bool:
        if self.max_violation(values) > eps * max(1.0, self._scale()):
            return False
        return all(
            abs(values[var.id] - round(values[var.id])) <= eps_int
            for var in self.variables
            if var.is_integral
        )

    def _scale(self) -> float:
        rhs = [abs(row.rhs) for row in self.constraints]
        return max(rhs, default=1.0)

    def to_arrays(self):
        """
        Returns (c, A, row_lower, row_upper, lower, upper, integrality) with A
        as a CSR matrix, the form scipy's HiGHS interface consumes.
        """
        n = self.num_variables
        c = np.array([var.cost for var in self.variables], dtype=float)
        rows, cols, data = [], [], []
        row_lower = np.empty(self.num_constraints)
        row_upper = np.empty(self.num_constraints)
        for index, row in enumerate(self.constraints):
            for var, coef in row.coefficients.items():
                rows.append(index)
                cols.append(var)
                data.append(coef)
            row_lower[index] = row.rhs if row.sense is not Sense.LE else -np.inf
            row_upper[index] = row.rhs if row.sense is not Sense.GE else np.inf
        matrix = sparse.csr_matrix(
            (data, (rows, cols)), shape=(self.num_constraints, n), dtype=float
        )
        lower = np.array([var.lower for var in self.variables], dtype=float)
        upper = np.array([var.upper for var in self.variables], dtype=float)
        integrality = np.array(
            [1 if var.is_integral else 0 for var in self.variables], dtype=int
        )
        return c, matrix, row_lower, row_upper, lower, upper, integrality
