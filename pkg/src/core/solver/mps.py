"""
Fixed-format MPS writer and reader.

Data lines use the classic field layout (1-based columns):

    field 1   2-3     row type / bound type
    field 2   5-12    column name (row name in ROWS)
    field 3   15-22   row name / bound set name
    field 4   25-36   value
    field 5   40-47   row name
    field 6   50-61   value

Rows are named R0000001.., columns C0000001.. and the objective row COST,
so every name fits the 8-character fields. Integer columns are wrapped in
MARKER INTORG / INTEND lines; binaries carry a BV bound followed by any
tightened LO/UP/FX bound, other integers get explicit LO/UP bounds. An
objective constant is written as the negated RHS of the objective row.
"""

import math
from pathlib import Path

from src.core.solver.linear_model import LinearModel, Sense, VariableKind

OBJECTIVE_ROW = "COST"
_ROW_TYPES = {Sense.LE: "L", Sense.GE: "G", Sense.EQ: "E"}
_SENSES = {"L": Sense.LE, "G": Sense.GE, "E": Sense.EQ}


def _row_name(index: int) -> str:
    return f"R{index + 1:07d}"


def _column_name(index: int) -> str:
    return f"C{index + 1:07d}"


def _number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e11:
        return str(int(value))
    for digits in range(12, 0, -1):
        text = f"{value:.{digits}g}"
        if len(text) <= 12:
            return text
    raise ValueError(f"Cannot represent {value} in a 12-character MPS field")


def _line(f1="", f2="", f3="", f4="", f5="", f6="") -> str:
    text = (
        " "
        + f1.ljust(2)
        + " "
        + f2.ljust(8)
        + "  "
        + f3.ljust(8)
        + "  "
        + f4.ljust(12)
        + "   "
        + f5.ljust(8)
        + "  "
        + f6
    )
    return text.rstrip()


def render_mps(model: LinearModel) -> str:
    lines = [f"NAME          {model.name[:8].upper() or 'MODEL'}", "ROWS"]
    lines.append(_line("N", OBJECTIVE_ROW))
    for index, row in enumerate(model.constraints):
        lines.append(_line(_ROW_TYPES[row.sense], _row_name(index)))

    by_column: dict[int, list[tuple[str, float]]] = {
        var.id: [] for var in model.variables
    }
    for var in model.variables:
        if var.cost != 0.0:
            by_column[var.id].append((OBJECTIVE_ROW, var.cost))
    for index, row in enumerate(model.constraints):
        for var, coef in sorted(row.coefficients.items()):
            by_column[var].append((_row_name(index), coef))

    lines.append("COLUMNS")
    in_marker = False
    marker = 0
    for var in model.variables:
        if var.is_integral != in_marker:
            tag = "'INTORG'" if var.is_integral else "'INTEND'"
            lines.append(_line("", f"MARKER{marker:02d}"[:8], "'MARKER'", "", tag))
            marker += 1
            in_marker = var.is_integral
        entries = by_column[var.id] or [(OBJECTIVE_ROW, 0.0)]
        for start in range(0, len(entries), 2):
            pair = entries[start : start + 2]
            fields = [_column_name(var.id), pair[0][0], _number(pair[0][1])]
            if len(pair) == 2:
                fields += [pair[1][0], _number(pair[1][1])]
            lines.append(_line("", *fields))
    if in_marker:
        lines.append(_line("", f"MARKER{marker:02d}"[:8], "'MARKER'", "", "'INTEND'"))

    lines.append("RHS")
    rhs_entries = []
    if model.objective_constant != 0.0:
        rhs_entries.append((OBJECTIVE_ROW, -model.objective_constant))
    rhs_entries += [
        (_row_name(index), row.rhs)
        for index, row in enumerate(model.constraints)
        if row.rhs != 0.0
    ]
    for start in range(0, len(rhs_entries), 2):
        pair = rhs_entries[start : start + 2]
        fields = ["RHS", pair[0][0], _number(pair[0][1])]
        if len(pair) == 2:
            fields += [pair[1][0], _number(pair[1][1])]
        lines.append(_line("", *fields))

    lines.append("BOUNDS")
    for var in model.variables:
        lines.extend(_bound_lines(var))
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def _bound_lines(var) -> list[str]:
    name = _column_name(var.id)
    lower, upper = var.lower, var.upper
    if var.kind is VariableKind.BINARY:
        # BV resets the column to [0, 1]; tightened bounds follow it
        out = [_line("BV", "BND", name)]
        if lower == upper:
            out.append(_line("FX", "BND", name, _number(lower)))
        else:
            if lower != 0.0:
                out.append(_line("LO", "BND", name, _number(lower)))
            if upper != 1.0:
                out.append(_line("UP", "BND", name, _number(upper)))
        return out
    if math.isfinite(lower) and lower == upper:
        return [_line("FX", "BND", name, _number(lower))]
    if math.isinf(lower) and math.isinf(upper):
        return [_line("FR", "BND", name)]
    out = []
    if math.isinf(lower):
        out.append(_line("MI", "BND", name))
    elif lower != 0.0 or var.is_integral:
        out.append(_line("LO", "BND", name, _number(lower)))
    if math.isfinite(upper):
        out.append(_line("UP", "BND", name, _number(upper)))
    elif var.is_integral:
        out.append(_line("PL", "BND", name))
    return out


def export_mps(model: LinearModel, path: str | Path) -> Path:
    target = Path(path)
    target.write_text(render_mps(model), encoding="ascii")
    return target


def import_mps(path: str | Path) -> LinearModel:
    """Reads a fixed-format MPS file written by `export_mps` or any tool using unique names."""
    text = Path(path).read_text(encoding="ascii")
    return parse_mps(text)


def parse_mps(text: str) -> LinearModel:
    name = "model"
    objective_row = None
    row_senses: dict[str, Sense] = {}
    row_order: list[str] = []
    coefficients: dict[str, dict[str, float]] = {}
    costs: dict[str, float] = {}
    column_order: list[str] = []
    integral: set[str] = set()
    rhs: dict[str, float] = {}
    lower: dict[str, float] = {}
    upper: dict[str, float] = {}
    binary: set[str] = set()
    constant = 0.0

    section = None
    in_marker = False
    for raw in text.splitlines():
        if not raw.strip() or raw.startswith("*"):
            continue
        if not raw[0].isspace():
            tokens = raw.split()
            section = tokens[0]
            if section == "NAME" and len(tokens) > 1:
                name = tokens[1].lower()
            continue
        tokens = raw.split()
        if section == "ROWS":
            kind, row = tokens
            if kind == "N":
                objective_row = objective_row or row
            else:
                row_senses[row] = _SENSES[kind]
                row_order.append(row)
                coefficients[row] = {}
        elif section == "COLUMNS":
            if len(tokens) >= 3 and tokens[1] == "'MARKER'":
                in_marker = tokens[2] == "'INTORG'"
                continue
            column = tokens[0]
            if column not in costs:
                costs[column] = 0.0
                column_order.append(column)
                if in_marker:
                    integral.add(column)
            for row, value in zip(tokens[1::2], tokens[2::2]):
                if row == objective_row:
                    costs[column] += float(value)
                else:
                    coefficients[row][column] = float(value)
        elif section == "RHS":
            entries = tokens[1:] if len(tokens) % 2 == 1 else tokens
            for row, value in zip(entries[0::2], entries[1::2]):
                if row == objective_row:
                    constant = -float(value)
                else:
                    rhs[row] = float(value)
        elif section == "BOUNDS":
            kind, column = tokens[0], tokens[2]
            value = float(tokens[3]) if len(tokens) > 3 else None
            if kind == "UP":
                upper[column] = value
            elif kind == "LO":
                lower[column] = value
            elif kind == "FX":
                lower[column] = upper[column] = value
            elif kind == "FR":
                lower[column], upper[column] = -math.inf, math.inf
            elif kind == "MI":
                lower[column] = -math.inf
            elif kind == "PL":
                upper[column] = math.inf
            elif kind == "BV":
                binary.add(column)
                lower[column], upper[column] = 0.0, 1.0

    model = LinearModel(name=name, objective_constant=constant)
    ids = {}
    for column in column_order:
        if column in binary:
            kind = VariableKind.BINARY
        elif column in integral:
            kind = VariableKind.INTEGER
        else:
            kind = VariableKind.CONTINUOUS
        ids[column] = model.add_variable(
            column,
            kind,
            lower.get(column, 0.0),
            upper.get(column, 1.0 if column in binary else math.inf),
            costs[column],
        )
    for row in row_order:
        model.add_constraint(
            row,
            {ids[column]: value for column, value in coefficients[row].items()},
            row_senses[row],
            rhs.get(row, 0.0),
        )
    return model
