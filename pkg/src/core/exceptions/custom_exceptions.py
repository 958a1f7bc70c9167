class ScenarioParseException(Exception):
    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class DanglingReferenceException(Exception):
    def __init__(self, kind: str, reference: object, owner: str):
        self.kind = kind
        self.reference = reference
        self.owner = owner
        super().__init__(f"{owner} references unknown {kind} {reference!r}")


class InvalidDisruptionException(Exception):
    pass


class TurnaroundGenerationException(Exception):
    def __init__(self, station: int):
        self.station = station
        super().__init__(
            f"Boundary station {station} is not turnback-capable; "
            "no turnaround service can be generated."
        )


class IndicatorIncompleteException(Exception):
    def __init__(self, symbol: str, key: object):
        self.symbol = symbol
        self.key = key
        super().__init__(f"Indicator {symbol} is missing an entry for {key!r}")


class ModelDefinitionException(Exception):
    pass


class SolverConfigException(Exception):
    pass


class Stage1InfeasibleException(Exception):
    def __init__(self, message: str, irreducible_rows: list[str] | None = None):
        self.irreducible_rows = irreducible_rows or []
        super().__init__(message)


class DemandMappingException(Exception):
    pass


class SignalPlanException(Exception):
    pass


class UnreachableSinkException(Exception):
    pass


class RouteDisconnectedException(Exception):
    pass


class MissingArtifactException(Exception):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"Required artifact not found: {path}")


class SolverStatusException(Exception):
    def __init__(self, status: str, stage: str):
        self.status = status
        self.stage = stage
        super().__init__(f"[{stage}] solver stopped without an optimum: {status}")


class InvalidScenarioException(Exception):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__(f"Scenario violates {len(violations)} invariants: " + "; ".join(violations))
