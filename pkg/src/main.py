import argparse
import logging
import sys
from pathlib import Path
from typing import Callable

from src.contexts.pipeline.domain.run_request import STAGES, RunRequest, parse_baseline_route
from src.contexts.pipeline.infrastructure.pipeline_dependencies import (
    get_run_pipeline_use_case,
    get_save_scenario_use_case,
    get_validate_scenario_use_case,
)
from src.contexts.scenario.infrastructure.case_scenario_generator import generate_case_scenario
from src.core.config.settings import settings
from src.core.exceptions.custom_exceptions import (
    DanglingReferenceException,
    DemandMappingException,
    InvalidDisruptionException,
    InvalidScenarioException,
    MissingArtifactException,
    RouteDisconnectedException,
    ScenarioParseException,
    SignalPlanException,
    SolverConfigException,
    Stage1InfeasibleException,
    TurnaroundGenerationException,
    UnreachableSinkException,
)
from src.core.logging.logging_config import configure_logging

logger = logging.getLogger("src.main")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INFEASIBLE = 2
EXIT_UNREACHABLE = 3
EXIT_IO = 4
EXIT_CONFIG = 5

_handlers: list[tuple[type[BaseException], Callable[[BaseException], int]]] = []


def exception_handler(exc_type: type[BaseException]):
    def register(handler: Callable[[BaseException], int]):
        _handlers.append((exc_type, handler))
        return handler

    return register


@exception_handler(Stage1InfeasibleException)
def stage1_infeasible_exception_handler(exc: Stage1InfeasibleException) -> int:
    print(f"error: {exc}", file=sys.stderr)
    for row in exc.irreducible_rows:
        print(f"  conflicting row: {row}", file=sys.stderr)
    return EXIT_INFEASIBLE


@exception_handler(UnreachableSinkException)
def unreachable_sink_exception_handler(exc: UnreachableSinkException) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_UNREACHABLE


@exception_handler(MissingArtifactException)
def missing_artifact_exception_handler(exc: MissingArtifactException) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_IO


@exception_handler(InvalidScenarioException)
def invalid_scenario_exception_handler(exc: InvalidScenarioException) -> int:
    for violation in exc.violations:
        print(violation, file=sys.stderr)
    return EXIT_CONFIG


for _config_error in (
    ScenarioParseException,
    DanglingReferenceException,
    InvalidDisruptionException,
    SolverConfigException,
    SignalPlanException,
    TurnaroundGenerationException,
    RouteDisconnectedException,
    DemandMappingException,
):

    @exception_handler(_config_error)
    def configuration_exception_handler(exc: Exception) -> int:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


@exception_handler(OSError)
def os_error_handler(exc: OSError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_IO


def handle_exception(exc: BaseException) -> int:
    for exc_type, handler in _handlers:
        if isinstance(exc, exc_type):
            return handler(exc)
    logger.exception("Unexpected failure")
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="Metro disruption recovery: train rescheduling and response vehicle dispatch",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run the pipeline or one of its stages")
    run.add_argument("--scenario", required=True, type=Path, help="Scenario JSON file")
    run.add_argument("--out", required=True, type=Path, help="Output directory")
    run.add_argument("--stage", choices=STAGES, default="all")
    run.add_argument("--seed", type=int)
    run.add_argument("--threads", type=int)
    run.add_argument("--eps", type=float)
    run.add_argument("--export-mps", action="store_true", help="Write the stage-1 model as stage1.mps")
    run.add_argument("--dump-indicators", action="store_true", help="Write indicators.csv")
    run.add_argument(
        "--baseline-route",
        action="append",
        default=[],
        metavar="CLASS=c1,c2,...",
        help="Fixed route of one class for the baseline (repeatable)",
    )
    run.add_argument("--logging-config", default=settings.LOGGING_CONFIG)

    validate = commands.add_parser("validate", help="Check a scenario file")
    validate.add_argument("--scenario", required=True, type=Path)
    validate.add_argument("--logging-config", default=settings.LOGGING_CONFIG)

    generate = commands.add_parser("generate-case", help="Write the synthetic case scenario")
    generate.add_argument("--out", required=True, type=Path)
    generate.add_argument("--seed", type=int, default=settings.SOLVER_SEED)
    generate.add_argument("--logging-config", default=settings.LOGGING_CONFIG)
    return parser


def run_command(args: argparse.Namespace) -> int:
    routes = dict(parse_baseline_route(text) for text in args.baseline_route)
    request = RunRequest(
        scenario_path=args.scenario,
        output_dir=args.out,
        stage=args.stage,
        seed=args.seed,
        threads=args.threads,
        eps=args.eps,
        export_mps=args.export_mps,
        dump_indicators=args.dump_indicators,
        baseline_routes=routes,
    )
    manifest = get_run_pipeline_use_case().execute(request)
    print(f"{manifest.status}: {len(manifest.checksums)} artifacts in {request.output_dir}")
    return EXIT_OK


def validate_command(args: argparse.Namespace) -> int:
    report = get_validate_scenario_use_case().execute(args.scenario)
    sys.stdout.write(report.render())
    return EXIT_OK if report.is_empty else EXIT_CONFIG


def generate_case_command(args: argparse.Namespace) -> int:
    scenario = generate_case_scenario(args.seed)
    get_save_scenario_use_case().execute(scenario, args.out)
    print(f"case scenario written to {args.out}")
    return EXIT_OK


COMMANDS = {
    "run": run_command,
    "validate": validate_command,
    "generate-case": generate_case_command,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.logging_config)
    try:
        return COMMANDS[args.command](args)
    except Exception as exc:
        return handle_exception(exc)


if __name__ == "__main__":
    sys.exit(main())
