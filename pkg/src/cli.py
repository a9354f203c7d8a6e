"""
bohrlab command line: radius values, parameter sweeps, verification suites
and sharpness witnesses.

stdout carries only JSON (radius, verify, witness) or CSV (sweep); progress
and summaries go to stderr. Exit codes: 0 all checks passed, 1 a
mathematical violation was found, 2 usage or input error.
"""

import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from .config_manager import ConfigManager, LabSettings
from .errors import BohrLabError
from .radius_solvers import (
    classical_bohr_radius,
    p_family_radius,
    refined_radius,
    rstar_bisect,
    rstar_cardano,
    solve_r0,
    solve_r0_for_distance,
    solve_rg,
)
from .state import JsonReport, WitnessReport
from .subordination_lab import (
    sharpness_witness_thmB,
    witness_theorem1,
    witness_theorem2,
    witness_theorem3,
    witness_theorem_a,
)
from .summary import SummaryRenderer
from .workflow import SUITES, VerificationWorkflow

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

RADIUS_NAMES = ("classical", "refined", "pfamily", "rstar", "r0", "rg")
SWEEP_TARGETS = ("r0", "pfamily", "witness_thmB", "witness_thm1")
WITNESS_THEOREMS = ("thmA", "thmB", "thm1", "thm2", "thm3")
GLOBAL_OPTIONS = ("config", "verbose", "command")


class UsageError(Exception):
    """Bad or missing options detected after argparse accepted the command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="YAML configuration file")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = _Parser(prog="bohrlab", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    radius = subparsers.add_parser("radius", parents=[common], help="compute a named radius")
    radius.add_argument("--name", choices=RADIUS_NAMES, required=True)
    radius.add_argument("--a0", type=float)
    radius.add_argument("--p", type=float)
    radius.add_argument("--lambda", dest="lam", type=float)
    radius.add_argument("--tol", type=float)
    radius.add_argument("--method", choices=("bisect", "cardano"), default="bisect")

    sweep = subparsers.add_parser("sweep", parents=[common], help="tabulate a radius over a0 as CSV")
    sweep.add_argument("--target", choices=SWEEP_TARGETS, required=True)
    sweep.add_argument("--from", dest="start", type=float, default=0.01)
    sweep.add_argument("--to", dest="stop", type=float, default=0.99)
    sweep.add_argument("--steps", type=int, default=50)
    sweep.add_argument("--p", type=float, default=1.0)

    verify = subparsers.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", choices=tuple(SUITES), required=True)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--order", type=int)

    witness = subparsers.add_parser("witness", parents=[common], help="locate where a sharpness witness fails")
    witness.add_argument("--theorem", choices=WITNESS_THEOREMS, required=True)
    witness.add_argument("--a", type=float)
    witness.add_argument("--p", type=float, default=1.0)
    witness.add_argument("--a0", type=float)
    witness.add_argument("--lambda", dest="lam", type=float)
    return parser


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    """Echo of the command options that were given or defaulted."""
    echoed = {key: value for key, value in vars(args).items() if key not in GLOBAL_OPTIONS and value is not None}
    if "lam" in echoed:
        echoed["lambda"] = echoed.pop("lam")
    return echoed


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--lambda" if name == "lam" else f"--{name}" for name in missing)
        raise UsageError(f"{args.command} --{_subject(args)} needs {flags}")


def _subject(args: argparse.Namespace) -> str:
    if args.command == "radius":
        return f"name {args.name}"
    return f"theorem {args.theorem}"


def _distance_from(args: argparse.Namespace) -> float:
    """lambda given directly, or as 1 - a0."""
    if args.lam is not None and args.a0 is not None:
        raise UsageError("give either --a0 or --lambda, not both")
    if args.lam is None and args.a0 is None:
        raise UsageError(f"{args.command} --{_subject(args)} needs --a0 or --lambda")
    return args.lam if args.lam is not None else 1.0 - args.a0


def run_radius(args: argparse.Namespace, settings: LabSettings) -> Tuple[Dict[str, Any], Optional[bool], str]:
    tol = settings.tol if args.tol is None else args.tol
    renderer = SummaryRenderer()

    if args.name == "classical":
        return _exact("classical", classical_bohr_radius())
    if args.name == "refined":
        _require(args, "a0")
        return _exact("refined", refined_radius(args.a0))
    if args.name == "pfamily":
        _require(args, "a0", "p")
        return _exact("pfamily", p_family_radius(args.a0, args.p))
    if args.name == "rstar" and args.method == "cardano":
        return _exact("rstar", rstar_cardano())

    if args.name == "rstar":
        result = rstar_bisect(tol)
    elif args.name == "rg":
        result = solve_rg(tol)
    elif args.lam is not None and args.a0 is None:
        result = solve_r0_for_distance(args.lam, tol)
    else:
        _require(args, "a0")
        if args.lam is not None:
            raise UsageError("give either --a0 or --lambda, not both")
        result = solve_r0(args.a0, tol)
    return result.model_dump(), None, renderer.render_radius(result)


def _exact(name: str, value: float) -> Tuple[Dict[str, Any], Optional[bool], str]:
    payload = {"name": name, "value": value, "residual": 0.0, "exact": True}
    return payload, None, f"{name} = {value:.15f} (closed form)\n"


def _sweep_rows(args: argparse.Namespace) -> Tuple[List[str], List[List[float]]]:
    if args.steps < 2:
        raise UsageError(f"--steps must be at least 2, got {args.steps}")
    if not args.start < args.stop:
        raise UsageError(f"--from must be below --to, got [{args.start}, {args.stop}]")

    grid = [float(a) for a in np.linspace(args.start, args.stop, args.steps)]
    if args.target == "r0":
        return ["param", "value"], [[a, solve_r0(a).value] for a in grid]
    if args.target == "pfamily":
        return ["param", "value"], [[a, p_family_radius(a, args.p)] for a in grid]

    if args.target == "witness_thmB":
        reports = [sharpness_witness_thmB(a, args.p) for a in grid]
    else:
        reports = [witness_theorem1(a) for a in grid]
    rows = [[a, w.difference, w.threshold_predicted, w.threshold_found] for a, w in zip(grid, reports)]
    return ["param", "value", "predicted", "found"], rows


def run_sweep(args: argparse.Namespace, stdout: TextIO) -> None:
    """CSV on stdout; witness targets report |found - predicted| as the value column."""
    header, rows = _sweep_rows(args)
    writer = csv.writer(stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format(value, ".17g") for value in row])
    logger.info("sweep %s: %d rows", args.target, len(rows))


def run_verify(args: argparse.Namespace, settings: LabSettings) -> Tuple[Dict[str, Any], Optional[bool], str]:
    seed = settings.seed if args.seed is None else args.seed
    trials = settings.trials if args.trials is None else args.trials
    order = settings.order if args.order is None else args.order
    args.seed, args.trials, args.order = seed, trials, order

    workflow = VerificationWorkflow(settings)
    report = workflow.run(workflow.create_initial_state(args.suite, seed, trials, order))
    return report.model_dump(), report.passed, SummaryRenderer().render_suite(report)


def run_witness(args: argparse.Namespace, settings: LabSettings) -> Tuple[Dict[str, Any], Optional[bool], str]:
    report: WitnessReport
    if args.theorem == "thmA":
        _require(args, "a")
        report = witness_theorem_a(args.a)
    elif args.theorem == "thmB":
        _require(args, "a")
        report = sharpness_witness_thmB(args.a, args.p)
    elif args.theorem == "thm1":
        report = witness_theorem1(1.0 - _distance_from(args))
    elif args.theorem == "thm2":
        report = witness_theorem2(_distance_from(args))
    else:
        report = witness_theorem3()
    payload = report.model_dump()
    payload["difference"] = report.difference
    return payload, None, SummaryRenderer().render_witness(args.theorem, report)


def _emit_json(stdout: TextIO, settings: LabSettings, command: str, inputs, result, passed) -> None:
    document = JsonReport(
        schema_version=settings.schema_version,
        command=command,
        inputs=inputs,
        result=result,
        passed=passed,
    )
    payload = document.model_dump(by_alias=True, exclude_none=False)
    if passed is None:
        payload.pop("pass")
    stdout.write(json.dumps(payload, sort_keys=True, allow_nan=False) + "\n")


def _configure_logging(verbose: bool, stderr: TextIO) -> None:
    logging.basicConfig(
        stream=stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    _configure_logging(args.verbose, stderr)

    try:
        config_manager = ConfigManager(args.config)
        settings = config_manager.create_settings(config_manager.load_config())

        if args.command == "sweep":
            run_sweep(args, stdout)
            return EXIT_OK

        runners = {"radius": run_radius, "verify": run_verify, "witness": run_witness}
        result, passed, summary = runners[args.command](args, settings)
        _emit_json(stdout, settings, args.command, _inputs(args), result, passed)
        stderr.write(summary)
    except (UsageError, BohrLabError, ValueError, FileNotFoundError) as exc:
        stderr.write(f"bohrlab {args.command}: {exc}\n")
        return EXIT_USAGE

    if passed is False:
        return EXIT_VIOLATION
    return EXIT_OK
