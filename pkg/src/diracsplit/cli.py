"""Command-line front end: run verification suites, emit reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
or configuration error, 3 JSON report path unwritable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .reports import Report, format_human
from .suites import (
    BACKEND_CHOICES,
    DEFAULT_SEED,
    REP_CHOICES,
    RunConfig,
    SUITE_NAMES,
    run,
)

EXIT_OK = 0
EXIT_CHECK_FAILURES = 1
EXIT_USAGE = 2
EXIT_JSON_UNWRITABLE = 3

_CONFIG_KEYS = (
    "suite",
    "rep",
    "backend",
    "tol",
    "trials",
    "seed",
    "mass_range",
    "momentum_range",
)


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run the Dirac subsolution verification suites.",
    )
    parser.add_argument(
        "suite",
        choices=SUITE_NAMES + ("all",),
        help="which check family to run",
    )
    parser.add_argument("--rep", choices=REP_CHOICES, default=None,
                        help="gamma representation (default spinor)")
    parser.add_argument("--backend", choices=BACKEND_CHOICES, default=None,
                        help="arithmetic backend selection (default both)")
    parser.add_argument("--tol", type=float, default=None,
                        help="float residual tolerance (default 1e-10)")
    parser.add_argument("--trials", type=int, default=None,
                        help="fuzz trial count (default 1000)")
    parser.add_argument("--seed", type=int, default=None,
                        help="64-bit fuzz seed")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write the JSON report to PATH")
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="JSON config file; explicit flags override it")
    return parser


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    unknown = sorted(set(data) - set(_CONFIG_KEYS))
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")
    return data


def _assemble_config(args: argparse.Namespace) -> RunConfig:
    values = {"suite": args.suite}
    if args.config is not None:
        file_values = _load_config_file(args.config)
        for key in ("rep", "backend", "tol", "trials", "seed"):
            if key in file_values:
                values[key] = file_values[key]
        for key in ("mass_range", "momentum_range"):
            if key in file_values:
                rng = file_values[key]
                if not (isinstance(rng, (list, tuple)) and len(rng) == 2):
                    raise UsageError(f"{key} must be a two-element list")
                values[key] = (float(rng[0]), float(rng[1]))
        # the suite positional is always explicit on the command line,
        # so a "suite" key in the file never overrides it
    for key in ("rep", "backend", "tol", "trials", "seed"):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag
    try:
        config = RunConfig(**values)
        config.validate()
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return config


def _emit_json(report: Report, path: str) -> None:
    payload = json.dumps(report.to_json_dict(), indent=2) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        config = _assemble_config(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = run(config)
    sys.stdout.write(format_human(report))

    if args.json is not None:
        try:
            _emit_json(report, args.json)
        except OSError as exc:
            print(f"error: cannot write JSON report: {exc}", file=sys.stderr)
            return EXIT_JSON_UNWRITABLE

    return EXIT_OK if report.failed == 0 else EXIT_CHECK_FAILURES


if __name__ == "__main__":
    sys.exit(main())
