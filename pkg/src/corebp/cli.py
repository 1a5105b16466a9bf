"""Command-line interface.

Every subcommand reads one model document, runs the pipeline, and prints
the sections it is about. Exit codes: 0 = success (warnings allowed),
1 = validation errors, 2 = unreadable/unparseable document.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .document import ModelDocumentError, parse_model
from .pipeline import run_pipeline
from .rendering import SECTIONS, render

_COMMAND_SECTIONS: dict[str, tuple[str, ...]] = {
    "validate": ("validation",),
    "prioritize": ("validation", "priorities"),
    "classify": ("validation", "classifications", "config_echo"),
    "plan": ("validation", "plan", "config_echo"),
    "report": SECTIONS,
}

_COMMAND_HELP = {
    "validate": "check the model and report violations",
    "prioritize": "compute goal and process priorities",
    "classify": "classify processes against the decision table",
    "plan": "group, merge, categorize, and select the release",
    "report": "full report: all of the above",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corebp",
        description="Decision support for finding core business processes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="model document (JSON)")
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format (default: text)"
    )
    common.add_argument(
        "--threshold", type=float, default=None, metavar="REAL",
        help="absolute high/low priority cut; overrides the file config",
    )
    common.add_argument(
        "--merge-threshold", type=float, default=None, metavar="REAL", dest="merge_threshold",
        help="dependency strength at which processes merge; overrides the file config",
    )
    common.add_argument(
        "--capacity", type=int, default=None, metavar="N",
        help="units selected for the current release; overrides the file config",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in _COMMAND_HELP.items():
        subparsers.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = parse_model(args.file)
    except ModelDocumentError as exc:
        print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return 2

    config = model.config
    if args.threshold is not None:
        config = replace(config, priority_threshold=args.threshold)
    if args.merge_threshold is not None:
        config = replace(config, merge_threshold=args.merge_threshold)
    if args.capacity is not None:
        config = replace(config, capacity=args.capacity)

    report = run_pipeline(model.with_config(config))
    sys.stdout.write(render(report, args.format, _COMMAND_SECTIONS[args.command]))
    return 0 if report.validation.ok else 1


if __name__ == "__main__":
    sys.exit(main())
