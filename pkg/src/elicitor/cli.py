"""Command-line front door.

Verbs: recommend, validate, explain, taxonomy, diff.
Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys

from . import default_dataset_path
from .dataset import Dataset, load_dataset, validate_dataset
from .engine import recommend, what_if_diff
from .errors import ElicitorError, UnknownTechniqueError
from .profiles import load_profile
from .report import (
    diff_to_doc,
    recommendation_to_doc,
    render_structured,
    render_text,
    render_trace,
    taxonomy_to_doc,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load(dataset_path: str) -> Dataset:
    with open(dataset_path, "rb") as handle:
        return load_dataset(handle, name=dataset_path)


def _cmd_recommend(args, out) -> int:
    dataset = _load(args.dataset)
    profile, decisions = load_profile(args.profile, dataset)
    result = recommend(profile, dataset, decisions)
    if args.format == "structured":
        out.write(render_structured(recommendation_to_doc(result, dataset)))
    else:
        out.write(render_text(result, dataset))
    return EXIT_OK


def _cmd_validate(args, out) -> int:
    try:
        dataset = _load(args.dataset)
    except ElicitorError as exc:
        out.write(f"{exc.code}: {exc}\n")
        return EXIT_DATA
    report = validate_dataset(dataset)
    for finding in report.errors:
        out.write(f"{finding.code}: {finding.message}\n")
    for finding in report.findings:
        out.write(f"{finding.code}: {finding.message}\n")
    if report.ok:
        out.write(f"ok: dataset {dataset.version} "
                  f"({len(dataset.registry)} techniques, "
                  f"{len(report.findings)} warning(s))\n")
        return EXIT_OK
    return EXIT_DATA


def _cmd_explain(args, out) -> int:
    dataset = _load(args.dataset)
    technique = dataset.registry.lookup(args.technique)
    profile, decisions = load_profile(args.profile, dataset)
    result = recommend(profile, dataset, decisions)
    out.write(render_trace(result, technique))
    return EXIT_OK


def _cmd_taxonomy(args, out) -> int:
    dataset = _load(args.dataset)
    if args.format == "structured":
        out.write(render_structured(taxonomy_to_doc(dataset)))
        return EXIT_OK
    out.write(f"Dataset {dataset.version} (threshold {dataset.threshold})\n\n")
    out.write("Techniques:\n")
    for record in dataset.registry:
        out.write(f"  {record.id} [{record.category}] {record.display_name}\n")
    for dimension in ("project", "people", "process"):
        out.write(f"\n{dimension.capitalize()} attributes:\n")
        for attribute in dataset.taxonomies[dimension].attributes:
            values = ", ".join(attribute.value_ids())
            out.write(f"  {attribute.id} ({attribute.kind}): {values}\n")
    return EXIT_OK


def _cmd_diff(args, out) -> int:
    dataset = _load(args.dataset)
    p1, _ = load_profile(args.profile_a, dataset)
    p2, _ = load_profile(args.profile_b, dataset)
    diff = what_if_diff(p1, p2, dataset)
    if args.format == "structured":
        out.write(render_structured(diff_to_doc(diff, dataset)))
        return EXIT_OK
    for title, members in (("added", diff.added),
                           ("removed", diff.removed),
                           ("unchanged", diff.unchanged)):
        listing = ", ".join(sorted(members)) if members else "(none)"
        out.write(f"{title}: {listing}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="elicitor",
                     description="Recommend requirement elicitation techniques.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--dataset", default=str(default_dataset_path()),
                         help="dataset file (default: shipped dataset)")

    sub = subparsers.add_parser("recommend", help="run a profile through the engine")
    sub.add_argument("profile")
    common(sub)
    sub.add_argument("--format", choices=("text", "structured"), default="text")
    sub.set_defaults(func=_cmd_recommend)

    sub = subparsers.add_parser("validate", help="lint a dataset file")
    common(sub)
    sub.set_defaults(func=_cmd_validate)

    sub = subparsers.add_parser("explain", help="show the evidence for one technique")
    sub.add_argument("profile")
    sub.add_argument("technique")
    common(sub)
    sub.set_defaults(func=_cmd_explain)

    sub = subparsers.add_parser("taxonomy", help="print registry and vocabularies")
    common(sub)
    sub.add_argument("--format", choices=("text", "structured"), default="text")
    sub.set_defaults(func=_cmd_taxonomy)

    sub = subparsers.add_parser("diff", help="what-if diff of two profiles")
    sub.add_argument("profile_a")
    sub.add_argument("profile_b")
    common(sub)
    sub.add_argument("--format", choices=("text", "structured"), default="text")
    sub.set_defaults(func=_cmd_diff)

    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except FileNotFoundError as exc:
        err.write(f"FILE_NOT_FOUND: {exc}\n")
        return EXIT_DATA
    except UnknownTechniqueError as exc:
        err.write(f"{exc.code}: {exc}\n")
        return EXIT_DATA
    except ElicitorError as exc:
        err.write(f"{exc.code}: {exc}\n")
        return EXIT_DATA


def main() -> None:  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
