"""Command-line front end: run a verification suite and emit its reports."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, Literal, get_args

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .abelian.oracle import abelian_comparison, kummer_row
from .config import EngineConfig
from .core.canonical import canonical_certificate, canonical_form
from .core.generator import check_genus, enumerate_trivalent_graphs, gamma0
from .core.graph import TrivalentGraph, bridges
from .core.verlinde import verify_rank_identity
from .core.weights import condition0_redundancy_check, enumerate_weights
from .exceptions import (
    InputValidationError,
    ResourceLimitError,
    TrivalentVerlindeError,
)
from .fibers.classify import classify_weights
from .geometry.lattice import lattice_asymptotics
from .geometry.polytope import polytope_of_graph
from .geometry.volume import volume_mc, zeta_volume_value
from .reports.emit import Report, emit
from .reports.models import (
    FiberReport,
    GraphReport,
    VolumeReport,
    WeightsReport,
)
from .utils.graph_io import load_graph, serialize_graph
from .utils.parallel import ordered_map

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_ENGINE = 4

Command = Literal[
    "graphs", "weights", "count", "verify", "polytope", "asymptotics", "fibers", "abelian"
]
COMMANDS: tuple[str, ...] = get_args(Command)


class JobSpec(BaseModel):
    """One command-line job."""

    command: Command
    genera: list[int] = Field(min_length=1)
    levels: list[int] = Field(default_factory=lambda: [1], min_length=1)
    graph: str = "all"
    graph_file: Path | None = None
    format: Literal["json", "csv"] = "json"
    seed: int = Field(default=0, ge=0)
    samples: int = Field(default=1_000_000, ge=1)
    jobs: int = Field(default=1, ge=1)
    max_count: int | None = Field(default=None, ge=1)
    scale: Literal["action", "weight"] = "action"

    @field_validator("genera")
    @classmethod
    def validate_genera(cls, v: list[int]) -> list[int]:
        if any(g < 2 for g in v):
            raise ValueError("genus must be at least 2")
        return sorted(set(v))

    @field_validator("levels")
    @classmethod
    def validate_levels(cls, v: list[int]) -> list[int]:
        if any(k < 1 for k in v):
            raise ValueError("level must be at least 1")
        return sorted(set(v))

    model_config = ConfigDict(validate_assignment=True)

    def engine_config(self) -> EngineConfig:
        overrides: dict[str, Any] = {
            "seed": self.seed,
            "workers": self.jobs,
            "scale": self.scale,
        }
        if self.max_count is not None:
            overrides["max_weight_count"] = self.max_count
        return EngineConfig(**overrides)


def parse_int_list(text: str) -> list[int]:
    """Parse ``A``, ``A..B`` or a comma-separated mix of both."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            low_text, high_text = part.split("..", 1)
            low, high = int(low_text), int(high_text)
            if low > high:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            values.extend(range(low, high + 1))
        else:
            values.append(int(part))
    if not values:
        raise argparse.ArgumentTypeError("empty value list")
    return values


def _int_list(text: str) -> list[int]:
    try:
        return parse_int_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}") from e


def select_graphs(job: JobSpec, genus: int, config: EngineConfig) -> list[TrivalentGraph]:
    """Graphs of ``genus`` named by ``--graph`` / ``--graph-file``."""
    if job.graph_file is not None:
        graph = load_graph(job.graph_file)
        if graph.genus not in job.genera:
            raise InputValidationError(
                f"Graph file {job.graph_file} has genus {graph.genus}, "
                f"not one of the requested genera {job.genera}"
            )
        return [graph] if graph.genus == genus else []
    if job.graph == "gamma0":
        check_genus(genus, config)
        return [gamma0(genus)]
    graphs = enumerate_trivalent_graphs(genus, config)
    if job.graph == "all":
        return graphs
    chosen = [g for g in graphs if canonical_certificate(g).text == job.graph]
    if not chosen:
        raise InputValidationError(f"No genus {genus} graph has certificate {job.graph!r}")
    return chosen


def _graph_key(graph: TrivalentGraph) -> str:
    return canonical_certificate(graph).text


def _graphs_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    reports: list[Report] = []
    for genus in job.genera:
        for graph in select_graphs(job, genus, config):
            form = canonical_form(graph)
            reports.append(
                GraphReport(
                    genus=genus,
                    certificate=_graph_key(graph),
                    edges=list(form.edges),
                    edge_names=dict(form.edge_names),
                    bridges=sorted(bridges(form)),
                    loops=list(form.loops()),
                    text=serialize_graph(form),
                )
            )
    return reports


def _units(job: JobSpec, config: EngineConfig) -> list[tuple[int, int, TrivalentGraph]]:
    return [
        (genus, level, graph)
        for genus in job.genera
        for graph in select_graphs(job, genus, config)
        for level in job.levels
    ]


def _weights_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    def run_unit(unit: tuple[int, int, TrivalentGraph]) -> Report:
        genus, level, graph = unit
        weights = enumerate_weights(graph, level, config)
        return WeightsReport(
            genus=genus,
            level=level,
            graph=_graph_key(graph),
            edge_ids=list(graph.edge_ids),
            weights=[w.labels for w in weights],
            condition0_redundant=condition0_redundancy_check(graph, level, config),
        )

    return ordered_map(run_unit, _units(job, config), job.jobs)


def _count_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    def run_unit(unit: tuple[int, int, TrivalentGraph]) -> Report:
        genus, level, graph = unit
        return verify_rank_identity(genus, level, config, graphs=[graph])

    return ordered_map(run_unit, _units(job, config), job.jobs)


def _verify_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    units = [
        (genus, level, select_graphs(job, genus, config))
        for genus in job.genera
        for level in job.levels
    ]

    def run_unit(unit: tuple[int, int, list[TrivalentGraph]]) -> Report:
        genus, level, graphs = unit
        return verify_rank_identity(genus, level, config, graphs=graphs)

    return ordered_map(run_unit, [u for u in units if u[2]], job.jobs)


def _polytope_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    reports: list[Report] = []
    for genus in job.genera:
        zeta_value = zeta_volume_value(genus, config)
        genus_reports: list[VolumeReport] = []
        for graph in select_graphs(job, genus, config):
            polytope = polytope_of_graph(graph, config=config)
            estimate = volume_mc(polytope, job.samples, config=config)
            genus_reports.append(
                VolumeReport(
                    graph=_graph_key(graph),
                    genus=genus,
                    mean=estimate.mean,
                    stderr=estimate.stderr,
                    samples=estimate.samples,
                    seed=estimate.seed,
                    zeta_value=zeta_value,
                    zeta_value_discrepancy=not estimate.agrees_with(zeta_value),
                )
            )
        # graph independence: every estimate within 3 combined sigmas of the first
        for report in genus_reports[1:]:
            first = genus_reports[0]
            combined = (first.stderr**2 + report.stderr**2) ** 0.5
            report.consistent = abs(report.mean - first.mean) <= 3 * combined
        reports.extend(genus_reports)
    return reports


def _asymptotics_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    reports: list[Report] = []
    for genus in job.genera:
        for graph in select_graphs(job, genus, config):
            polytope = polytope_of_graph(graph, "action")
            estimate = volume_mc(polytope, job.samples, config=config)
            reports.append(
                lattice_asymptotics(graph, job.levels, config, estimate.mean)
            )
    return reports


def _fibers_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    reports: list[Report] = []
    for _, level, graph in _units(job, config):
        classification = classify_weights(graph, level, config)
        key = _graph_key(graph)
        for presentation, invariants, violations in classification.entries:
            reports.append(
                FiberReport(
                    graph=key,
                    level=level,
                    labels=presentation.weight.labels,
                    edge_tags=[t.value for t in presentation.edge_tags],
                    vertex_tags=[t.value for t in presentation.vertex_tags],
                    dimension=invariants.dimension,
                    status=invariants.status.value,
                    t=invariants.t,
                    p=invariants.p,
                    s=invariants.s,
                    h1_free=invariants.h1_free,
                    h1_torsion2=invariants.h1_torsion2,
                    violations=violations,
                )
            )
    return reports


def _abelian_suite(job: JobSpec, config: EngineConfig) -> list[Report]:
    reports: list[Report] = []
    for genus in job.genera:
        for level in job.levels:
            reports.append(kummer_row(genus, level, config))
            reports.append(abelian_comparison(genus, level, config))
    return reports


SUITES: dict[str, Callable[[JobSpec, EngineConfig], list[Report]]] = {
    "graphs": _graphs_suite,
    "weights": _weights_suite,
    "count": _count_suite,
    "verify": _verify_suite,
    "polytope": _polytope_suite,
    "asymptotics": _asymptotics_suite,
    "fibers": _fibers_suite,
    "abelian": _abelian_suite,
}


def _failure(report: Report) -> str:
    data = report.to_dict()
    identity = ", ".join(
        f"{key}={data[key]}" for key in ("genus", "g", "level", "k", "graph") if key in data
    )
    message = f"{type(report).__name__} failed ({identity})"
    if data.get("violations"):
        message += ": " + "; ".join(data["violations"])
    return message


def run(job: JobSpec) -> tuple[int, bytes]:
    """
    Execute one job.

    Returns:
        (exit code, report bytes); the code is 0 iff every report agrees
    """
    try:
        config = job.engine_config()
        reports = SUITES[job.command](job, config)
    except InputValidationError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE, emit([], job.format, job.command, [str(e)])
    except ResourceLimitError as e:
        logger.error(f"Resource limit: {e}")
        return EXIT_BUDGET, emit([], job.format, job.command, [str(e)])
    except TrivalentVerlindeError as e:
        logger.error(f"Engine error: {e}")
        return EXIT_ENGINE, emit([], job.format, job.command, [str(e)])

    failures = [_failure(report) for report in reports if not report.ok]
    code = EXIT_DISAGREEMENT if failures else EXIT_OK
    logger.info(f"{job.command}: {len(reports)} reports, {len(failures)} failures")
    return code, emit(reports, job.format, job.command, failures)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=_int_list, required=True, help="A, A..B or list")
    common.add_argument("--level", type=_int_list, default=[1], help="A, A..B or list")
    common.add_argument(
        "--graph", default="all", help="all, gamma0 or a canonical certificate"
    )
    common.add_argument("--graph-file", type=Path, help="Graph in the text format")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1_000_000)
    common.add_argument("--jobs", type=int, default=1, help="Worker threads")
    common.add_argument("--max-count", type=int, help="Cap on enumerated weights")
    common.add_argument("--scale", choices=["action", "weight"], default="action")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(
        prog="trivalent-verlinde",
        description="Exact counting of admissible weights on trivalent graphs",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    return JobSpec(
        command=args.command,
        genera=args.genus,
        levels=args.level,
        graph=args.graph,
        graph_file=args.graph_file,
        format=args.format,
        seed=args.seed,
        samples=args.samples,
        jobs=args.jobs,
        max_count=args.max_count,
        scale=args.scale,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point for the command line."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        job = job_from_args(args)
    except ValidationError as e:
        parser.print_usage(sys.stderr)
        for error in e.errors():
            field = ".".join(str(p) for p in error["loc"])
            print(f"{parser.prog}: error: {field}: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE

    code, output = run(job)
    sys.stdout.buffer.write(output)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
