"""Paired baseline/inherited experiments over instance sets, with CSV and JSON reporting."""

from __future__ import annotations

import csv
import re
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import IO, Any, Iterable, Optional, Sequence, Union

from .dimacs import read_dimacs
from .errors import ConfigError
from .graph import Graph, random_graph
from .run_logger import RunLogger
from .search import ComparisonReport, SearchConfig, SearchOutcome, compare_variants

CSV_COLUMNS = ("instance", "n", "m", "variant", "omega", "nodes", "events", "elapsed_ms")

_SEED_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


@dataclass(frozen=True)
class Instance:
    instance_id: str
    graph: Graph


@dataclass(frozen=True)
class ExperimentRow:
    instance: str
    n: int
    m: int
    variant: str
    omega: int
    nodes: int
    events: int
    elapsed_ms: float

    @classmethod
    def from_outcome(cls, instance: Instance, outcome: SearchOutcome) -> "ExperimentRow":
        return cls(
            instance=instance.instance_id,
            n=instance.graph.n,
            m=instance.graph.edge_count,
            variant=outcome.variant.value,
            omega=outcome.omega,
            nodes=outcome.nodes,
            events=outcome.misleading_events,
            elapsed_ms=outcome.elapsed * 1000.0,
        )


@dataclass
class ExperimentSummary:
    instances: int = 0
    instances_with_events: int = 0
    instances_with_delta: int = 0
    events_total: int = 0
    latent_events_total: int = 0
    baseline_nodes_total: int = 0
    inherited_nodes_total: int = 0
    nodes_equal_fraction: float = 1.0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class ExperimentResult:
    rows: list[ExperimentRow] = field(default_factory=list)
    reports: list[ComparisonReport] = field(default_factory=list)
    summary: ExperimentSummary = field(default_factory=ExperimentSummary)


def load_instances(paths: Iterable[Union[str, Path]]) -> list[Instance]:
    """Read every file up front so a bad instance aborts before any output."""
    return [Instance(Path(path).name, read_dimacs(path)) for path in paths]


def parse_seed_range(text: str) -> range:
    """``"0..199"`` -> ``range(0, 200)``; a single integer is a one-seed range."""
    match = _SEED_RANGE.match(text.strip())
    if match:
        start, stop = int(match.group(1)), int(match.group(2))
        if stop < start:
            raise ConfigError(f"empty seed range {text!r}")
        return range(start, stop + 1)
    try:
        seed = int(text)
    except ValueError:
        raise ConfigError(f"seed range must look like A..B, got {text!r}") from None
    return range(seed, seed + 1)


def random_suite(n: int, p: float, seeds: Iterable[int]) -> list[Instance]:
    return [Instance(f"gnp-{n}-{p:g}-{seed}", random_graph(n, p, seed)) for seed in seeds]


def summarise(reports: Sequence[ComparisonReport]) -> ExperimentSummary:
    summary = ExperimentSummary(instances=len(reports))
    for report in reports:
        events = report.inherited.misleading_events
        summary.events_total += events
        summary.latent_events_total += report.baseline.latent_events
        summary.baseline_nodes_total += report.baseline.nodes
        summary.inherited_nodes_total += report.inherited.nodes
        if events > 0:
            summary.instances_with_events += 1
        if report.nodes_delta > 0:
            summary.instances_with_delta += 1
    if reports:
        equal = sum(1 for report in reports if report.nodes_equal)
        summary.nodes_equal_fraction = equal / len(reports)
    return summary


def run_suite(
    instances: Sequence[Instance],
    cfg: SearchConfig = SearchConfig(),
    run_logger: Optional[RunLogger] = None,
) -> ExperimentResult:
    if cfg.threads != 1:
        raise ConfigError("experiments run sequentially; threads must be 1")
    result = ExperimentResult()
    for instance in instances:
        if run_logger is not None:
            run_logger.start_run(instance.instance_id)
            run_logger.log_config(cfg)
        report = compare_variants(instance.graph, cfg, instance.instance_id)
        result.reports.append(report)
        result.rows.append(ExperimentRow.from_outcome(instance, report.baseline))
        result.rows.append(ExperimentRow.from_outcome(instance, report.inherited))
        if run_logger is not None:
            run_logger.log_outcome(instance.graph, report.baseline)
            run_logger.log_outcome(instance.graph, report.inherited)
            run_logger.log_comparison(report)
            run_logger.end_run()
    result.summary = summarise(result.reports)
    return result


def run_experiment(
    paths: Iterable[Union[str, Path]],
    cfg: SearchConfig = SearchConfig(),
    run_logger: Optional[RunLogger] = None,
) -> ExperimentResult:
    return run_suite(load_instances(paths), cfg, run_logger)


def write_csv(rows: Iterable[ExperimentRow], stream: IO[str], timings: bool = False) -> None:
    """One header row, stable column order. ``elapsed_ms`` stays empty unless ``timings``."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.instance,
                row.n,
                row.m,
                row.variant,
                row.omega,
                row.nodes,
                row.events,
                f"{row.elapsed_ms:.3f}" if timings else "",
            ]
        )
