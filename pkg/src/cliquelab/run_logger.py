"""
Run logger for solver and experiment invocations.

Each run is appended to a log file (when one is configured) with:
- instance name and timestamp
- the search configuration used
- outcomes: omega, node counts, misleading events
- variant comparisons and errors

Lines are echoed to stderr when ``echo`` is set, keeping stdout free for CSV/JSON.
"""

from __future__ import annotations

from datetime import datetime
from pathlib import Path
from typing import Optional

import click

from .graph import Graph
from .search import ComparisonReport, SearchConfig, SearchOutcome


class RunLogger:
    """Logs detailed run information."""

    def __init__(self, log_file: Optional[Path] = None, echo: bool = False) -> None:
        self.log_file = log_file
        self.echo = echo
        self.current_run_log: list[str] = []
        self.start_time: Optional[datetime] = None

    def start_run(self, instance: str) -> None:
        self.current_run_log = []
        self.start_time = datetime.now()
        self.log(f"{'=' * 72}")
        self.log(f"RUN: {instance}")
        self.log(f"TIMESTAMP: {self.start_time:%Y-%m-%d %H:%M:%S}")

    def log(self, message: str) -> None:
        self.current_run_log.append(message)
        if self.log_file is not None:
            with open(self.log_file, "a", encoding="utf-8") as handle:
                handle.write(message + "\n")
        if self.echo:
            click.echo(message, err=True)

    def log_config(self, cfg: SearchConfig) -> None:
        variant = cfg.variant.value if cfg.variant else "auto"
        self.log(
            f"CONFIG: variant={variant} order={cfg.ordering_policy.value} "
            f"threads={cfg.threads} inheritance={cfg.inheritance.value}"
        )

    def log_outcome(self, g: Graph, outcome: SearchOutcome) -> None:
        self.log(
            f"[{outcome.variant.value}] omega={outcome.omega} "
            f"clique={g.labels_of(outcome.clique)} nodes={outcome.nodes} "
            f"events={outcome.misleading_events} latent={outcome.latent_events} "
            f"depth={outcome.max_depth} elapsed={outcome.elapsed:.3f}s"
        )

    def log_comparison(self, report: ComparisonReport) -> None:
        self.log(
            f"COMPARE: omega_equal={report.omega_equal} nodes_equal={report.nodes_equal} "
            f"nodes_delta={report.nodes_delta} "
            f"events={report.inherited.misleading_events}"
        )

    def log_error(self, error_message: str) -> None:
        self.log(f"ERROR: {error_message}")

    def end_run(self) -> None:
        if self.start_time is not None:
            elapsed = (datetime.now() - self.start_time).total_seconds()
            self.log(f"DONE in {elapsed:.2f}s")
        self.start_time = None

    def get_log_contents(self) -> list[str]:
        return self.current_run_log.copy()
