"""Parallel branch and bound with a fixed top-level split and a shared incumbent."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError
from .graph import Graph, make_ordering
from .search import (
    Expander,
    Incumbent,
    SearchConfig,
    SearchOutcome,
    SearchStats,
    Variant,
    build_outcome,
    child_candidates,
    colour_candidates,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TopLevelTask:
    """One root branching vertex with its candidate set and inherited bound."""

    vertex: int
    colour: int
    candidates: np.ndarray = field(compare=False)
    inherited: int
    root_bound: int


def _split_root(
    adjacency: np.ndarray, n: int, expander: Expander
) -> tuple[list[TopLevelTask], int]:
    order, colours, k = colour_candidates(adjacency, np.arange(n, dtype=np.int64))
    root_bound = min(k, n) if expander.inherited_variant else k
    tasks = []
    for i in range(len(order) - 1, -1, -1):
        c = int(colours[i])
        tasks.append(
            TopLevelTask(
                vertex=int(order[i]),
                colour=c,
                candidates=child_candidates(adjacency, order, i),
                inherited=expander.child_bound(c, n, k),
                root_bound=root_bound,
            )
        )
    return tasks, k


def _run_task(task: TopLevelTask, template: Expander) -> SearchStats:
    worker = Expander(
        template.adjacency,
        Variant.INHERITED if template.inherited_variant else Variant.BASELINE,
        template.inheritance,
        template.incumbent,
        template.check_bounds,
    )
    incumbent = template.incumbent
    limit = min(task.colour, task.root_bound) if template.inherited_variant else task.colour
    if limit <= incumbent.size:
        return worker.stats

    clique = [task.vertex]
    worker.stats.count_node(1)
    if len(clique) > incumbent.size:
        incumbent.offer(clique)
    if len(task.candidates):
        worker.expand(clique, task.candidates, task.inherited, task.root_bound)
    return worker.stats


def solve_parallel(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    """Distribute root branching vertices over ``cfg.threads`` workers.

    omega is exact; nodes and event counts are summed over workers and depend on
    the interleaving of incumbent updates.
    """
    if cfg.threads < 2:
        raise ConfigError(f"parallel search needs at least 2 threads, got {cfg.threads}")

    started = time.perf_counter()
    variant = cfg.resolved_variant(parallel=True)
    ordering = make_ordering(g, cfg.ordering_policy)
    work = g.relabel(ordering.order)
    incumbent = Incumbent()
    template = Expander(work.matrix, variant, cfg.inheritance, incumbent, cfg.check_bounds)
    stats = SearchStats()

    if g.n:
        tasks, k = _split_root(work.matrix, g.n, template)
        logger.debug(
            "split %d top-level vertices (%d colours) over %d workers",
            len(tasks),
            k,
            cfg.threads,
        )
        with ThreadPoolExecutor(max_workers=cfg.threads) as executor:
            futures = {executor.submit(_run_task, task, template): task for task in tasks}
            for future in as_completed(futures):
                stats.merge(future.result())

    return build_outcome(stats, incumbent, ordering.order, variant, started)
