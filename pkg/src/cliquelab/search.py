"""Colour-bounded branch and bound for maximum clique, with misleading-bound instrumentation.

The expansion works on the graph relabelled by the configured vertex ordering, so
"the ordering restricted to P" is simply ascending bit order of the candidate set.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Optional

import numpy as np

from .errors import ConfigError, OracleLimitError, SearchInvariantError
from .graph import Graph, OrderingPolicy, make_ordering
from .kernels import colour_and_sort

DEFAULT_ORACLE_LIMIT = 30

NodeObserver = Callable[[tuple[int, ...], frozenset[int], int], None]


class Variant(str, Enum):
    BASELINE = "baseline"
    INHERITED = "inherited"


class Inheritance(str, Enum):
    COLOUR_CLASS = "colour-class"
    PARENT_TOTAL = "parent-total"


@dataclass(frozen=True)
class SearchConfig:
    """Solver settings.

    ``variant=None`` resolves to baseline for sequential runs and inherited for
    parallel runs. ``inheritance`` selects what flows down to a child:
    ``colour-class`` passes ``min(c, b_in) - 1`` for a branching vertex of colour c,
    ``parent-total`` passes the parent's effective bound minus one.
    """

    variant: Optional[Variant] = None
    ordering_policy: OrderingPolicy = OrderingPolicy.NATURAL
    threads: int = 1
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    inheritance: Inheritance = Inheritance.COLOUR_CLASS
    check_bounds: bool = True

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ConfigError(f"threads must be at least 1, got {self.threads}")
        if self.oracle_limit < 1:
            raise ConfigError(f"oracle_limit must be at least 1, got {self.oracle_limit}")
        if self.variant is not None:
            object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "ordering_policy", OrderingPolicy(self.ordering_policy))
        object.__setattr__(self, "inheritance", Inheritance(self.inheritance))

    def resolved_variant(self, parallel: bool = False) -> Variant:
        if self.variant is not None:
            return self.variant
        return Variant.INHERITED if parallel else Variant.BASELINE


@dataclass(frozen=True)
class SearchOutcome:
    omega: int
    clique: frozenset[int]
    nodes: int
    misleading_events: int
    latent_events: int
    max_depth: int
    depth_nodes: tuple[int, ...]
    elapsed: float
    variant: Variant

    def to_dict(self, g: Graph, timings: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {
            "variant": self.variant.value,
            "omega": self.omega,
            "clique": g.labels_of(self.clique),
            "nodes": self.nodes,
            "misleading_events": self.misleading_events,
            "latent_events": self.latent_events,
            "max_depth": self.max_depth,
            "depth_nodes": list(self.depth_nodes),
        }
        if timings:
            data["elapsed"] = self.elapsed
        return data


class Incumbent:
    """Best clique so far. Updates are compare-and-raise under a lock.

    ``size`` may be read without the lock: a reader can see a stale value but
    never a decreased one.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.clique: tuple[int, ...] = ()
        self.size = 0

    def offer(self, clique: list[int]) -> bool:
        with self._lock:
            if len(clique) <= self.size:
                return False
            self.clique = tuple(clique)
            self.size = len(clique)
            return True

    def snapshot(self) -> tuple[int, tuple[int, ...]]:
        with self._lock:
            return self.size, self.clique


@dataclass
class SearchStats:
    nodes: int = 0
    misleading_events: int = 0
    latent_events: int = 0
    depth_nodes: list[int] = field(default_factory=list)

    def count_node(self, depth: int) -> None:
        self.nodes += 1
        while len(self.depth_nodes) < depth:
            self.depth_nodes.append(0)
        self.depth_nodes[depth - 1] += 1

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.misleading_events += other.misleading_events
        self.latent_events += other.latent_events
        for i, count in enumerate(other.depth_nodes):
            if i < len(self.depth_nodes):
                self.depth_nodes[i] += count
            else:
                self.depth_nodes.append(count)


def colour_candidates(
    adjacency: np.ndarray, candidates: np.ndarray
) -> tuple[np.ndarray, np.ndarray, int]:
    """Candidates in colour order, their 1-based colours and the colour count."""
    order = np.empty_like(candidates)
    colours = np.empty_like(candidates)
    k = colour_and_sort(adjacency, candidates, len(candidates), order, colours)
    return order, colours, int(k)


def child_candidates(adjacency: np.ndarray, order: np.ndarray, i: int) -> np.ndarray:
    """Neighbours of ``order[i]`` among ``order[:i]``, back in ascending vertex order."""
    pool = order[:i]
    return np.sort(pool[adjacency[order[i], pool]])


class Expander:
    """Recursive expansion over (clique, candidates, inherited bound).

    Candidate sets are ascending int64 arrays of vertices of the relabelled graph.
    """

    def __init__(
        self,
        adjacency: np.ndarray,
        variant: Variant,
        inheritance: Inheritance,
        incumbent: Incumbent,
        check_bounds: bool = True,
        observer: Optional[Callable[[list[int], np.ndarray, int], None]] = None,
    ) -> None:
        self.adjacency = adjacency
        self.inherited_variant = variant is Variant.INHERITED
        self.inheritance = inheritance
        self.parent_total = inheritance is Inheritance.PARENT_TOTAL
        self.incumbent = incumbent
        self.check_bounds = check_bounds
        self.observer = observer
        self.stats = SearchStats()

    def child_bound(self, colour: int, inherited: int, colours_used: int) -> int:
        if self.parent_total:
            return min(colours_used, inherited) - 1
        return min(colour, inherited) - 1

    def expand(
        self,
        clique: list[int],
        candidates: np.ndarray,
        inherited: int,
        parent_bound: Optional[int] = None,
    ) -> None:
        order, colours, k = colour_candidates(self.adjacency, candidates)

        if k > inherited:
            self.stats.latent_events += 1
            if self.inherited_variant:
                self.stats.misleading_events += 1

        bound = min(k, inherited) if self.inherited_variant else k
        if (
            self.check_bounds
            and self.inherited_variant
            and parent_bound is not None
            and bound > parent_bound - 1
        ):
            raise SearchInvariantError(
                f"child bound {bound} exceeds parent bound {parent_bound} - 1 "
                f"at depth {len(clique)}"
            )
        if self.observer is not None:
            self.observer(clique, candidates, bound)

        incumbent = self.incumbent
        for i in range(len(order) - 1, -1, -1):
            c = int(colours[i])
            limit = min(c, inherited) if self.inherited_variant else c
            if len(clique) + limit <= incumbent.size:
                break

            clique.append(int(order[i]))
            self.stats.count_node(len(clique))
            if len(clique) > incumbent.size:
                incumbent.offer(clique)

            child = child_candidates(self.adjacency, order, i)
            if len(child):
                self.expand(clique, child, self.child_bound(c, inherited, k), bound)
            clique.pop()


def build_outcome(
    stats: SearchStats,
    incumbent: Incumbent,
    order: tuple[int, ...],
    variant: Variant,
    started: float,
) -> SearchOutcome:
    size, witness = incumbent.snapshot()
    return SearchOutcome(
        omega=size,
        clique=frozenset(order[v] for v in witness),
        nodes=stats.nodes,
        misleading_events=stats.misleading_events if variant is Variant.INHERITED else 0,
        latent_events=stats.latent_events,
        max_depth=len(stats.depth_nodes),
        depth_nodes=tuple(stats.depth_nodes),
        elapsed=time.perf_counter() - started,
        variant=variant,
    )


def solve_max_clique(
    g: Graph,
    cfg: SearchConfig = SearchConfig(),
    observer: Optional[NodeObserver] = None,
) -> SearchOutcome:
    """Sequential exact maximum clique. Deterministic for identical inputs.

    ``observer``, when given, is called at every node with the current clique and
    candidate set (vertices of ``g``) and the effective bound.
    """
    started = time.perf_counter()
    variant = cfg.resolved_variant()
    ordering = make_ordering(g, cfg.ordering_policy)
    work = g.relabel(ordering.order)
    incumbent = Incumbent()

    hook: Optional[Callable[[list[int], np.ndarray, int], None]] = None
    if observer is not None:
        notify = observer

        def _translate(clique: list[int], candidates: np.ndarray, bound: int) -> None:
            notify(
                tuple(ordering.order[v] for v in clique),
                frozenset(ordering.order[v] for v in candidates.tolist()),
                bound,
            )

        hook = _translate

    expander = Expander(
        work.matrix, variant, cfg.inheritance, incumbent, cfg.check_bounds, hook
    )
    if g.n:
        expander.expand([], np.arange(g.n, dtype=np.int64), g.n)
    return build_outcome(expander.stats, incumbent, ordering.order, variant, started)


def brute_force_omega(
    g: Graph, limit: int = DEFAULT_ORACLE_LIMIT
) -> tuple[int, frozenset[int]]:
    """Exact clique number by Bron–Kerbosch enumeration of maximal cliques.

    Works on plain neighbour sets and shares nothing with the colouring search.
    """
    if g.n > limit:
        raise OracleLimitError(f"oracle refuses graphs with n={g.n} > limit {limit}")

    neighbours = [set(g.neighbours(v)) for v in range(g.n)]
    best: list[int] = []

    def extend(clique: list[int], candidates: set[int], excluded: set[int]) -> None:
        nonlocal best
        if not candidates and not excluded:
            if len(clique) > len(best):
                best = list(clique)
            return
        pivot = min(candidates | excluded, key=lambda u: (-len(candidates & neighbours[u]), u))
        for v in sorted(candidates - neighbours[pivot]):
            clique.append(v)
            extend(clique, candidates & neighbours[v], excluded & neighbours[v])
            clique.pop()
            candidates.discard(v)
            excluded.add(v)

    extend([], set(range(g.n)), set())
    return len(best), frozenset(best)


@dataclass(frozen=True)
class ComparisonReport:
    instance_id: str
    baseline: SearchOutcome
    inherited: SearchOutcome

    @property
    def omega_equal(self) -> bool:
        return self.baseline.omega == self.inherited.omega

    @property
    def nodes_equal(self) -> bool:
        return self.baseline.nodes == self.inherited.nodes

    @property
    def nodes_delta(self) -> int:
        return self.baseline.nodes - self.inherited.nodes

    def to_dict(self, g: Graph, timings: bool = True) -> dict[str, Any]:
        return {
            "instance": self.instance_id,
            "baseline": self.baseline.to_dict(g, timings),
            "inherited": self.inherited.to_dict(g, timings),
            "omega_equal": self.omega_equal,
            "nodes_equal": self.nodes_equal,
            "nodes_delta": self.nodes_delta,
        }


def compare_variants(
    g: Graph, cfg: SearchConfig = SearchConfig(), instance_id: str = ""
) -> ComparisonReport:
    """Run baseline and inherited with the same ordering and pair the outcomes."""
    if cfg.threads != 1:
        raise ConfigError("variant comparison is defined on sequential runs (threads=1)")
    baseline = solve_max_clique(g, replace(cfg, variant=Variant.BASELINE))
    inherited = solve_max_clique(g, replace(cfg, variant=Variant.INHERITED))
    report = ComparisonReport(instance_id, baseline, inherited)
    if not report.omega_equal:
        raise SearchInvariantError(
            f"{instance_id or 'instance'}: baseline omega {baseline.omega} "
            f"!= inherited omega {inherited.omega}"
        )
    return report


def solve(g: Graph, cfg: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Dispatch to the sequential or parallel solver according to ``cfg.threads``."""
    if cfg.threads > 1:
        from .parallel import solve_parallel

        return solve_parallel(g, cfg)
    return solve_max_clique(g, cfg)
