"""Immutable bitset graphs, induced subgraphs, random instances and vertex orderings."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices 0..n-1.

    ``adjacency[v]`` is an int used as a bitset of neighbours. ``labels[v]`` is the
    1-based name printed in reports; parsed graphs keep their DIMACS names and
    induced subgraphs keep the labels of the vertices they retain.
    """

    n: int
    adjacency: tuple[int, ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows for a graph on {self.n} vertices"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[int]] = None,
    ) -> "Graph":
        """Build a graph from 0-based edge pairs. Duplicates are ignored."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels else ())

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def matrix(self) -> np.ndarray:
        """Boolean adjacency matrix, as the colouring kernels take it. Do not mutate."""
        matrix = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = True
        return matrix

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        mask = to_mask(members)
        return all(
            (self.adjacency[v] | (1 << v)) & mask == mask for v in members
        )

    def label(self, v: int) -> int:
        return self.labels[v]

    def labels_of(self, vertices: Iterable[int]) -> list[int]:
        return sorted(self.labels[v] for v in vertices)

    def index_of_label(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"no vertex labelled {label}") from None

    def validate(self) -> None:
        """Check symmetry, absence of self-loops and bit range."""
        limit = self.vertex_mask
        for v, row in enumerate(self.adjacency):
            if row & ~limit:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph whose vertex i is ``order[i]`` of this graph."""
        position = {v: i for i, v in enumerate(order)}
        rows = tuple(
            to_mask(position[u] for u in iter_bits(self.adjacency[v])) for v in order
        )
        return Graph(self.n, rows, tuple(self.labels[v] for v in order))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``; new vertex i is the i-th smallest kept vertex."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    position = {v: i for i, v in enumerate(kept)}
    keep_mask = to_mask(kept)
    rows = tuple(
        to_mask(position[u] for u in iter_bits(g.adjacency[v] & keep_mask)) for v in kept
    )
    return Graph(len(kept), rows, tuple(g.labels[v] for v in kept))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p).

    The generator is ``random.Random(seed)`` (Mersenne Twister MT19937). Pairs are
    visited as ``for u in range(n): for v in range(u + 1, n)`` and an edge is added
    iff ``rng.random() < p``. Both choices are fixed so that pinned instances stay
    stable across runs and platforms.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


class OrderingPolicy(str, Enum):
    NATURAL = "natural"
    DEGREE_DESC = "degree-desc"
    CUSTOM = "custom"


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of 0..n-1 giving position -> vertex."""

    order: tuple[int, ...]
    policy: OrderingPolicy = OrderingPolicy.CUSTOM

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("ordering must be a permutation of 0..n-1")

    @classmethod
    def from_permutation(cls, order: Iterable[int]) -> "VertexOrdering":
        return cls(tuple(order), OrderingPolicy.CUSTOM)

    def __len__(self) -> int:
        return len(self.order)

    def restricted(self, domain: Iterable[int]) -> list[int]:
        """Vertices of ``domain`` in this ordering's relative order."""
        wanted = set(domain)
        return [v for v in self.order if v in wanted]


def make_ordering(
    g: Graph, policy: OrderingPolicy | str = OrderingPolicy.NATURAL
) -> VertexOrdering:
    policy = OrderingPolicy(policy)
    if policy is OrderingPolicy.NATURAL:
        return VertexOrdering(tuple(range(g.n)), policy)
    if policy is OrderingPolicy.DEGREE_DESC:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        return VertexOrdering(tuple(order), policy)
    raise ValueError("custom orderings are built with VertexOrdering.from_permutation")
