"""Greedy colouring in its vertex-wise and class-wise forms, plus colour-class analysis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional

import numpy as np

from .graph import Graph, VertexOrdering
from .kernels import colour_and_sort, sweep_colour


@dataclass
class OperationCounter:
    """Counts vertex-against-class adjacency checks.

    A check tests one vertex against one colour class, so both procedures stay
    within ``|domain|**2`` checks.
    """

    count: int = 0

    def tick(self, amount: int = 1) -> None:
        self.count += amount


@dataclass(frozen=True)
class Colouring:
    """Ordered colour classes; each class lists its vertices in scan order."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def num_colours(self) -> int:
        return len(self.classes)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(v for cls in self.classes for v in cls)

    @property
    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def is_proper(self, g: Graph) -> bool:
        for cls in self.classes:
            members = set(cls)
            if any(u in members for v in cls for u in g.neighbours(v)):
                return False
        return True

    def is_greedy_tight(self, g: Graph) -> bool:
        """Every vertex in class i has a neighbour in each class j < i."""
        class_of = self.class_of
        for v, i in class_of.items():
            hit = {class_of[u] for u in g.neighbours(v) if u in class_of}
            if any(j not in hit for j in range(i)):
                return False
        return True

    def labelled_classes(self, g: Graph) -> list[list[int]]:
        return [g.labels_of(cls) for cls in self.classes]

    def to_dict(self, g: Graph) -> dict[str, Any]:
        return {"num_colours": self.num_colours, "classes": self.labelled_classes(g)}


def _scan_array(order: VertexOrdering, domain: Iterable[int]) -> np.ndarray:
    return np.asarray(order.restricted(domain), dtype=np.int64)


def _group(vertices: np.ndarray, colours: np.ndarray, k: int) -> Colouring:
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in zip(vertices.tolist(), colours.tolist()):
        classes[c - 1].append(v)
    return Colouring(tuple(tuple(cls) for cls in classes))


def greedy_colour_vertexwise(
    g: Graph,
    domain: Iterable[int],
    order: VertexOrdering,
    counter: Optional[OperationCounter] = None,
) -> Colouring:
    """Scan ``domain`` in ``order``; each vertex takes the smallest non-conflicting class."""
    scan = _scan_array(order, domain)
    sorted_scan = np.empty_like(scan)
    colours = np.empty_like(scan)
    k = colour_and_sort(g.matrix, scan, len(scan), sorted_scan, colours)
    if counter is not None:
        # a vertex placed in class c was tested against classes 1..c
        counter.tick(int(colours.sum()))
    return _group(sorted_scan, colours, k)


def greedy_colour_classwise(
    g: Graph,
    domain: Iterable[int],
    order: VertexOrdering,
    counter: Optional[OperationCounter] = None,
) -> Colouring:
    """Open one class at a time and sweep the uncoloured vertices into it."""
    scan = _scan_array(order, domain)
    colours = np.empty_like(scan)
    k, checks = sweep_colour(g.matrix, scan, len(scan), colours)
    if counter is not None:
        counter.tick(int(checks))
    return _group(scan, colours, int(k))


@dataclass(frozen=True)
class ForcedMembers:
    """Vertices any k-clique in the coloured domain must contain.

    ``impossible`` is set when k exceeds the number of colours.
    """

    vertices: frozenset[int]
    impossible: bool = False


def forced_members(c: Colouring, k: int) -> ForcedMembers:
    if k < 0:
        raise ValueError(f"target clique size must be non-negative, got {k}")
    if k > c.num_colours:
        return ForcedMembers(frozenset(), impossible=True)
    if k < c.num_colours:
        return ForcedMembers(frozenset())
    # one vertex per class, so singleton classes are forced
    return ForcedMembers(frozenset(cls[0] for cls in c.classes if len(cls) == 1))


@dataclass(frozen=True)
class MisleadingVertex:
    vertex: int
    colours_before: int
    colours_after: int

    @property
    def gap(self) -> int:
        return self.colours_after - self.colours_before


def find_all_misleading_vertices(g: Graph, order: VertexOrdering) -> list[MisleadingVertex]:
    """Every vertex whose removal makes the greedy colouring use more colours."""
    everything = set(range(g.n))
    before = greedy_colour_vertexwise(g, everything, order).num_colours
    found = []
    for v in sorted(range(g.n), key=g.label):
        after = greedy_colour_vertexwise(g, everything - {v}, order).num_colours
        if after > before:
            found.append(MisleadingVertex(v, before, after))
    return found


def find_misleading_vertex(g: Graph, order: VertexOrdering) -> Optional[MisleadingVertex]:
    everything = set(range(g.n))
    before = greedy_colour_vertexwise(g, everything, order).num_colours
    for v in sorted(range(g.n), key=g.label):
        after = greedy_colour_vertexwise(g, everything - {v}, order).num_colours
        if after > before:
            return MisleadingVertex(v, before, after)
    return None
