"""The two worked example graphs, kept as 1-based edge lists."""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .dimacs import write_dimacs
from .graph import Graph

# 9 vertices, unique maximum clique {1, 3, 6, 8}
FIGURE_1_EDGES = (
    (1, 3), (1, 5), (1, 6), (1, 8), (1, 9),
    (2, 5), (2, 6), (2, 8),
    (3, 4), (3, 6), (3, 7), (3, 8),
    (4, 8), (5, 6), (6, 8), (7, 8), (8, 9),
)

# 7 vertices: vertex 1 hangs off the 6-cycle 2-5-4-3-6-7-2
FIGURE_2_EDGES = ((1, 2), (2, 5), (5, 4), (4, 3), (3, 6), (6, 7), (7, 2))


def _from_labels(n: int, edges: tuple[tuple[int, int], ...]) -> Graph:
    return Graph.from_edges(n, ((u - 1, v - 1) for u, v in edges))


def figure_1() -> Graph:
    return _from_labels(9, FIGURE_1_EDGES)


def figure_2() -> Graph:
    return _from_labels(7, FIGURE_2_EDGES)


def write_figures(directory: Union[str, Path]) -> list[Path]:
    directory = Path(directory)
    return [
        write_dimacs(figure_1(), directory / "fig1.clq"),
        write_dimacs(figure_2(), directory / "fig2.clq"),
    ]
