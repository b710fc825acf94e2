"""Shared fixtures for the cliquelab test suite."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from cliquelab.figures import FIGURE_2_EDGES, figure_1, figure_2
from cliquelab.graph import Graph

REPO_ROOT = Path(__file__).resolve().parent.parent
INSTANCES_DIR = REPO_ROOT / "instances"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def fig1() -> Graph:
    return figure_1()


@pytest.fixture
def fig2() -> Graph:
    return figure_2()


@pytest.fixture
def fig1_path() -> Path:
    return INSTANCES_DIR / "fig1.clq"


@pytest.fixture
def fig2_path() -> Path:
    return INSTANCES_DIR / "fig2.clq"


@pytest.fixture
def apex_graph() -> Graph:
    """The misleading 7-vertex example plus vertex 8 joined to all of 2..7.

    Branching on 8 first hands the child the 6-cycle, which greedy colouring
    needs three colours for while the inherited bound is two.
    """
    edges = list(FIGURE_2_EDGES) + [(8, v) for v in range(2, 8)]
    return Graph.from_edges(8, ((u - 1, v - 1) for u, v in edges))


@pytest.fixture
def golden() -> Callable[[str, Any], None]:
    """Compare ``value`` with the committed ``tests/golden/<name>.json``."""

    def check(name: str, value: Any) -> None:
        path = GOLDEN_DIR / f"{name}.json"
        if not path.exists():
            pytest.fail(f"missing golden file {path.name}")
        assert json.loads(path.read_text()) == value

    return check
