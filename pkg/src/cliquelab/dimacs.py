"""DIMACS ``p edge`` reader and writer."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

from .errors import DimacsParseError
from .graph import Graph

logger = logging.getLogger(__name__)

PROBLEM_FORMATS = ("edge", "col")


def _to_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(f"malformed token {token!r}", line_number) from None


def parse_dimacs(text: Union[str, bytes]) -> Graph:
    """Parse DIMACS text into a :class:`Graph`.

    Duplicate edge lines are idempotent. A declared edge count that disagrees
    with the number of distinct edges is logged as a warning.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise DimacsParseError(f"input is not ASCII ({exc.reason})") from None

    n = -1
    declared_m = 0
    rows: list[int] = []
    distinct = 0

    for line_number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue

        kind = tokens[0]
        if kind == "p":
            if n >= 0:
                raise DimacsParseError("duplicate problem line", line_number)
            if len(tokens) != 4 or tokens[1] not in PROBLEM_FORMATS:
                raise DimacsParseError("expected 'p edge <n> <m>'", line_number)
            n = _to_int(tokens[2], line_number)
            declared_m = _to_int(tokens[3], line_number)
            if n < 0 or declared_m < 0:
                raise DimacsParseError("vertex and edge counts must be non-negative", line_number)
            rows = [0] * n
        elif kind == "e":
            if n < 0:
                raise DimacsParseError("edge line before problem line", line_number)
            if len(tokens) != 3:
                raise DimacsParseError("expected 'e <u> <v>'", line_number)
            u = _to_int(tokens[1], line_number)
            v = _to_int(tokens[2], line_number)
            for endpoint in (u, v):
                if not 1 <= endpoint <= n:
                    raise DimacsParseError(
                        f"endpoint {endpoint} out of range [1, {n}]", line_number
                    )
            if u == v:
                raise DimacsParseError(f"self-loop on vertex {u}", line_number)
            u -= 1
            v -= 1
            if not rows[u] >> v & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                distinct += 1
        else:
            raise DimacsParseError(f"unknown line type {kind!r}", line_number)

    if n < 0:
        raise DimacsParseError("missing 'p edge' line")

    if distinct != declared_m:
        logger.warning(
            "problem line declares %d edges but %d distinct edges were parsed",
            declared_m,
            distinct,
        )

    return Graph(n, tuple(rows))


def to_dimacs(g: Graph) -> str:
    """Canonical DIMACS text: edges u < v, lexicographic, 1-based, no trailing newline."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines)


def read_dimacs(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        return parse_dimacs(path.read_bytes())
    except DimacsParseError as exc:
        raise exc.with_source(str(path)) from None


def write_dimacs(g: Graph, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dimacs(g) + "\n", encoding="ascii")
    return path
