"""Line-oriented text format for weighted graphs.

Layout::

    # comments run to end of line
    n m
    w_0 w_1 ... w_{n-1}      (optional; omitted means all weights 1)
    u v                      (m lines, 0-based endpoints, u < v)

The weight line is recognized by token count: after the header there are
either ``n + 2m`` integers (weights present) or ``2m`` (unit weights).
``dumps`` always writes the weight line, so dump/load round-trips are exact.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graphs import WeightedGraph


def _tokens(text: str) -> list[int]:
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        for tok in body.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise GraphFormatError(f"non-integer token {tok!r}") from None
    return out


def loads(text: str) -> WeightedGraph:
    toks = _tokens(text)
    if len(toks) < 2:
        raise GraphFormatError("missing 'n m' header")
    n, m = toks[0], toks[1]
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    rest = toks[2:]
    if len(rest) == n + 2 * m:
        weights = rest[:n]
        flat = rest[n:]
    elif len(rest) == 2 * m:
        weights = [1] * n
        flat = rest
    else:
        raise GraphFormatError(
            f"expected {2 * m} or {n + 2 * m} integers after header, got {len(rest)}"
        )
    edges = []
    for i in range(m):
        u, v = flat[2 * i], flat[2 * i + 1]
        if not 0 <= u < v < n:
            raise GraphFormatError(f"bad edge ({u}, {v}): need 0 <= u < v < {n}")
        edges.append((u, v))
    try:
        return WeightedGraph(n, tuple(sorted(edges)), tuple(weights))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def dumps(g: WeightedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    if g.n:
        lines.append(" ".join(str(w) for w in g.weight))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> WeightedGraph:
    return loads(Path(path).read_text())


def dump(g: WeightedGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g))


def loads_vertex_set(text: str) -> frozenset[int]:
    """Certificate files: whitespace-separated vertex ids, # comments."""
    return frozenset(_tokens(text))


def load_vertex_set(path: str | Path) -> frozenset[int]:
    return loads_vertex_set(Path(path).read_text())
