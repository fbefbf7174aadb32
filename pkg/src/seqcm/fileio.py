"""Text formats for graphs and edge weights.

Graph file::

    n 5
    0 1
    1 2      # comments start with '#'

Weight file: one ``u v w`` line per edge of the companion graph.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError


class InputError(ValueError):
    """Malformed input; the message carries the file and line number."""


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(fields: list[str], where: str) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InputError(f"{where}: expected integers, got {' '.join(fields)!r}") from None


def parse_graph(text: str, name: str = "<graph>") -> Graph:
    n = None
    edges = []
    for lineno, fields in _lines(text):
        where = f"{name}:{lineno}"
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InputError(f"{where}: first line must be 'n <count>'")
            (n,) = _ints(fields[1:], where)
            if n < 0:
                raise InputError(f"{where}: negative vertex count")
            continue
        if len(fields) != 2:
            raise InputError(f"{where}: edge line needs two vertices")
        u, v = _ints(fields, where)
        if u == v:
            raise InputError(f"{where}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{where}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise InputError(f"{name}: missing 'n <count>' header")
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:
        raise InputError(f"{name}: {exc}") from None


def parse_weights(text: str, G: Graph, name: str = "<weights>") -> dict[tuple[int, int], int]:
    edges = set(G.edges)
    w: dict[tuple[int, int], int] = {}
    for lineno, fields in _lines(text):
        where = f"{name}:{lineno}"
        if len(fields) != 3:
            raise InputError(f"{where}: weight line must be 'u v w'")
        u, v, c = _ints(fields, where)
        e = (min(u, v), max(u, v))
        if e not in edges:
            raise InputError(f"{where}: ({u}, {v}) is not an edge of the graph")
        if e in w:
            raise InputError(f"{where}: edge ({u}, {v}) weighted twice")
        if c < 1:
            raise InputError(f"{where}: weight must be a positive integer")
        w[e] = c
    missing = sorted(edges - set(w))
    if missing:
        raise InputError(f"{name}: no weight for edges {missing}")
    return w


def format_graph(G: Graph) -> str:
    return "\n".join([f"n {G.n}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def format_weights(w: dict[tuple[int, int], int]) -> str:
    return "".join(f"{u} {v} {c}\n" for (u, v), c in sorted(w.items()))


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_graph(text, str(path))


def read_weights(path: str | Path, G: Graph) -> dict[tuple[int, int], int]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_weights(text, G, str(path))
