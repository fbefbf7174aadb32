"""Simple graphs on vertices 0..n-1, induced cycles, classifiers and small-graph enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

MAX_CANON_N = 9
MAX_ENUM_N = 7


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph. Edges are stored as sorted ``(u, v)`` pairs with ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        nb = [0] * self.n
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return tuple(nb)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def __len__(self):
        return self.n


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edge_list))


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``(G[W], relabel)`` where ``relabel`` maps original vertex -> new index.

    New indices follow ascending original index.
    """
    W = sorted(set(W))
    for v in W:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    relabel = {v: i for i, v in enumerate(W)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph(len(W), tuple(edges)), relabel


def cycle_graph(t: int) -> Graph:
    if t < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(t, tuple((i, (i + 1) % t) for i in range(t)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for H in graphs:
        edges.extend((u + off, v + off) for u, v in H.edges)
        off += H.n
    return Graph(off, tuple(edges))


# -- induced cycles ---------------------------------------------------------


def chordless_cycles(G: Graph, min_len: int = 3) -> list[tuple[int, ...]]:
    """All induced cycles of length >= ``min_len``, one per cycle.

    Each cycle starts at its smallest vertex and is oriented so that the
    second vertex is smaller than the last one.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    adj = G.adj
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], inner: int, allowed: int):
        # inner: union of neighbourhoods of path[1:-1]; allowed: vertices > start
        s, last = path[0], path[-1]
        cand = adj[last] & allowed & ~inner
        for x in _bits(cand):
            if x in path:
                continue
            if adj[x] >> s & 1:
                # closing at s; x must not touch internal vertices (ensured by ~inner)
                if len(path) >= 2 and path[1] < x and len(path) + 1 >= min_len:
                    found.append(tuple(path) + (x,))
                continue
            path.append(x)
            extend(path, inner | (adj[last] if len(path) > 2 else 0), allowed & ~(1 << x))
            path.pop()

    full = (1 << G.n) - 1
    for s in range(G.n):
        allowed = full & ~((1 << (s + 1)) - 1)
        for v1 in _bits(adj[s] & allowed):
            extend([s, v1], 0, allowed & ~(1 << v1))
    found.sort(key=lambda c: (len(c), c))
    return found


def is_cycle_graph(G: Graph) -> bool:
    """True iff G is connected, 2-regular and has at least 3 vertices."""
    if G.n < 3 or len(G.edges) != G.n:
        return False
    if any(bin(a).count("1") != 2 for a in G.adj):
        return False
    return len(connected_components(G)) == 1


def connected_components(G: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(_bits(comp))
    return comps


def is_woodroofe(G: Graph) -> bool:
    """No induced cycle of length other than 3 or 5."""
    return all(len(c) == 5 for c in chordless_cycles(G, 4))


def bad_cycle(G: Graph) -> tuple[int, ...] | None:
    """An induced cycle whose length is neither 3 nor 5, if one exists."""
    for c in chordless_cycles(G, 4):
        if len(c) != 5:
            return c
    return None


def induced_p3(G: Graph) -> tuple[int, int, int] | None:
    """An induced path ``(a, mid, b)`` on three vertices, or None."""
    for mid in range(G.n):
        nb = G.neighbors(mid)
        for a, b in combinations(nb, 2):
            if not G.has_edge(a, b):
                return (a, mid, b)
    return None


def _components_are_cliques(G: Graph) -> bool:
    for comp in connected_components(G):
        k = len(comp)
        m = sum(1 for u, v in combinations(comp, 2) if G.has_edge(u, v))
        if m != k * (k - 1) // 2:
            return False
    return True


def is_disjoint_union_complete(G: Graph) -> bool:
    by_components = _components_are_cliques(G)
    by_p3 = induced_p3(G) is None
    assert by_components == by_p3, "clique-component and P3-free tests disagree"
    return by_components


# -- isomorphism ------------------------------------------------------------


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    """Edge-position permutation table: row k gives, for each upper-triangle
    slot, the slot it reads from under permutation k."""
    pairs = list(combinations(range(n), 2))
    index = np.zeros((max(n, 1), max(n, 1)), dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        index[a, b] = index[b, a] = i
    perm_list = list(permutations(range(n)))
    perms = np.array(perm_list, dtype=np.int64).reshape(len(perm_list), n)
    m = len(pairs)
    table = np.empty((len(perms), m), dtype=np.int64)
    for j, (a, b) in enumerate(pairs):
        table[:, j] = index[perms[:, a], perms[:, b]]
    weights = (1 << np.arange(m - 1, -1, -1, dtype=np.int64)) if m else np.zeros(0, np.int64)
    return pairs, table, weights


def _edge_bits(G: Graph) -> np.ndarray:
    pairs, _, _ = _perm_tables(G.n)
    es = set(G.edges)
    return np.array([1 if p in es else 0 for p in pairs], dtype=np.int64)


def _orbit_codes(n: int, bits: np.ndarray) -> np.ndarray:
    _, table, weights = _perm_tables(n)
    if table.shape[1] == 0:
        return np.zeros(1, dtype=np.int64)
    return bits[table] @ weights


def canonical_code(G: Graph) -> int:
    if G.n > MAX_CANON_N:
        raise GraphError(f"canonical form limited to n <= {MAX_CANON_N}")
    return int(_orbit_codes(G.n, _edge_bits(G)).min())


def canonical_form(G: Graph) -> bytes:
    """Lexicographically least upper-triangle adjacency bitstring over all
    relabelings, prefixed by the vertex count byte."""
    code = canonical_code(G)
    m = G.n * (G.n - 1) // 2
    bits = format(code, f"0{m}b") if m else ""
    return bytes([G.n]) + bits.encode()


def graph_from_code(n: int, code: int) -> Graph:
    pairs, _, _ = _perm_tables(n)
    m = len(pairs)
    return Graph(n, tuple(p for j, p in enumerate(pairs) if code >> (m - 1 - j) & 1))


def enumerate_graphs(n: int) -> list[Graph]:
    """One representative (in canonical labeling) per isomorphism class."""
    if n > MAX_ENUM_N:
        raise GraphError(f"enumeration limited to n <= {MAX_ENUM_N}")
    if n <= 1:
        return [Graph(n)]
    pairs, table, weights = _perm_tables(n)
    m = len(pairs)
    seen = np.zeros(1 << m, dtype=bool)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        bits = np.array([mask >> (m - 1 - j) & 1 for j in range(m)], dtype=np.int64)
        orbit = bits[table] @ weights
        seen[orbit] = True
        reps.append(int(orbit.min()))
    reps.sort()
    return [graph_from_code(n, c) for c in reps]


# -- covers -----------------------------------------------------------------


def maximal_independent_sets(G: Graph) -> list[int]:
    """Bitmasks of all maximal independent sets."""
    adj = G.adj
    out = []

    def bk(R: int, P: int, X: int):
        if not P and not X:
            out.append(R)
            return
        for v in _bits(P):
            bk(R | 1 << v, P & ~adj[v] & ~(1 << v), X & ~adj[v] & ~(1 << v))
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << G.n) - 1, 0)
    return sorted(out)


def minimal_vertex_covers(G: Graph) -> list[frozenset[int]]:
    full = (1 << G.n) - 1
    covers = [frozenset(_bits(full & ~s)) for s in maximal_independent_sets(G)]
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def is_very_well_covered(G: Graph) -> bool:
    if G.n % 2:
        return False
    return all(2 * len(c) == G.n for c in minimal_vertex_covers(G))


# -- named constructions ----------------------------------------------------


def suspension_of_cycle(t: int) -> Graph:
    """C_t with a pendant at every cycle vertex: x_i -> i-1, y_i -> t+i-1."""
    if t < 3:
        raise GraphError("suspension needs t >= 3")
    cyc = [(i, (i + 1) % t) for i in range(t)]
    pend = [(i, t + i) for i in range(t)]
    return Graph(2 * t, tuple(cyc + pend))


def build_two_pentagon_H() -> Graph:
    """Two pentagons x1..x5 (0..4) and y1..y5 (5..9) joined by the edge x1y1."""
    xs = [(i, (i + 1) % 5) for i in range(5)]
    ys = [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    return Graph(10, tuple(xs + ys + [(0, 5)]))
