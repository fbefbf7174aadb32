"""Monomial ideals: colons, radicals, associated radicals and primes, polarization.

Monomials are exponent tuples of length ``n``.  Squarefree monomials are
also handled as bitmasks over the variables, which is what the homology
side consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from .graphs import Graph, _bits

Monomial = tuple[int, ...]
WeightFunction = Mapping[tuple[int, int], int]

# lattice points processed per numpy block
_BLOCK = 1 << 15


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return sorted(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n`` variables with sorted minimal generators.

    The unit ideal has ``unit=True`` and no generators; the zero ideal has
    neither generators nor the flag.
    """

    n: int
    gens: tuple[Monomial, ...] = ()
    unit: bool = False

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Iterable[int]]) -> "MonomialIdeal":
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        if any(sum(g) == 0 for g in gens):
            return cls(n, (), True)
        return cls(n, tuple(_minimalize(gens)))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "MonomialIdeal":
        return cls.from_generators(n, (mask_to_monomial(m, n) for m in masks))

    @cached_property
    def squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Support bitmasks of the generators (meaningful for squarefree ideals)."""
        return tuple(monomial_to_mask(g) for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return self.unit or any(divides(g, m) for g in self.gens)

    def __str__(self):
        if self.unit:
            return "(1)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def monomial_to_mask(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def mask_to_monomial(mask: int, n: int) -> Monomial:
    return tuple((mask >> i) & 1 for i in range(n))


def format_monomial(m: Monomial, names: list[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e:
            name = names[i] if names else f"x{i}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- constructors -----------------------------------------------------------


def check_weights(G: Graph, w: WeightFunction) -> dict[tuple[int, int], int]:
    """Normalize keys to ``(u, v)`` with ``u < v`` and validate the domain."""
    norm = {}
    for (u, v), val in w.items():
        key = (min(u, v), max(u, v))
        if key in norm:
            raise ValueError(f"edge {key} weighted twice")
        norm[key] = int(val)
    missing = set(G.edges) - set(norm)
    extra = set(norm) - set(G.edges)
    if missing:
        raise ValueError(f"missing weight for edges {sorted(missing)}")
    if extra:
        raise ValueError(f"weights given for non-edges {sorted(extra)}")
    bad = [e for e, val in norm.items() if val < 1]
    if bad:
        raise ValueError(f"weights must be positive integers, got {bad}")
    return norm


def uniform_weights(G: Graph, value: int = 1) -> dict[tuple[int, int], int]:
    return {e: value for e in G.edges}


def weighted_edge_ideal(G: Graph, w: WeightFunction | None = None) -> MonomialIdeal:
    """Ideal generated by ``(x_u x_v)^w(uv)`` over the edges of G."""
    w = uniform_weights(G) if w is None else check_weights(G, w)
    gens = []
    for u, v in G.edges:
        g = [0] * G.n
        g[u] = g[v] = w[(u, v)]
        gens.append(tuple(g))
    ideal = MonomialIdeal.from_generators(G.n, gens)
    # distinct edges never divide one another
    assert len(ideal.gens) == len(G.edges)
    return ideal


def edge_ideal(G: Graph) -> MonomialIdeal:
    return weighted_edge_ideal(G)


def variables_ideal(n: int, idx: Iterable[int]) -> MonomialIdeal:
    gens = []
    for i in idx:
        g = [0] * n
        g[i] = 1
        gens.append(tuple(g))
    return MonomialIdeal.from_generators(n, gens)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    n = ideals[0].n
    if any(J.unit for J in ideals):
        return MonomialIdeal(n, (), True)
    return MonomialIdeal.from_generators(n, (g for J in ideals for g in J.gens))


# -- monomial operations ----------------------------------------------------


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e > 0)


def radical_of_monomial(m: Monomial) -> Monomial:
    return tuple(min(e, 1) for e in m)


def colon_by_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """``I : u``, generated by ``f / gcd(f, u)`` over the generators f."""
    if I.unit:
        return I
    quots = [tuple(max(e - a, 0) for e, a in zip(f, u)) for f in I.gens]
    return MonomialIdeal.from_generators(I.n, quots)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.unit:
        return I
    return MonomialIdeal.from_generators(I.n, (radical_of_monomial(g) for g in I.gens))


def radical_colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """``sqrt(I : u)`` straight from the generators: the radical of each
    ``f / gcd(f, u)``.  The unit ideal comes back flagged when ``u`` is in I."""
    if I.unit:
        return I
    gens = [tuple(1 if e > a else 0 for e, a in zip(f, u)) for f in I.gens]
    return MonomialIdeal.from_generators(I.n, gens)


# -- bounded exponent lattice -------------------------------------------------


def exponent_bound(I: MonomialIdeal) -> tuple[int, ...]:
    """Largest exponent of each variable among the generators."""
    D = [0] * I.n
    for g in I.gens:
        for i, e in enumerate(g):
            D[i] = max(D[i], e)
    return tuple(D)


def exponent_levels(I: MonomialIdeal) -> list[list[int]]:
    """Per variable: 0 plus every exponent with which it occurs in a generator.

    ``sqrt(I : x^a)`` and membership of ``x^a`` in I only depend on how each
    ``a_i`` compares with these values.
    """
    levels = [{0} for _ in range(I.n)]
    for g in I.gens:
        for i, e in enumerate(g):
            if e:
                levels[i].add(e)
    return [sorted(s) for s in levels]


def drop_subthreshold(I: MonomialIdeal, a: Monomial) -> Monomial:
    """Zero every ``a_i`` lying strictly below all exponents of ``x_i`` in the
    generators that involve ``x_i``."""
    out = list(a)
    for i in range(I.n):
        exps = [g[i] for g in I.gens if g[i] > 0]
        if exps and a[i] < min(exps):
            out[i] = 0
    return tuple(out)


def snap_to_levels(I: MonomialIdeal, a: Monomial) -> Monomial:
    """Replace each ``a_i`` by the largest exponent level not exceeding it."""
    levels = exponent_levels(I)
    return tuple(max(l for l in lv if l <= ai) for lv, ai in zip(levels, a))


def _lattice(axes: list[list[int]]) -> np.ndarray:
    """All points of the product of ``axes``, ordered by total degree then
    lexicographically."""
    if not axes:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.asarray(ax, dtype=np.int64) for ax in axes], indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    order = np.lexsort(tuple(pts[:, i] for i in range(pts.shape[1] - 1, -1, -1)) + (pts.sum(1),))
    return pts[order]


def associated_radicals(I: MonomialIdeal, reduced: bool = True) -> dict[MonomialIdeal, Monomial]:
    """Map each distinct ``sqrt(I : u)`` (u outside I) to the first u producing it.

    With ``reduced`` the search runs over exponent levels only; otherwise over
    the full box ``0 <= a_i <= D_i``.  Points are visited by increasing total
    degree, so the recorded u has minimal degree for its radical.
    """
    if I.unit:
        raise ValueError("the unit ideal has no associated radicals")
    n = I.n
    if not I.gens:
        return {MonomialIdeal(n): (0,) * n}
    axes = exponent_levels(I) if reduced else [list(range(d + 1)) for d in exponent_bound(I)]
    pts = _lattice(axes)
    G = np.array(I.gens, dtype=np.int64)
    pow2 = (1 << np.arange(n, dtype=np.int64))
    out: dict[MonomialIdeal, Monomial] = {}
    seen_rows: set[bytes] = set()
    for start in range(0, len(pts), _BLOCK):
        A = pts[start:start + _BLOCK]
        masks = (G[None, :, :] > A[:, None, :]).astype(np.int64) @ pow2
        ok = ~(masks == 0).any(axis=1)
        rows, first = np.unique(masks[ok], axis=0, return_index=True)
        idx = np.flatnonzero(ok)[first]
        for k in np.argsort(idx, kind="stable"):
            key = rows[k].tobytes()
            if key in seen_rows:
                continue
            seen_rows.add(key)
            J = MonomialIdeal.from_masks(n, (int(m) for m in rows[k]))
            if J not in out:
                out[J] = tuple(int(x) for x in A[idx[k]])
    return out


def enumerate_associated_radicals(I: MonomialIdeal, reduced: bool = True) -> set[MonomialIdeal]:
    return set(associated_radicals(I, reduced))


def associated_radicals_bruteforce(I: MonomialIdeal) -> set[MonomialIdeal]:
    """Reference scan over the full box with the scalar routines."""
    out = set()
    for a in product(*(range(d + 1) for d in exponent_bound(I))):
        if not I.contains(a):
            out.add(radical_colon(I, a))
    return out


def associated_primes(I: MonomialIdeal) -> set[frozenset[int]]:
    """Variable sets P with ``I : u = (x_i : i in P)`` for some monomial u."""
    if I.unit:
        raise ValueError("the unit ideal has no associated primes")
    n = I.n
    if not I.gens:
        return {frozenset()}
    pts = _lattice([list(range(d + 1)) for d in exponent_bound(I)])
    G = np.array(I.gens, dtype=np.int64)
    pow2 = (1 << np.arange(n, dtype=np.int64))
    primes: set[frozenset[int]] = set()
    for start in range(0, len(pts), _BLOCK):
        A = pts[start:start + _BLOCK]
        Q = np.maximum(G[None, :, :] - A[:, None, :], 0)
        deg = Q.sum(axis=2)
        supp = (Q > 0).astype(np.int64) @ pow2
        inside = (deg == 0).any(axis=1)
        var_mask = np.bitwise_or.reduce(np.where(deg == 1, supp, 0), axis=1)
        hit = ((supp & var_mask[:, None]) != 0).all(axis=1)
        good = ~inside & hit
        for v in np.unique(var_mask[good]):
            primes.add(frozenset(_bits(int(v))))
    return primes


# -- dimension and unmixedness ------------------------------------------------


def minimal_transversals(masks: Iterable[int]) -> list[int]:
    """Minimal vertex sets meeting every mask (minimal primes of a squarefree ideal)."""
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    found: set[int] = set()

    def rec(chosen: int, rest: list[int]):
        for k, m in enumerate(rest):
            if not m & chosen:
                for v in _bits(m):
                    rec(chosen | 1 << v, rest[k + 1:])
                return
        found.add(chosen)

    rec(0, masks)
    minimal = [t for t in found if not any(s != t and s & t == s for s in found)]
    return sorted(minimal)


def minimal_primes(I: MonomialIdeal) -> list[frozenset[int]]:
    if I.unit:
        return []
    return [frozenset(_bits(t)) for t in minimal_transversals(radical(I).masks)]


def krull_dim(I: MonomialIdeal) -> int:
    if I.unit:
        return -1
    return I.n - min(len(P) for P in minimal_primes(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    """All associated primes have the same height."""
    return len({len(P) for P in associated_primes(I)}) <= 1


def is_unmixed_radical(I: MonomialIdeal) -> bool:
    """All minimal primes have the same height."""
    return len({len(P) for P in minimal_primes(I)}) <= 1


# -- polarization -----------------------------------------------------------


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, list[tuple[int, int]]]:
    """Squarefree polarization.

    ``x_i^a`` becomes ``x_{i,1} ... x_{i,a}``.  Returns the polarized ideal and
    the list mapping each new variable index to ``(i, slot)``, slots from 1,
    ordered variable-major then slot.
    """
    D = exponent_bound(I)
    mapping = [(i, s) for i in range(I.n) for s in range(1, D[i] + 1)]
    offset = np.concatenate([[0], np.cumsum(D)]).astype(int)
    N = len(mapping)
    gens = []
    for g in I.gens:
        p = [0] * N
        for i, e in enumerate(g):
            for s in range(e):
                p[offset[i] + s] = 1
        gens.append(tuple(p))
    if I.unit:
        return MonomialIdeal(N, (), True), mapping
    return MonomialIdeal.from_generators(N, gens), mapping
