"""Simplicial complexes as facet bitmasks, Stanley-Reisner complexes and exact reduced homology."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable

from .graphs import _bits
from .monomials import MonomialIdeal, minimal_transversals

MAX_VERTICES = 20


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (not _is_prime(self.p) or self.p > 2**31):
            raise ValueError(f"characteristic must be a prime <= 2^31, got {self.p}")

    @classmethod
    def parse(cls, text: str | int | None) -> "FieldSpec":
        if text is None or str(text).strip().upper() in ("0", "Q", "QQ", "RATIONALS"):
            return cls()
        return cls(int(text))

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldSpec()
GF2 = FieldSpec(2)


class ComplexError(ValueError):
    pass


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=_popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..n-1 given by its facets (bitmasks).

    ``facets == (0,)`` is the complex {∅}; ``void`` marks the complex with no
    faces at all.
    """

    n: int
    facets: tuple[int, ...]
    void: bool = False

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        masks = []
        for f in faces:
            if isinstance(f, int):
                masks.append(f)
            else:
                m = 0
                for v in f:
                    if not 0 <= v < n:
                        raise ComplexError(f"vertex {v} out of range for n={n}")
                    m |= 1 << v
                masks.append(m)
        if not masks:
            return cls(n, (), True)
        return cls(n, _maximal(masks))

    @classmethod
    def simplex(cls, vertices: Iterable[int], n: int | None = None) -> "SimplicialComplex":
        vs = list(vertices)
        return cls.from_faces(n if n is not None else (max(vs) + 1 if vs else 0), [vs])

    @classmethod
    def boundary_of_simplex(cls, k: int) -> "SimplicialComplex":
        """The k-sphere: proper faces of the simplex on k+2 vertices."""
        full = (1 << (k + 2)) - 1
        return cls(k + 2, _maximal(full & ~(1 << v) for v in range(k + 2)))

    @cached_property
    def dim(self) -> int:
        if self.void:
            return -2
        return max(_popcount(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for F in self.facets:
            if F in out:
                continue
            sub = F
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return frozenset(out)

    def faces_by_dim(self) -> dict[int, list[tuple[int, ...]]]:
        """Faces as sorted vertex tuples, grouped by dimension, each group in lex order."""
        by: dict[int, list[tuple[int, ...]]] = {}
        for f in self.faces:
            by.setdefault(_popcount(f) - 1, []).append(tuple(_bits(f)))
        for d in by:
            by[d].sort()
        return by

    def f_vector(self) -> list[int]:
        """Face counts for dimensions -1..dim."""
        by = self.faces_by_dim()
        return [len(by.get(d, [])) for d in range(-1, self.dim + 1)]

    @property
    def is_pure(self) -> bool:
        return len({_popcount(f) for f in self.facets}) <= 1

    def contains(self, face: int) -> bool:
        return not self.void and any(face & F == face for F in self.facets)

    def relabel(self, perm: list[int]) -> "SimplicialComplex":
        """Apply vertex map ``v -> perm[v]``."""
        def move(m):
            out = 0
            for v in _bits(m):
                out |= 1 << perm[v]
            return out
        if self.void:
            return self
        return SimplicialComplex(self.n, _maximal(move(F) for F in self.facets))

    def compact_key(self) -> tuple:
        """Facets relabeled onto the vertices actually used, order preserved."""
        if self.void:
            return ("void",)
        used = _bits(_union(self.facets))
        pos = {v: i for i, v in enumerate(used)}
        fs = []
        for F in self.facets:
            m = 0
            for v in _bits(F):
                m |= 1 << pos[v]
            fs.append(m)
        return (len(used), tuple(sorted(fs)))

    def facet_lists(self) -> list[list[int]]:
        return sorted(_bits(F) for F in self.facets)

    def dump(self) -> str:
        return "\n".join(" ".join(map(str, f)) for f in self.facet_lists())


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Faces are the vertex sets whose squarefree monomial lies outside I."""
    if I.unit:
        raise ComplexError("the unit ideal has the void complex")
    if not I.squarefree:
        raise ComplexError("Stanley-Reisner complex needs a squarefree ideal")
    if I.n > MAX_VERTICES:
        raise ComplexError(f"complexes limited to {MAX_VERTICES} vertices")
    full = (1 << I.n) - 1
    if not I.gens:
        return SimplicialComplex(I.n, (full,))
    # facets are complements of the minimal transversals of the generators
    return SimplicialComplex(I.n, _maximal(full & ~t for t in minimal_transversals(I.masks)))


def independence_complex(G) -> SimplicialComplex:
    from .monomials import edge_ideal
    return stanley_reisner_complex(edge_ideal(G))


def link(D: SimplicialComplex, sigma: Iterable[int] | int) -> SimplicialComplex:
    s = sigma if isinstance(sigma, int) else _union(1 << v for v in sigma)
    if not D.contains(s):
        raise ComplexError(f"{_bits(s)} is not a face")
    return SimplicialComplex(D.n, _maximal(F & ~s for F in D.facets if F & s == s))


def pure_skeleton(D: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the faces of dimension exactly ``i``."""
    if D.void or not -1 <= i <= D.dim:
        raise ComplexError(f"skeleton index {i} outside -1..{D.dim}")
    k = i + 1
    faces = set()
    for F in D.facets:
        vs = _bits(F)
        if len(vs) >= k:
            for c in combinations(vs, k):
                faces.add(_union(1 << v for v in c))
    return SimplicialComplex(D.n, tuple(sorted(faces)))


# -- exact rank ---------------------------------------------------------------


def matrix_rank(rows: list[dict[int, int]], field: FieldSpec = QQ) -> int:
    """Rank of a sparse integer matrix (rows as ``{col: value}``).

    Over QQ this is fraction-free elimination with content removal; over
    GF(p) plain modular elimination.
    """
    p = field.p
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {c: v % p for c, v in r.items() if v % p} if p else {c: v for c, v in r.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(row[c], -1, p)
                    row = {k: v * inv % p for k, v in row.items()}
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            if p:
                f = b * pow(a, -1, p) % p
                for k, v in piv.items():
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                new = {k: a * v for k, v in row.items()}
                for k, v in piv.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                row = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def boundary_rows(lower: list[tuple[int, ...]], upper: list[tuple[int, ...]]) -> list[dict[int, int]]:
    """Boundary map C_k -> C_{k-1}, one sparse row per k-face (transpose; same rank).

    Removing the vertex in position j carries sign (-1)^j.
    """
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = {}
        for j in range(len(f)):
            row[index[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


def reduced_betti(D: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """Ranks of reduced homology in degrees -1..dim (index 0 is degree -1)."""
    if D.void:
        raise ComplexError("reduced homology of the void complex is undefined")
    by = D.faces_by_dim()
    top = D.dim
    f = {d: len(by.get(d, [])) for d in range(-1, top + 2)}
    ranks = {-1: 0, top + 1: 0}
    for d in range(0, top + 1):
        ranks[d] = matrix_rank(boundary_rows(by[d - 1], by[d]), field)
    return [f[d] - ranks[d] - ranks[d + 1] for d in range(-1, top + 1)]


def euler_characteristic(D: SimplicialComplex) -> int:
    """Reduced Euler characteristic from the f-vector (empty face included)."""
    return sum((-1) ** (d + 1) * c for d, c in enumerate(D.f_vector()))
