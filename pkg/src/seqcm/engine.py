"""Cohen-Macaulay and sequentially Cohen-Macaulay decisions.

Complexes are decided by Reisner's link criterion and Duval's pure-skeleton
criterion.  A monomial ideal is decided through its associated radicals
``sqrt(I : u)``, u outside I: it is seqCM exactly when all of them are, and
CM exactly when all of them are CM of the same dimension as ``S/I``.
Without the dimension condition ``(x1^2, x0 x1)`` would pass as CM.
Polarization gives a second, independent route used for cross-checking.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .graphs import _bits
from .homology import (
    GF2,
    QQ,
    ComplexError,
    FieldSpec,
    SimplicialComplex,
    link,
    pure_skeleton,
    reduced_betti,
    stanley_reisner_complex,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    associated_radicals,
    format_monomial,
    is_unmixed,
    krull_dim,
    polarize,
)

MAX_POLARIZED = 20


class VerdictCache:
    """Thread-safe memo of complex verdicts keyed by ``(kind, field, compact complex)``."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            val = self._data.get(key)
            if val is None:
                self.misses += 1
            else:
                self.hits += 1
            return val

    def put(self, key, value):
        with self._lock:
            # identical keys always carry identical verdicts
            self._data[key] = value
        return value

    def __len__(self):
        return len(self._data)

    def clear(self):
        with self._lock:
            self._data.clear()


DEFAULT_CACHE = VerdictCache()


@dataclass(frozen=True)
class ComplexWitness:
    """Why a complex fails.

    ``face`` and ``degree`` name a face whose link has nonzero reduced
    homology below its dimension.  For a seqCM failure ``skeleton`` is the
    pure skeleton that is not CM, and face/degree refer to that skeleton.
    """

    face: tuple[int, ...]
    degree: int
    skeleton: Optional[int] = None

    def describe(self) -> str:
        s = f"H~_{self.degree}(lk {list(self.face)}) != 0"
        if self.skeleton is not None:
            s = f"pure {self.skeleton}-skeleton not CM: " + s
        return s


# -- complexes ----------------------------------------------------------------


def _compact(D: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    used = _bits(0 if D.void else _or(D.facets))
    m, facets = D.compact_key()
    return SimplicialComplex(m, facets), used


def _or(masks) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


def _reisner(C: SimplicialComplex, field: FieldSpec, cache: VerdictCache):
    """Verdict on a compact complex: ``None`` if CM, else ``(face_mask, degree)``."""
    key = ("cm", field.p, C.n, C.facets)
    hit = cache.get(key)
    if hit is not None:
        return hit[0]
    result = None
    betti = reduced_betti(C, field)
    for i in range(-1, C.dim):
        if betti[i + 1]:
            result = (0, i)
            break
    if result is None:
        for v in range(C.n):
            L, used = _compact(link(C, 1 << v))
            sub = _reisner(L, field, cache)
            if sub is not None:
                face = 1 << v
                for j in _bits(sub[0]):
                    face |= 1 << used[j]
                result = (face, sub[1])
                break
    cache.put(key, (result,))
    return result


def is_cm_complex(D: SimplicialComplex, field: FieldSpec = QQ,
                  cache: VerdictCache | None = None) -> tuple[bool, ComplexWitness | None]:
    """Reisner: every link (the complex itself included) has vanishing reduced
    homology below its dimension."""
    if D.void:
        raise ComplexError("the void complex has no CM verdict")
    cache = DEFAULT_CACHE if cache is None else cache
    C, used = _compact(D)
    res = _reisner(C, field, cache)
    if res is None:
        return True, None
    return False, ComplexWitness(tuple(used[j] for j in _bits(res[0])), res[1])


def is_scm_complex(D: SimplicialComplex, field: FieldSpec = QQ,
                   cache: VerdictCache | None = None) -> tuple[bool, ComplexWitness | None]:
    """Duval: every pure i-skeleton is CM."""
    if D.void:
        raise ComplexError("the void complex has no seqCM verdict")
    cache = DEFAULT_CACHE if cache is None else cache
    C, used = _compact(D)
    key = ("scm", field.p, C.n, C.facets)
    hit = cache.get(key)
    if hit is None:
        res = None
        for i in range(-1, C.dim + 1):
            sk = pure_skeleton(C, i)
            S, sk_used = _compact(sk)
            bad = _reisner(S, field, cache)
            if bad is not None:
                face = 0
                for j in _bits(bad[0]):
                    face |= 1 << sk_used[j]
                res = (i, face, bad[1])
                break
        hit = cache.put(key, (res,))
    res = hit[0]
    if res is None:
        return True, None
    i, face, deg = res
    return False, ComplexWitness(tuple(used[j] for j in _bits(face)), deg, skeleton=i)


# -- ideals ---------------------------------------------------------------------


@dataclass(frozen=True)
class IdealWitness:
    """A monomial ``u`` outside I whose radical ``sqrt(I : u)`` fails.

    Either its Stanley-Reisner complex fails the criterion
    (``complex_witness``), or, for CM, it is CM but of smaller dimension than
    ``S/I`` (``dims`` holds the radical's and the ideal's Krull dimension).
    """

    u: Monomial
    radical: MonomialIdeal
    complex_witness: ComplexWitness | None = None
    dims: tuple[int, int] | None = None

    def describe(self) -> str:
        head = f"u = {format_monomial(self.u)}; sqrt(I : u) = {self.radical}; "
        if self.complex_witness is not None:
            return head + self.complex_witness.describe()
        return head + f"dim {self.dims[0]} < dim S/I = {self.dims[1]}"


def _decide(I: MonomialIdeal, kind: str, field: FieldSpec, cache: VerdictCache | None,
            radicals: dict | None = None):
    if I.unit:
        raise ValueError("the unit ideal is not proper")
    check = is_cm_complex if kind == "cm" else is_scm_complex
    rads = associated_radicals(I) if radicals is None else radicals
    top = None
    for J, u in rads.items():
        D = stanley_reisner_complex(J)
        ok, cw = check(D, field, cache)
        if not ok:
            return False, IdealWitness(u, J, cw)
        if kind == "cm":
            # depth S/I is the least depth over the radicals, so a CM radical of
            # lower dimension still rules out CM
            if top is None:
                top = krull_dim(I)
            if D.dim + 1 < top:
                return False, IdealWitness(u, J, dims=(D.dim + 1, top))
    return True, None


def cm_decision(I: MonomialIdeal, field: FieldSpec = QQ, cache: VerdictCache | None = None,
                radicals: dict | None = None) -> tuple[bool, IdealWitness | None]:
    """CM verdict of I from its associated radicals (all CM, none of lower
    dimension), with the first failing u."""
    return _decide(I, "cm", field, cache, radicals)


def scm_decision(I: MonomialIdeal, field: FieldSpec = QQ, cache: VerdictCache | None = None,
                 radicals: dict | None = None) -> tuple[bool, IdealWitness | None]:
    return _decide(I, "scm", field, cache, radicals)


@dataclass
class CMReport:
    is_cm: bool
    is_scm: bool
    unmixed: bool
    dim: int
    field: FieldSpec = QQ
    cm_witness: IdealWitness | None = None
    scm_witness: IdealWitness | None = None
    field_sensitive: bool = False
    notes: list[str] = dc_field(default_factory=list)

    @property
    def witness(self) -> IdealWitness | None:
        return self.scm_witness or self.cm_witness


def check_ideal(I: MonomialIdeal, field: FieldSpec = QQ, cross_field: bool = False,
                cache: VerdictCache | None = None) -> CMReport:
    """Full report; CM and seqCM are decided independently of each other."""
    rads = associated_radicals(I)
    cm, cw = cm_decision(I, field, cache, rads)
    scm, sw = scm_decision(I, field, cache, rads)
    report = CMReport(cm, scm, is_unmixed(I), krull_dim(I), field, cw, sw)
    if cross_field:
        other = GF2 if field != GF2 else QQ
        cm2, _ = cm_decision(I, other, cache, rads)
        scm2, _ = scm_decision(I, other, cache, rads)
        if (cm2, scm2) != (cm, scm):
            report.field_sensitive = True
            report.notes.append(f"over {other}: cm={cm2}, scm={scm2}")
    return report


def is_cm_ideal(I: MonomialIdeal, field: FieldSpec = QQ, cross_field: bool = False,
                cache: VerdictCache | None = None) -> CMReport:
    return check_ideal(I, field, cross_field, cache)


def is_scm_ideal(I: MonomialIdeal, field: FieldSpec = QQ, cross_field: bool = False,
                 cache: VerdictCache | None = None) -> CMReport:
    return check_ideal(I, field, cross_field, cache)


# -- polarization oracle --------------------------------------------------------


def _polarized_complex(I: MonomialIdeal) -> SimplicialComplex:
    P, _ = polarize(I)
    if P.n > MAX_POLARIZED:
        raise ValueError(f"polarization has {P.n} variables (limit {MAX_POLARIZED})")
    return stanley_reisner_complex(P)


def is_cm_via_polarization(I: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    # private cache: this route must not share memo state with the radical route
    return is_cm_complex(_polarized_complex(I), field, VerdictCache())[0]


def is_scm_via_polarization(I: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    return is_scm_complex(_polarized_complex(I), field, VerdictCache())[0]
