"""Finite verification sweeps for the weighted edge ideal classification results.

Each ``verify_*`` function returns a :class:`VerificationOutcome`, which
serializes to the JSON report written by the command line tool.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .engine import DEFAULT_CACHE, VerdictCache, cm_decision, scm_decision
from .graphs import (
    Graph,
    bad_cycle,
    build_two_pentagon_H,
    cycle_graph,
    enumerate_graphs,
    induced_p3,
    is_disjoint_union_complete,
    is_very_well_covered,
    is_woodroofe,
    suspension_of_cycle,
)
from .homology import GF2, QQ, FieldSpec
from .monomials import (
    MonomialIdeal,
    associated_radicals,
    edge_ideal,
    ideal_sum,
    is_unmixed,
    radical_colon,
    variables_ideal,
    weighted_edge_ideal,
)

Weights = dict[tuple[int, int], int]

CERTIFY_BUDGET = 1 << 12
EXHAUSTIVE_EDGE_LIMIT = 9


class BudgetError(RuntimeError):
    pass


@dataclass
class VerificationOutcome:
    name: str
    passed: bool
    instances_checked: int
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    field_sensitive_cases: int = 0
    seed: int | None = None
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["elapsed_ms"] = round(d.pop("elapsed") * 1000)
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.name}: {status} ({self.instances_checked} instances, "
                f"{len(self.counterexamples)} counterexamples, "
                f"{self.field_sensitive_cases} field-sensitive, {self.elapsed:.1f}s)")


def _counterexample(G: Graph, w: Weights | None, detail: str) -> dict:
    return {
        "graph": {"n": G.n, "edges": [list(e) for e in G.edges]},
        "weights": None if w is None else [[u, v, c] for (u, v), c in sorted(w.items())],
        "detail": detail,
    }


def _finish(out: VerificationOutcome, t0: float) -> VerificationOutcome:
    out.passed = not out.counterexamples
    out.elapsed = time.perf_counter() - t0
    return out


# -- weights ------------------------------------------------------------------


def lemma25_witness_weight(G: Graph, W: Iterable[int]) -> Weights:
    """Weight 2 on edges with both ends in W, 1 on every other edge."""
    W = set(W)
    if not W <= set(range(G.n)):
        raise ValueError("W must be a subset of the vertices")
    return {(u, v): 2 if u in W and v in W else 1 for u, v in G.edges}


def all_weightings(G: Graph, wmax: int) -> Iterable[Weights]:
    """Every weighting with values in 1..wmax, starting from all ones."""
    for vals in product(range(1, wmax + 1), repeat=len(G.edges)):
        yield dict(zip(G.edges, vals))


def _verdict(G: Graph, w: Weights, kind: str, cache: VerdictCache | None,
             cross_field: bool) -> tuple[bool, bool]:
    """(verdict over QQ, verdict differs over GF(2))."""
    I = weighted_edge_ideal(G, w)
    rads = associated_radicals(I)
    decide = cm_decision if kind == "cm" else scm_decision
    ok = decide(I, QQ, cache, rads)[0]
    if not cross_field:
        return ok, False
    return ok, decide(I, GF2, cache, rads)[0] != ok


def _scan_for_failure(G: Graph, kind: str, wmax: int, cache) -> Weights | None:
    if wmax ** len(G.edges) > CERTIFY_BUDGET:
        raise BudgetError(f"{wmax}^{len(G.edges)} weightings exceed the budget {CERTIFY_BUDGET}")
    for w in all_weightings(G, wmax):
        if not _verdict(G, w, kind, cache, False)[0]:
            return w
    return None


def cm_for_all_weights(G: Graph, wmax: int = 2, certify: bool = False,
                       cache: VerdictCache | None = None) -> tuple[bool, Weights | None]:
    """Whether every weighting of G gives a CM ideal, with a failing weighting
    as certificate when not.

    The answer is structural (disjoint union of cliques).  With ``certify``
    all weightings in 1..wmax are decided and must agree.
    """
    if wmax < 2:
        raise ValueError("wmax must be at least 2")
    answer = is_disjoint_union_complete(G)
    if certify:
        bad = _scan_for_failure(G, "cm", wmax, cache)
        if (bad is None) != answer:
            raise AssertionError(f"structural answer {answer} contradicted by the weight scan")
        return answer, bad
    if answer:
        return True, None
    candidates = [{e: 1 for e in G.edges}, lemma25_witness_weight(G, induced_p3(G))]
    for w in candidates:
        if not _verdict(G, w, "cm", cache, False)[0]:
            return False, w
    return False, _scan_for_failure(G, "cm", wmax, cache)


def scm_for_all_weights(G: Graph, wmax: int = 2, certify: bool = False,
                        cache: VerdictCache | None = None) -> tuple[bool, Weights | None]:
    """Same as :func:`cm_for_all_weights` for seqCM; the structural answer is
    the Woodroofe property and the quick certificate doubles the weights on a
    bad induced cycle."""
    if wmax < 2:
        raise ValueError("wmax must be at least 2")
    answer = is_woodroofe(G)
    if certify:
        bad = _scan_for_failure(G, "scm", wmax, cache)
        if (bad is None) != answer:
            raise AssertionError(f"structural answer {answer} contradicted by the weight scan")
        return answer, bad
    if answer:
        return True, None
    w = lemma25_witness_weight(G, bad_cycle(G))
    if not _verdict(G, w, "scm", cache, False)[0]:
        return False, w
    return False, _scan_for_failure(G, "scm", wmax, cache)


# -- weighted pentagon ----------------------------------------------------------


def _c5_sequence(w) -> list[int]:
    """Weights of the pentagon 0-1-2-3-4-0, entry k on edge (k, k+1 mod 5)."""
    if isinstance(w, dict):
        edges = cycle_graph(5).edges
        norm = {(min(u, v), max(u, v)): c for (u, v), c in w.items()}
        if set(norm) != set(edges):
            raise ValueError("weights must be given on the edges of C5")
        return [norm[(min(k, (k + 1) % 5), max(k, (k + 1) % 5))] for k in range(5)]
    seq = list(w)
    if len(seq) != 5:
        raise ValueError("a C5 weighting has five values")
    return seq


def balancing_vertices(w, orientations: Sequence[int] = (1, -1)) -> list[int]:
    """Vertices v from which the weights read a, b, c, d, a with
    a <= b >= c <= d >= a, walking in any of the given orientations."""
    seq = _c5_sequence(w)
    out = []
    for v in range(5):
        for step in orientations:
            if step == 1:
                a, b, c, d, e = (seq[(v + k) % 5] for k in range(5))
            else:
                a, b, c, d, e = (seq[(v - 1 - k) % 5] for k in range(5))
            if a == e and a <= b >= c <= d >= a:
                out.append(v)
                break
    return out


def c5_balancing_cm(w, orientations: Sequence[int] = (1, -1)) -> bool:
    return bool(balancing_vertices(w, orientations))


def verify_c5(wmax: int = 3, cross_field: bool = True,
              cache: VerdictCache | None = None) -> VerificationOutcome:
    """Balancing-vertex formula against the homology verdict on all weightings."""
    if not 1 <= wmax <= 3:
        raise BudgetError("C5 sweep supports wmax <= 3")
    t0 = time.perf_counter()
    G = cycle_graph(5)
    out = VerificationOutcome("c5", True, 0)
    clockwise_agrees = True
    for seq in product(range(1, wmax + 1), repeat=5):
        w = {(min(k, (k + 1) % 5), max(k, (k + 1) % 5)): seq[k] for k in range(5)}
        oracle, sensitive = _verdict(G, w, "cm", cache, cross_field)
        out.instances_checked += 1
        out.field_sensitive_cases += sensitive
        if c5_balancing_cm(seq) != oracle:
            out.counterexamples.append(_counterexample(G, w, f"formula {not oracle}, homology {oracle}"))
        if c5_balancing_cm(seq, (1,)) != oracle:
            clockwise_agrees = False
    out.info["clockwise_only_agrees"] = clockwise_agrees
    return _finish(out, t0)


# -- two pentagons joined by an edge -------------------------------------------------

H_X = [0, 1, 2, 3, 4]
H_Y = [5, 6, 7, 8, 9]


def _pentagon_sequence(w: Weights, vs: list[int]) -> list[int]:
    return [w[(min(vs[k], vs[(k + 1) % 5]), max(vs[k], vs[(k + 1) % 5]))] for k in range(5)]


def prop_H_conditions(w: Weights) -> bool:
    """Closed-form CM test for weightings of the two-pentagon graph.

    (1) the bridge weight is at most the four pentagon weights at its ends,
    (2) both weighted pentagons are CM,
    (3) each pentagon has a balancing vertex among its 1st, 3rd, 4th vertices.
    """
    H = build_two_pentagon_H()
    w = {(min(u, v), max(u, v)): c for (u, v), c in w.items()}
    if set(w) != set(H.edges):
        raise ValueError("weights must be given on the edges of H")
    bridge = w[(0, 5)]
    cond1 = bridge <= min(w[(0, 1)], w[(0, 4)], w[(5, 6)], w[(5, 9)])
    bal_x = balancing_vertices(_pentagon_sequence(w, H_X))
    bal_y = balancing_vertices(_pentagon_sequence(w, H_Y))
    cond2 = bool(bal_x) and bool(bal_y)
    allowed = {0, 2, 3}
    cond3 = bool(allowed & set(bal_x)) and bool(allowed & set(bal_y))
    return cond1 and cond2 and cond3


def verify_prop_H(wmax: int = 2, cross_field: bool = True,
                  cache: VerdictCache | None = None) -> VerificationOutcome:
    t0 = time.perf_counter()
    H = build_two_pentagon_H()
    out = VerificationOutcome("prop-h", True, 0)
    cm_count = 0
    for w in all_weightings(H, wmax):
        oracle, sensitive = _verdict(H, w, "cm", cache, cross_field)
        cm_count += oracle
        out.instances_checked += 1
        out.field_sensitive_cases += sensitive
        formula = prop_H_conditions(w)
        if formula != oracle:
            out.counterexamples.append(_counterexample(H, w, f"conditions {formula}, homology {oracle}"))
    out.info["cm_weightings"] = cm_count
    return _finish(out, t0)


# -- classification sweeps ------------------------------------------------------


def _lemma25_family(G: Graph) -> list[Weights]:
    ws = []
    for mask in range(1 << G.n):
        W = [v for v in range(G.n) if mask >> v & 1]
        w = lemma25_witness_weight(G, W)
        if w not in ws:
            ws.append(w)
    return ws


def _check_class(args) -> tuple[int, list[dict], int, str]:
    """One isomorphism class: returns (weightings decided, counterexamples,
    field-sensitive count, mode)."""
    G, kind, wmax, exhaustive_n, cross_field = args
    structural = is_disjoint_union_complete(G) if kind == "cm" else is_woodroofe(G)
    cache = DEFAULT_CACHE
    decided = 0
    sensitive = 0
    bad: list[dict] = []
    if G.n <= exhaustive_n:
        mode = "exhaustive"
        found = None
        for w in all_weightings(G, wmax):
            ok, s = _verdict(G, w, kind, cache, cross_field)
            decided += 1
            sensitive += s
            if not ok:
                found = w
                break
        if structural and found is not None:
            bad.append(_counterexample(G, found, f"classifier says yes, weighting fails {kind}"))
        if not structural and found is None:
            bad.append(_counterexample(G, None, f"classifier says no, every weighting is {kind}"))
        return decided, bad, sensitive, mode
    if not structural:
        mode = "witness"
        W = induced_p3(G) if kind == "cm" else bad_cycle(G)
        w = lemma25_witness_weight(G, W)
        ok, s = _verdict(G, w, kind, cache, cross_field)
        decided, sensitive = 1, int(s)
        if ok:
            bad.append(_counterexample(G, w, f"witness weighting on {list(W)} is {kind}"))
        return decided, bad, sensitive, mode
    if len(G.edges) <= EXHAUSTIVE_EDGE_LIMIT:
        mode = "exhaustive"
        weightings = all_weightings(G, wmax)
    else:
        mode = "induced-family"
        weightings = _lemma25_family(G)
    for w in weightings:
        ok, s = _verdict(G, w, kind, cache, cross_field)
        decided += 1
        sensitive += s
        if not ok:
            bad.append(_counterexample(G, w, f"classifier says yes, weighting fails {kind}"))
            break
    return decided, bad, sensitive, mode


def _run_classes(name: str, kind: str, nmax: int, nmin: int | None, wmax: int,
                 exhaustive_n: int, cross_field: bool, jobs: int) -> VerificationOutcome:
    if nmax > 6:
        raise BudgetError("classification sweeps support n <= 6")
    t0 = time.perf_counter()
    nmin = nmax if nmin is None else nmin
    graphs = [G for n in range(nmin, nmax + 1) for G in enumerate_graphs(n)]
    tasks = [(G, kind, wmax, exhaustive_n, cross_field) for G in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_class, tasks, chunksize=4))
    else:
        results = [_check_class(t) for t in tasks]
    out = VerificationOutcome(name, True, len(graphs))
    modes: dict[str, int] = {}
    weightings = 0
    for decided, bad, sensitive, mode in results:
        weightings += decided
        out.counterexamples.extend(bad)
        out.field_sensitive_cases += sensitive
        modes[mode] = modes.get(mode, 0) + 1
    out.info.update({
        "n_range": [nmin, nmax],
        "classes_by_n": {str(n): sum(1 for G in graphs if G.n == n) for n in range(nmin, nmax + 1)},
        "weightings_decided": weightings,
        "modes": dict(sorted(modes.items())),
        "wmax": wmax,
    })
    return _finish(out, t0)


def verify_thm_cm(nmax: int = 5, nmin: int | None = None, wmax: int = 2,
                  cross_field: bool = True, jobs: int = 1) -> VerificationOutcome:
    """Clique-union classifier against CM verdicts, per isomorphism class.

    Classes on ``nmin..nmax`` vertices (default: exactly ``nmax``; smaller
    graphs reappear there with isolated vertices added).  Up to five vertices
    every weighting in 1..wmax is decided.  At six vertices negatives use the
    doubled-weight witness and positives are checked exhaustively up to nine
    edges, on the induced-subgraph weight family beyond that.
    """
    return _run_classes("thm-cm", "cm", nmax, nmin, wmax, 5, cross_field, jobs)


def verify_thm_scm(nmax: int = 5, nmin: int | None = None, wmax: int = 2,
                   cross_field: bool = True, jobs: int = 1) -> VerificationOutcome:
    """Woodroofe classifier against seqCM verdicts; same modes as :func:`verify_thm_cm`."""
    return _run_classes("thm-scm", "scm", nmax, nmin, wmax, 5, cross_field, jobs)


# -- unmixed vs CM on Woodroofe graphs ----------------------------------------------


def random_woodroofe_graph(rng: random.Random, nmax: int = 7) -> Graph:
    while True:
        n = rng.randint(2, nmax)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        G = Graph(n, tuple(edges))
        if edges and is_woodroofe(G):
            return G


def verify_cor31(sample: int = 200, seed: int = 0, nmax: int = 7, wmax: int = 3,
                 cross_field: bool = True, cache: VerdictCache | None = None) -> VerificationOutcome:
    """Random Woodroofe graphs with random weights: unmixed exactly when CM."""
    if nmax > 7:
        raise BudgetError("sampling supports n <= 7")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    out = VerificationOutcome("cor31", True, 0, seed=seed)
    cm_count = 0
    for _ in range(sample):
        G = random_woodroofe_graph(rng, nmax)
        w = {e: rng.randint(1, wmax) for e in G.edges}
        I = weighted_edge_ideal(G, w)
        rads = associated_radicals(I)
        cm = cm_decision(I, QQ, cache, rads)[0]
        if cross_field:
            out.field_sensitive_cases += cm_decision(I, GF2, cache, rads)[0] != cm
        unmixed = is_unmixed(I)
        cm_count += cm
        out.instances_checked += 1
        if unmixed != cm:
            out.counterexamples.append(_counterexample(G, w, f"unmixed {unmixed}, CM {cm}"))
    out.info["cm_instances"] = cm_count
    return _finish(out, t0)


# -- suspension of a cycle ----------------------------------------------------------


def terai_witness_radical(t: int) -> MonomialIdeal:
    """``I(C_t) + (y_1, ..., y_t)`` in the 2t variables of the suspension."""
    C = edge_ideal(cycle_graph(t))
    lifted = MonomialIdeal.from_generators(2 * t, (g + (0,) * t for g in C.gens))
    return ideal_sum(lifted, variables_ideal(2 * t, range(t, 2 * t)))


def verify_terai_counterexample(t: int = 4, omega: int = 2, cross_field: bool = True,
                                cache: VerdictCache | None = None) -> VerificationOutcome:
    """The suspension of C_t is CM and very well-covered, yet weighting the
    cycle edges by omega destroys seqCM; the colon by prod x_i^(omega-1)
    exhibits the failing radical."""
    if t in (3, 5):
        raise ValueError("C3 and C5 suspensions are not counterexamples")
    if t not in (4, 6, 7):
        raise BudgetError("supported cycle lengths are 4, 6 and 7")
    if omega < 2:
        raise ValueError("omega must be at least 2")
    t0 = time.perf_counter()
    S = suspension_of_cycle(t)
    out = VerificationOutcome("terai", True, 1)
    plain = edge_ideal(S)
    if not cm_decision(plain, QQ, cache)[0]:
        out.counterexamples.append(_counterexample(S, None, "suspension is not CM"))
    if not is_very_well_covered(S):
        out.counterexamples.append(_counterexample(S, None, "suspension is not very well-covered"))
    w = {(u, v): omega if v < t else 1 for u, v in S.edges}
    I = weighted_edge_ideal(S, w)
    rads = associated_radicals(I)
    scm, wit = scm_decision(I, QQ, cache, rads)
    if cross_field:
        out.field_sensitive_cases += scm_decision(I, GF2, cache, rads)[0] != scm
    if scm:
        out.counterexamples.append(_counterexample(S, w, "weighted suspension is seqCM"))
    u = tuple([omega - 1] * t + [0] * t)
    got = radical_colon(I, u)
    expected = terai_witness_radical(t)
    if got != expected:
        out.counterexamples.append(_counterexample(S, w, f"colon radical {got} != {expected}"))
    out.info.update({
        "t": t,
        "omega": omega,
        "colon_monomial": list(u),
        "witness_radical": str(got),
        "engine_witness": wit.describe() if wit else None,
    })
    return _finish(out, t0)


VERIFIERS: dict[str, Callable[..., VerificationOutcome]] = {
    "thm-cm": verify_thm_cm,
    "thm-scm": verify_thm_scm,
    "c5": verify_c5,
    "prop-h": verify_prop_H,
    "cor31": verify_cor31,
    "terai": verify_terai_counterexample,
}


# -- two routes to the same verdict ---------------------------------------------------


def random_monomial_ideal(rng: random.Random, nmax: int = 4, max_exp: int = 3,
                          max_gens: int = 4, max_polarized: int = 20,
                          shape: str = "dense") -> MonomialIdeal:
    """Random proper nonzero monomial ideal whose polarization fits the limit.

    ``dense`` draws up to ``max_gens`` arbitrary monomials; ``edge`` draws a
    random graph and gives each edge a generator x_u^a x_v^b with exponents
    up to ``max_exp`` (mostly a == b), which is where seqCM failures live.
    """
    if shape not in ("dense", "edge"):
        raise ValueError(f"unknown shape {shape!r}")
    while True:
        gens = []
        if shape == "dense":
            n = rng.randint(1, nmax)
            for _ in range(rng.randint(1, max_gens)):
                g = tuple(rng.randint(0, max_exp) if rng.random() < 0.7 else 0 for _ in range(n))
                if sum(g):
                    gens.append(g)
        else:
            n = rng.randint(min(3, nmax), nmax)
            p = rng.uniform(0.3, 0.6)
            for u, v in combinations(range(n), 2):
                if rng.random() < p:
                    g = [0] * n
                    g[u] = rng.randint(1, max_exp)
                    g[v] = rng.randint(1, max_exp) if rng.random() < 0.3 else g[u]
                    gens.append(tuple(g))
        if not gens:
            continue
        I = MonomialIdeal.from_generators(n, gens)
        if sum(max(g[i] for g in I.gens) for i in range(n)) <= max_polarized:
            return I


def verify_polarization_agreement(sample: int = 500, seed: int = 0) -> VerificationOutcome:
    """Associated-radical verdicts against verdicts on the polarization, for CM
    and seqCM.  Instances alternate between dense ideals (n <= 4, exponents
    <= 3) and edge-shaped ideals (n <= 6, exponents <= 2)."""
    from .engine import is_cm_via_polarization, is_scm_via_polarization

    t0 = time.perf_counter()
    rng = random.Random(seed)
    out = VerificationOutcome("polarization", True, 0, seed=seed)
    counts = {"cm": 0, "scm": 0, "dense": 0, "edge": 0}
    for k in range(sample):
        if k % 2:
            I = random_monomial_ideal(rng, 6, 2, shape="edge")
            counts["edge"] += 1
        else:
            I = random_monomial_ideal(rng, 4, 3, 4)
            counts["dense"] += 1
        rads = associated_radicals(I)
        cm = cm_decision(I, QQ, None, rads)[0]
        scm = scm_decision(I, QQ, None, rads)[0]
        pcm, pscm = is_cm_via_polarization(I), is_scm_via_polarization(I)
        out.instances_checked += 1
        counts["cm"] += cm
        counts["scm"] += scm
        if (cm, scm) != (pcm, pscm):
            out.counterexamples.append({"ideal": [list(g) for g in I.gens], "n": I.n,
                                        "detail": f"radicals cm={cm} scm={scm}, polarization cm={pcm} scm={pscm}"})
    out.info.update(counts)
    return _finish(out, t0)
