import json
import random
from itertools import product

import pytest

from seqcm.engine import check_ideal, cm_decision, scm_decision
from seqcm.graphs import (
    Graph,
    bad_cycle,
    build_two_pentagon_H,
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    is_woodroofe,
    path_graph,
    suspension_of_cycle,
)
from seqcm.monomials import (
    MonomialIdeal,
    edge_ideal,
    ideal_sum,
    radical_colon,
    variables_ideal,
    weighted_edge_ideal,
)
from seqcm.verify import (
    _pentagon_sequence,
    VERIFIERS,
    BudgetError,
    balancing_vertices,
    c5_balancing_cm,
    cm_for_all_weights,
    lemma25_witness_weight,
    prop_H_conditions,
    random_monomial_ideal,
    random_woodroofe_graph,
    scm_for_all_weights,
    terai_witness_radical,
    verify_c5,
    verify_cor31,
    verify_terai_counterexample,
    verify_thm_cm,
    verify_thm_scm,
)


def c5_weights(seq):
    return {(min(k, (k + 1) % 5), max(k, (k + 1) % 5)): seq[k] for k in range(5)}


def h_weights(**over):
    H = build_two_pentagon_H()
    w = {e: 1 for e in H.edges}
    for key, val in over.items():
        u, v = int(key[1]), int(key[2])
        w[(min(u, v), max(u, v))] = val
    return w


def test_lemma25_weight():
    P3 = path_graph(3)
    assert lemma25_witness_weight(P3, [0, 1]) == {(0, 1): 2, (1, 2): 1}
    assert lemma25_witness_weight(P3, []) == {(0, 1): 1, (1, 2): 1}
    with pytest.raises(ValueError):
        lemma25_witness_weight(P3, [5])


@pytest.mark.parametrize("G, cm, scm", [
    (complete_graph(3), True, True),
    (path_graph(3), False, True),
    (cycle_graph(5), False, True),
    (cycle_graph(4), False, False),
    (Graph(5, ((0, 1), (1, 2), (1, 3), (3, 4))), False, True),
])
def test_for_all_weights(G, cm, scm):
    ok, w = cm_for_all_weights(G)
    assert ok == cm
    if not ok:
        assert not cm_decision(weighted_edge_ideal(G, w))[0]
    ok, w = scm_for_all_weights(G)
    assert ok == scm
    if not ok:
        assert not scm_decision(weighted_edge_ideal(G, w))[0]
    assert cm_for_all_weights(G, certify=True)[0] == cm
    assert scm_for_all_weights(G, certify=True)[0] == scm


def test_p3_fails_already_with_unit_weights():
    ok, w = cm_for_all_weights(path_graph(3))
    assert not ok and set(w.values()) == {1}


def test_c4_doubled_weights_fail():
    C4 = cycle_graph(4)
    ok, w = scm_for_all_weights(C4)
    assert not ok and set(w.values()) == {2}


def test_certify_budget():
    with pytest.raises(BudgetError):
        cm_for_all_weights(path_graph(3), wmax=2 ** 12, certify=True)
    with pytest.raises(ValueError):
        cm_for_all_weights(path_graph(3), wmax=1)


@pytest.mark.parametrize("seq, expected", [
    ((1, 1, 1, 1, 1), True),
    ((1, 2, 1, 2, 1), True),
    ((2, 2, 1, 1, 1), False),
    ((3, 3, 1, 3, 3), True),
])
def test_c5_examples(seq, expected):
    assert c5_balancing_cm(seq) == expected
    assert cm_decision(weighted_edge_ideal(cycle_graph(5), c5_weights(seq)))[0] == expected


def test_c5_rotation_and_reflection_invariance():
    for seq in product((1, 2, 3), repeat=5):
        verdict = c5_balancing_cm(seq)
        for r in range(5):
            rot = seq[r:] + seq[:r]
            assert c5_balancing_cm(rot) == verdict
            assert c5_balancing_cm(rot[::-1]) == verdict


def test_c5_dict_input():
    assert balancing_vertices(c5_weights((1, 2, 1, 2, 1))) == balancing_vertices((1, 2, 1, 2, 1))
    with pytest.raises(ValueError):
        balancing_vertices((1, 2, 3))


def test_prop_h_examples():
    assert prop_H_conditions(h_weights())
    # bridge heavier than its neighbours violates (1)
    assert not prop_H_conditions(h_weights(e05=2))
    assert not cm_decision(weighted_edge_ideal(build_two_pentagon_H(), h_weights(e05=2)))[0]


def test_prop_h_condition_three_matters():
    # x-pentagon reads 1,1,2,1,2 from x1: balancing only at x2 (index 1)
    w = h_weights(e23=2, e04=2)
    assert balancing_vertices(_pentagon_sequence(w, [0, 1, 2, 3, 4])) == [1]
    assert not prop_H_conditions(w)
    assert not cm_decision(weighted_edge_ideal(build_two_pentagon_H(), w))[0]


def test_prop_h_colon_fixtures():
    H = build_two_pentagon_H()
    # w(x2x3) < w(x3x4): sqrt(I : x3^b) = I(H) + (x2), b = w(x3x4) - 1
    w = h_weights(e23=2)
    u = tuple(1 if i == 2 else 0 for i in range(10))
    assert radical_colon(weighted_edge_ideal(H, w), u) == ideal_sum(edge_ideal(H), variables_ideal(10, [1]))
    # bridge a=2 > w(y1y2)=1, c=1: sqrt(I : y1^(a-1) y4^c) = I(H[x1..x5,y1]) + (y2, y3, y5)
    w = h_weights(e05=2)
    u = tuple(1 if i in (5, 8) else 0 for i in range(10))
    sub = Graph(10, tuple(e for e in H.edges if max(e) <= 5))
    expected = ideal_sum(edge_ideal(sub), variables_ideal(10, [6, 7, 9]))
    assert radical_colon(weighted_edge_ideal(H, w), u) == expected


def test_prop_h_pentagon_transfer():
    # a non-CM weighting of the y-pentagon lifts through x2^a2 x4^a4 with (x1, x3, x5) added
    H = build_two_pentagon_H()
    w = h_weights(e56=2, e67=2)
    C5 = cycle_graph(5)
    w2 = {(u, v): w[(u + 5, v + 5)] for u, v in C5.edges}
    I2 = weighted_edge_ideal(C5, w2)
    I = weighted_edge_ideal(H, w)
    rads = {}
    for b in product(range(3), repeat=5):
        J = radical_colon(I2, b)
        if not J.unit:
            rads.setdefault(J, b)
    for J, b in rads.items():
        u = (0, 1, 0, 1, 0) + b
        lifted = radical_colon(I, u)
        lifted_J = MonomialIdeal.from_generators(10, [(0,) * 5 + g for g in J.gens])
        assert lifted == ideal_sum(lifted_J, variables_ideal(10, [0, 2, 4]))


def test_lemma25_witness_kills_scm_on_small_graphs():
    for n in range(4, 6):
        for G in enumerate_graphs(n):
            if is_woodroofe(G):
                continue
            w = lemma25_witness_weight(G, bad_cycle(G))
            assert not scm_decision(weighted_edge_ideal(G, w))[0]


def test_sweeps_small():
    for f in (verify_thm_cm, verify_thm_scm):
        out = f(nmax=4, nmin=1)
        assert out.passed and out.instances_checked == 1 + 2 + 4 + 11
    out = verify_thm_scm(nmax=4)
    assert out.instances_checked == 11


def test_c5_sweep():
    out = verify_c5(wmax=2)
    assert out.passed and out.instances_checked == 32
    assert out.info["clockwise_only_agrees"] is True


def test_terai_t4():
    out = verify_terai_counterexample(4, 2)
    assert out.passed
    assert out.info["witness_radical"] == str(terai_witness_radical(4))
    with pytest.raises(ValueError):
        verify_terai_counterexample(5, 2)
    with pytest.raises(BudgetError):
        verify_terai_counterexample(9, 2)


def test_terai_plain_suspension_is_cm():
    for t in (3, 4, 5):
        assert cm_decision(edge_ideal(suspension_of_cycle(t)))[0]


def test_cor31_deterministic_and_json():
    a = verify_cor31(sample=20, seed=7).to_dict()
    b = verify_cor31(sample=20, seed=7).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b and a["passed"] and a["instances_checked"] == 20
    assert set(a) == {"name", "passed", "instances_checked", "counterexamples",
                      "field_sensitive_cases", "seed", "info"}
    json.dumps(a)


def test_random_generators():
    rng = random.Random(3)
    for _ in range(30):
        assert is_woodroofe(random_woodroofe_graph(rng, 7))
        I = random_monomial_ideal(rng)
        assert not I.unit and I.gens
        r = check_ideal(I)
        assert not r.is_cm or r.is_scm
        E = random_monomial_ideal(rng, 6, 2, shape="edge")
        assert all(len([a for a in g if a]) == 2 for g in E.gens)
    with pytest.raises(ValueError):
        random_monomial_ideal(rng, shape="round")


def test_registry():
    assert set(VERIFIERS) == {"thm-cm", "thm-scm", "c5", "prop-h", "cor31", "terai"}
