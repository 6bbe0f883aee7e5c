"""Planarity, Eulerian, Hamiltonian, chromatic work, Krein, and the K4xK4 note."""

from __future__ import annotations

import pytest

from prect.analysis import (chromatic_analysis, chromatic_index_bracket,
                            eulerian_verdict, hamiltonian_search, krein_check,
                            planarity_verdict, tensor_square_report, validate_cycle)
from prect.linegraph import LineGraph, certify_srg

KNOWN_HAMILTON_CYCLE = [4, 5, 6, 7, 8, 9, 10, 11, 3, 2, 1, 0, 15, 14, 13, 12, 4]


def test_planarity_pp2_is_k4(g_pp2):
    rep = planarity_verdict(g_pp2, 2, 2)
    assert rep.planar and rep.is_k4


def test_planarity_l22_r39(g_l22, g_r39):
    assert not planarity_verdict(g_l22, 2, 4).planar
    assert not planarity_verdict(g_r39, 3, 9).planar


@pytest.mark.parametrize("fix,m,n,expect", [
    ("g_l22", 2, 4, False),
    ("g_r39", 3, 9, True),
    ("g_l23", 2, 8, False),
    ("g_r416", 4, 16, False),
])
def test_eulerian_matches_parity_rule(fix, m, n, expect, request):
    rep = eulerian_verdict(request.getfixturevalue(fix), m, n)
    assert rep.eulerian is expect
    assert rep.consistent


def test_known_hamilton_cycle_validates(g_l22):
    assert validate_cycle(g_l22, KNOWN_HAMILTON_CYCLE)


def test_validate_cycle_rejects_bad_sequences(g_l22):
    assert not validate_cycle(g_l22, KNOWN_HAMILTON_CYCLE[:-1])  # not closed
    assert not validate_cycle(g_l22, [0, 1, 0])                  # too short
    non_edge = [0, 6] + KNOWN_HAMILTON_CYCLE[2:]                 # l_0, l_6 disjoint
    assert not g_l22.adjacent(0, 6)
    assert not validate_cycle(g_l22, non_edge)


def test_hamiltonian_search_l22(g_l22):
    rep = hamiltonian_search(g_l22, m=2, n=4)
    assert rep.cycle is not None and rep.verified
    assert rep.condition_n_le_3m_plus_1 is True


def test_hamiltonian_search_r39(g_r39):
    rep = hamiltonian_search(g_r39, m=3, n=9)
    assert rep.condition_n_le_3m_plus_1 is True  # 9 <= 10
    assert rep.cycle is not None and rep.verified


def test_hamiltonian_search_l23_condition_fails_search_still_runs(g_l23):
    rep = hamiltonian_search(g_l23, m=2, n=8)
    assert rep.condition_n_le_3m_plus_1 is False  # 8 > 7
    assert rep.cycle is not None or rep.budget_exhausted


def test_hamiltonian_budget_reports_inconclusive(g_r39):
    rep = hamiltonian_search(g_r39, node_budget=3, m=3, n=9)
    assert rep.cycle is None and rep.budget_exhausted


def test_chromatic_analysis_l22(g_l22):
    cert = certify_srg(g_l22, 2, 4)
    rep = chromatic_analysis(g_l22, cert, 2, 4)
    assert rep.haemers_bound == 4          # min(6, 1 - tau2/tau1) = min(6, 4)
    assert rep.claimed_bound == 6    # (n-1)(n-m)
    assert rep.clique_lower_bound == 4
    assert rep.exact_chromatic == 4
    colors = rep.witness
    assert len(set(colors)) == 4
    for u, v in g_l22.edges():
        assert colors[u] != colors[v]
    assert rep.flags["claimed_bound_consistent"] is False
    assert "note" in rep.flags


def test_chromatic_exact_k4(g_pp2):
    from prect.analysis import _exact_chromatic

    chi, colors, exhausted = _exact_chromatic(g_pp2, 10 ** 6)
    assert chi == 4 and not exhausted


def test_chromatic_exact_known_small_graphs():
    from prect.analysis import _exact_chromatic

    c5 = LineGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert _exact_chromatic(c5, 10 ** 6)[0] == 3
    petersen = LineGraph.from_edges(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
        (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])
    assert _exact_chromatic(petersen, 10 ** 6)[0] == 3


def test_chromatic_exact_l23_is_eight(g_l23, r28, g_r28):
    """chi of the order-(2,8) graph is exactly 8, not the greedy value.

    Regression for a search bug that abandoned palette alternatives once a
    new color could not improve the incumbent.  Oracle: the classes
    b = theta*a + t for theta outside GF(2) are eight independent sets
    partitioning the coordinatized twin, so chi <= 8; the size-8 point
    clique forces chi >= 8.
    """
    from prect.gf import field_make

    ctx = field_make(2, 3)
    theta = ctx.gen
    classes = {}
    for idx in range(64):
        a_code, b_code = divmod(idx, 8)
        t = (ctx.from_code(b_code) - theta * ctx.from_code(a_code)).code
        classes.setdefault(t, []).append(idx)
    assert len(classes) == 8
    for cl in classes.values():
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                assert not g_r28.adjacent(u, v)

    cert = certify_srg(g_l23, 2, 8)
    rep = chromatic_analysis(g_l23, cert, 2, 8, exact_limit=100)
    assert rep.exact_chromatic == 8
    del r28


def test_chromatic_bounds_only_over_limit(g_r39):
    cert = certify_srg(g_r39, 3, 9)
    rep = chromatic_analysis(g_r39, cert, 3, 9, exact_limit=10)
    assert rep.exact_chromatic is None
    assert rep.haemers_bound == 2          # min(48, 9/5) rounded up
    assert rep.claimed_bound == 48


def test_chromatic_index_k4(g_pp2):
    rep = chromatic_index_bracket(g_pp2)
    assert rep.bracket == (3, 4)
    assert rep.verdict == "r (coloring found)"


def test_chromatic_index_l22(g_l22):
    rep = chromatic_index_bracket(g_l22, 2, 4)
    assert rep.bracket == (9, 10)
    assert rep.flags["max_eig_lt_r_0.9"] is True   # max(1,3)^10 < 9^9
    assert rep.flags["m_plus_1_ge_ninth_root"] is True
    assert rep.verdict in ("r (coloring found)", "unresolved")
    if rep.witness is not None:
        assert len(rep.witness) == g_l22.num_edges


def test_chromatic_index_odd_order_immediate(g_r39):
    rep = chromatic_index_bracket(g_r39, 3, 9)
    assert rep.nu_odd and rep.verdict == "r+1 (odd order)"
    assert rep.bracket == (32, 33)


@pytest.mark.parametrize("fix,m,n", [
    ("g_l22", 2, 4), ("g_l23", 2, 8), ("g_r39", 3, 9), ("g_r416", 4, 16),
])
def test_krein_conditions_pass(fix, m, n, request):
    cert = certify_srg(request.getfixturevalue(fix), m, n)
    rep = krein_check(cert)
    assert rep.ok


def test_krein_values_l22(g_l22):
    rep = krein_check(certify_srg(g_l22, 2, 4))
    assert (rep.lhs1, rep.rhs1) == (8, 40)
    assert (rep.lhs2, rep.rhs2) == (0, 24)


def test_tensor_square_report(g_l22):
    """The four stated parts are cliques with cross-degree 2 and the graph is
    isomorphic to the categorical K_4 x K_4; the literal 'adjacent to exactly
    one of the two' claim fails inside a part (parts are cliques)."""
    parts = [[0, 1, 4, 5], [2, 3, 6, 7], [8, 9, 12, 13], [10, 11, 14, 15]]
    rep = tensor_square_report(g_l22, parts)
    assert rep["parts_are_cliques"]
    assert rep["cross_degree_two"]
    assert rep["isomorphic_to_categorical_k4xk4"]
    assert not rep["exactly_one_property"]


def test_eulerian_direct_check_detects_disconnection():
    g = LineGraph.from_edges(4, [(0, 1), (2, 3)])
    rep = eulerian_verdict(g, 1, 1)
    assert not rep.eulerian and not rep.connected
