"""Clique enumeration, the point/plane census, and plane reconstruction."""

from __future__ import annotations

import pytest

from prect.cliques import (CliqueError, clique_intersections, enumerate_maximal_cliques,
                           extract_plane, pair_cover_double_count)
from prect.incidence import order_of
from prect.linegraph import LineGraph


def test_k4_single_maximal_clique(g_pp2):
    cl = enumerate_maximal_cliques(g_pp2)
    assert cl == [(0, 1, 2, 3)]


def test_enumeration_bound(g_l22):
    with pytest.raises(CliqueError):
        enumerate_maximal_cliques(g_l22, max_vertices=8)


def test_enumeration_no_duplicates_and_maximality(g_l22):
    cl = enumerate_maximal_cliques(g_l22)
    assert len(set(cl)) == len(cl)
    for c in cl:
        members = set(c)
        for u in members:
            for v in members:
                assert u == v or g_l22.adjacent(u, v)
        # maximality: no vertex extends the clique
        for w in range(g_l22.nu):
            if w not in members:
                assert not all(g_l22.adjacent(w, u) for u in members)


def test_l22_census_counts(census_l22):
    assert len(census_l22.point_cliques) == 12
    assert len(census_l22.plane_cliques) == 12
    assert census_l22.anomalous == []
    assert census_l22.ok, census_l22.mismatches()
    assert {len(pc.vertices) for pc in census_l22.point_cliques} == {4}
    assert {len(pc.vertices) for pc in census_l22.plane_cliques} == {4}


def test_l23_census_counts(census_l23):
    assert len(census_l23.point_cliques) == 24
    assert len(census_l23.plane_cliques) == 112
    assert {len(pc.vertices) for pc in census_l23.point_cliques} == {8}
    assert {len(pc.vertices) for pc in census_l23.plane_cliques} == {4}
    assert census_l23.ok


def test_r39_census_counts(census_r39):
    assert len(census_r39.point_cliques) == 36
    assert len(census_r39.plane_cliques) == 36
    assert census_r39.ok


def test_l22_per_vertex_memberships(census_l22):
    # vertex l_0 lies in m+1 = 3 point cliques and (n-1)/(m-1) = 3 plane cliques
    in_point = sum(0 in pc.vertices for pc in census_l22.point_cliques)
    in_plane = sum(0 in pc.vertices for pc in census_l22.plane_cliques)
    assert (in_point, in_plane) == (3, 3)


def test_example_point_clique_l1_l4_l11_l14(census_l22, l22):
    """The four lines through b_1 form a point clique, not a plane clique."""
    target = (1, 4, 11, 14)
    pcs = {pc.vertices: pc.point for pc in census_l22.point_cliques}
    assert target in pcs
    assert l22.structure.points[pcs[target]] == "b1"
    assert target not in {pc.vertices for pc in census_l22.plane_cliques}


def test_plane_count_per_line_l23(census_l23):
    for v in range(64):
        assert sum(v in pc.vertices for pc in census_l23.plane_cliques) == 7


def test_intersection_laws_l22(census_l22, g_l22):
    rep = clique_intersections(census_l22, g_l22)
    assert rep.ok, rep.violations[:5]
    assert set(rep.stats["plane_point_intersection_sizes"]) <= {0, 2}
    assert 2 in rep.stats["plane_point_intersection_sizes"]


def test_intersection_laws_r39(census_r39, g_r39):
    assert clique_intersections(census_r39, g_r39).ok


def test_point_cliques_same_special_line_disjoint(census_l22, l22):
    s = l22.structure
    by_special = {}
    for pc in census_l22.point_cliques:
        by_special.setdefault(s.special_line_of_point(pc.point), []).append(set(pc.vertices))
    for group in by_special.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                assert not (group[i] & group[j])


def test_double_count_identity(census_l22, g_l22, census_l23, g_l23):
    assert pair_cover_double_count(census_l22, g_l22)
    assert pair_cover_double_count(census_l23, g_l23)


def test_extract_plane_l22_all_fano(census_l22, l22):
    for pc in census_l22.plane_cliques:
        ext = extract_plane(pc, l22)
        assert ext.ok, ext.checks
        assert order_of(ext.structure) == (2, 2)
        assert ext.structure.n_points == 7
        assert ext.contains_special_point


def test_extract_plane_r39(census_r39, r39):
    for pc in census_r39.plane_cliques:
        ext = extract_plane(pc, r39)
        assert ext.ok
        assert ext.ordinary_points == 12
        assert ext.ordinary_lines == 9


def test_census_anomalous_on_corrupted_graph(l22, g_l22):
    # removing an edge creates maximal cliques that are neither kind
    from prect.cliques import classify_census

    broken = g_l22.copy_without_edge(0, 1)
    census = classify_census(broken, l22)
    assert not census.ok


def test_arbitrary_graph_enumeration():
    # 5-cycle: the maximal cliques are exactly the five edges
    c5 = LineGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert enumerate_maximal_cliques(c5) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
