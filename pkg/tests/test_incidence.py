"""Axiom checking, counts, mutations, and the structure JSON round trip."""

from __future__ import annotations

import pytest

from prect.construct import build_l2k
from prect.incidence import (IncidenceStructure, StructureError, check_axioms,
                             elementary_counts, find_isomorphism, order_of)


def test_l22_all_axioms_pass(l22):
    rep = check_axioms(l22.structure, "full")
    assert rep.ok and rep.failing() == []
    assert (rep.m, rep.n) == (2, 4)


def test_r39_full_mode_passes(r39):
    rep = check_axioms(r39.structure, "full")
    assert rep.ok


def test_r28_full_mode_passes(r28):
    assert check_axioms(r28.structure, "full").ok


def test_deleting_ordinary_line_breaks_a1(l22):
    broken = l22.structure.drop_line(0)
    rep = check_axioms(broken, "full")
    assert not rep.verdicts["A1"]
    wit = rep.witnesses["A1"]
    a, b = wit["pair"]
    # the witness pair must really be uncovered in the mutated structure
    assert not any(a in ln and b in ln for ln in broken.lines)
    # and covered exactly by the deleted line in the original
    assert {a, b} <= set(l22.structure.lines[0])


def test_every_single_ordinary_line_deletion_breaks_a1(l22):
    for i in l22.structure.ordinary_lines:
        rep = check_axioms(l22.structure.drop_line(i), "full")
        assert not rep.verdicts["A1"]


def test_a1_pair_cover_row_sums(l23):
    s = l23.structure
    cover = {}
    for i, ln in enumerate(s.lines):
        for x in range(len(ln)):
            for y in range(x + 1, len(ln)):
                cover[(ln[x], ln[y])] = cover.get((ln[x], ln[y]), 0) + 1
    npts = s.n_points
    assert all(cover.get((a, b), 0) == 1
               for a in range(npts) for b in range(a + 1, npts))


def test_a5_line_size_law(r39):
    s = r39.structure
    m, n = order_of(s)
    assert {len(s.lines[i]) for i in s.special_lines} == {n + 1}
    assert {len(s.lines[i]) for i in s.ordinary_lines} == {m + 1}


def test_order_of_examples(l22, pp2, r39):
    assert order_of(l22.structure) == (2, 4)
    assert order_of(pp2.structure) == (2, 2)
    assert order_of(r39.structure) == (3, 9)


def test_order_of_rejects_unequal_special_lines():
    # two special lines of different sizes through D
    s = IncidenceStructure(
        ["D", "p", "q", "r", "s", "t"],
        [(0, 1, 2), (0, 3, 4, 5), (1, 3, 5)],
        0,
    )
    with pytest.raises(StructureError):
        order_of(s)


def test_elementary_counts_l22(l22):
    rep = elementary_counts(l22.structure)
    assert rep.ok and not rep.trivial
    assert rep.checks["ordinary_line_count"] == (16, 16)


def test_elementary_counts_l23(l23):
    rep = elementary_counts(l23.structure)
    assert rep.ok
    assert rep.checks["ordinary_line_count"] == (64, 64)
    assert rep.checks["ordinary_point_count"] == (24, 24)


def test_elementary_counts_trivial_plane(pp2):
    rep = elementary_counts(pp2.structure)
    assert rep.ok and rep.trivial
    assert "nontrivial_n_ge_m_squared" not in rep.checks


def test_sampled_a6_matches_full(r39):
    full = check_axioms(r39.structure, "full")
    sampled = check_axioms(r39.structure, "sampled", a6_samples=20000, seed=7)
    assert full.verdicts["A6"] and sampled.verdicts["A6"]
    cov = sampled.a6_coverage
    assert cov["drawn"] == 20000 and 0 < cov["distinct"] <= cov["space"]


def test_sampled_a6_is_seed_deterministic(r39):
    r1 = check_axioms(r39.structure, "sampled", a6_samples=5000, seed=3)
    r2 = check_axioms(r39.structure, "sampled", a6_samples=5000, seed=3)
    assert not r1.a6_coverage["exhaustive"]
    assert r1.a6_coverage == r2.a6_coverage


def test_sampled_a6_upgrades_to_exhaustive_on_small_spaces(l23):
    # the whole quadruple space of L_2^3 is smaller than the sample budget
    rep = check_axioms(l23.structure, "sampled", a6_samples=10 ** 6, seed=0)
    cov = rep.a6_coverage
    assert cov["exhaustive"] and cov["drawn"] == cov["space"] == cov["distinct"]
    assert rep.verdicts["A6"]


def test_structure_json_round_trip(l22):
    s = l22.structure
    back = IncidenceStructure.from_json(s.to_json())
    assert back == s


def test_validate_rejects_short_lines():
    with pytest.raises(StructureError):
        IncidenceStructure(["D", "a", "b"], [(0, 1)], 0)


def test_find_isomorphism_identity_and_negative(l22):
    assert find_isomorphism(l22.structure, l22.structure) is not None
    other = build_l2k(3)
    assert find_isomorphism(l22.structure, other.structure) is None
