"""Session-scoped fixtures: the expensive models and graphs are built once."""

from __future__ import annotations

import pytest

from prect.cliques import classify_census
from prect.construct import build_l2k, build_subplane_rect
from prect.linegraph import build_line_graph


@pytest.fixture(scope="session")
def l22():
    return build_l2k(2)


@pytest.fixture(scope="session")
def l23():
    return build_l2k(3)


@pytest.fixture(scope="session")
def pp2():
    return build_subplane_rect(2, 1, 1)


@pytest.fixture(scope="session")
def r24():
    return build_subplane_rect(2, 1, 2)


@pytest.fixture(scope="session")
def r28():
    return build_subplane_rect(2, 1, 3)


@pytest.fixture(scope="session")
def r39():
    return build_subplane_rect(3, 1, 2)


@pytest.fixture(scope="session")
def r416():
    return build_subplane_rect(2, 2, 2)


@pytest.fixture(scope="session")
def g_l22(l22):
    return build_line_graph(l22)


@pytest.fixture(scope="session")
def g_l23(l23):
    return build_line_graph(l23)


@pytest.fixture(scope="session")
def g_pp2(pp2):
    return build_line_graph(pp2)


@pytest.fixture(scope="session")
def g_r24(r24):
    return build_line_graph(r24)


@pytest.fixture(scope="session")
def g_r28(r28):
    return build_line_graph(r28)


@pytest.fixture(scope="session")
def g_r39(r39):
    return build_line_graph(r39)


@pytest.fixture(scope="session")
def g_r416(r416):
    return build_line_graph(r416)


@pytest.fixture(scope="session")
def census_l22(g_l22, l22):
    return classify_census(g_l22, l22)


@pytest.fixture(scope="session")
def census_l23(g_l23, l23):
    return classify_census(g_l23, l23)


@pytest.fixture(scope="session")
def census_r39(g_r39, r39):
    return classify_census(g_r39, r39)
