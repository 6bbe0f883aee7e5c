"""Maximal clique enumeration and the point/plane clique census.

In the graph of lines of a nontrivial rectangle every maximal clique is
either a point clique (all n ordinary lines through one ordinary point) or a
plane clique (the m^2 ordinary lines of one maximal subplane); anything else
is anomalous and falsifies the rectangle property.  When n = m^2 the two
kinds have equal size, so classification tests for a common point before
looking at sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._util import comb2, iter_bits
from .construct import RectangleModel
from .incidence import IncidenceStructure, check_axioms, elementary_counts, order_of
from .linegraph import LineGraph

ENUMERATION_MAX_VERTICES = 1024


class CliqueError(ValueError):
    pass


def enumerate_maximal_cliques(g: LineGraph,
                              max_vertices: int = ENUMERATION_MAX_VERTICES) -> list[tuple[int, ...]]:
    """All maximal cliques, each exactly once, via pivoting Bron-Kerbosch."""
    if g.nu > max_vertices:
        raise CliqueError(f"enumeration limited to {max_vertices} vertices")
    rows = g.rows
    out = []

    def expand(r_mask: int, p_mask: int, x_mask: int):
        if not p_mask and not x_mask:
            out.append(r_mask)
            return
        pivot, best = -1, -1
        for u in iter_bits(p_mask | x_mask):
            deg = (rows[u] & p_mask).bit_count()
            if deg > best:
                pivot, best = u, deg
        for v in iter_bits(p_mask & ~rows[pivot]):
            bit = 1 << v
            expand(r_mask | bit, p_mask & rows[v], x_mask & rows[v])
            p_mask &= ~bit
            x_mask |= bit

    expand(0, (1 << g.nu) - 1, 0)
    cliques = sorted(tuple(iter_bits(mask)) for mask in out)
    return cliques


@dataclass
class PointClique:
    vertices: tuple[int, ...]
    point: int  # structure point index shared by every member line


@dataclass
class PlaneClique:
    vertices: tuple[int, ...]
    plane_points: tuple[int, ...]  # union of member lines plus D


@dataclass
class CliqueCensus:
    point_cliques: list[PointClique]
    plane_cliques: list[PlaneClique]
    anomalous: list[tuple[int, ...]]
    m: int
    n: int
    trivial: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.anomalous and all(e == a for e, a in self.checks.values())

    def mismatches(self) -> dict:
        return {k: v for k, v in self.checks.items() if v[0] != v[1]}


def classify_census(g: LineGraph, model: RectangleModel,
                    cliques: list[tuple[int, ...]] | None = None) -> CliqueCensus:
    """Split the maximal cliques into point cliques and plane cliques.

    A clique whose member lines all share a point is the point clique of that
    point (checked to be the full pencil of size n); otherwise a clique of
    size m^2 is a plane clique; anything else is anomalous.  For nontrivial
    rectangles the counting identities are checked: (m+1)n point cliques,
    n^2(n-1)/(m^2(m-1)) plane cliques, each vertex in m+1 point cliques and
    (n-1)/(m-1) plane cliques, maximum size n.
    """
    if cliques is None:
        cliques = enumerate_maximal_cliques(g)
    s = model.structure
    m, n = model.m, model.n
    census = CliqueCensus([], [], [], m, n, model.trivial)

    masks = s.line_masks
    D = s.special_point
    for cl in cliques:
        common = masks[cl[0]]
        for v in cl[1:]:
            common &= masks[v]
        if common:
            pt = common.bit_length() - 1
            pencil = tuple(i for i in s.lines_at[pt] if i < g.nu)
            if common.bit_count() == 1 and cl == pencil and len(cl) == n:
                census.point_cliques.append(PointClique(cl, pt))
                continue
            census.anomalous.append(cl)
            continue
        if len(cl) == m * m:
            union = 0
            for v in cl:
                union |= masks[v]
            union |= 1 << D
            census.plane_cliques.append(PlaneClique(cl, tuple(iter_bits(union))))
        else:
            census.anomalous.append(cl)

    c = census.checks
    c["anomalous"] = (0, len(census.anomalous))
    if not model.trivial:
        c["point_clique_count"] = ((m + 1) * n, len(census.point_cliques))
        plane_expected = n * n * (n - 1) // (m * m * (m - 1))
        c["plane_clique_count"] = (plane_expected, len(census.plane_cliques))
        c["point_clique_sizes"] = ({n}, {len(pc.vertices) for pc in census.point_cliques})
        c["plane_clique_sizes"] = ({m * m}, {len(pc.vertices) for pc in census.plane_cliques})
        c["max_clique_size"] = (n, max(len(cl) for cl in cliques))
        pt_member = [0] * g.nu
        pl_member = [0] * g.nu
        for pc in census.point_cliques:
            for v in pc.vertices:
                pt_member[v] += 1
        for pc in census.plane_cliques:
            for v in pc.vertices:
                pl_member[v] += 1
        c["point_cliques_per_vertex"] = ({m + 1}, set(pt_member))
        c["plane_cliques_per_vertex"] = ({(n - 1) // (m - 1)}, set(pl_member))
        sets = {pc.vertices for pc in census.point_cliques}
        c["classes_set_distinct"] = (0, sum(pc.vertices in sets for pc in census.plane_cliques))
    return census


@dataclass
class IntersectionReport:
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def clique_intersections(census: CliqueCensus, g: LineGraph) -> IntersectionReport:
    """Pairwise intersection laws and the exactly-one covering of edges.

    Two point cliques share at most one vertex, two plane cliques share at
    most one vertex, a plane and a point clique share 0 or m vertices, and
    each adjacent vertex pair lies in exactly one clique of each class.
    """
    rep = IntersectionReport()
    m = census.m
    points = [frozenset(pc.vertices) for pc in census.point_cliques]
    planes = [frozenset(pc.vertices) for pc in census.plane_cliques]

    for fam, name in ((points, "point"), (planes, "plane")):
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                k = len(fam[i] & fam[j])
                if k > 1:
                    rep.violations.append((f"{name}-{name}", i, j, k))
    sizes = set()
    for i, a in enumerate(planes):
        for j, b in enumerate(points):
            k = len(a & b)
            sizes.add(k)
            if k not in (0, m):
                rep.violations.append(("plane-point", i, j, k))
    rep.stats["plane_point_intersection_sizes"] = sorted(sizes)

    edge_pt = {}
    edge_pl = {}
    for fam, store in ((census.point_cliques, edge_pt), (census.plane_cliques, edge_pl)):
        for pc in fam:
            vs = pc.vertices
            for x in range(len(vs)):
                for y in range(x + 1, len(vs)):
                    key = (vs[x], vs[y])
                    store[key] = store.get(key, 0) + 1
    for u in range(g.nu):
        for v in iter_bits(g.rows[u] >> (u + 1) << (u + 1)):
            if edge_pt.get((u, v), 0) != 1:
                rep.violations.append(("edge-point-cover", u, v, edge_pt.get((u, v), 0)))
            if edge_pl.get((u, v), 0) != 1:
                rep.violations.append(("edge-plane-cover", u, v, edge_pl.get((u, v), 0)))
    extra = set(edge_pt) | set(edge_pl)
    for (u, v) in extra:
        if not g.adjacent(u, v):
            rep.violations.append(("cover-of-nonedge", u, v, 0))
    rep.stats["edges_checked"] = g.num_edges
    return rep


@dataclass
class PlaneExtraction:
    structure: IncidenceStructure
    point_map: list[int]  # plane point index -> model point index
    order: int
    ordinary_points: int
    ordinary_lines: int
    contains_special_point: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.contains_special_point
                and all(e == a for e, a in self.checks.values()))


def extract_plane(clique: PlaneClique, model: RectangleModel) -> PlaneExtraction:
    """Rebuild the plane of a plane clique and verify it is a plane of order m.

    The plane's points are the union of the member lines plus D; its lines
    are the member lines together with the restrictions of the special lines.
    The induced structure must pass all six axioms as a trivial rectangle of
    order (m, m) with m(m+1) ordinary points and m^2 ordinary lines.
    """
    s = model.structure
    m = model.m
    pts = list(clique.plane_points)
    back = {p: i for i, p in enumerate(pts)}
    nu = model.num_ordinary_lines

    lines = [tuple(back[p] for p in s.lines[v]) for v in clique.vertices]
    for si in s.special_lines:
        restricted = tuple(back[p] for p in s.lines[si] if p in back)
        lines.append(restricted)
    sub = IncidenceStructure([s.points[p] for p in pts], lines, back[s.special_point],
                             validate=False)

    ext = PlaneExtraction(
        structure=sub,
        point_map=pts,
        order=m,
        ordinary_points=len(pts) - 1,
        ordinary_lines=len(clique.vertices),
        contains_special_point=s.special_point in back,
    )
    c = ext.checks
    axioms = check_axioms(sub, "full")
    c["axioms"] = (True, axioms.ok)
    try:
        c["order"] = ((m, m), order_of(sub))
    except Exception:
        c["order"] = ((m, m), None)
    counts = elementary_counts(sub) if c["order"][1] == (m, m) else None
    c["elementary_counts"] = (True, counts.ok if counts else False)
    c["ordinary_points"] = (m * (m + 1), ext.ordinary_points)
    c["ordinary_lines"] = (m * m, ext.ordinary_lines)
    return ext


def pair_cover_double_count(census: CliqueCensus, g: LineGraph) -> bool:
    """Edge double count: point and plane cliques each cover all edges once."""
    pt_pairs = sum(comb2(len(pc.vertices)) for pc in census.point_cliques)
    pl_pairs = sum(comb2(len(pc.vertices)) for pc in census.plane_cliques)
    return pt_pairs == pl_pairs == g.num_edges
