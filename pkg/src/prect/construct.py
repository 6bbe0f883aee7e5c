"""Builders for the two families of (pseudo-)projective rectangles.

build_l2k makes the narrow family of order (2, 2^k) from group data: ground
set A, B, C plus D, with ordinary lines {a_g, b_{g+h}, c_h} over the group
(Z_2)^k.  build_subplane_rect makes the order-(q, q^k) structure inside the
projective plane over GF(q^k): special lines are the lines through
D = [0,0,1] meeting the GF(q)-subplane, ordinary lines are the restrictions
of the plane's lines <a,b,1> to the union of the special lines.

Ordinary lines are numbered in construction order; the line graph and every
report use that numbering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldCtx, FieldElement, field_make
from .incidence import IncidenceStructure

DEFAULT_L2K_MAX_K = 6
DEFAULT_SUBPLANE_MAX_N = 256


class BuildError(ValueError):
    """Invalid construction parameters."""


@dataclass(frozen=True)
class ProjPoint:
    """Homogeneous [x,y,z], normalized so the first nonzero coordinate is 1."""

    x: FieldElement
    y: FieldElement
    z: FieldElement

    @classmethod
    def make(cls, x: FieldElement, y: FieldElement, z: FieldElement) -> "ProjPoint":
        for lead in (x, y, z):
            if lead:
                inv = lead.inv()
                return cls(x * inv, y * inv, z * inv)
        raise BuildError("zero triple is not a projective point")

    @property
    def codes(self) -> tuple[int, int, int]:
        return (self.x.code, self.y.code, self.z.code)

    def __repr__(self):
        return f"[{self.x}:{self.y}:{self.z}]"


@dataclass(frozen=True)
class LineCoeffs:
    """Homogeneous line coefficients <a,b,c>; ordinary lines have c = 1."""

    a: FieldElement
    b: FieldElement
    c: FieldElement

    @property
    def codes(self) -> tuple[int, int, int]:
        return (self.a.code, self.b.code, self.c.code)

    def contains(self, pt: ProjPoint) -> bool:
        return not (self.a * pt.x + self.b * pt.y + self.c * pt.z)

    def __repr__(self):
        return f"<{self.a},{self.b},{self.c}>"


class RectangleModel:
    """An incidence structure plus construction metadata and coordinates.

    structure.lines lists the ordinary lines first, in construction order,
    followed by the m+1 special lines; graph vertices reuse those indices.
    Combinatorial models (family "l2k") carry no coordinates.
    """

    def __init__(self, structure: IncidenceStructure, family: str,
                 p: int, e: int, k: int, *, ctx: FieldCtx | None = None,
                 point_coords=None, line_coeffs=None, special_coeffs=None,
                 special_labels=None):
        self.structure = structure
        self.family = family
        self.p, self.e, self.k = p, e, k
        self.q = p ** e
        self.m = self.q
        self.n = self.q ** k
        self.ctx = ctx
        self.point_coords = point_coords
        self.line_coeffs = line_coeffs
        self.special_coeffs = special_coeffs
        self.special_labels = special_labels
        if point_coords is not None:
            self._point_index = {pt.codes: i for i, pt in enumerate(point_coords)
                                 if pt is not None}
        else:
            self._point_index = None

    @property
    def trivial(self) -> bool:
        return self.m == self.n

    @property
    def num_ordinary_lines(self) -> int:
        return len(self.structure.ordinary_lines)

    def point_index(self, pt: ProjPoint):
        if self._point_index is None:
            raise BuildError("model has no coordinates")
        return self._point_index.get(pt.codes)

    def special_position(self, structure_line_index: int) -> int:
        """Position of a special line inside the special block (0..m)."""
        nu = self.num_ordinary_lines
        if structure_line_index < nu:
            raise BuildError(f"line {structure_line_index} is ordinary")
        return structure_line_index - nu

    def alt_special_labels(self):
        """The alternate q=2 labeling that swaps the roles of s_1 and s_inf."""
        if self.q != 2 or self.family == "l2k":
            return None
        swap = {"s_1": "s_inf", "s_inf": "s_1"}
        return [swap.get(lab, lab) for lab in self.special_labels]


def build_l2k(k: int, max_k: int = DEFAULT_L2K_MAX_K) -> RectangleModel:
    """The narrow projective rectangle of order (2, 2^k), built from (Z_2)^k.

    Points are D, a_g, b_g, c_g for g in (Z_2)^k; the special lines are
    A, B, C (each block plus D) and the ordinary lines are the triples
    {a_u, b_{u xor v}, c_v}, numbered u-major so that k = 2 reproduces the
    usual l_0 .. l_15 table.
    """
    if k < 1:
        raise BuildError("k must be >= 1")
    if k > max_k:
        raise BuildError(f"k = {k} beyond bound {max_k}")
    n = 1 << k
    points = ["D"] + [f"a{g}" for g in range(n)] + [f"b{g}" for g in range(n)] \
        + [f"c{g}" for g in range(n)]
    a0, b0, c0 = 1, 1 + n, 1 + 2 * n
    lines = []
    for u in range(n):
        for v in range(n):
            lines.append((a0 + u, b0 + (u ^ v), c0 + v))
    specials = [
        tuple([0] + list(range(a0, a0 + n))),
        tuple([0] + list(range(b0, b0 + n))),
        tuple([0] + list(range(c0, c0 + n))),
    ]
    structure = IncidenceStructure(points, lines + specials, 0)
    return RectangleModel(structure, "l2k", 2, 1, k,
                          special_labels=["A", "B", "C"])


def build_subplane_rect(p: int, e: int, k: int,
                        max_n: int = DEFAULT_SUBPLANE_MAX_N) -> RectangleModel:
    """The subplane construction R(q, q^k) inside the plane over GF(q^k).

    q = p^e.  k = 1 yields the full projective plane over GF(q), the trivial
    rectangle of order (q, q); k >= 2 yields order (q, q^k).  Every incidence
    is determined by a*x + b*y + c*z = 0 on homogeneous coordinates.
    """
    if e < 1 or k < 1:
        raise BuildError("need e >= 1 and k >= 1")
    q = p ** e
    n = q ** k
    if n > max_n:
        raise BuildError(f"q^k = {n} beyond bound {max_n}")
    ctx = field_make(p, e * k)
    zero, one = ctx.zero, ctx.one
    sub = ctx.subfield_codes(q)

    # Points: D, then the s_beta blocks (beta over GF(q) in code order),
    # then the s_inf block; each block enumerated over the field.
    point_coords = [ProjPoint(zero, zero, one)]
    labels = ["D"]
    special_pointsets = []
    special_coeffs = []
    special_labels = []
    for beta_code in sub:
        beta = ctx.from_code(beta_code)
        block = [0]
        for t_code in range(n):
            pt = ProjPoint.make(-beta, one, ctx.from_code(t_code))
            block.append(len(point_coords))
            point_coords.append(pt)
            labels.append(repr(pt))
        special_pointsets.append(tuple(block))
        special_coeffs.append(LineCoeffs(one, beta, zero))
        special_labels.append(f"s_{beta_code}")
    block = [0]
    for t_code in range(n):
        pt = ProjPoint.make(one, zero, ctx.from_code(t_code))
        block.append(len(point_coords))
        point_coords.append(pt)
        labels.append(repr(pt))
    special_pointsets.append(tuple(block))
    special_coeffs.append(LineCoeffs(zero, one, zero))
    special_labels.append("s_inf")

    # Ordinary lines <a,b,1>, a-major, restricted to the special-point union.
    line_coeffs = []
    lines = []
    npts = len(point_coords)
    for a_code in range(n):
        a = ctx.from_code(a_code)
        for b_code in range(n):
            b = ctx.from_code(b_code)
            lc = LineCoeffs(a, b, one)
            pts = [i for i in range(npts) if lc.contains(point_coords[i])]
            line_coeffs.append(lc)
            lines.append(tuple(pts))

    structure = IncidenceStructure(labels, lines + special_pointsets, 0)
    family = "plane" if k == 1 else "subplane"
    return RectangleModel(structure, family, p, e, k, ctx=ctx,
                          point_coords=point_coords, line_coeffs=line_coeffs,
                          special_coeffs=special_coeffs,
                          special_labels=special_labels)


def build_plane(p: int, e: int) -> RectangleModel:
    """The projective plane over GF(p^e) as a trivial rectangle."""
    return build_subplane_rect(p, e, 1)


@dataclass(frozen=True)
class CommonPoint:
    point: ProjPoint
    point_index: int
    special_line: int
    special_label: str


def common_point(l1: int, l2: int, model: RectangleModel):
    """Common point of two ordinary lines of a subplane model, or None.

    Evaluates [-(b2-b1), a2-a1, a1*b2-a2*b1] and keeps it only if it lies in
    the model's point set; the result is checked against the stored point
    sets, which are authoritative.
    """
    if model.line_coeffs is None:
        raise BuildError("common_point needs a coordinatized model")
    nu = model.num_ordinary_lines
    if not (0 <= l1 < nu and 0 <= l2 < nu):
        raise BuildError("common_point takes ordinary line indices")
    if l1 == l2:
        raise BuildError("lines must be distinct")
    c1, c2 = model.line_coeffs[l1], model.line_coeffs[l2]
    x = -(c2.b - c1.b)
    y = c2.a - c1.a
    z = c1.a * c2.b - c2.a * c1.b
    stored = set(model.structure.lines[l1]) & set(model.structure.lines[l2])
    if not (x or y or z):
        raise BuildError("identical line coefficients")
    pt = ProjPoint.make(x, y, z)
    idx = model.point_index(pt)
    if idx is None:
        if stored:
            raise StructureMismatch(l1, l2, stored, None)
        return None
    if stored != {idx}:
        raise StructureMismatch(l1, l2, stored, idx)
    special = model.structure.special_line_of_point(idx)
    return CommonPoint(pt, idx, special,
                       model.special_labels[model.special_position(special)])


class StructureMismatch(RuntimeError):
    """Coordinate formula and stored incidence disagree (should not happen)."""

    def __init__(self, l1, l2, stored, computed):
        super().__init__(
            f"lines {l1},{l2}: stored intersection {stored}, formula gave {computed}")
