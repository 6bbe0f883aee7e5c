"""Point-line incidence structures and the projective-rectangle axioms.

A projective rectangle is an incidence structure with a special point D
satisfying six axioms:

  A1  every two distinct points lie on exactly one line;
  A2  there are four points, no three collinear;
  A3  every line has at least three points;
  A4  there is a special point D (lines through D are special);
  A5  each special line meets every other line in exactly one point;
  A6  if ordinary lines l1, l2 meet, then any two lines meeting both of
      them in four distinct points meet each other.

Structures here are purely index-based; coordinates live in prect.construct.
"""

from __future__ import annotations

import json
import random
from bisect import bisect_right
from dataclasses import dataclass, field

from ._util import comb2, iter_bits

A6_FULL_DEFAULT_MAX_N = 16
A6_DEFAULT_SAMPLES = 10 ** 6
A6_DEFAULT_SEED = 0


class StructureError(ValueError):
    """Malformed incidence structure or inconsistent parameters."""


class IncidenceStructure:
    """Points, lines as point-index sets, and a designated special point.

    Lines are stored as sorted duplicate-free tuples and must have at least
    three points each; pass validate=False to build deliberately broken
    structures for mutation tests (only the sortedness is still enforced).
    """

    def __init__(self, points, lines, special_point: int, *, validate: bool = True):
        self.points = list(points)
        if len(set(self.points)) != len(self.points):
            raise StructureError("duplicate point labels")
        self.lines = []
        for ln in lines:
            t = tuple(sorted(set(ln)))
            if len(t) != len(tuple(ln)):
                raise StructureError(f"line {ln!r} has duplicate points")
            self.lines.append(t)
        if not 0 <= special_point < len(self.points):
            raise StructureError("special point index out of range")
        self.special_point = special_point

        np_ = len(self.points)
        for t in self.lines:
            if t and not (0 <= t[0] and t[-1] < np_):
                raise StructureError(f"line {t!r} has point index out of range")
            if validate and len(t) < 3:
                raise StructureError(f"line {t!r} has fewer than three points")

        self.line_masks = [sum(1 << p for p in t) for t in self.lines]
        self.lines_at = [[] for _ in range(np_)]
        for i, t in enumerate(self.lines):
            for p in t:
                self.lines_at[p].append(i)
        self.lines_at = [tuple(ls) for ls in self.lines_at]
        self.special_lines = tuple(i for i, t in enumerate(self.lines)
                                   if special_point in t)
        self.ordinary_lines = tuple(i for i, t in enumerate(self.lines)
                                    if special_point not in t)

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def is_special_line(self, i: int) -> bool:
        return self.special_point in self.lines[i]

    def special_line_of_point(self, p: int):
        """Index of the unique special line through an ordinary point, if unique."""
        hits = [i for i in self.lines_at[p] if self.is_special_line(i)]
        return hits[0] if len(hits) == 1 else None

    def drop_line(self, line_index: int) -> "IncidenceStructure":
        """Copy of the structure with one line removed (for mutation tests)."""
        lines = [t for i, t in enumerate(self.lines) if i != line_index]
        return IncidenceStructure(self.points, lines, self.special_point, validate=False)

    # -- JSON interchange: labels only, geometry lives elsewhere --

    def to_json_dict(self) -> dict:
        return {
            "points": list(self.points),
            "special_point": self.points[self.special_point],
            "lines": [[self.points[p] for p in t] for t in self.lines],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, d: dict, *, validate: bool = True) -> "IncidenceStructure":
        points = list(d["points"])
        index = {lab: i for i, lab in enumerate(points)}
        lines = [[index[lab] for lab in ln] for ln in d["lines"]]
        return cls(points, lines, index[d["special_point"]], validate=validate)

    @classmethod
    def from_json(cls, text: str, *, validate: bool = True) -> "IncidenceStructure":
        return cls.from_json_dict(json.loads(text), validate=validate)

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceStructure)
            and self.points == other.points
            and self.lines == other.lines
            and self.special_point == other.special_point
        )


@dataclass
class AxiomReport:
    """Per-axiom verdicts with re-checkable witnesses on failure."""

    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    m: int | None = None
    n: int | None = None
    counts: dict = field(default_factory=dict)
    a6_mode: str = "full"
    a6_coverage: dict | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def failing(self) -> list[str]:
        return [a for a, v in self.verdicts.items() if not v]


def _pair_cover(s: IncidenceStructure):
    """Map unordered point pair -> list of covering line indices."""
    cover = {}
    for i, t in enumerate(s.lines):
        for a in range(len(t)):
            for b in range(a + 1, len(t)):
                cover.setdefault((t[a], t[b]), []).append(i)
    return cover


def check_axioms(s: IncidenceStructure, a6_mode: str = "auto",
                 a6_samples: int = A6_DEFAULT_SAMPLES,
                 seed: int = A6_DEFAULT_SEED) -> AxiomReport:
    """Verify axioms A1 to A6, returning verdicts and witnesses.

    a6_mode is "full", "sampled", or "auto"; auto runs the full quadruple
    enumeration when the structure's n is at most A6_FULL_DEFAULT_MAX_N and
    samples a6_samples quadruples (seeded, uniform over the quadruple space)
    above that.  Sampled runs record their coverage of the space; when the
    space is no larger than the sample count they upgrade to exhaustive
    enumeration, which is cheaper and conclusive.
    """
    rep = AxiomReport()
    cover = _pair_cover(s)

    # A1: every point pair on exactly one line.
    a1_witness = None
    for pair, lines in cover.items():
        if len(lines) > 1:
            a1_witness = {"pair": pair, "lines": lines, "defect": "covered more than once"}
            break
    if a1_witness is None:
        np_ = s.n_points
        for a in range(np_):
            for b in range(a + 1, np_):
                if (a, b) not in cover:
                    a1_witness = {"pair": (a, b), "lines": [], "defect": "not covered"}
                    break
            if a1_witness:
                break
    rep.verdicts["A1"] = a1_witness is None
    if a1_witness:
        rep.witnesses["A1"] = a1_witness

    # A2: four points, no three collinear.
    witness4 = _find_quadrangle(s, cover)
    rep.verdicts["A2"] = witness4 is not None
    if witness4 is not None:
        rep.witnesses["A2"] = {"points": witness4}

    # A3: every line has >= 3 points.
    small = [i for i, t in enumerate(s.lines) if len(t) < 3]
    rep.verdicts["A3"] = not small
    if small:
        rep.witnesses["A3"] = {"lines": small}

    # A4: the special point exists and partitions the lines.
    rep.verdicts["A4"] = True
    rep.counts["special_lines"] = len(s.special_lines)
    rep.counts["ordinary_lines"] = len(s.ordinary_lines)

    # A5: each special line meets every other line exactly once.
    a5_witness = None
    for si in s.special_lines:
        mask = s.line_masks[si]
        for j in range(s.n_lines):
            if j == si:
                continue
            hits = (mask & s.line_masks[j]).bit_count()
            if hits != 1:
                a5_witness = {"special": si, "line": j, "common_points": hits}
                break
        if a5_witness:
            break
    rep.verdicts["A5"] = a5_witness is None
    if a5_witness:
        rep.witnesses["A5"] = a5_witness

    sizes = {len(s.lines[i]) for i in s.special_lines}
    if len(sizes) == 1 and s.special_lines:
        rep.m = len(s.special_lines) - 1
        rep.n = sizes.pop() - 1
    rep.counts["points"] = s.n_points
    rep.counts["lines"] = s.n_lines

    # A6.
    mode = a6_mode
    if mode == "auto":
        mode = "full" if (rep.n is None or rep.n <= A6_FULL_DEFAULT_MAX_N) else "sampled"
    rep.a6_mode = mode
    if mode == "full":
        ok6, wit6 = _a6_full(s)
    elif mode == "sampled":
        ok6, wit6, rep.a6_coverage = _a6_sampled(s, a6_samples, seed)
    else:
        raise ValueError(f"unknown a6_mode {a6_mode!r}")
    rep.verdicts["A6"] = ok6
    if wit6:
        rep.witnesses["A6"] = wit6
    return rep


def _find_quadrangle(s, cover):
    """Four points with no three collinear, or None."""

    def collinear(a, b, c):
        key = (a, b) if a < b else (b, a)
        for ln in cover.get(key, ()):
            if c in s.lines[ln]:
                return True
        return False

    np_ = s.n_points
    for a in range(np_):
        for b in range(a + 1, np_):
            for c in range(b + 1, np_):
                if collinear(a, b, c):
                    continue
                for d in range(c + 1, np_):
                    if not (collinear(a, b, d) or collinear(a, c, d)
                            or collinear(b, c, d)):
                        return (a, b, c, d)
    return None


def _a6_candidates(s):
    """Per intersecting ordinary pair, the candidate 'transversal' lines.

    A candidate for the pair (l1, l2) is any line g other than l1, l2 that
    meets both, excluding lines through the common point of l1 and l2; only
    those can contribute four distinct intersection points.  Returns a list
    of (l1, l2, [(g, point on l1, point on l2), ...]).
    """
    masks = s.line_masks
    nl = s.n_lines
    nbr = [0] * nl
    for i in range(nl):
        mi = masks[i]
        for j in range(i + 1, nl):
            if mi & masks[j]:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    out = []
    olines = s.ordinary_lines
    for x, l1 in enumerate(olines):
        for l2 in olines[x + 1:]:
            common = masks[l1] & masks[l2]
            if not common:
                continue
            p = common.bit_length() - 1
            cands = []
            cmask = nbr[l1] & nbr[l2] & ~(1 << l1) & ~(1 << l2)
            for g in iter_bits(cmask):
                if masks[g] >> p & 1:
                    continue
                q1 = (masks[g] & masks[l1]).bit_length() - 1
                q2 = (masks[g] & masks[l2]).bit_length() - 1
                cands.append((g, q1, q2))
            out.append((l1, l2, cands))
    return out


def _a6_quadruple_ok(s, cands, i, j):
    g1, a1, b1 = cands[i]
    g2, a2, b2 = cands[j]
    if a1 == a2 or b1 == b2:
        return True  # fewer than four distinct points: nothing to check
    return bool(s.line_masks[g1] & s.line_masks[g2])


def _a6_full(s):
    table = _a6_candidates(s)
    for l1, l2, cands in table:
        nc = len(cands)
        for i in range(nc):
            for j in range(i + 1, nc):
                if not _a6_quadruple_ok(s, cands, i, j):
                    return False, {"l1": l1, "l2": l2,
                                   "g1": cands[i][0], "g2": cands[j][0]}
    return True, None


def _a6_sampled(s, samples, seed):
    table = _a6_candidates(s)
    weights = [comb2(len(c)) for _, _, c in table]
    total = sum(weights)
    if total == 0:
        return True, None, {"space": 0, "drawn": 0, "distinct": 0, "exhaustive": True}
    if total <= samples:
        # full enumeration is cheaper and stronger than sampling here
        ok, wit = _a6_full(s)
        cov = {"space": total, "drawn": total, "distinct": total, "exhaustive": True}
        return ok, wit, cov
    cum = []
    acc = 0
    for w in weights:
        acc += w
        cum.append(acc)
    rng = random.Random(seed)
    seen = bytearray((total + 7) // 8)
    distinct = 0
    witness = None
    for _ in range(samples):
        r = rng.randrange(total)
        t = bisect_right(cum, r)
        base = cum[t - 1] if t else 0
        rank = r - base
        l1, l2, cands = table[t]
        i, j = _unrank_pair(rank, len(cands))
        if not (seen[r >> 3] >> (r & 7) & 1):
            seen[r >> 3] |= 1 << (r & 7)
            distinct += 1
        if not _a6_quadruple_ok(s, cands, i, j):
            witness = {"l1": l1, "l2": l2, "g1": cands[i][0], "g2": cands[j][0]}
            break
    coverage = {"space": total, "drawn": samples, "distinct": distinct,
                "exhaustive": False}
    return witness is None, witness, coverage


def _unrank_pair(rank, n):
    """The rank-th pair (i, j) with i < j < n, in lexicographic order."""
    i = 0
    block = n - 1
    while rank >= block:
        rank -= block
        i += 1
        block -= 1
    return i, i + 1 + rank


def order_of(s: IncidenceStructure) -> tuple[int, int]:
    """(m, n): m+1 special lines with n+1 points each, all of equal size."""
    if not s.special_lines:
        raise StructureError("no special lines")
    sizes = {len(s.lines[i]) for i in s.special_lines}
    if len(sizes) != 1:
        raise StructureError(f"special lines have unequal sizes {sorted(sizes)}")
    return len(s.special_lines) - 1, sizes.pop() - 1


@dataclass
class CountReport:
    """Elementary count checks; each entry is (expected, actual)."""

    m: int
    n: int
    trivial: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(e == a for e, a in self.checks.values())

    def mismatches(self) -> dict:
        return {k: v for k, v in self.checks.items() if v[0] != v[1]}


def elementary_counts(s: IncidenceStructure) -> CountReport:
    """Check the ordinary point/line counts implied by the axioms.

    Requires the axioms to hold; counts that disagree are reported as
    structure defects in the returned report.
    """
    m, n = order_of(s)
    rep = CountReport(m=m, n=n, trivial=(m == n))
    c = rep.checks
    D = s.special_point

    c["ordinary_line_count"] = (n * n, len(s.ordinary_lines))
    sizes = {len(s.lines[i]) for i in s.ordinary_lines}
    c["ordinary_line_size"] = ({m + 1}, sizes if sizes else {m + 1})
    ordinary_points = [p for p in range(s.n_points) if p != D]
    c["ordinary_point_count"] = ((m + 1) * n, len(ordinary_points))
    per_point = {len([i for i in s.lines_at[p] if not s.is_special_line(i)])
                 for p in ordinary_points}
    c["ordinary_lines_per_ordinary_point"] = ({n}, per_point)

    # Special lines minus D partition the ordinary points.
    seen = 0
    disjoint = True
    for i in s.special_lines:
        mask = s.line_masks[i] & ~(1 << D)
        if seen & mask:
            disjoint = False
        seen |= mask
    full = (1 << s.n_points) - 1 & ~(1 << D)
    c["special_partition"] = ((True, True), (disjoint, seen == full))

    c["n_ge_m_ge_2"] = (True, n >= m >= 2)
    if not rep.trivial:
        c["nontrivial_n_ge_m_squared"] = (True, n >= m * m)
    return rep


def find_isomorphism(s1: IncidenceStructure, s2: IncidenceStructure):
    """Search for an incidence isomorphism mapping D to D.

    Returns a point map (list over s1 points) or None.  Backtracking with
    forced propagation: points are ordered so that most images are forced by
    lines containing two already-mapped points; practical at desk scale.
    """
    if (s1.n_points != s2.n_points or s1.n_lines != s2.n_lines
            or len(s1.special_lines) != len(s2.special_lines)):
        return None

    def profile(s, p):
        return tuple(sorted(len(s.lines[i]) for i in s.lines_at[p]))

    prof2 = {}
    for p in range(s2.n_points):
        prof2.setdefault(profile(s2, p), []).append(p)

    lineset2 = {t: i for i, t in enumerate(s2.lines)}

    # Order: D first, then repeatedly a point on a line with the most
    # already-ordered points (so its image is usually forced).
    order = [s1.special_point]
    placed = {s1.special_point}
    while len(order) < s1.n_points:
        best, best_key = None, (-1, -1)
        for p in range(s1.n_points):
            if p in placed:
                continue
            forced = max((sum(q in placed for q in s1.lines[i])
                          for i in s1.lines_at[p]), default=0)
            key = (forced, len(s1.lines_at[p]))
            if key > best_key:
                best, best_key = p, key
        order.append(best)
        placed.add(best)

    mapping = {}
    used = set()

    def consistent(p, q):
        for i in s1.lines_at[p]:
            mapped = [mapping[r] for r in s1.lines[i] if r in mapping]
            if not mapped:
                continue
            # q and all mapped points of this line must be collinear in s2
            # on a line of the same size.
            common = None
            for r in mapped + [q]:
                ls = set(s2.lines_at[r])
                common = ls if common is None else common & ls
            ok = any(len(s2.lines[j]) == len(s1.lines[i]) for j in common) if common else False
            if not ok:
                return False
        return True

    def extend(idx):
        if idx == len(order):
            return True
        p = order[idx]
        if p == s1.special_point:
            cands = [s2.special_point]
        else:
            cands = prof2.get(profile(s1, p), [])
        for q in cands:
            if q in used or not consistent(p, q):
                continue
            mapping[p] = q
            used.add(q)
            if extend(idx + 1):
                return True
            del mapping[p]
            used.discard(q)
        return False

    if not extend(0):
        return None
    pm = [mapping[p] for p in range(s1.n_points)]
    # Full verification: the induced line map must be a bijection.
    images = {tuple(sorted(pm[p] for p in t)) for t in s1.lines}
    if images != set(lineset2):
        return None
    return pm
