"""Command-line front end: build, verify, and report on rectangle models.

Subcommands: build, verify, cliques, iso, geometry, analyze, export.  Every
run emits a RunReport as JSON with sorted keys; with the same inputs and
seed the report is byte-identical across runs (timings are only included on
request, since they are inherently unstable).  The exit code is 0 iff every
requested verdict passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .analysis import (chromatic_analysis, chromatic_index_bracket,
                       eulerian_verdict, hamiltonian_search, krein_check,
                       planarity_verdict)
from .bilinear import build_hq2k, certify_isomorphism, line_matrix_map
from .cliques import classify_census, clique_intersections, extract_plane
from .export import (build_model, census_to_dict, certificate_to_dict, graph6_str,
                     model_from_json, model_to_dict, to_dot)
from .geometry import build_plane_clique_structure, build_point_clique_geometry
from .incidence import A6_DEFAULT_SAMPLES, A6_DEFAULT_SEED, check_axioms, elementary_counts, order_of
from .linegraph import build_line_graph, certify_srg

NODES_PER_MS = 1000  # deterministic search budget per budget-ms unit


@dataclass
class RunReport:
    """Deterministic record of one CLI invocation."""

    version: str
    command: str
    params: dict
    verdicts: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    outputs: list = field(default_factory=list)
    timings_ms: dict | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> str:
        d = {
            "version": self.version,
            "command": self.command,
            "params": self.params,
            "verdicts": self.verdicts,
            "details": self.details,
            "outputs": self.outputs,
            "ok": self.ok,
            "timings_ms": self.timings_ms,
        }
        return json.dumps(d, sort_keys=True)


def _threads() -> int:
    """PRECT_THREADS is accepted and recorded; computation is single-process."""
    try:
        return max(1, int(os.environ.get("PRECT_THREADS", "1")))
    except ValueError:
        return 1


def _write(path: str | None, text: str, report: RunReport):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        report.outputs.append(path)
    else:
        print(text)


def _load_model(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return model_from_json(text)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed model file {path}: {exc}") from exc


def cmd_build(args, report: RunReport) -> int:
    model = build_model(args.family, args.p, args.e, args.k)
    m, n = order_of(model.structure)
    report.details["order"] = [m, n]
    report.details["ordinary_lines"] = model.num_ordinary_lines
    report.verdicts["built"] = True
    _write(args.out, json.dumps(model_to_dict(model), sort_keys=True), report)
    print(f"order (m, n) = ({m}, {n})", file=sys.stderr)
    return 0


def cmd_verify(args, report: RunReport) -> int:
    model = _load_model(args.model)
    t0 = time.perf_counter()
    timings = {}

    a6_mode = "full" if args.profile == "full" else "sampled"
    axioms = check_axioms(model.structure, a6_mode,
                          a6_samples=args.a6_samples, seed=args.seed)
    report.verdicts["axioms"] = axioms.ok
    report.details["axioms"] = {"verdicts": axioms.verdicts,
                                "witnesses": _jsonable(axioms.witnesses),
                                "a6_mode": axioms.a6_mode,
                                "a6_coverage": axioms.a6_coverage}
    timings["axioms"] = (time.perf_counter() - t0) * 1000

    m, n = order_of(model.structure)
    counts = elementary_counts(model.structure)
    report.verdicts["elementary_counts"] = counts.ok
    report.details["count_mismatches"] = _jsonable(counts.mismatches())

    g = build_line_graph(model)
    trivial = m == n
    if not trivial:
        cert = certify_srg(g, m, n)
        report.verdicts["srg"] = cert.ok
        report.details["srg"] = certificate_to_dict(cert)
    census = classify_census(g, model)
    report.verdicts["census"] = census.ok
    report.details["census_counts"] = {
        "point_cliques": len(census.point_cliques),
        "plane_cliques": len(census.plane_cliques),
        "anomalous": len(census.anomalous),
        "mismatches": _jsonable(census.mismatches()),
    }

    if args.profile == "full":
        if not trivial:
            inter = clique_intersections(census, g)
            report.verdicts["clique_intersections"] = inter.ok
        planes_ok = all(extract_plane(pc, model).ok for pc in census.plane_cliques)
        report.verdicts["plane_extraction"] = planes_ok
        if model.family == "subplane":
            h = build_hq2k(model.p, model.e, model.k)
            iso = certify_isomorphism(g, h.graph, line_matrix_map(model, h))
            report.verdicts["bilinear_isomorphism"] = iso.ok
        if not trivial:
            geo_pt = build_point_clique_geometry(census, model)
            geo_pl = build_plane_clique_structure(census, model)
            report.verdicts["point_clique_geometry"] = geo_pt.ok
            report.verdicts["plane_clique_structure"] = geo_pl.ok
            report.details["pg_label"] = geo_pt.pg_label
            report.details["plane_t_histogram"] = {str(k): v for k, v in
                                                   sorted(geo_pl.t_histogram.items())}
            report.verdicts["krein"] = krein_check(cert).ok
            pl = planarity_verdict(g, m, n)
            eu = eulerian_verdict(g, m, n)
            report.details["planar"] = pl.planar
            report.verdicts["eulerian_consistent"] = eu.consistent

    if args.timings:
        timings["total"] = (time.perf_counter() - t0) * 1000
        report.timings_ms = {k: round(v, 1) for k, v in timings.items()}
    print(report.to_json())
    return 0 if report.ok else 1


def cmd_cliques(args, report: RunReport) -> int:
    model = _load_model(args.model)
    g = build_line_graph(model)
    census = classify_census(g, model)
    report.verdicts["census"] = census.ok
    report.details["counts"] = {"point": len(census.point_cliques),
                                "plane": len(census.plane_cliques),
                                "anomalous": len(census.anomalous)}
    _write(args.out, json.dumps(census_to_dict(census, model), sort_keys=True), report)
    return 0 if report.ok else 1


def cmd_iso(args, report: RunReport) -> int:
    model = _load_model(args.model)
    if model.family != "subplane" or model.line_coeffs is None:
        print("iso requires a coordinatized subplane model", file=sys.stderr)
        return 2
    g = build_line_graph(model)
    h = build_hq2k(model.p, model.e, model.k)
    mapping = line_matrix_map(model, h)
    iso = certify_isomorphism(g, h.graph, mapping)
    report.verdicts["bilinear_isomorphism"] = iso.ok
    report.details["pairs_checked"] = iso.pairs_checked
    if args.out:
        _write(args.out, json.dumps({"line_to_matrix_vertex": mapping}, sort_keys=True), report)
    print(report.to_json())
    return 0 if report.ok else 1


def cmd_geometry(args, report: RunReport) -> int:
    model = _load_model(args.model)
    g = build_line_graph(model)
    census = classify_census(g, model)
    geo_pt = build_point_clique_geometry(census, model)
    geo_pl = build_plane_clique_structure(census, model)
    report.verdicts["point_clique_geometry"] = geo_pt.ok
    report.verdicts["plane_clique_structure"] = geo_pl.ok
    payload = {
        "point_cliques": {
            "pg_label": geo_pt.pg_label,
            "t_histogram": {str(k): v for k, v in sorted(geo_pt.t_histogram.items())},
            "is_partial_geometry": geo_pt.is_partial_geometry,
            "num_lines": geo_pt.num_lines,
            "line_count_matches": geo_pt.line_count_matches,
        },
        "plane_cliques": {
            "t_histogram": {str(k): v for k, v in sorted(geo_pl.t_histogram.items())},
            "is_partial_geometry": geo_pl.is_partial_geometry,
            "degenerate": geo_pl.degenerate,
        },
    }
    report.details["geometry"] = payload
    _write(args.out, json.dumps(payload, sort_keys=True), report)
    return 0 if report.ok else 1


def cmd_analyze(args, report: RunReport) -> int:
    model = _load_model(args.graph)
    m, n = order_of(model.structure)
    g = build_line_graph(model)
    budget = max(1, args.budget_ms) * NODES_PER_MS

    pl = planarity_verdict(g, m, n)
    eu = eulerian_verdict(g, m, n)
    ham = hamiltonian_search(g, node_budget=budget, m=m, n=n)
    report.verdicts["eulerian_consistent"] = eu.consistent
    report.details["planar"] = {"planar": pl.planar, "reason": pl.reason}
    report.details["eulerian"] = {"eulerian": eu.eulerian, "predicate": eu.predicate}
    report.details["hamiltonian"] = {
        "found": ham.cycle is not None,
        "verified": ham.verified,
        "condition_n_le_3m_plus_1": ham.condition_n_le_3m_plus_1,
        "budget_exhausted": ham.budget_exhausted,
        "cycle": ham.cycle,
    }
    if ham.cycle is not None:
        report.verdicts["hamilton_cycle_verified"] = ham.verified

    if m != n:
        cert = certify_srg(g, m, n)
        report.verdicts["srg"] = cert.ok
        chi = chromatic_analysis(g, cert, m, n, exact_limit=args.exact_chi_limit,
                                 node_budget=budget)
        report.details["chromatic"] = {
            "exact": chi.exact_chromatic,
            "haemers_bound": chi.haemers_bound,
            "haemers_exact": chi.haemers_exact,
            "claimed_bound": chi.claimed_bound,
            "clique_lower_bound": chi.clique_lower_bound,
            "flags": chi.flags,
            "witness": chi.witness,
        }
        kr = krein_check(cert)
        report.verdicts["krein"] = kr.ok
        eb = chromatic_index_bracket(g, m, n, node_budget=budget)
    else:
        eb = chromatic_index_bracket(g, node_budget=budget)
    report.details["chromatic_index"] = {
        "bracket": list(eb.bracket),
        "verdict": eb.verdict,
        "flags": eb.flags,
    }
    if args.out:
        _write(args.out, report.to_json(), report)
    else:
        print(report.to_json())
    return 0 if report.ok else 1


def cmd_export(args, report: RunReport) -> int:
    model = _load_model(args.model)
    if args.what == "model":
        if args.format != "json":
            print("model exports as json only", file=sys.stderr)
            return 2
        _write(args.out, json.dumps(model_to_dict(model), sort_keys=True), report)
    elif args.what == "graph":
        g = build_line_graph(model)
        if args.format == "graph6":
            _write(args.out, graph6_str(g), report)
        elif args.format == "dot":
            _write(args.out, to_dot(g), report)
        else:
            print("graph exports as graph6 or dot", file=sys.stderr)
            return 2
    elif args.what == "census":
        if args.format != "json":
            print("census exports as json only", file=sys.stderr)
            return 2
        g = build_line_graph(model)
        census = classify_census(g, model)
        _write(args.out, json.dumps(census_to_dict(census, model), sort_keys=True), report)
    else:
        return 2
    report.verdicts["exported"] = True
    return 0


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prect",
                                 description="projective rectangles and their graph of lines")
    sub = ap.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("build", help="build a model and write it as JSON")
    b.add_argument("--family", required=True, choices=["l2k", "subplane", "plane"])
    b.add_argument("--p", type=int)
    b.add_argument("--e", type=int, default=1)
    b.add_argument("--k", type=int)
    b.add_argument("--out")

    v = sub.add_parser("verify", help="run the certification pipeline on a model")
    v.add_argument("model")
    v.add_argument("--profile", choices=["quick", "full"], default="quick")
    v.add_argument("--seed", type=int, default=A6_DEFAULT_SEED)
    v.add_argument("--a6-samples", type=int, default=A6_DEFAULT_SAMPLES)
    v.add_argument("--timings", action="store_true")

    c = sub.add_parser("cliques", help="enumerate and classify maximal cliques")
    c.add_argument("model")
    c.add_argument("--out")

    i = sub.add_parser("iso", help="certify the bilinear forms graph isomorphism")
    i.add_argument("model")
    i.add_argument("--out")

    ge = sub.add_parser("geometry", help="partial geometry reports from the census")
    ge.add_argument("model")
    ge.add_argument("--out")

    an = sub.add_parser("analyze", help="graph properties and chromatic analysis")
    an.add_argument("--graph", required=True)
    an.add_argument("--exact-chi-limit", type=int, default=100)
    an.add_argument("--budget-ms", type=int, default=60000)
    an.add_argument("--out")

    ex = sub.add_parser("export", help="export a model, graph, or census")
    ex.add_argument("model")
    ex.add_argument("--what", choices=["model", "graph", "census"], default="graph")
    ex.add_argument("--format", choices=["json", "dot", "graph6"], default="json")
    ex.add_argument("--out")
    return ap


_DISPATCH = {
    "build": cmd_build,
    "verify": cmd_verify,
    "cliques": cmd_cliques,
    "iso": cmd_iso,
    "geometry": cmd_geometry,
    "analyze": cmd_analyze,
    "export": cmd_export,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    report = RunReport(version=__version__, command=args.cmd,
                       params={k: v for k, v in sorted(vars(args).items()) if k != "cmd"})
    report.details["threads"] = _threads()
    try:
        code = _DISPATCH[args.cmd](args, report)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.cmd in ("cliques", "geometry", "export"):
        print(report.to_json(), file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
