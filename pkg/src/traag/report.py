"""Theorem-level verdicts for a mixed graph, with witnesses and citations.

The verdict rules, applied in order:

* lerf: true iff the underlying graph is a transitive forest.
* coherent: true iff the underlying graph is chordal.
* subgroup_membership: decidable if chordal; undecidable if an induced
  square exists (it embeds a direct product of free groups containing a
  subgroup with undecidable membership); open otherwise.
* rational_membership: undecidable if not a transitive forest; decidable
  for graphs in the recognized cone class; open otherwise.
* submonoid_membership: undecidable if not a transitive forest; decidable
  whenever rational membership is; open otherwise.

"open" is a first-class verdict: nothing outside the established criteria
is guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    decomposition_to_obj,
    find_induced_c4,
    is_chordal,
    is_in_class_r,
    is_transitive_forest,
)
from .errors import InternalDisagreementError, TraagError
from .graphs import MixedGraph, parse_graph

DECIDABLE = "decidable"
UNDECIDABLE = "undecidable"
OPEN = "open"


@dataclass(frozen=True)
class PropertyReport:
    graph_summary: dict
    transitive_forest: bool
    transitive_forest_witness: tuple | None  # ("p4" | "c4", vertex tuple)
    chordal: bool
    chordal_witness: tuple  # ("peo" | "chordless_cycle", vertex tuple)
    in_class_r: bool
    cone_decomposition: object
    lerf: bool
    coherent: bool
    subgroup_membership: str
    submonoid_membership: str
    rational_membership: str
    citations: dict


def _citations(subgroup: str, submonoid: str, rational: str) -> dict:
    cites = {
        "transitive_forest": (
            "no induced path or cycle on four vertices in the underlying graph"
        ),
        "chordal": "no induced cycle of length four or more in the underlying graph",
        "in_class_r": (
            "generated from single vertices by disjoint unions and cones whose "
            "tip edges are undirected or point into the tip"
        ),
        "lerf": (
            "subgroup separable iff the underlying graph is a transitive forest; "
            "direction of edges is irrelevant"
        ),
        "coherent": "coherent iff the defining graph is chordal",
    }
    cites["subgroup_membership"] = {
        DECIDABLE: "chordal defining graph gives decidable subgroup membership",
        UNDECIDABLE: (
            "an induced square embeds a direct product of rank-2 free groups, "
            "which contains a subgroup with undecidable membership (Mikhailova)"
        ),
        OPEN: "open for non-chordal graphs without an induced square",
    }[subgroup]
    cites["rational_membership"] = {
        UNDECIDABLE: (
            "a non-elementary graph embeds a group with undecidable rational "
            "subset membership"
        ),
        DECIDABLE: (
            "cone-class groups split as direct products with an infinite cyclic "
            "factor inside an index-2 subgroup, preserving decidability"
        ),
        OPEN: "open for elementary graphs outside the recognized cone class",
    }[rational]
    cites["submonoid_membership"] = {
        UNDECIDABLE: (
            "a non-elementary graph embeds a group with undecidable submonoid "
            "membership"
        ),
        DECIDABLE: (
            "decidable rational subset membership implies decidable submonoid "
            "membership"
        ),
        OPEN: "open for elementary graphs outside the recognized cone class",
    }[submonoid]
    return cites


def analyze(g: MixedGraph) -> PropertyReport:
    """Classify the graph and derive every decidability verdict."""
    forest, forest_witness = is_transitive_forest(g)
    chordal, chordal_witness = is_chordal(g)
    decomposition = is_in_class_r(g)
    in_r = decomposition is not None
    square = find_induced_c4(g)

    if in_r and not forest:
        raise InternalDisagreementError(
            "cone-class graph failed the transitive-forest test"
        )
    if forest and not chordal:
        raise InternalDisagreementError("transitive forest failed the chordal test")

    lerf = forest
    coherent = chordal
    if chordal:
        subgroup = DECIDABLE
    elif square is not None:
        subgroup = UNDECIDABLE
    else:
        subgroup = OPEN
    if not forest:
        rational = UNDECIDABLE
    elif in_r:
        rational = DECIDABLE
    else:
        rational = OPEN
    if not forest:
        submonoid = UNDECIDABLE
    elif rational == DECIDABLE:
        submonoid = DECIDABLE
    else:
        submonoid = OPEN

    summary = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "directed_edges": g.directed_edge_count,
    }
    return PropertyReport(
        graph_summary=summary,
        transitive_forest=forest,
        transitive_forest_witness=forest_witness,
        chordal=chordal,
        chordal_witness=chordal_witness,
        in_class_r=in_r,
        cone_decomposition=decomposition,
        lerf=lerf,
        coherent=coherent,
        subgroup_membership=subgroup,
        submonoid_membership=submonoid,
        rational_membership=rational,
        citations=_citations(subgroup, submonoid, rational),
    )


def _witness_obj(witness):
    if witness is None:
        return None
    kind, vertices = witness
    return {"kind": kind, "vertices": list(vertices)}


def report_to_obj(r: PropertyReport) -> dict:
    """Stable JSON shape; verdict fields are bare values, witnesses tagged."""
    return {
        "graph_summary": dict(r.graph_summary),
        "transitive_forest": r.transitive_forest,
        "transitive_forest_witness": _witness_obj(r.transitive_forest_witness),
        "chordal": r.chordal,
        "chordal_witness": _witness_obj(r.chordal_witness),
        "in_class_r": r.in_class_r,
        "cone_decomposition": (
            decomposition_to_obj(r.cone_decomposition)
            if r.cone_decomposition is not None
            else None
        ),
        "lerf": r.lerf,
        "coherent": r.coherent,
        "subgroup_membership": r.subgroup_membership,
        "submonoid_membership": r.submonoid_membership,
        "rational_membership": r.rational_membership,
        "citations": dict(r.citations),
    }


def render_text(r: PropertyReport) -> str:
    """Aligned human-readable table."""
    rows = [
        (
            "graph",
            "%d vertices, %d edges (%d directed)"
            % (
                r.graph_summary["vertices"],
                r.graph_summary["edges"],
                r.graph_summary["directed_edges"],
            ),
        ),
        ("transitive_forest", _flag(r.transitive_forest, r.transitive_forest_witness)),
        ("chordal", _flag(r.chordal, r.chordal_witness)),
        ("in_class_r", "true" if r.in_class_r else "false"),
        ("lerf", "true" if r.lerf else "false"),
        ("coherent", "true" if r.coherent else "false"),
        ("subgroup_membership", r.subgroup_membership),
        ("submonoid_membership", r.submonoid_membership),
        ("rational_membership", r.rational_membership),
    ]
    width = max(len(k) for k, _ in rows)
    lines = ["%-*s  %s" % (width, k, v) for k, v in rows]
    lines.append("citations:")
    for key, text in r.citations.items():
        lines.append("  %s: %s" % (key, text))
    return "\n".join(lines)


def _flag(value, witness):
    text = "true" if value else "false"
    if witness is not None:
        kind, vertices = witness
        text += "  (%s: %s)" % (kind, " ".join(vertices))
    return text


@dataclass(frozen=True)
class BatchResult:
    reports: tuple  # (name, PropertyReport) in input order
    errors: tuple  # (name, message) in input order
    summary: dict


def _summarize(reports) -> dict:
    counts = {
        "graphs": len(reports),
        "lerf": {"true": 0, "false": 0},
        "coherent": {"true": 0, "false": 0},
        "in_class_r": {"true": 0, "false": 0},
        "subgroup_membership": {DECIDABLE: 0, UNDECIDABLE: 0, OPEN: 0},
        "submonoid_membership": {DECIDABLE: 0, UNDECIDABLE: 0, OPEN: 0},
        "rational_membership": {DECIDABLE: 0, UNDECIDABLE: 0, OPEN: 0},
    }
    for _, r in reports:
        counts["lerf"]["true" if r.lerf else "false"] += 1
        counts["coherent"]["true" if r.coherent else "false"] += 1
        counts["in_class_r"]["true" if r.in_class_r else "false"] += 1
        counts["subgroup_membership"][r.subgroup_membership] += 1
        counts["submonoid_membership"][r.submonoid_membership] += 1
        counts["rational_membership"][r.rational_membership] += 1
    return counts


def batch_analyze(named_graphs) -> BatchResult:
    """Analyze (name, MixedGraph) pairs; reports keep input order."""
    reports = tuple((name, analyze(g)) for name, g in named_graphs)
    result = _summarize(reports)
    result["errors"] = 0
    return BatchResult(reports, (), result)


def batch_analyze_paths(paths) -> BatchResult:
    """Analyze .tg files; per-file read/parse errors are collected, not fatal."""
    reports = []
    errors = []
    for path in paths:
        name = str(path)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                g = parse_graph(fh.read())
        except (OSError, TraagError) as exc:
            errors.append((name, str(exc)))
            continue
        reports.append((name, analyze(g)))
    summary = _summarize(tuple(reports))
    summary["errors"] = len(errors)
    return BatchResult(tuple(reports), tuple(errors), summary)
