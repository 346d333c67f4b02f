"""Blow-up transformations of dual graphs and base-change subdivision.

A node blow-up inserts a genus-0 vertex of multiplicity N1+N2 on an
edge; the identity 1/(N1*N2) = 1/(N1*(N1+N2)) + 1/((N1+N2)*N2) keeps
the model metric intact.  An interior-point blow-up hangs a genus-0
leaf of the same multiplicity at model distance 1/N^2.  Base change of
degree n subdivides every edge of a reduced graph into n equal pieces,
keeping lengths in the original normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import GraphStructureError, LoopsPresentError, UnknownElementError
from .graphs import (
    MetricKind,
    VertexLabel,
    WeightedDualGraph,
    distance,
    formula_length,
)


def _require_model_formula_edge(graph: WeightedDualGraph, eid: str) -> Fraction:
    e = graph.edge(eid)
    if e.a == e.b:
        raise LoopsPresentError(f"edge {eid!r} is a loop; resolve_loops first")
    if graph.metric is not MetricKind.MODEL:
        raise GraphStructureError("node blow-ups are defined in the model metric")
    n1 = graph.vertex(e.a).multiplicity
    n2 = graph.vertex(e.b).multiplicity
    expected = formula_length(n1, n2, MetricKind.MODEL)
    if graph.edge_length(eid) != expected:
        raise GraphStructureError(
            f"edge {eid!r} carries an explicit length {graph.edge_length(eid)} "
            f"!= 1/(N1*N2) = {expected}; not the edge of a model node"
        )
    return expected


def blow_up_node(graph: WeightedDualGraph, eid: str,
                 new_id: Optional[str] = None) -> WeightedDualGraph:
    """Blow up the node corresponding to a compact edge.

    Inserts a genus-0 vertex of multiplicity N1+N2; both new edges take
    their lengths from the model formula, so the total length of the
    replaced edge is preserved exactly.
    """
    _require_model_formula_edge(graph, eid)
    e = graph.edge(eid)
    n1 = graph.vertex(e.a).multiplicity
    n2 = graph.vertex(e.b).multiplicity
    wid = graph.fresh_vertex_id(new_id or f"{eid}*")
    vertices = list(graph.vertices) + [VertexLabel(wid, n1 + n2, 0)]
    edges = []
    for other in graph.edges:
        if other.id == eid:
            edges.append((e.a, wid, None))
            edges.append((wid, e.b, None))
        else:
            edges.append(other)
    return graph.replace(vertices=vertices, edges=edges)


def blow_up_interior_point(graph: WeightedDualGraph, vid: str,
                           new_id: Optional[str] = None) -> WeightedDualGraph:
    """Blow up a free point of the component at a vertex: attach a
    genus-0 leaf of the same multiplicity at model distance 1/N^2."""
    v = graph.vertex(vid)
    wid = graph.fresh_vertex_id(new_id or f"{vid}'")
    vertices = list(graph.vertices) + [VertexLabel(wid, v.multiplicity, 0)]
    edges = list(graph.edges) + [(vid, wid, None)]
    return graph.replace(vertices=vertices, edges=edges)


def base_change_subdivide(graph: WeightedDualGraph, n: int,
                          residue_char: Optional[int] = None) -> WeightedDualGraph:
    """Subdivide every compact edge of a reduced graph into n equal
    pieces through new genus-0 multiplicity-1 vertices.

    Lengths stay in the original normalization, so the identity on old
    points is an isometry.
    """
    if n < 1:
        raise GraphStructureError(f"base-change degree must be >= 1, got {n}")
    if not graph.is_reduced():
        raise GraphStructureError("base_change_subdivide requires a reduced graph")
    if residue_char is not None and residue_char > 0 and math.gcd(n, residue_char) != 1:
        raise GraphStructureError(
            f"degree {n} is not coprime to the residue characteristic {residue_char}"
        )
    if n == 1:
        return graph
    vertices = list(graph.vertices)
    edges = []
    for e in graph.edges:
        ell = graph.edge_length(e.id)
        piece = ell / n
        names = [e.a]
        for j in range(1, n):
            wid = graph.fresh_vertex_id(f"{e.id}s{j}")
            vertices.append(VertexLabel(wid, 1, 0))
            names.append(wid)
        names.append(e.b)
        for x, y in zip(names, names[1:]):
            edges.append((x, y, piece))
    return graph.replace(vertices=vertices, edges=edges)


@dataclass(frozen=True)
class BlowUpStep:
    """One instruction of a blow-up sequence: op is 'node' (target an
    edge id) or 'interior' (target a vertex id)."""

    op: str
    target: str

    def __post_init__(self):
        if self.op not in ("node", "interior"):
            raise GraphStructureError(f"unknown blow-up op {self.op!r}")


def apply_blowups(graph: WeightedDualGraph,
                  steps: Iterable[BlowUpStep]) -> WeightedDualGraph:
    g = graph
    for step in steps:
        if step.op == "node":
            g = blow_up_node(g, step.target)
        else:
            g = blow_up_interior_point(g, step.target)
    return g


@dataclass(frozen=True)
class InvarianceReport:
    ok: bool
    checked_pairs: int
    discrepancies: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_metric_invariance(graph: WeightedDualGraph,
                             steps: Sequence[BlowUpStep]) -> InvarianceReport:
    """Apply a blow-up sequence and check that all pairwise model
    distances among the original vertices are unchanged, exactly."""
    originals = graph.vertex_ids
    before = {}
    for i, v in enumerate(originals):
        for w in originals[i + 1:]:
            before[(v, w)] = distance(graph, v, w)
    try:
        transformed = apply_blowups(graph, steps)
    except UnknownElementError as exc:
        raise GraphStructureError(f"invalid instruction in sequence: {exc}") from exc
    bad = []
    for (v, w), d0 in before.items():
        d1 = distance(transformed, v, w)
        if d1 != d0:
            bad.append(f"d({v},{w}): {d0} -> {d1}")
    return InvarianceReport(ok=not bad, checked_pairs=len(before),
                            discrepancies=tuple(bad))
