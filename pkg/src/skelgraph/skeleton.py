"""Tails, combinatorial and essential skeleta, the canonical-form
locus, and the potential-theoretic witness constructions.

A tail is a chain of genus-0 vertices ending in a 1-valent one; a
maximal tail starts at a vertex of valency at least 3 or of positive
genus.  The combinatorial skeleton contracts every maximal tail to its
starting point, exactly once.  For the minimal model of a curve of
positive total genus this computes the essential skeleton.

The witness constructions realize, by exact chip-firing and Poisson
solving, the effective divisors whose associated tropical functions
have as minimum locus a prescribed fundamental cycle or a maximal
bridge chain.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .divisors import GraphDivisor
from .errors import GraphStructureError, PipelineError
from .graphs import (
    GraphPoint,
    PointLike,
    VertexLabel,
    WeightedDualGraph,
    as_point,
    curve_genus,
    graph_genus,
)
from .loci import SubgraphLocus
from .plfunction import PLFunction
from .potential import (
    BridgeChain,
    bridges,
    canonical_divisor,
    check_bridge_lemma,
    check_min_locus_lemma,
    maximal_bridge_chains,
    reduce_divisor,
    solve_poisson,
    spanning_tree,
)


# -- tails and skeleta ---------------------------------------------------------


def find_maximal_tails(graph: WeightedDualGraph) -> list[tuple[str, ...]]:
    """All maximal tails, each reported starting-point first.  Rays are
    ignored for valency; the graph must be loop-free."""
    if not graph.is_loop_free():
        raise GraphStructureError("tails are defined on loop-free graphs")

    def val(v):
        return graph.valency(v, include_rays=False)

    tails = []
    for v in graph.vertex_ids:
        if val(v) != 1 or graph.vertex(v).genus != 0:
            continue
        chain = [v]
        prev_edge = graph.edges_at(v)[0]
        cur = prev_edge.b if prev_edge.a == v else prev_edge.a
        while val(cur) == 2 and graph.vertex(cur).genus == 0 and cur not in chain:
            chain.append(cur)
            nxt = next(e for e in graph.edges_at(cur) if e.id != prev_edge.id)
            prev_edge = nxt
            cur = nxt.b if nxt.a == cur else nxt.a
        if cur in chain:
            continue  # walked around a circle; no valid starting point
        if val(cur) >= 3 or graph.vertex(cur).genus > 0:
            tails.append(tuple([cur] + list(reversed(chain))))
    return tails


def combinatorial_skeleton(graph: WeightedDualGraph) -> WeightedDualGraph:
    """Contract every maximal tail of the input to its starting point,
    exactly once; tails created by the contraction are kept."""
    tails = find_maximal_tails(graph)
    removed = set()
    for tail in tails:
        removed.update(tail[1:])
    if not removed:
        return graph
    survivors = [v for v in graph.vertices if v.id not in removed]
    if not survivors:
        raise GraphStructureError("contraction would leave nothing")
    for r in graph.rays:
        if r.attach in removed:
            raise GraphStructureError(
                f"ray {r.label!r} attaches to the contracted vertex {r.attach!r}")
    edges = [e for e in graph.edges if e.a not in removed and e.b not in removed]
    return graph.replace(vertices=survivors, edges=edges)


def _lint_minimality(graph: WeightedDualGraph) -> None:
    """Warn on genus-0 leaves that look like contractible exceptional
    components: a leaf whose single neighbour has the same multiplicity
    has self-intersection -1, so the model is presumably not minimal."""
    for v in graph.vertices:
        if v.genus != 0 or graph.valency(v.id, include_rays=False) != 1:
            continue
        e = graph.edges_at(v.id)[0]
        other = e.b if e.a == v.id else e.a
        if graph.vertex(other).multiplicity == v.multiplicity:
            warnings.warn(
                f"leaf {v.id!r} looks like a contractible exceptional "
                "component; is this really the minimal model?",
                stacklevel=3,
            )


def essential_skeleton(graph: WeightedDualGraph) -> WeightedDualGraph:
    """The combinatorial skeleton of the minimal model's dual graph.

    The input is assumed to be the dual graph of the minimal model; a
    warning is emitted when a leaf pattern suggests otherwise.  The
    total genus must be positive.  When the input is reduced and has no
    tails, the result is the input itself, which is asserted."""
    if curve_genus(graph) < 1:
        raise GraphStructureError(
            "essential skeleton needs a curve of genus >= 1; "
            f"the graph models genus {curve_genus(graph)}"
        )
    _lint_minimality(graph)
    out = combinatorial_skeleton(graph)
    if graph.is_reduced() and not find_maximal_tails(graph):
        if out != graph:
            raise PipelineError("semistable shortcut violated: no tails but output changed")
    return out


def canonical_form_locus(graph: WeightedDualGraph) -> SubgraphLocus:
    """Union of all closed non-bridge edges and all positive-genus
    vertices of a reduced, loop-free, minimal-semistable-shaped graph."""
    if not graph.is_reduced():
        raise GraphStructureError("canonical-form locus is defined for reduced graphs")
    if not graph.is_loop_free():
        raise GraphStructureError("canonical-form locus needs a loop-free graph")
    if graph_genus(graph) < 1:
        raise GraphStructureError("canonical-form locus needs total genus >= 1")
    for v in graph.vertices:
        if v.genus == 0 and graph.valency(v.id, include_rays=False) == 1:
            raise GraphStructureError(
                f"1-valent genus-0 vertex {v.id!r}: not the shape of a minimal "
                "semistable model"
            )
    non_bridges = [e.id for e in graph.edges if e.id not in bridges(graph)]
    vertices = set()
    for eid in non_bridges:
        e = graph.edge(eid)
        vertices.update((e.a, e.b))
    vertices.update(v.id for v in graph.vertices if v.genus > 0)
    return SubgraphLocus(graph, vertices=vertices, whole_edges=non_bridges)


def strip_genus(graph: WeightedDualGraph) -> WeightedDualGraph:
    """Forget the vertex genera (for running the genus-free witness
    machinery on the underlying metric graph)."""
    return graph.replace(vertices=[VertexLabel(v.id, v.multiplicity, 0)
                                   for v in graph.vertices])


# -- witnesses -------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessBundle:
    tree: frozenset[str]
    divisor: GraphDivisor
    function: PLFunction
    locus: SubgraphLocus


def _require_maximally_degenerate(graph: WeightedDualGraph, what: str) -> None:
    if not graph.is_maximally_degenerate():
        raise GraphStructureError(
            f"{what} needs a maximally degenerate graph "
            "(reduced, all genera zero, loop-free)"
        )


def _effective_part(graph, target, q) -> tuple[GraphDivisor, PLFunction]:
    """An effective divisor equivalent to target, via the q-reduced
    representative; raises if the class has no effective member."""
    reduced, moves = reduce_divisor(graph, target, q)
    if not reduced.is_effective():
        raise PipelineError(
            f"no effective representative: reduced divisor is {reduced}"
        )
    return reduced, moves


def witness_cycle(graph: WeightedDualGraph, eid: str,
                  tree: Optional[Iterable[str]] = None,
                  base_point: Optional[PointLike] = None) -> WitnessBundle:
    """Construct (T, D, f) realizing the fundamental cycle Z(T, e) as a
    minimum locus: D is effective, equivalent to K, and carries a point
    in the interior of every non-tree edge other than e; f solves
    div(f) = D - K.  Asserts that min_locus(f) = Z(T, e) contains e."""
    _require_maximally_degenerate(graph, "witness_cycle")
    if eid in bridges(graph):
        raise GraphStructureError(f"edge {eid!r} is a bridge; no cycle contains it")
    T = frozenset(tree) if tree is not None else spanning_tree(graph, avoid=[eid])
    if eid in T:
        raise GraphStructureError(f"the spanning tree must avoid {eid!r}")
    non_tree = [e.id for e in graph.edges if e.id not in T]
    D0 = GraphDivisor({graph.midpoint(other): 1
                       for other in non_tree if other != eid})
    K = canonical_divisor(graph, 1)
    q = as_point(base_point) if base_point is not None else \
        GraphPoint.at_vertex(graph.edge(eid).a)
    E, _ = _effective_part(graph, K - D0, q)
    D = D0 + E
    f = solve_poisson(graph, K - D, anchor=q)
    report = check_min_locus_lemma(graph, T, eid, D, f)
    if not report:
        raise PipelineError(
            f"cycle witness failed for {eid!r}: hypotheses {report.failed_hypotheses}, "
            f"conclusion {report.conclusion_holds}"
        )
    locus = report.computed_locus
    if not locus.contains(graph.midpoint(eid)):
        raise PipelineError(f"witness locus does not contain {eid!r}")
    return WitnessBundle(tree=T, divisor=D, function=f, locus=locus)


def witness_bridge_chain(graph: WeightedDualGraph,
                         chain: Optional[BridgeChain] = None,
                         tree: Optional[Iterable[str]] = None,
                         base_point: Optional[PointLike] = None) -> WitnessBundle:
    """Construct (T, D, f) realizing a maximal bridge chain B as a
    minimum locus: D is effective, equivalent to 2K, dominates
    K - (v1) - (v2), and has a point in the interior of every non-tree
    edge; f solves div(f) = D - 2K.  Asserts min_locus(f) = B."""
    _require_maximally_degenerate(graph, "witness_bridge_chain")
    g = graph_genus(graph)
    if g <= 1:
        raise GraphStructureError(
            f"genus {g}: a genus-one skeleton is a cycle and has no bridges")
    if any(graph.valency(v, include_rays=False) == 1 for v in graph.vertex_ids):
        raise GraphStructureError("witness_bridge_chain needs no 1-valent vertices")
    chains = maximal_bridge_chains(graph)
    if chain is None:
        if not chains:
            raise GraphStructureError("graph has no bridges")
        chain = chains[0]
    elif not any(set(chain.edges) == set(c.edges) for c in chains):
        raise GraphStructureError(f"{chain} is not a maximal bridge chain here")

    T = frozenset(tree) if tree is not None else spanning_tree(graph)
    non_tree = [e.id for e in graph.edges if e.id not in T]
    D0 = GraphDivisor({graph.midpoint(other): 1 for other in non_tree})
    K = canonical_divisor(graph, 1)
    v1, v2 = chain.endpoints
    D1 = K - GraphDivisor.at(GraphPoint.at_vertex(v1)) \
           - GraphDivisor.at(GraphPoint.at_vertex(v2))
    if not D1.is_effective():
        raise PipelineError(
            "K - (v1) - (v2) is not effective; chain endpoints should have "
            "valency >= 3 in a graph without 1-valent vertices"
        )
    q = as_point(base_point) if base_point is not None else GraphPoint.at_vertex(v1)
    E, _ = _effective_part(graph, 2 * K - D0 - D1, q)
    D = D0 + D1 + E
    f = solve_poisson(graph, 2 * K - D, anchor=q)
    report = check_bridge_lemma(graph, chain, T, D, f)
    if not report:
        raise PipelineError(
            f"bridge witness failed for {chain.edges}: hypotheses "
            f"{report.failed_hypotheses}, conclusion {report.conclusion_holds}"
        )
    return WitnessBundle(tree=T, divisor=D, function=f, locus=report.computed_locus)
