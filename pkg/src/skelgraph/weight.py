"""Weight functions of pluricanonical forms on dual graphs.

The model data records, for an m-pluricanonical form on a model of a
pair: the vertical coefficients nu(v) of the form's divisor on the
model, the coefficient of each marked point in the divisor on the
curve (per ray), and which edges meet the horizontal part.  The weight
function takes the value nu(v)/N(v) at each vertex, is affine on every
compact edge of a pair model, and climbs each ray with slope
N * (m + d) where d is the ray's divisor coefficient.

Two exact identities are verified: on the pair skeleton, the Laplacian
of the weight function equals the m-canonical divisor (rays counted in
the valency); after stripping the rays, the Laplacian of the
restriction equals the m-canonical divisor of the compact graph minus
the pushforward of the marked-point divisor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .divisors import GraphDivisor
from .errors import (
    GraphStructureError,
    HorizontalEdgeError,
    LoopsPresentError,
    MissingDataError,
    PipelineError,
)
from .graphs import GraphPoint, Ray, WeightedDualGraph
from .loci import SubgraphLocus
from .models import blow_up_interior_point, blow_up_node
from .plfunction import PLFunction
from .potential import canonical_divisor, laplacian, min_locus


@dataclass(frozen=True)
class PluricanonicalModelData:
    """Divisor data of an m-pluricanonical form on a model of a pair."""

    m: int
    nu: Mapping[str, int]
    ray_degrees: Mapping[str, int] = field(default_factory=dict)
    horizontal_edges: frozenset = frozenset()

    def __post_init__(self):
        if self.m < 1:
            raise GraphStructureError(f"m must be >= 1, got {self.m}")
        object.__setattr__(self, "nu", dict(self.nu))
        object.__setattr__(self, "ray_degrees", dict(self.ray_degrees))
        object.__setattr__(self, "horizontal_edges", frozenset(self.horizontal_edges))

    def validate_on(self, graph: WeightedDualGraph) -> "PluricanonicalModelData":
        for v in graph.vertex_ids:
            if v not in self.nu:
                raise MissingDataError(f"no nu entry for vertex {v!r}")
        for v in self.nu:
            graph.vertex(v)
        for r in graph.rays:
            if r.label not in self.ray_degrees:
                raise MissingDataError(f"no divisor coefficient for ray {r.label!r}")
            if r.degree != graph.vertex(r.attach).multiplicity:
                raise GraphStructureError(
                    f"ray {r.label!r}: degree {r.degree} != multiplicity of its "
                    f"attachment (pair-model condition)"
                )
        for label in self.ray_degrees:
            graph.ray(label)
        for eid in self.horizontal_edges:
            graph.edge(eid)
        return self


def weight_function(graph: WeightedDualGraph,
                    data: PluricanonicalModelData) -> PLFunction:
    """Value nu(v)/N(v) at every vertex, affine on compact edges, slope
    N*(m + d) on each ray.  Edges flagged as meeting the horizontal
    part are rejected: the function is only piecewise affine there and
    the caller must refine the model first."""
    if not graph.is_loop_free():
        raise LoopsPresentError("weight functions need a loop-free graph")
    data.validate_on(graph)
    if data.horizontal_edges:
        flagged = ", ".join(sorted(data.horizontal_edges))
        raise HorizontalEdgeError(
            f"edges [{flagged}] meet the horizontal part; the weight function "
            "is not affine there, pass a refined model"
        )
    values = {
        GraphPoint.at_vertex(v.id): Fraction(data.nu[v.id], v.multiplicity)
        for v in graph.vertices
    }
    slopes = {
        r.label: graph.vertex(r.attach).multiplicity * (data.m + data.ray_degrees[r.label])
        for r in graph.rays
    }
    return PLFunction(values, slopes)


def pushforward_divisor(graph: WeightedDualGraph,
                        data: PluricanonicalModelData) -> GraphDivisor:
    """Pushforward of the marked-point part of the form's divisor to the
    compact skeleton: each ray contributes deg(x) * d at its attachment."""
    data.validate_on(graph)
    acc: dict[GraphPoint, int] = {}
    for r in graph.rays:
        p = GraphPoint.at_vertex(r.attach)
        acc[p] = acc.get(p, 0) + r.degree * data.ray_degrees[r.label]
    return GraphDivisor(acc)


@dataclass(frozen=True)
class LaplacianReport:
    ok: bool
    pair_identity_holds: bool
    compact_identity_holds: bool
    pair_discrepancy: GraphDivisor
    compact_discrepancy: GraphDivisor

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "laplacian identities hold exactly"
        bits = []
        if not self.pair_identity_holds:
            bits.append(f"pair skeleton: Delta(wt) - mK = {self.pair_discrepancy}")
        if not self.compact_identity_holds:
            bits.append(
                f"compact: Delta(wt|) - (mK - pushforward) = {self.compact_discrepancy}")
        return "; ".join(bits)


def verify_laplacian_theorem(graph: WeightedDualGraph,
                             data: PluricanonicalModelData) -> LaplacianReport:
    """Check both exact identities for the weight function.

    On the pair skeleton (rays in the valency and in the Laplacian):
    Delta(wt) = m * K.  On the compact skeleton: Delta(wt restricted) =
    m * K_norays - pushforward."""
    wt = weight_function(graph, data)

    pair_lap = laplacian(graph, wt)
    pair_K = canonical_divisor(graph, data.m)
    pair_diff = pair_lap - pair_K

    stripped = graph.without_rays()
    compact_lap = laplacian(stripped, wt.without_rays())
    compact_rhs = canonical_divisor(stripped, data.m) - pushforward_divisor(graph, data)
    compact_diff = compact_lap - compact_rhs

    ok_pair = not pair_diff
    ok_compact = not compact_diff
    return LaplacianReport(ok=ok_pair and ok_compact,
                           pair_identity_holds=ok_pair,
                           compact_identity_holds=ok_compact,
                           pair_discrepancy=pair_diff,
                           compact_discrepancy=compact_diff)


def ks_skeleton(graph: WeightedDualGraph,
                data: PluricanonicalModelData) -> SubgraphLocus:
    """Union of the essential faces: vertices attaining min nu/N, and
    edges whose endpoints both attain it and which do not meet the
    horizontal part.  Cross-checked against the minimum locus of the
    weight function whenever the latter is defined."""
    if not graph.is_loop_free():
        raise LoopsPresentError("KS skeleton needs a loop-free graph")
    data.validate_on(graph)
    ratios = {v.id: Fraction(data.nu[v.id], v.multiplicity) for v in graph.vertices}
    lowest = min(ratios.values())
    vertices = [v for v, r in ratios.items() if r == lowest]
    vset = set(vertices)
    edges = [e.id for e in graph.edges
             if e.a in vset and e.b in vset and e.id not in data.horizontal_edges]
    locus = SubgraphLocus(graph, vertices=vertices, whole_edges=edges)

    if not data.horizontal_edges:
        wt = weight_function(graph, data)
        if all(s >= 0 for s in wt.ray_slopes.values()):
            cross = min_locus(graph, wt)
            if cross != locus:
                raise PipelineError(
                    "KS skeleton disagrees with the weight function's minimum locus"
                )
    return locus


# -- data transport along blow-ups --------------------------------------------
#
# These extend blow-ups to (graph, data) pairs so that the new vertex
# carries the divisor multiplicity of the exceptional component.  The
# exactness of both Laplacian identities is preserved by each move.


def blow_up_node_with_data(graph: WeightedDualGraph,
                           data: PluricanonicalModelData, eid: str,
                           new_id: Optional[str] = None):
    """Node blow-up: the exceptional component has nu' = nu1 + nu2 (the
    log-canonical bundle pulls back with no twist at a node)."""
    e = graph.edge(eid)
    before = set(graph.vertex_ids)
    out = blow_up_node(graph, eid, new_id=new_id)
    wid = next(v for v in out.vertex_ids if v not in before)
    nu = dict(data.nu)
    nu[wid] = data.nu[e.a] + data.nu[e.b]
    return out, PluricanonicalModelData(m=data.m, nu=nu,
                                        ray_degrees=data.ray_degrees,
                                        horizontal_edges=data.horizontal_edges)


def blow_up_interior_with_data(graph: WeightedDualGraph,
                               data: PluricanonicalModelData, vid: str,
                               toward_ray: Optional[str] = None,
                               new_id: Optional[str] = None):
    """Interior-point blow-up: nu' = nu + m, plus the ray coefficient if
    the blown-up point is the specialization of that marked point, in
    which case the ray moves to the new vertex."""
    before = set(graph.vertex_ids)
    out = blow_up_interior_point(graph, vid, new_id=new_id)
    wid = next(v for v in out.vertex_ids if v not in before)
    d = 0
    if toward_ray is not None:
        ray = graph.ray(toward_ray)
        if ray.attach != vid:
            raise GraphStructureError(
                f"ray {toward_ray!r} is not attached at {vid!r}")
        d = data.ray_degrees[toward_ray]
        moved = [r if r.label != toward_ray else
                 Ray(attach=wid, label=r.label, degree=r.degree)
                 for r in out.rays]
        out = out.replace(rays=moved)
    nu = dict(data.nu)
    nu[wid] = data.nu[vid] + data.m + d
    return out, PluricanonicalModelData(m=data.m, nu=nu,
                                        ray_degrees=data.ray_degrees,
                                        horizontal_edges=data.horizontal_edges)
