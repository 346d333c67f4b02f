"""Weighted dual graphs with exact rational metrics.

The central value type is :class:`WeightedDualGraph`: a connected
multigraph whose vertices carry a positive multiplicity N and a
non-negative genus g, whose compact edges carry exact rational lengths,
and which may have marked-point rays of infinite length attached at
vertices.

Two metrics are supported.  In the model metric an edge between
vertices of multiplicities N1, N2 has length 1/(N1*N2); in the stable
metric it has length 1/lcm(N1, N2).  Lengths may also be stored
explicitly (subdivision writes explicit lengths, after which the
multiplicity formula no longer applies to the pieces).

Everything is immutable after construction; operations are pure
functions returning new graphs.  All arithmetic is fractions.Fraction.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import (
    GraphStructureError,
    InvalidPointError,
    UnknownElementError,
)

Rational = Union[Fraction, int]


class MetricKind(Enum):
    MODEL = "model"
    STABLE = "stable"

    @classmethod
    def coerce(cls, value) -> "MetricKind":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class VertexLabel:
    """A vertex of a dual graph: id plus (multiplicity, genus) labels."""

    id: str
    multiplicity: int = 1
    genus: int = 0

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise GraphStructureError("vertex id must be a non-empty string")
        if self.multiplicity < 1:
            raise GraphStructureError(
                f"vertex {self.id!r}: multiplicity must be >= 1, got {self.multiplicity}"
            )
        if self.genus < 0:
            raise GraphStructureError(
                f"vertex {self.id!r}: genus must be >= 0, got {self.genus}"
            )


@dataclass(frozen=True)
class Ray:
    """A marked-point branch of infinite length attached at a vertex.

    ``degree`` is the degree of the marked point over the base field;
    on a model of a pair it equals the multiplicity of the attachment
    vertex.
    """

    attach: str
    label: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise GraphStructureError(
                f"ray {self.label!r}: degree must be >= 1, got {self.degree}"
            )


@dataclass(frozen=True)
class Edge:
    """A compact edge.  ``length`` None means: use the metric formula.

    Endpoints are normalized so that a <= b; interior positions are
    measured from endpoint ``a``.
    """

    id: str
    a: str
    b: str
    length: Optional[Fraction] = None


class GraphPoint:
    """A point of the metric realization: a vertex, an interior edge
    point at an exact rational position, or a point on a ray at an
    exact positive distance from the attachment."""

    __slots__ = ("kind", "where", "offset")

    def __init__(self, kind: str, where: str, offset: Optional[Fraction]):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "where", where)
        object.__setattr__(self, "offset", offset)

    def __setattr__(self, *args):
        raise AttributeError("GraphPoint is immutable")

    @staticmethod
    def at_vertex(vertex_id: str) -> "GraphPoint":
        return GraphPoint("vertex", vertex_id, None)

    @staticmethod
    def on_edge(edge_id: str, position: Rational) -> "GraphPoint":
        return GraphPoint("edge", edge_id, Fraction(position))

    @staticmethod
    def on_ray(ray_label: str, distance: Rational) -> "GraphPoint":
        d = Fraction(distance)
        if d <= 0:
            raise InvalidPointError("ray point distance must be positive")
        return GraphPoint("ray", ray_label, d)

    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    def _key(self):
        return (self.kind, self.where, self.offset)

    def __eq__(self, other):
        return isinstance(other, GraphPoint) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def sort_key(self):
        return (self.kind, self.where, self.offset if self.offset is not None else Fraction(0))

    def __repr__(self):
        if self.kind == "vertex":
            return f"GraphPoint.at_vertex({self.where!r})"
        if self.kind == "edge":
            return f"GraphPoint.on_edge({self.where!r}, {str(self.offset)!r})"
        return f"GraphPoint.on_ray({self.where!r}, {str(self.offset)!r})"


PointLike = Union[GraphPoint, str]


def as_point(p: PointLike) -> GraphPoint:
    """Coerce a vertex id to a vertex point; pass GraphPoints through."""
    if isinstance(p, GraphPoint):
        return p
    return GraphPoint.at_vertex(p)


def formula_length(n1: int, n2: int, metric: MetricKind) -> Fraction:
    if metric is MetricKind.MODEL:
        return Fraction(1, n1 * n2)
    return Fraction(1, math.lcm(n1, n2))


class WeightedDualGraph:
    """Connected weighted multigraph with rays and exact edge lengths.

    Edges are given as ``(a, b)`` pairs or ``(a, b, length)`` triples
    (or Edge objects); they receive ids ``e0, e1, ...`` in input order.
    A missing length means the metric formula applies.
    """

    __slots__ = ("name", "metric", "pair_model", "_vertices", "_edges",
                 "_rays", "_adjacency", "_edge_index", "_ray_index")

    def __init__(self, vertices: Iterable[VertexLabel],
                 edges: Iterable = (),
                 rays: Iterable[Ray] = (),
                 metric: MetricKind = MetricKind.MODEL,
                 name: str = "",
                 pair_model: bool = False):
        vlist = sorted(vertices, key=lambda v: v.id)
        if not vlist:
            raise GraphStructureError("graph needs at least one vertex")
        self_vertices = {}
        for v in vlist:
            if v.id in self_vertices:
                raise GraphStructureError(f"duplicate vertex id {v.id!r}")
            self_vertices[v.id] = v

        metric = MetricKind.coerce(metric)
        edge_objs = []
        for i, e in enumerate(edges):
            if isinstance(e, Edge):
                a, b, length = e.a, e.b, e.length
            else:
                a, b = e[0], e[1]
                length = Fraction(e[2]) if len(e) > 2 and e[2] is not None else None
            if a not in self_vertices or b not in self_vertices:
                raise UnknownElementError(f"edge endpoints ({a!r}, {b!r}) not in graph")
            if b < a:
                a, b = b, a
            if length is not None and length <= 0:
                raise GraphStructureError("edge lengths must be positive")
            edge_objs.append(Edge(f"e{i}", a, b, length))

        ray_objs = []
        seen_labels = set()
        for r in rays:
            if r.attach not in self_vertices:
                raise UnknownElementError(f"ray {r.label!r} attaches to unknown vertex {r.attach!r}")
            if r.label in seen_labels:
                raise GraphStructureError(f"duplicate ray label {r.label!r}")
            seen_labels.add(r.label)
            if pair_model and r.degree != self_vertices[r.attach].multiplicity:
                raise GraphStructureError(
                    f"pair model: ray {r.label!r} degree {r.degree} != multiplicity "
                    f"{self_vertices[r.attach].multiplicity} of {r.attach!r}"
                )
            ray_objs.append(r)

        adjacency = {vid: [] for vid in self_vertices}
        for e in edge_objs:
            adjacency[e.a].append(e.id)
            if e.b != e.a:
                adjacency[e.b].append(e.id)

        object.__setattr__(self, "name", name)
        object.__setattr__(self, "metric", metric)
        object.__setattr__(self, "pair_model", pair_model)
        object.__setattr__(self, "_vertices", self_vertices)
        object.__setattr__(self, "_edges", tuple(edge_objs))
        object.__setattr__(self, "_rays", tuple(ray_objs))
        object.__setattr__(self, "_adjacency", {k: tuple(v) for k, v in adjacency.items()})
        object.__setattr__(self, "_edge_index", {e.id: e for e in edge_objs})
        object.__setattr__(self, "_ray_index", {r.label: r for r in ray_objs})

        if not self._is_connected():
            raise GraphStructureError("graph must be connected")

    def __setattr__(self, *args):
        raise AttributeError("WeightedDualGraph is immutable")

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexLabel, ...]:
        return tuple(self._vertices.values())

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(self._vertices.keys())

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def rays(self) -> tuple[Ray, ...]:
        return self._rays

    def vertex(self, vid: str) -> VertexLabel:
        try:
            return self._vertices[vid]
        except KeyError:
            raise UnknownElementError(f"unknown vertex {vid!r}") from None

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise UnknownElementError(f"unknown edge {eid!r}") from None

    def ray(self, label: str) -> Ray:
        try:
            return self._ray_index[label]
        except KeyError:
            raise UnknownElementError(f"unknown ray {label!r}") from None

    def has_vertex(self, vid: str) -> bool:
        return vid in self._vertices

    def edges_at(self, vid: str) -> tuple[Edge, ...]:
        self.vertex(vid)
        return tuple(self._edge_index[eid] for eid in self._adjacency[vid])

    def rays_at(self, vid: str) -> tuple[Ray, ...]:
        return tuple(r for r in self._rays if r.attach == vid)

    def valency(self, vid: str, include_rays: bool = True) -> int:
        """Number of edge ends at the vertex; loops count twice."""
        n = 0
        for e in self.edges_at(vid):
            n += 2 if e.a == e.b else 1
        if include_rays:
            n += len(self.rays_at(vid))
        return n

    def edge_length(self, eid: str, metric: Optional[MetricKind] = None) -> Fraction:
        e = self.edge(eid)
        if e.length is not None:
            return e.length
        m = MetricKind.coerce(metric) if metric is not None else self.metric
        n1 = self.vertex(e.a).multiplicity
        n2 = self.vertex(e.b).multiplicity
        return formula_length(n1, n2, m)

    def loops(self) -> tuple[Edge, ...]:
        return tuple(e for e in self._edges if e.a == e.b)

    def is_loop_free(self) -> bool:
        return not self.loops()

    def is_reduced(self) -> bool:
        return all(v.multiplicity == 1 for v in self._vertices.values())

    def is_maximally_degenerate(self) -> bool:
        return self.is_reduced() and all(v.genus == 0 for v in self._vertices.values()) \
            and self.is_loop_free()

    def _is_connected(self) -> bool:
        ids = list(self._vertices)
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            v = stack.pop()
            for eid in self._adjacency[v]:
                e = self._edge_index[eid]
                w = e.b if e.a == v else e.a
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(ids)

    # -- construction helpers -------------------------------------------

    def replace(self, vertices=None, edges=None, rays=None, metric=None,
                name=None, pair_model=None) -> "WeightedDualGraph":
        return WeightedDualGraph(
            vertices=self.vertices if vertices is None else vertices,
            edges=self._edges if edges is None else edges,
            rays=self._rays if rays is None else rays,
            metric=self.metric if metric is None else metric,
            name=self.name if name is None else name,
            pair_model=self.pair_model if pair_model is None else pair_model,
        )

    def without_rays(self) -> "WeightedDualGraph":
        return self.replace(rays=(), pair_model=False)

    def fresh_vertex_id(self, stem: str) -> str:
        if stem not in self._vertices:
            return stem
        i = 0
        while f"{stem}.{i}" in self._vertices:
            i += 1
        return f"{stem}.{i}"

    # -- points ----------------------------------------------------------

    def check_point(self, p: PointLike) -> GraphPoint:
        """Validate a point and normalize edge endpoints to vertex points."""
        p = as_point(p)
        if p.kind == "vertex":
            self.vertex(p.where)
            return p
        if p.kind == "edge":
            e = self.edge(p.where)
            ell = self.edge_length(p.where)
            if p.offset < 0 or p.offset > ell:
                raise InvalidPointError(
                    f"position {p.offset} outside [0, {ell}] on edge {p.where!r}"
                )
            if p.offset == 0:
                return GraphPoint.at_vertex(e.a)
            if p.offset == ell:
                return GraphPoint.at_vertex(e.b)
            return p
        self.ray(p.where)
        return p

    def midpoint(self, eid: str) -> GraphPoint:
        return GraphPoint.on_edge(eid, self.edge_length(eid) / 2)

    # -- equality ---------------------------------------------------------

    def _key(self):
        return (tuple(self._vertices.values()), self._edges, self._rays, self.metric)

    def __eq__(self, other):
        return isinstance(other, WeightedDualGraph) and self._key() == other._key()

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return (f"<WeightedDualGraph{tag}: {len(self._vertices)} vertices, "
                f"{len(self._edges)} edges, {len(self._rays)} rays, {self.metric.value}>")


# -- module-level operations ----------------------------------------------


def edge_length(graph: WeightedDualGraph, eid: str,
                metric: Optional[MetricKind] = None) -> Fraction:
    """Exact length of an edge under the requested metric.

    Explicitly stored lengths (written by subdivision) take precedence;
    otherwise the formula of the requested metric applies: 1/(N1*N2)
    for the model metric, 1/lcm(N1, N2) for the stable one.
    """
    return graph.edge_length(eid, metric)


def graph_genus(graph: WeightedDualGraph) -> int:
    """First Betti number plus the sum of the vertex genera.  Rays are
    ignored.  For reduced graphs this is the genus of the modeled
    curve."""
    b1 = len(graph.edges) - len(graph.vertex_ids) + 1
    return b1 + sum(v.genus for v in graph.vertices)


def curve_genus(graph: WeightedDualGraph) -> Fraction:
    """Genus of the curve the graph models, from adjunction on the
    special fiber: the self-intersection of each component is pinned by
    the fiber squaring to zero, E_i^2 = -(1/N_i) sum of the neighbour
    multiplicities over the nodes on E_i.  Agrees with graph_genus on
    reduced graphs; integral whenever the labels come from an actual
    model.  Loops are resolved first."""
    if not graph.is_loop_free():
        return curve_genus(resolve_loops(graph))
    crossing = {v: Fraction(0) for v in graph.vertex_ids}
    for e in graph.edges:
        crossing[e.a] += graph.vertex(e.b).multiplicity
        crossing[e.b] += graph.vertex(e.a).multiplicity
    total = Fraction(0)
    for v in graph.vertices:
        self_int = -crossing[v.id] / v.multiplicity
        total += v.multiplicity * (2 * v.genus - 2 - self_int)
    return 1 + total / 2


def vertex_distances(graph: WeightedDualGraph, source: str,
                     metric: Optional[MetricKind] = None) -> dict[str, Fraction]:
    """Exact single-source shortest-path distances to all vertices."""
    dist = {source: Fraction(0)}
    heap = [(Fraction(0), source)]
    done = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        for e in graph.edges_at(v):
            ell = graph.edge_length(e.id, metric)
            for w in {e.a, e.b}:
                nd = d + ell
                if w not in dist or nd < dist[w]:
                    dist[w] = nd
                    heapq.heappush(heap, (nd, w))
    return dist


def _anchors(graph, p, metric):
    """(vertex, cost) pairs from which p is reached along its own edge."""
    if p.kind == "vertex":
        return ((p.where, Fraction(0)),)
    e = graph.edge(p.where)
    ell = graph.edge_length(p.where, metric)
    return ((e.a, p.offset), (e.b, ell - p.offset))


def distance(graph: WeightedDualGraph, p: PointLike, q: PointLike,
             metric: Optional[MetricKind] = None) -> Fraction:
    """Shortest-path distance between two points, exact.

    Points on rays may only be paired with points on the same ray or
    with its attachment vertex.  Interior-point positions are
    coordinates of the graph's own metric, so cross-metric queries are
    restricted to vertices and ray points.
    """
    p = graph.check_point(p)
    q = graph.check_point(q)
    if metric is not None and MetricKind.coerce(metric) != graph.metric:
        if p.kind == "edge" or q.kind == "edge":
            raise InvalidPointError(
                "interior positions are coordinates of the graph's own metric; "
                "cross-metric distances are defined between vertices only"
            )
    if p.kind == "ray" or q.kind == "ray":
        if p.kind == "ray" and q.kind == "ray":
            if p.where != q.where:
                raise InvalidPointError("points on distinct rays have no finite distance")
            return abs(p.offset - q.offset)
        ray_pt, other = (p, q) if p.kind == "ray" else (q, p)
        attach = graph.ray(ray_pt.where).attach
        if other.kind == "vertex" and other.where == attach:
            return ray_pt.offset
        raise InvalidPointError("ray point paired with a point off the ray's closure")

    if p == q:
        return Fraction(0)
    best = None
    if p.kind == "edge" and q.kind == "edge" and p.where == q.where:
        best = abs(p.offset - q.offset)
    dist_from = {}
    for va, ca in _anchors(graph, p, metric):
        if va not in dist_from:
            dist_from[va] = vertex_distances(graph, va, metric)
        for vb, cb in _anchors(graph, q, metric):
            d = ca + dist_from[va][vb] + cb
            if best is None or d < best:
                best = d
    return best


def resolve_loops(graph: WeightedDualGraph) -> WeightedDualGraph:
    """Replace every loop by a path through a new genus-0 vertex of
    twice the multiplicity; metric lengths are preserved."""
    if graph.is_loop_free():
        return graph
    vertices = list(graph.vertices)
    edges = []
    count = 0
    for e in graph.edges:
        if e.a != e.b:
            edges.append(e)
            continue
        v = graph.vertex(e.a)
        wid = graph.fresh_vertex_id(f"{e.a}^{count}")
        count += 1
        vertices.append(VertexLabel(wid, 2 * v.multiplicity, 0))
        if e.length is None:
            half = None  # formula 1/(N*2N) already halves the loop length 1/N^2
        else:
            half = e.length / 2
        edges.append((e.a, wid, half))
        edges.append((wid, e.a, half))
    return graph.replace(vertices=vertices, edges=edges)


def subdivide_edge_at(graph: WeightedDualGraph, eid: str, position: Rational,
                      new_label: VertexLabel) -> WeightedDualGraph:
    """Split an edge at an interior position, inserting the given vertex.

    The two pieces carry explicit lengths summing to the original."""
    e = graph.edge(eid)
    ell = graph.edge_length(eid)
    position = Fraction(position)
    if not 0 < position < ell:
        raise InvalidPointError(
            f"subdivision position {position} not interior to (0, {ell})"
        )
    if graph.has_vertex(new_label.id):
        raise GraphStructureError(f"vertex id {new_label.id!r} already exists")
    vertices = list(graph.vertices) + [new_label]
    edges = []
    for other in graph.edges:
        if other.id == eid:
            edges.append((e.a, new_label.id, position))
            edges.append((new_label.id, e.b, ell - position))
        else:
            edges.append(other)
    return graph.replace(vertices=vertices, edges=edges)


# -- refinement: subdividing at many points at once -------------------------


@dataclass(frozen=True)
class Refinement:
    """A graph together with the bookkeeping of a simultaneous edge
    subdivision of a base graph, translating points both ways."""

    base: WeightedDualGraph
    graph: WeightedDualGraph
    # base edge id -> ((piece edge id, start, end, reversed), ...) in walk order
    pieces: Mapping[str, tuple]
    cut_vertex_points: Mapping[str, GraphPoint]  # new vertex id -> base point

    def to_refined(self, p: PointLike) -> GraphPoint:
        p = self.base.check_point(as_point(p))
        if p.kind != "edge":
            return p
        for (pid, start, end, rev) in self.pieces[p.where]:
            if start <= p.offset <= end:
                off = p.offset - start
                if rev:
                    off = (end - start) - off
                return self.graph.check_point(GraphPoint.on_edge(pid, off))
        raise InvalidPointError(f"position {p.offset} not covered on {p.where!r}")

    def to_base(self, p: PointLike) -> GraphPoint:
        p = self.graph.check_point(as_point(p))
        if p.kind == "vertex":
            if p.where in self.cut_vertex_points:
                return self.cut_vertex_points[p.where]
            return p
        for base_eid, parts in self.pieces.items():
            for (pid, start, end, rev) in parts:
                if pid == p.where:
                    off = p.offset if not rev else (end - start) - p.offset
                    return self.base.check_point(GraphPoint.on_edge(base_eid, start + off))
        raise InvalidPointError(f"edge {p.where!r} not a refinement piece")


def refine(graph: WeightedDualGraph, cuts: Mapping[str, Iterable[Rational]]) -> Refinement:
    """Subdivide several edges at once at the given interior positions.

    Cut vertices get fresh ids, multiplicity 1 and genus 0; the pieces
    carry explicit lengths, so those labels never influence the metric.
    """
    norm: dict[str, list[Fraction]] = {}
    for eid, offs in cuts.items():
        ell = graph.edge_length(eid)
        uniq = sorted({Fraction(o) for o in offs})
        for o in uniq:
            if not 0 < o < ell:
                raise InvalidPointError(f"cut {o} not interior to edge {eid!r}")
        if uniq:
            norm[eid] = uniq

    vertices = list(graph.vertices)
    edges: list = []
    piece_slots: dict[str, list[int]] = {}
    cut_points: dict[str, GraphPoint] = {}
    spans: dict[str, list[tuple[Fraction, Fraction, str, str]]] = {}

    for e in graph.edges:
        offs = norm.get(e.id)
        if not offs:
            edges.append(e)
            piece_slots[e.id] = [len(edges) - 1]
            continue
        ell = graph.edge_length(e.id)
        stops = [Fraction(0)] + offs + [ell]
        names = [e.a]
        for o in offs:
            wid = f"{e.id}@{o}"
            if graph.has_vertex(wid) or wid in cut_points:
                raise GraphStructureError(f"generated vertex id {wid!r} collides")
            vertices.append(VertexLabel(wid, 1, 0))
            cut_points[wid] = GraphPoint.on_edge(e.id, o)
            names.append(wid)
        names.append(e.b)
        piece_slots[e.id] = []
        spans[e.id] = []
        for i in range(len(names) - 1):
            edges.append((names[i], names[i + 1], stops[i + 1] - stops[i]))
            piece_slots[e.id].append(len(edges) - 1)
            spans[e.id].append((stops[i], stops[i + 1], names[i], names[i + 1]))

    refined = graph.replace(vertices=vertices, edges=edges)
    pieces: dict[str, tuple] = {}
    for e in graph.edges:
        slots = piece_slots[e.id]
        if e.id not in spans:
            pid = refined.edges[slots[0]].id
            ell = graph.edge_length(e.id)
            rev = refined.edge(pid).a != e.a and e.a != e.b
            pieces[e.id] = ((pid, Fraction(0), ell, rev),)
        else:
            parts = []
            for slot, (start, end, wa, wb) in zip(slots, spans[e.id]):
                pid = refined.edges[slot].id
                rev = refined.edge(pid).a != wa and wa != wb
                parts.append((pid, start, end, rev))
            pieces[e.id] = tuple(parts)
    return Refinement(base=graph, graph=refined, pieces=pieces,
                      cut_vertex_points=cut_points)
