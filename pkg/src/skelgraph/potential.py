"""Potential theory on weighted metric graphs, all exact.

Laplacians of piecewise-linear functions, canonical divisors of
labelled graphs, exact Poisson solving, reduced divisors via Dhar
burning, bridges, spanning trees and fundamental cycles, and the two
min-locus lemma checkers used by the witness constructions.

Sign conventions: the Laplacian's degree at a point is the sum of the
outgoing slopes; div(f) = -laplacian(f) is the sum of incoming slopes.
A declared ray slope s (oriented away from the skeleton) therefore
contributes +s to the Laplacian at the attachment, and the degree of
laplacian(f) over the compact part equals the sum of the ray slopes.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Optional, Sequence

from .divisors import GraphDivisor
from .errors import (
    DegreeMismatchError,
    DivisorMismatchError,
    GraphStructureError,
    InvalidPointError,
    LoopsPresentError,
    MinimumNotAttainedError,
    PipelineError,
)
from .graphs import (
    GraphPoint,
    MetricKind,
    PointLike,
    WeightedDualGraph,
    as_point,
    refine,
)
from .loci import SubgraphLocus
from .plfunction import PLFunction

_MAX_LATTICE_NODES = 20000
_MAX_DHAR_ROUNDS = 200000


# -- Laplacian and friends ---------------------------------------------------


def laplacian(graph: WeightedDualGraph, f: PLFunction,
              metric: Optional[MetricKind] = None) -> GraphDivisor:
    """Divisor whose degree at each point is the sum of the outgoing
    slopes of f there; declared ray slopes count at their attachments.

    With an explicit metric different from the graph's own, slopes are
    rescaled per edge by the ratio of the two lengths (the metrics are
    proportional on every edge); support points keep the graph's own
    coordinates."""
    f.validate_on(graph)
    acc: dict[GraphPoint, Fraction] = defaultdict(Fraction)
    for e in graph.edges:
        scale = Fraction(1)
        if metric is not None and MetricKind.coerce(metric) != graph.metric:
            scale = graph.edge_length(e.id) / graph.edge_length(e.id, metric)
        profile = f.edge_profile(graph, e.id)
        ell = graph.edge_length(e.id)

        def node(x):
            if x == 0:
                return GraphPoint.at_vertex(e.a)
            if x == ell:
                return GraphPoint.at_vertex(e.b)
            return GraphPoint.on_edge(e.id, x)

        for (x0, y0), (x1, y1) in zip(profile, profile[1:]):
            s = (y1 - y0) / (x1 - x0) * scale
            acc[node(x0)] += s
            acc[node(x1)] -= s
    for label, s in f.ray_slopes.items():
        attach = graph.ray(label).attach
        acc[GraphPoint.at_vertex(attach)] += s
    return GraphDivisor(acc)


def div(graph: WeightedDualGraph, f: PLFunction,
        metric: Optional[MetricKind] = None) -> GraphDivisor:
    """div(f) = -laplacian(f): degree at a point is the sum of the
    incoming slopes."""
    return -laplacian(graph, f, metric)


def canonical_divisor(graph: WeightedDualGraph, m: int = 1) -> GraphDivisor:
    """The m-canonical divisor sum_v N(v) (val(v) + 2 g(v) - 2) v, with
    the valency counting bounded edges and rays alike."""
    if not graph.is_loop_free():
        raise LoopsPresentError("canonical divisor needs a loop-free graph")
    if m < 1:
        raise GraphStructureError(f"m must be a positive integer, got {m}")
    coeffs = {}
    for v in graph.vertices:
        val = graph.valency(v.id, include_rays=True)
        coeffs[GraphPoint.at_vertex(v.id)] = m * v.multiplicity * (val + 2 * v.genus - 2)
    return GraphDivisor(coeffs)


# -- exact Poisson solving ----------------------------------------------------


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan over Fraction; raises on a singular system."""
    n = len(rows)
    m = [list(map(Fraction, rows[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise PipelineError("singular Poisson system; graph disconnected?")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                fac = m[r][col]
                m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def solve_poisson(graph: WeightedDualGraph, target: GraphDivisor,
                  ray_slopes: Optional[Mapping[str, int]] = None,
                  anchor: Optional[PointLike] = None) -> PLFunction:
    """The unique PLFunction f with f(anchor) = 0, the declared ray
    slopes, and laplacian(f) = target.

    Solvability requires deg(target) over the compact part to equal the
    sum of the declared ray slopes.
    """
    slopes = {label: int(s) for label, s in (ray_slopes or {}).items()}
    for label in slopes:
        graph.ray(label)
    support = []
    for p in target.support:
        p = graph.check_point(p)
        if p.kind == "ray":
            raise InvalidPointError(
                "targets supported on rays are not solvable: rays carry a "
                "single declared slope and no interior breakpoints"
            )
        support.append((p, target.coeff(p)))

    if anchor is None:
        anchor = graph.vertex_ids[0]
    anchor_pt = graph.check_point(as_point(anchor))

    total = sum((c for _, c in support), Fraction(0))
    if total != sum(slopes.values()):
        raise DegreeMismatchError(
            f"deg(target) = {total} over the compact part but the ray slopes "
            f"sum to {sum(slopes.values())}; no solution exists"
        )

    cuts: dict[str, list[Fraction]] = defaultdict(list)
    for p, _ in support:
        if p.kind == "edge":
            cuts[p.where].append(p.offset)
    if anchor_pt.kind == "edge":
        cuts[anchor_pt.where].append(anchor_pt.offset)
    ref = refine(graph, cuts)
    rg = ref.graph

    t = {v: Fraction(0) for v in rg.vertex_ids}
    for p, c in support:
        t[ref.to_refined(p).where] += Fraction(c)
    for label, s in slopes.items():
        t[graph.ray(label).attach] -= s

    ids = list(rg.vertex_ids)
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    rows = [[Fraction(0)] * n for _ in range(n)]
    rhs = [Fraction(0)] * n
    for e in rg.edges:
        if e.a == e.b:
            continue  # a function linear on a loop is constant there
        c = 1 / rg.edge_length(e.id)
        ia, ib = pos[e.a], pos[e.b]
        rows[ia][ia] -= c
        rows[ia][ib] += c
        rows[ib][ib] -= c
        rows[ib][ia] += c
    for i, v in enumerate(ids):
        rhs[i] = t[v]

    ai = pos[ref.to_refined(anchor_pt).where]
    rows[ai] = [Fraction(0)] * n
    rows[ai][ai] = Fraction(1)
    rhs[ai] = Fraction(0)

    sol = _solve_linear(rows, rhs)
    values = {}
    for v, x in zip(ids, sol):
        values[ref.to_base(GraphPoint.at_vertex(v))] = x
    return PLFunction(values, slopes)


# -- minimum locus -------------------------------------------------------------


def min_locus(graph: WeightedDualGraph, f: PLFunction) -> SubgraphLocus:
    """Closed locus where f attains its global minimum over the compact
    part.  Rays with negative slope push the minimum to infinity and
    are rejected."""
    f.validate_on(graph)
    for label, s in f.ray_slopes.items():
        if s < 0:
            raise MinimumNotAttainedError(
                f"ray {label!r} has negative slope {s}; no minimum is attained"
            )
    m = f.min_over_compact()
    vertices = [v for v in graph.vertex_ids
                if f.values[GraphPoint.at_vertex(v)] == m]
    segments: dict[str, list] = defaultdict(list)
    for e in graph.edges:
        profile = f.edge_profile(graph, e.id)
        for (x0, y0), (x1, y1) in zip(profile, profile[1:]):
            if y0 == m and y1 == m:
                segments[e.id].append((x0, x1))
            elif y0 == m:
                segments[e.id].append((x0, x0))
            elif y1 == m:
                segments[e.id].append((x1, x1))
    return SubgraphLocus(graph, vertices=vertices, segments=segments)


# -- bridges, trees, cycles -----------------------------------------------------


def bridges(graph: WeightedDualGraph) -> frozenset[str]:
    """The cut edges, by iterative low-link traversal.  Loops and
    parallel edges are never bridges."""
    start = graph.vertex_ids[0]
    index: dict[str, int] = {start: 0}
    low: dict[str, int] = {start: 0}
    counter = 1
    out: set[str] = set()
    stack: list = [(start, None, iter(graph.edges_at(start)))]
    while stack:
        v, in_edge, it = stack[-1]
        pushed = False
        for e in it:
            if in_edge is not None and e.id == in_edge.id:
                continue
            if e.a == e.b:
                continue
            w = e.b if e.a == v else e.a
            if w not in index:
                index[w] = low[w] = counter
                counter += 1
                stack.append((w, e, iter(graph.edges_at(w))))
                pushed = True
                break
            low[v] = min(low[v], index[w])
        if not pushed:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > index[parent]:
                    out.add(in_edge.id)
    return frozenset(out)


def is_spanning_tree(graph: WeightedDualGraph, edge_ids: Iterable[str]) -> bool:
    ids = set(edge_ids)
    for eid in ids:
        graph.edge(eid)
    if len(ids) != len(graph.vertex_ids) - 1:
        return False
    parent = {v: v for v in graph.vertex_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in ids:
        e = graph.edge(eid)
        ra, rb = find(e.a), find(e.b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def spanning_tree(graph: WeightedDualGraph,
                  avoid: Iterable[str] = ()) -> frozenset[str]:
    """A deterministic spanning tree (DFS from the smallest vertex,
    edges in id order), optionally avoiding the given edge ids."""
    avoid = set(avoid)
    tree: set[str] = set()
    seen = {graph.vertex_ids[0]}
    stack = [graph.vertex_ids[0]]
    while stack:
        v = stack.pop()
        for e in sorted(graph.edges_at(v), key=lambda e: e.id):
            if e.id in avoid or e.a == e.b:
                continue
            w = e.b if e.a == v else e.a
            if w not in seen:
                seen.add(w)
                tree.add(e.id)
                stack.append(w)
    if len(seen) != len(graph.vertex_ids):
        raise GraphStructureError("no spanning tree avoids the given edges")
    return frozenset(tree)


def all_spanning_trees(graph: WeightedDualGraph) -> list[frozenset[str]]:
    """Every spanning tree, by filtering edge subsets; fine for the
    small graphs this package works with."""
    non_loops = [e.id for e in graph.edges if e.a != e.b]
    k = len(graph.vertex_ids) - 1
    return [frozenset(c) for c in itertools.combinations(non_loops, k)
            if is_spanning_tree(graph, c)]


def fundamental_cycle(graph: WeightedDualGraph, tree: Iterable[str],
                      eid: str) -> SubgraphLocus:
    """Z(tree, e): the unique cycle in tree + e, as a closed locus of
    whole edges and their vertices."""
    tset = set(tree)
    e = graph.edge(eid)
    if eid in tset:
        raise GraphStructureError(f"edge {eid!r} lies in the tree")
    if not is_spanning_tree(graph, tset):
        raise GraphStructureError("given edge set is not a spanning tree")
    if e.a == e.b:
        return SubgraphLocus(graph, vertices=[e.a], whole_edges=[eid])
    # path from e.a to e.b inside the tree
    prev: dict[str, tuple[str, str]] = {}
    seen = {e.a}
    queue = deque([e.a])
    while queue:
        v = queue.popleft()
        if v == e.b:
            break
        for t in graph.edges_at(v):
            if t.id not in tset:
                continue
            w = t.b if t.a == v else t.a
            if w not in seen:
                seen.add(w)
                prev[w] = (v, t.id)
                queue.append(w)
    path_edges = []
    path_vertices = [e.b]
    v = e.b
    while v != e.a:
        u, teid = prev[v]
        path_edges.append(teid)
        path_vertices.append(u)
        v = u
    return SubgraphLocus(graph, vertices=path_vertices,
                         whole_edges=path_edges + [eid])


# -- reduced divisors -----------------------------------------------------------


@dataclass
class _Lattice:
    """Discrete working copy: all features on a 1/L grid of nodes."""

    ref: object
    L: int
    nodes: list[str]
    adj: dict[str, list[tuple[str, str]]]  # node -> (edge id, other node)

    def neighbors(self, v):
        return self.adj[v]


def _build_lattice(graph: WeightedDualGraph,
                   points: Sequence[GraphPoint]) -> _Lattice:
    dens = [graph.edge_length(e.id).denominator for e in graph.edges]
    for e in graph.edges:
        if e.a == e.b:
            # force at least two segments so no lattice edge is a loop
            dens.append((graph.edge_length(e.id) / 2).denominator)
    for p in points:
        if p.kind == "edge":
            dens.append(p.offset.denominator)
    L = lcm(*dens) if dens else 1
    total = sum(int(graph.edge_length(e.id) * L) for e in graph.edges)
    if total > _MAX_LATTICE_NODES:
        raise PipelineError(
            f"lattice refinement would need {total} segments (> {_MAX_LATTICE_NODES}); "
            "edge-length denominators are too heterogeneous for chip-firing"
        )
    cuts = {}
    for e in graph.edges:
        steps = int(graph.edge_length(e.id) * L)
        if steps > 1:
            cuts[e.id] = [Fraction(k, L) for k in range(1, steps)]
    ref = refine(graph, cuts)
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in ref.graph.vertex_ids}
    for e in ref.graph.edges:
        adj[e.a].append((e.id, e.b))
        if e.b != e.a:
            adj[e.b].append((e.id, e.a))
    return _Lattice(ref=ref, L=L, nodes=list(ref.graph.vertex_ids), adj=adj)


def _burn(lat: _Lattice, chips: dict[str, int], q: str) -> set[str]:
    burnt = {q}
    arriving: dict[str, int] = defaultdict(int)
    queue = deque([q])
    while queue:
        v = queue.popleft()
        for _, w in lat.adj[v]:
            if w in burnt:
                continue
            arriving[w] += 1
            if arriving[w] > chips.get(w, 0):
                burnt.add(w)
                queue.append(w)
    return burnt


def _fire_set(lat: _Lattice, chips: dict[str, int], u: dict[str, int],
              region: set[str]) -> None:
    for v in region:
        u[v] -= 1
        for _, w in lat.adj[v]:
            if w not in region:
                chips[v] -= 1
                chips[w] = chips.get(w, 0) + 1


def reduce_divisor(graph: WeightedDualGraph, divisor_in: GraphDivisor,
                   q: PointLike) -> tuple[GraphDivisor, PLFunction]:
    """The q-reduced divisor equivalent to the input, together with the
    tropical rational function f with D' = D + div(f).

    Runs the discrete Dhar algorithm on an exact lattice refinement:
    negative coefficients are first cleared by firing balls around q
    from the farthest layer inward, then unburnt sets are fired until
    the burn from q consumes everything.
    """
    if graph.rays:
        raise GraphStructureError("reduce_divisor works on compact graphs; drop rays")
    divisor_in.require_integral("divisor to reduce")
    q_pt = graph.check_point(as_point(q))
    pts = [graph.check_point(p) for p in divisor_in.support] + [q_pt]
    lat = _build_lattice(graph, pts)
    ref = lat.ref

    chips: dict[str, int] = {v: 0 for v in lat.nodes}
    for p in divisor_in.support:
        chips[ref.to_refined(graph.check_point(p)).where] += divisor_in.coeff(p)
    q_node = ref.to_refined(q_pt).where
    u: dict[str, int] = {v: 0 for v in lat.nodes}

    # hop layers from q (unit segments: hop distance = L * metric distance)
    dist = {q_node: 0}
    queue = deque([q_node])
    while queue:
        v = queue.popleft()
        for _, w in lat.adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)

    # stage 1: clear negatives off q, farthest layer first
    maxd = max(dist.values())
    for k in range(maxd, 0, -1):
        layer = [v for v in lat.nodes if dist[v] == k]
        guard = 0
        while any(chips[v] < 0 for v in layer):
            ball = {v for v in lat.nodes if dist[v] <= k - 1}
            _fire_set(lat, chips, u, ball)
            guard += 1
            if guard > _MAX_DHAR_ROUNDS:
                raise PipelineError("negative-clearing did not terminate")

    # stage 2: Dhar burning with maximal unburnt firings
    rounds = 0
    while True:
        burnt = _burn(lat, chips, q_node)
        if len(burnt) == len(lat.nodes):
            break
        _fire_set(lat, chips, u, set(lat.nodes) - burnt)
        rounds += 1
        if rounds > _MAX_DHAR_ROUNDS:
            raise PipelineError("Dhar reduction did not terminate")

    reduced = GraphDivisor({
        ref.to_base(GraphPoint.at_vertex(v)): c
        for v, c in chips.items() if c != 0
    })

    # assemble f = u / L on the base graph, keeping only slope changes
    base_min = min(u.values())
    values: dict[GraphPoint, Fraction] = {}
    for v in graph.vertex_ids:
        values[GraphPoint.at_vertex(v)] = Fraction(
            u[ref.to_refined(GraphPoint.at_vertex(v)).where] - base_min, lat.L)
    for base_eid, parts in ref.pieces.items():
        if len(parts) == 1:
            continue
        chain = []  # (base offset, lattice node) along the edge
        for (pid, start, end, rev) in parts:
            pe = ref.graph.edge(pid)
            first = pe.b if rev else pe.a
            chain.append((start, first))
        last_pid, _, last_end, last_rev = parts[-1]
        pe = ref.graph.edge(last_pid)
        chain.append((last_end, pe.a if last_rev else pe.b))
        for (x0, n0), (x1, n1), (x2, n2) in zip(chain, chain[1:], chain[2:]):
            s01 = Fraction(u[n1] - u[n0], lat.L) / (x1 - x0)
            s12 = Fraction(u[n2] - u[n1], lat.L) / (x2 - x1)
            if s01 != s12:
                values[GraphPoint.on_edge(base_eid, x1)] = Fraction(u[n1] - base_min, lat.L)
    f = PLFunction(values)

    # certificate: equivalence via the independent laplacian path,
    # effectivity off q, and a clean burn
    if reduced != divisor_in - laplacian(graph, f):
        raise PipelineError("reduction certificate failed: D' != D + div(f)")
    for p in reduced.support:
        if p != q_pt and reduced.coeff(p) < 0:
            raise PipelineError("reduction certificate failed: not effective off q")
    return reduced, f


# -- bridge chains ---------------------------------------------------------------


@dataclass(frozen=True)
class BridgeChain:
    """A maximal chain of bridge edges, with its two endpoint vertices."""

    edges: tuple[str, ...]
    endpoints: tuple[str, str]

    def as_locus(self, graph: WeightedDualGraph) -> SubgraphLocus:
        verts = set(self.endpoints)
        for eid in self.edges:
            e = graph.edge(eid)
            verts.update((e.a, e.b))
        return SubgraphLocus(graph, vertices=verts, whole_edges=self.edges)


def maximal_bridge_chains(graph: WeightedDualGraph) -> list[BridgeChain]:
    """Decompose the bridge set into maximal chains: consecutive bridges
    share a vertex of valency two."""
    br = bridges(graph)
    unused = set(br)
    chains = []
    for seed in sorted(br):
        if seed not in unused:
            continue
        unused.discard(seed)
        e = graph.edge(seed)
        chain = deque([seed])
        ends = []
        for start_v in (e.a, e.b):
            v = start_v
            prev = seed
            while graph.valency(v, include_rays=False) == 2:
                nxt = next(t for t in graph.edges_at(v) if t.id != prev)
                if nxt.id not in unused:
                    break
                unused.discard(nxt.id)
                if start_v == e.a:
                    chain.appendleft(nxt.id)
                else:
                    chain.append(nxt.id)
                v = nxt.b if nxt.a == v else nxt.a
                prev = nxt.id
            ends.append(v)
        chains.append(BridgeChain(edges=tuple(chain), endpoints=(ends[0], ends[1])))
    return chains


# -- lemma checkers ---------------------------------------------------------------


@dataclass(frozen=True)
class LemmaReport:
    ok: bool
    failed_hypotheses: tuple[str, ...]
    conclusion_holds: Optional[bool]
    computed_locus: Optional[SubgraphLocus] = None
    expected_locus: Optional[SubgraphLocus] = None
    messages: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


def _interior_support_hits(graph, D, eid) -> bool:
    ell = graph.edge_length(eid)
    for p in D.support:
        if p.kind == "edge" and p.where == eid and 0 < p.offset < ell:
            return True
    return False


def check_min_locus_lemma(graph: WeightedDualGraph, tree: Iterable[str],
                          eid: str, D: GraphDivisor,
                          f: PLFunction) -> LemmaReport:
    """Hypotheses: the graph is loop-free with labelled vertices, D is
    effective and equivalent to the canonical divisor via f (an exact
    requirement, raised on violation), and D's support meets the
    relative interior of every non-tree edge other than e.  Conclusion:
    the minimum locus of f is the fundamental cycle Z(tree, e)."""
    tset = set(tree)
    K = canonical_divisor(graph, 1)
    if div(graph, f) != D - K:
        raise DivisorMismatchError("div(f) != D - K; not a valid lemma witness")
    failed = []
    if not graph.is_loop_free():
        failed.append("loop-free")
    if not is_spanning_tree(graph, tset):
        failed.append("spanning-tree")
    if eid in tset:
        failed.append("edge-outside-tree")
    if not D.is_effective():
        failed.append("effective")
    if not f.has_integer_slopes(graph):
        failed.append("tropical")
    for other in graph.edges:
        if other.id in tset or other.id == eid:
            continue
        if not _interior_support_hits(graph, D, other.id):
            failed.append(f"support-on-{other.id}")
    if failed:
        return LemmaReport(ok=False, failed_hypotheses=tuple(failed),
                           conclusion_holds=None,
                           messages=("hypotheses failed; conclusion not asserted",))
    computed = min_locus(graph, f)
    expected = fundamental_cycle(graph, tset, eid)
    holds = computed == expected
    return LemmaReport(ok=holds, failed_hypotheses=(),
                       conclusion_holds=holds,
                       computed_locus=computed, expected_locus=expected,
                       messages=() if holds else ("min locus differs from Z(T,e)",))


def check_bridge_lemma(graph: WeightedDualGraph, chain: BridgeChain,
                       tree: Iterable[str], D: GraphDivisor,
                       f: PLFunction) -> LemmaReport:
    """Hypotheses: loop-free, no 1-valent vertices, chain is a maximal
    bridge chain with endpoints v1, v2, D is effective and equivalent
    to 2K via f (exact, raised on violation), D's support meets the
    interior of every non-tree edge, and D >= K - (v1) - (v2).
    Conclusion: the minimum locus of f is the chain."""
    tset = set(tree)
    K = canonical_divisor(graph, 1)
    if div(graph, f) != D - 2 * K:
        raise DivisorMismatchError("div(f) != D - 2K; not a valid lemma witness")
    failed = []
    if not graph.is_loop_free():
        failed.append("loop-free")
    if any(graph.valency(v, include_rays=False) == 1 for v in graph.vertex_ids):
        failed.append("no-1-valent")
    if not any(set(chain.edges) == set(c.edges)
               and set(chain.endpoints) == set(c.endpoints)
               for c in maximal_bridge_chains(graph)):
        failed.append("maximal-bridge-chain")
    if not is_spanning_tree(graph, tset):
        failed.append("spanning-tree")
    if not D.is_effective():
        failed.append("effective")
    if not f.has_integer_slopes(graph):
        failed.append("tropical")
    for other in graph.edges:
        if other.id in tset:
            continue
        if not _interior_support_hits(graph, D, other.id):
            failed.append(f"support-on-{other.id}")
    v1, v2 = chain.endpoints
    bound = K - GraphDivisor.at(GraphPoint.at_vertex(v1)) \
              - GraphDivisor.at(GraphPoint.at_vertex(v2))
    if not D >= bound:
        failed.append("dominates-K-minus-endpoints")
    if failed:
        return LemmaReport(ok=False, failed_hypotheses=tuple(failed),
                           conclusion_holds=None,
                           messages=("hypotheses failed; conclusion not asserted",))
    computed = min_locus(graph, f)
    expected = chain.as_locus(graph)
    holds = computed == expected
    return LemmaReport(ok=holds, failed_hypotheses=(),
                       conclusion_holds=holds,
                       computed_locus=computed, expected_locus=expected,
                       messages=() if holds else ("min locus differs from the chain",))
