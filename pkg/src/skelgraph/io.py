"""JSON serialization for every value type, plus DOT export.

Rationals serialize as canonical "p/q" strings with q > 0 and
gcd(p, q) = 1; parsing also accepts bare integers.  Graph edges are
identified positionally: the i-th edge of the JSON list is "e{i}",
matching construction order, so round trips are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Optional

from .divisors import GraphDivisor
from .errors import GraphStructureError, InvalidPointError
from .graphs import (
    GraphPoint,
    MetricKind,
    Ray,
    VertexLabel,
    WeightedDualGraph,
)
from .loci import SubgraphLocus
from .models import BlowUpStep
from .plfunction import PLFunction
from .weight import PluricanonicalModelData


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(raw) -> Fraction:
    if isinstance(raw, bool):
        raise InvalidPointError(f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidPointError(f"not a rational: {raw!r}") from exc
    raise InvalidPointError(f"not a rational: {raw!r}")


# -- graphs --------------------------------------------------------------------


def graph_to_json(graph: WeightedDualGraph) -> dict:
    out: dict[str, Any] = {
        "vertices": [{"id": v.id, "N": v.multiplicity, "g": v.genus}
                     for v in graph.vertices],
        "edges": [],
        "rays": [{"attach": r.attach, "label": r.label, "degree": r.degree}
                 for r in graph.rays],
        "metric": graph.metric.value,
    }
    for e in graph.edges:
        entry: dict[str, Any] = {"a": e.a, "b": e.b}
        if e.length is not None:
            entry["length"] = format_rational(e.length)
        out["edges"].append(entry)
    if graph.name:
        out["name"] = graph.name
    if graph.pair_model:
        out["pair_model"] = True
    return out


def graph_from_json(doc: dict) -> WeightedDualGraph:
    try:
        vertices = [VertexLabel(str(v["id"]), int(v.get("N", 1)), int(v.get("g", 0)))
                    for v in doc["vertices"]]
        edges = []
        for e in doc.get("edges", ()):
            length = parse_rational(e["length"]) if "length" in e else None
            edges.append((str(e["a"]), str(e["b"]), length))
        rays = [Ray(str(r["attach"]), str(r["label"]), int(r.get("degree", 1)))
                for r in doc.get("rays", ())]
        return WeightedDualGraph(
            vertices=vertices, edges=edges, rays=rays,
            metric=MetricKind.coerce(doc.get("metric", "model")),
            name=str(doc.get("name", "")),
            pair_model=bool(doc.get("pair_model", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphStructureError(f"malformed graph JSON: {exc}") from exc


# -- points, divisors, functions -------------------------------------------------


def point_to_json(p: GraphPoint) -> dict:
    if p.kind == "vertex":
        return {"vertex": p.where}
    if p.kind == "edge":
        return {"edge": p.where, "position": format_rational(p.offset)}
    return {"ray": p.where, "distance": format_rational(p.offset)}


def point_from_json(doc: dict) -> GraphPoint:
    if "vertex" in doc:
        return GraphPoint.at_vertex(str(doc["vertex"]))
    if "edge" in doc:
        return GraphPoint.on_edge(str(doc["edge"]), parse_rational(doc["position"]))
    if "ray" in doc:
        return GraphPoint.on_ray(str(doc["ray"]), parse_rational(doc["distance"]))
    raise InvalidPointError(f"malformed point JSON: {doc!r}")


def _coeff_to_json(c):
    return c if isinstance(c, int) else format_rational(c)


def divisor_to_json(D: GraphDivisor) -> list:
    return [{"point": point_to_json(p), "coeff": _coeff_to_json(c)}
            for p, c in D.items()]


def divisor_from_json(doc: Iterable) -> GraphDivisor:
    entries = []
    for item in doc:
        c = item["coeff"]
        coeff = c if isinstance(c, int) else parse_rational(c)
        entries.append((point_from_json(item["point"]), coeff))
    return GraphDivisor(entries)


def function_to_json(f: PLFunction) -> list:
    out = [{"point": point_to_json(p), "value": format_rational(x)}
           for p, x in sorted(f.values.items(), key=lambda kv: kv[0].sort_key())]
    out += [{"ray": label, "slope": s}
            for label, s in sorted(f.ray_slopes.items())]
    return out


def function_from_json(doc: Iterable) -> PLFunction:
    values = {}
    slopes = {}
    for item in doc:
        if "ray" in item:
            slopes[str(item["ray"])] = int(item["slope"])
        else:
            values[point_from_json(item["point"])] = parse_rational(item["value"])
    return PLFunction(values, slopes)


def locus_to_json(locus: SubgraphLocus) -> dict:
    whole = sorted(locus.whole_edges())
    segments = []
    for eid, segs in sorted(locus.partial_segments().items()):
        for a, b in segs:
            segments.append({"edge": eid, "start": format_rational(a),
                             "end": format_rational(b)})
    return {"vertices": sorted(locus.vertices), "edges": whole,
            "segments": segments}


def locus_from_json(graph: WeightedDualGraph, doc: dict) -> SubgraphLocus:
    segs: dict[str, list] = {}
    for item in doc.get("segments", ()):
        segs.setdefault(str(item["edge"]), []).append(
            (parse_rational(item["start"]), parse_rational(item["end"])))
    return SubgraphLocus(graph,
                         vertices=[str(v) for v in doc.get("vertices", ())],
                         whole_edges=[str(e) for e in doc.get("edges", ())],
                         segments=segs)


# -- model data, blow-ups, witnesses ----------------------------------------------


def data_to_json(data: PluricanonicalModelData) -> dict:
    return {
        "m": data.m,
        "nu": dict(sorted(data.nu.items())),
        "rays": {label: {"deg_div": d}
                 for label, d in sorted(data.ray_degrees.items())},
        "horizontal_edges": sorted(data.horizontal_edges),
    }


def data_from_json(doc: dict) -> PluricanonicalModelData:
    try:
        return PluricanonicalModelData(
            m=int(doc["m"]),
            nu={str(k): int(v) for k, v in doc["nu"].items()},
            ray_degrees={str(k): int(v["deg_div"])
                         for k, v in doc.get("rays", {}).items()},
            horizontal_edges=frozenset(str(e) for e in doc.get("horizontal_edges", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphStructureError(f"malformed data JSON: {exc}") from exc


def blowups_to_json(steps: Iterable[BlowUpStep]) -> list:
    return [{"op": s.op, "target": s.target} for s in steps]


def blowups_from_json(doc: Iterable) -> list[BlowUpStep]:
    return [BlowUpStep(op=str(item["op"]), target=str(item["target"]))
            for item in doc]


def witness_to_json(bundle) -> dict:
    return {
        "tree": sorted(bundle.tree),
        "divisor": divisor_to_json(bundle.divisor),
        "function": function_to_json(bundle.function),
        "locus": locus_to_json(bundle.locus),
    }


# -- DOT export --------------------------------------------------------------------


def export_dot(graph: WeightedDualGraph,
               locus: Optional[SubgraphLocus] = None,
               name: Optional[str] = None) -> str:
    """Deterministic DOT: vertices labelled "id (N,g)", edges labelled
    with their exact length; locus members carry a highlight attribute."""
    title = name or graph.name or "skeleton"
    lines = [f'graph "{title}" {{']
    in_locus_v = locus.vertices if locus is not None else frozenset()
    seg_edges = set(locus.segments) if locus is not None else set()
    whole = locus.whole_edges() if locus is not None else frozenset()
    for v in graph.vertices:
        attrs = [f'label="{v.id} ({v.multiplicity},{v.genus})"']
        if v.id in in_locus_v:
            attrs.append('locus="1"')
            attrs.append("style=bold")
        lines.append(f'  "{v.id}" [{", ".join(attrs)}];')
    for e in graph.edges:
        attrs = [f'label="{format_rational(graph.edge_length(e.id))}"']
        if e.id in whole:
            attrs.append('locus="1"')
            attrs.append("style=bold")
        elif e.id in seg_edges:
            attrs.append('locus="partial"')
        lines.append(f'  "{e.a}" -- "{e.b}" [{", ".join(attrs)}];')
    for r in graph.rays:
        lines.append(f'  "{r.label}" [label="{r.label} (deg {r.degree})", shape=plaintext];')
        lines.append(f'  "{r.attach}" -- "{r.label}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
