"""JSON and DOT serialization for decorated graphs and graph vectors.

The JSON encoding round trips bit exactly: ``from_json(to_json(g))``
reproduces the same ``DecoratedGraph`` value, and ``to_json`` emits a
fully deterministic byte string (sorted keys, fixed separators).  Edge
endpoints are written as ``{"ext": i}`` for circle vertices and
``{"int": j}`` for internal ones, with j counted from 1; odd edges are
flagged ``"oriented": true`` and read from tail to head, even edges
carry their positional ``"label"`` instead.

The DOT export draws the circle as a cycle of bold arcs through the
external vertices, graph edges dashed, and internal vertices filled.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .graphs import ODD, EVEN, AGAINST_CIRCLE, AGAINST_ORDER, \
    DecoratedGraph, GraphVector

_ORDER_NAMES = {0: "with_circle", 1: "against_circle"}
_ARROW_NAMES = {0: "with_order", 1: "against_order"}
_ORDER_FLAGS = {v: k for k, v in _ORDER_NAMES.items()}
_ARROW_FLAGS = {v: k for k, v in _ARROW_NAMES.items()}


def _endpoint(g: DecoratedGraph, label: int) -> dict:
    if g.is_external(label):
        return {"ext": label}
    return {"int": label - g.v_ext}


def _endpoint_label(obj: dict, v_ext: int) -> int:
    if "ext" in obj:
        i = obj["ext"]
        if not 1 <= i <= v_ext:
            raise ValueError("external endpoint %r out of range" % (i,))
        return i
    if "int" in obj:
        return v_ext + obj["int"]
    raise ValueError("endpoint must name 'ext' or 'int'")


def graph_to_dict(g: DecoratedGraph) -> dict:
    edges = []
    for idx, (a, b) in enumerate(g.edges):
        entry = {"from": _endpoint(g, a), "to": _endpoint(g, b)}
        if g.parity == ODD:
            entry["oriented"] = True
        else:
            entry["label"] = idx + 1
        edges.append(entry)
    loops = [{"vertex": v,
              "half_edge_order": _ORDER_NAMES[of],
              "arrow": _ARROW_NAMES[af]}
             for v, of, af in g.loops]
    crosses = [{"vertex": v, "label": a + 1}
               for a, v in enumerate(g.crosses)]
    return {"parity": g.parity, "v_ext": g.v_ext, "v_int": g.v_int,
            "edges": edges, "small_loops": loops, "crosses": crosses}


def graph_from_dict(data: dict) -> DecoratedGraph:
    parity = data["parity"]
    if parity not in (ODD, EVEN):
        raise ValueError("parity must be 'odd' or 'even'")
    v_ext = data["v_ext"]
    v_int = data["v_int"]
    raw = data.get("edges", [])
    if parity == EVEN:
        raw = sorted(raw, key=lambda e: e["label"])
        labels = [e["label"] for e in raw]
        if labels != list(range(1, len(raw) + 1)):
            raise ValueError("even edge labels must be 1..e")
    edges = []
    for entry in raw:
        a = _endpoint_label(entry["from"], v_ext)
        b = _endpoint_label(entry["to"], v_ext)
        edges.append((a, b) if parity == ODD else (min(a, b), max(a, b)))
    loops = tuple((entry["vertex"],
                   _ORDER_FLAGS[entry["half_edge_order"]],
                   _ARROW_FLAGS[entry["arrow"]])
                  for entry in data.get("small_loops", []))
    raw_crosses = sorted(data.get("crosses", []), key=lambda c: c["label"])
    if [c["label"] for c in raw_crosses] != list(range(1, len(raw_crosses) + 1)):
        raise ValueError("cross labels must be 1..x")
    crosses = tuple(c["vertex"] for c in raw_crosses)
    return DecoratedGraph(parity, v_ext, v_int, tuple(edges), loops, crosses)


def dumps(obj) -> str:
    """Deterministic JSON text for any serializable payload."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def graph_to_json(g: DecoratedGraph) -> str:
    return dumps(graph_to_dict(g))


def graph_from_json(text: str) -> DecoratedGraph:
    return graph_from_dict(json.loads(text))


def vector_to_dict(v: GraphVector) -> dict:
    terms = [{"coefficient": str(Fraction(c)), "graph": graph_to_dict(g)}
             for c, g in v.terms]
    return {"parity": v.parity, "terms": terms}


def vector_from_dict(data: dict) -> GraphVector:
    out = GraphVector(parity=data["parity"])
    for term in data.get("terms", []):
        out.add_graph(graph_from_dict(term["graph"]),
                      Fraction(term["coefficient"]))
    return out


def vector_to_json(v: GraphVector) -> str:
    return dumps(vector_to_dict(v))


def vector_from_json(text: str) -> GraphVector:
    return vector_from_dict(json.loads(text))


def graph_to_dot(g: DecoratedGraph, name: str = "g") -> str:
    """Graphviz text: bold circle arcs, dashed edges, filled internals."""
    lines = ["digraph %s {" % name]
    for i in range(1, g.v_ext + 1):
        attrs = ['label="%d"' % i, "shape=circle"]
        if i in g.crosses:
            attrs.append('xlabel="x%d"' % (g.crosses.index(i) + 1,))
        lines.append('  e%d [%s];' % (i, ", ".join(attrs)))
    for j in range(1, g.v_int + 1):
        lines.append('  i%d [label="%d", shape=point, style=filled];'
                     % (j, g.v_ext + j))
    for i in range(1, g.v_ext + 1):
        nxt = 1 if i == g.v_ext else i + 1
        lines.append("  e%d -> e%d [style=bold];" % (i, nxt))

    def node(label):
        return "e%d" % label if g.is_external(label) \
            else "i%d" % (label - g.v_ext)

    for idx, (a, b) in enumerate(g.edges):
        attrs = ["style=dashed"]
        if g.parity == EVEN:
            attrs += ["dir=none", 'label="%d"' % (idx + 1)]
        lines.append("  %s -> %s [%s];" % (node(a), node(b),
                                           ", ".join(attrs)))
    for v, of, af in g.loops:
        attrs = ["style=dashed"]
        if of == AGAINST_CIRCLE:
            attrs.append('taillabel="swap"')
        if af == AGAINST_ORDER:
            attrs.append("dir=back")
        lines.append("  %s -> %s [%s];" % (node(v), node(v),
                                           ", ".join(attrs)))
    lines.append("}")
    return "\n".join(lines) + "\n"
