"""Graphviz DOT export for ambient graphs, model graphs, and morphisms."""

from __future__ import annotations

from .graphs import ColouredGraph
from .models import ModelGraph
from .morphisms import Morphism
from .words import Letter

_COLOUR = {Letter.A: "red", Letter.B: "blue"}


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def graph_to_dot(g: ColouredGraph, name: str = "E") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {_quote(v)};" for v in g.vertices)
    lines.extend(
        f"  {_quote(e.source)} -> {_quote(e.range_)} "
        f"[label={_quote(e.name)}, color={_COLOUR[e.colour]}];"
        for e in g.edges
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_to_dot(m: ModelGraph, name: str = "model") -> str:
    """Vertices are labelled with shortest-form words (grid: coordinates)."""
    fmt = m.ops.format
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {_quote(fmt(z))};" for z in m.vertices)
    lines.extend(
        f"  {_quote(fmt(m.ops.step(z, l)))} -> {_quote(fmt(z))} "
        f"[color={_COLOUR[l]}];"
        for z, l in m.edges
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def morphism_to_dot(lam: Morphism, name: str = "morphism") -> str:
    """The domain model graph, each element labelled with its image."""
    ops = lam.ops
    fmt = ops.format
    lines = [f"digraph {name} {{"]
    lines.extend(
        f"  {_quote(fmt(z))} [label={_quote(fmt(z) + ' -> ' + v)}];"
        for z, v in sorted(lam.vmap.items(), key=lambda kv: ops.sort_key(kv[0]))
    )
    lines.extend(
        f"  {_quote(fmt(ops.step(z, l)))} -> {_quote(fmt(z))} "
        f"[label={_quote(e)}, color={_COLOUR[l]}];"
        for (z, l), e in sorted(
            lam.emap.items(), key=lambda kv: (ops.sort_key(kv[0][0]), kv[0][1].value)
        )
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
