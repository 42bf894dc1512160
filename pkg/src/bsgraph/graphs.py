"""Finite 2-coloured directed graphs and their paths.

Edges point range <- source: for an edge f, r(f) sits at the arrowhead.
A path f1 f2 ... fn is composable when s(f_i) = r(f_{i+1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import (
    BadColour,
    DuplicateId,
    NotComposable,
    UnknownEdge,
    UnknownVertex,
)
from .words import Letter

_COLOUR_TOKENS = {"a": Letter.A, "1": Letter.A, "b": Letter.B, "2": Letter.B}


@dataclass(frozen=True)
class Edge:
    name: str
    colour: Letter
    range_: str
    source: str


@dataclass(frozen=True)
class ColouredGraph:
    """Immutable coloured graph with deterministic declaration order."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _by_name: dict[str, Edge] = field(repr=False, compare=False, default=None)

    def edge(self, name: str) -> Edge:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownEdge(f"unknown edge {name!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._by_name_vertices

    @property
    def _by_name_vertices(self):
        return set(self.vertices)

    def edges_coloured(self, colour: Letter, range_: str | None = None):
        """Edges of one colour, optionally filtered by range vertex."""
        return [
            e
            for e in self.edges
            if e.colour is colour and (range_ is None or e.range_ == range_)
        ]


def parse_colour(token: str) -> Letter:
    try:
        return _COLOUR_TOKENS[token.lower()]
    except KeyError:
        raise BadColour(f"bad colour {token!r}; expected a/b or 1/2") from None


def build_graph(vertices, edges) -> ColouredGraph:
    """Validate and freeze a graph.

    vertices: iterable of names; edges: iterable of
    (name, colour token or Letter, range vertex, source vertex).
    """
    vs: list[str] = []
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            raise DuplicateId(f"duplicate vertex {v!r}")
        seen.add(v)
        vs.append(v)
    vertex_set = set(vs)
    es: list[Edge] = []
    names: set[str] = set()
    for name, colour, range_, source in edges:
        if name in names or name in vertex_set:
            raise DuplicateId(f"duplicate id {name!r}")
        names.add(name)
        if not isinstance(colour, Letter):
            colour = parse_colour(colour)
        for v in (range_, source):
            if v not in vertex_set:
                raise UnknownVertex(f"edge {name!r} uses undeclared vertex {v!r}")
        es.append(Edge(name, colour, range_, source))
    g = ColouredGraph(tuple(vs), tuple(es))
    object.__setattr__(g, "_by_name", {e.name: e for e in es})
    return g


@dataclass(frozen=True)
class Path:
    """Composable edge sequence, or a single vertex (length 0)."""

    edges: tuple[str, ...]
    range_: str
    source: str
    colours: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else self.range_


def vertex_path(g: ColouredGraph, v: str) -> Path:
    if v not in g._by_name_vertices:
        raise UnknownVertex(f"unknown vertex {v!r}")
    return Path((), v, v, ())


def validate_path(g: ColouredGraph, names) -> Path:
    """Check composability of an edge-name sequence and freeze it."""
    names = tuple(names)
    if not names:
        raise NotComposable(0, "empty edge sequence; use vertex_path instead")
    edges = [g.edge(n) for n in names]
    for i in range(len(edges) - 1):
        if edges[i].source != edges[i + 1].range_:
            raise NotComposable(
                i,
                f"s({names[i]}) = {edges[i].source} != "
                f"r({names[i + 1]}) = {edges[i + 1].range_}",
            )
    return Path(
        names,
        edges[0].range_,
        edges[-1].source,
        tuple(e.colour for e in edges),
    )


def parse_path(g: ColouredGraph, text: str) -> Path:
    """Space-separated edge names; a bare vertex name is a length-0 path."""
    tokens = text.split()
    if len(tokens) == 1 and tokens[0] in g._by_name_vertices:
        return vertex_path(g, tokens[0])
    return validate_path(g, tokens)


def path_degree(ops, p: Path):
    """Fold the colour word of p through the degree monoid."""
    return reduce(ops.step, p.colours, ops.identity)


def concat(x: Path, y: Path) -> Path:
    if x.source != y.range_:
        raise NotComposable(len(x.edges), f"s({x}) = {x.source} != r({y}) = {y.range_}")
    if not x.edges:
        return y
    if not y.edges:
        return x
    return Path(x.edges + y.edges, x.range_, y.source, x.colours + y.colours)
