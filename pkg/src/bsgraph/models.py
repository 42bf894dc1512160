"""Template graphs: prefix graphs of a degree and their interval subgraphs.

The model graph of a degree w has the prefixes of w as vertices and the
single-letter extensions (z, z*l) as edges, coloured by l.  It is the
universal domain for degree-w morphisms, so vertices are degree values
themselves rather than renamed ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAPrefix, ResourceLimit
from .words import Letter

DEFAULT_MAX_VERTICES = 10**6
_LETTERS = (Letter.A, Letter.B)


@dataclass(frozen=True)
class ModelGraph:
    """Prefix graph of a degree.  Edges are (base, letter) pairs with
    r = base, s = base*letter, colour = letter."""

    ops: object
    word: object
    vertices: tuple
    edges: tuple  # of (degree, Letter)

    def vertex_set(self):
        return set(self.vertices)


@dataclass(frozen=True)
class IntervalGraph:
    """Restriction of a model graph to {z : w1 <= z <= w2}, remembering
    the base point w1 so the starred restriction can translate by it."""

    ops: object
    word1: object
    word2: object
    vertices: tuple
    edges: tuple

    def translated(self) -> ModelGraph:
        """The isomorphic model graph of the quotient, via z -> w1*z."""
        return model(self.ops, self.ops.quotient(self.word1, self.word2))


def model(ops, w, max_vertices: int = DEFAULT_MAX_VERTICES) -> ModelGraph:
    count = ops.prefix_count(w)
    if count > max_vertices:
        raise ResourceLimit(
            f"model graph of {ops.format(w)} has {count} vertices "
            f"(limit {max_vertices})"
        )
    vertices = sorted(ops.prefixes(w), key=ops.sort_key)
    edges = tuple(
        (z, l)
        for z in vertices
        for l in _LETTERS
        if ops.is_prefix(ops.step(z, l), w)
    )
    return ModelGraph(ops, w, tuple(vertices), edges)


def model_interval(ops, w1, w2, max_vertices: int = DEFAULT_MAX_VERTICES) -> IntervalGraph:
    if not ops.is_prefix(w1, w2):
        raise NotAPrefix(f"{ops.format(w1)} is not a prefix of {ops.format(w2)}")
    parent = model(ops, w2, max_vertices)
    keep = [z for z in parent.vertices if ops.is_prefix(w1, z)]
    keep_set = set(keep)
    edges = tuple(
        (z, l) for (z, l) in parent.edges
        if z in keep_set and ops.step(z, l) in keep_set
    )
    return IntervalGraph(ops, w1, w2, tuple(keep), edges)


def square_positions(ops, w) -> list:
    """Bases m whose translated square [m, m*square_degree] fits inside
    the model graph of w."""
    sq = ops.square_degree
    return [m for m in ops.prefixes(w) if ops.is_prefix(ops.mul(m, sq), w)]


def model_edges(ops, w):
    """Edge keys of the model graph of w."""
    return model(ops, w).edges
