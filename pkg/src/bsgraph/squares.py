"""Squares, complete collections, and their boundary-path indices.

A square is a morphism from the model graph of the square degree (ab^2 = ba
in BS mode, (1,1) in grid mode) into the ambient graph.  Each square has a
red-first boundary path (colour word a,b,b resp. a,b) and a blue-first one
(b,a); a collection is complete when both families of boundary paths of the
ambient graph are covered exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ColourMismatch, JunctionMismatch, NotCovered
from .graphs import ColouredGraph
from .models import model
from .words import BS, GRID, Letter


def boundary_keys(ops, colour_word) -> tuple:
    """Domain edge keys (base, letter) read along a boundary colour word."""
    keys = []
    base = ops.identity
    for letter in colour_word:
        keys.append((base, letter))
        base = ops.step(base, letter)
    return tuple(keys)


def red_keys(ops) -> tuple:
    return boundary_keys(ops, ops.red_first_word)


def blue_keys(ops) -> tuple:
    return boundary_keys(ops, ops.blue_first_word)


# Named slots of the fixture format, mapped to domain edge keys.
BS_SLOTS = {
    "eA": (BS.identity, Letter.A),
    "aB": (BS.step(BS.identity, Letter.A), Letter.B),
    "abB": (BS.step(BS.step(BS.identity, Letter.A), Letter.B), Letter.B),
    "eB": (BS.identity, Letter.B),
    "bA": (BS.step(BS.identity, Letter.B), Letter.A),
}
GRID_SLOTS = {
    "v1": (GRID.identity, Letter.A),
    "e1v2": (GRID.step(GRID.identity, Letter.A), Letter.B),
    "v2": (GRID.identity, Letter.B),
    "e2v1": (GRID.step(GRID.identity, Letter.B), Letter.A),
}


def slot_table(ops) -> dict:
    return BS_SLOTS if ops.name == "bs" else GRID_SLOTS


@dataclass(frozen=True, eq=False)
class Square:
    """Validated square: edge and vertex images on the square's model graph."""

    name: str
    ops: object
    emap: dict  # (degree, Letter) -> edge name
    vmap: dict  # degree -> vertex name

    def red_boundary(self) -> tuple[str, ...]:
        return tuple(self.emap[k] for k in red_keys(self.ops))

    def blue_boundary(self) -> tuple[str, ...]:
        return tuple(self.emap[k] for k in blue_keys(self.ops))

    def __eq__(self, other):
        return isinstance(other, Square) and self.emap == other.emap

    def __hash__(self):
        return hash(frozenset(self.emap.items()))


def build_square(g: ColouredGraph, ops, images: dict, name: str = "") -> Square:
    """Validate edge images keyed by (degree, Letter) domain edges.

    Checks colours and that images meet at common vertices, deriving the
    vertex images along the way.
    """
    domain = model(ops, ops.square_degree)
    missing = [k for k in domain.edges if k not in images]
    if missing:
        raise JunctionMismatch(f"square {name!r}: missing edge images {missing}")
    emap = {}
    vmap: dict = {}
    for z, letter in domain.edges:
        edge = g.edge(images[(z, letter)])
        if edge.colour is not letter:
            raise ColourMismatch(
                f"square {name!r}: slot ({ops.format(z)},{letter.value}) "
                f"needs colour {letter.value} but {edge.name!r} is "
                f"{edge.colour.value}"
            )
        emap[(z, letter)] = edge.name
        for vertex_key, value in ((z, edge.range_), (ops.step(z, letter), edge.source)):
            old = vmap.setdefault(vertex_key, value)
            if old != value:
                raise JunctionMismatch(
                    f"square {name!r}: vertex {ops.format(vertex_key)} forced "
                    f"to both {old!r} and {value!r}"
                )
    return Square(name, ops, emap, vmap)


def build_square_slots(g: ColouredGraph, ops, slots: dict, name: str = "") -> Square:
    """Build a square from the named fixture slots (eA=..., v1=..., ...)."""
    table = slot_table(ops)
    unknown = set(slots) - set(table)
    if unknown:
        raise JunctionMismatch(f"square {name!r}: unknown slots {sorted(unknown)}")
    missing = set(table) - set(slots)
    if missing:
        raise JunctionMismatch(f"square {name!r}: missing slots {sorted(missing)}")
    return build_square(g, ops, {table[s]: e for s, e in slots.items()}, name)


@dataclass
class CompleteCollection:
    """Squares plus both boundary-path indices, built eagerly."""

    ops: object
    squares: tuple
    index_red: dict = field(default_factory=dict)
    index_blue: dict = field(default_factory=dict)
    duplicate_red: list = field(default_factory=list)
    duplicate_blue: list = field(default_factory=list)

    def __post_init__(self):
        for sq in self.squares:
            red = sq.red_boundary()
            blue = sq.blue_boundary()
            if red in self.index_red and self.index_red[red] != sq:
                self.duplicate_red.append(red)
            else:
                self.index_red[red] = sq
            if blue in self.index_blue and self.index_blue[blue] != sq:
                self.duplicate_blue.append(blue)
            else:
                self.index_blue[blue] = sq

    def lookup_red(self, boundary) -> Square:
        boundary = tuple(boundary)
        try:
            return self.index_red[boundary]
        except KeyError:
            raise NotCovered(
                boundary,
                f"no square with red-first boundary {' '.join(boundary)}",
            ) from None

    def lookup_blue(self, boundary) -> Square:
        boundary = tuple(boundary)
        try:
            return self.index_blue[boundary]
        except KeyError:
            raise NotCovered(
                boundary,
                f"no square with blue-first boundary {' '.join(boundary)}",
            ) from None


@dataclass
class CompletenessReport:
    status: str  # "complete" | "incomplete"
    square_count: int
    red_path_count: int
    blue_path_count: int
    uncovered_red: list
    uncovered_blue: list
    duplicated: list
    malformed: list

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "squares": self.square_count,
            "red_first_paths": self.red_path_count,
            "blue_first_paths": self.blue_path_count,
            "uncovered_red_first": [" ".join(p) for p in self.uncovered_red],
            "uncovered_blue_first": [" ".join(p) for p in self.uncovered_blue],
            "duplicated_boundaries": [" ".join(p) for p in self.duplicated],
            "malformed_squares": list(self.malformed),
        }


def paths_with_colour_word(g: ColouredGraph, colour_word) -> list[tuple[str, ...]]:
    """All composable paths of g whose colour word matches, in declaration order."""
    partial: list[tuple] = [((), None)]
    for letter in colour_word:
        extended = []
        for names, tail in partial:
            for e in g.edges:
                if e.colour is letter and (tail is None or tail == e.range_):
                    extended.append((names + (e.name,), e.source))
        partial = extended
    return [names for names, _ in partial]


def check_complete(g: ColouredGraph, ops, squares) -> CompletenessReport:
    """Verify exactly-once coverage of both boundary-path families of g.

    Squares authored against another graph are re-validated here; failures
    land in the malformed list instead of raising.
    """
    valid = []
    malformed = []
    for sq in squares:
        try:
            build_square(g, ops, sq.emap, sq.name)
        except Exception as exc:  # noqa: BLE001 - reported, not raised
            malformed.append(f"{sq.name}: {exc}")
            continue
        valid.append(sq)
    coll = CompleteCollection(ops, tuple(valid))
    red_paths = paths_with_colour_word(g, ops.red_first_word)
    blue_paths = paths_with_colour_word(g, ops.blue_first_word)
    uncovered_red = [p for p in red_paths if p not in coll.index_red]
    uncovered_blue = [p for p in blue_paths if p not in coll.index_blue]
    # Coverage must be exactly once per boundary, counting list entries:
    # a renamed copy of a square still breaks uniqueness.
    duplicated = []
    for boundary in (sq.red_boundary() for sq in valid):
        if sum(1 for sq in valid if sq.red_boundary() == boundary) > 1:
            if boundary not in duplicated:
                duplicated.append(boundary)
    for boundary in (sq.blue_boundary() for sq in valid):
        if sum(1 for sq in valid if sq.blue_boundary() == boundary) > 1:
            if boundary not in duplicated:
                duplicated.append(boundary)
    ok = not (uncovered_red or uncovered_blue or duplicated or malformed)
    return CompletenessReport(
        "complete" if ok else "incomplete",
        len(valid),
        len(red_paths),
        len(blue_paths),
        uncovered_red,
        uncovered_blue,
        duplicated,
        malformed,
    )
