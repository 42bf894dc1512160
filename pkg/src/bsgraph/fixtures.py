"""Line-oriented fixture files: a coloured graph plus its squares.

Grammar (UTF-8, '#' starts a comment, blank lines ignored):

    mode bs|grid
    vertex <name>
    edge <name> <colour: a|b|1|2> <range-vertex> <source-vertex>
    square <name> eA=<edge> aB=<edge> abB=<edge> eB=<edge> bA=<edge>   # bs
    square <name> v1=<edge> e1v2=<edge> v2=<edge> e2v1=<edge>          # grid

Serialization writes the same grammar back in declaration order, so a
parse/serialize round trip is the identity modulo comments and spacing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FixtureSyntaxError
from .graphs import ColouredGraph, build_graph
from .squares import Square, build_square_slots, slot_table
from .words import BS, GRID, Letter


@dataclass
class FixtureFile:
    mode: str
    graph: ColouredGraph
    squares: list[Square]

    @property
    def ops(self):
        return BS if self.mode == "bs" else GRID


def parse_fixture(text: str) -> FixtureFile:
    mode = "bs"
    vertices: list[str] = []
    edges: list[tuple] = []
    square_lines: list[tuple[int, str, dict]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "mode":
            if len(args) != 1 or args[0] not in ("bs", "grid"):
                raise FixtureSyntaxError(f"line {lineno}: mode must be bs or grid")
            mode = args[0]
        elif kind == "vertex":
            if len(args) != 1:
                raise FixtureSyntaxError(f"line {lineno}: vertex takes one name")
            vertices.append(args[0])
        elif kind == "edge":
            if len(args) != 4:
                raise FixtureSyntaxError(
                    f"line {lineno}: edge takes name colour range source"
                )
            edges.append(tuple(args))
        elif kind == "square":
            if not args:
                raise FixtureSyntaxError(f"line {lineno}: square needs a name")
            slots = {}
            for item in args[1:]:
                if "=" not in item:
                    raise FixtureSyntaxError(
                        f"line {lineno}: square slot {item!r} is not slot=edge"
                    )
                slot, edge = item.split("=", 1)
                slots[slot] = edge
            square_lines.append((lineno, args[0], slots))
        else:
            raise FixtureSyntaxError(f"line {lineno}: unknown directive {kind!r}")
    try:
        graph = build_graph(vertices, edges)
    except Exception as exc:
        raise FixtureSyntaxError(str(exc)) from exc
    ops = BS if mode == "bs" else GRID
    squares = []
    for lineno, name, slots in square_lines:
        try:
            squares.append(build_square_slots(graph, ops, slots, name))
        except Exception as exc:
            raise FixtureSyntaxError(f"line {lineno}: {exc}") from exc
    return FixtureFile(mode, graph, squares)


def load_fixture(path) -> FixtureFile:
    with open(path, encoding="utf-8") as fh:
        return parse_fixture(fh.read())


def serialize_fixture(fx: FixtureFile) -> str:
    lines = [f"mode {fx.mode}"]
    lines.extend(f"vertex {v}" for v in fx.graph.vertices)
    lines.extend(
        f"edge {e.name} {e.colour.value if fx.mode == 'bs' else ('1' if e.colour is Letter.A else '2')}"
        f" {e.range_} {e.source}"
        for e in fx.graph.edges
    )
    table = slot_table(fx.ops)
    for sq in fx.squares:
        slots = " ".join(f"{slot}={sq.emap[key]}" for slot, key in table.items())
        lines.append(f"square {sq.name} {slots}")
    return "\n".join(lines) + "\n"
