"""Lifting, traversals, restrictions, occurrences, and the enumeration oracle."""

from __future__ import annotations

import pytest

from bsgraph.errors import Conflict, NotComposable, NotCovered, PreconditionViolated
from bsgraph.graphs import validate_path, vertex_path
from bsgraph.morphisms import (
    Morphism,
    check_compatible,
    check_traverses,
    enumerate_morphisms,
    identity_morphism,
    lift_path,
    longest_traversal,
    occurrences,
    restrict,
    restrict_shifted,
    rewrite_tail,
    shortest_traversal,
)
from bsgraph.models import model, square_positions
from bsgraph.squares import CompleteCollection
from bsgraph.words import BS, BsWord, Letter


def expected_example_lam(graph):
    """The worked-example morphism written out entry by entry:
    rows u/v/u, blue rows g/k/g, red columns f then h."""
    w = BsWord(2, 8)
    vmap = {z: ("u", "v", "u")[z.n_a] for z in BS.prefixes(w)}
    emap = {}
    for z, l in model(BS, w).edges:
        if l is Letter.B:
            emap[(z, l)] = ("g", "k", "g")[z.n_a]
        else:
            emap[(z, l)] = ("f", "h")[z.n_a]
    return Morphism(BS, w, vmap, emap)


def test_lift_ggfh_matches_worked_example(ctx, example_lam):
    assert example_lam.degree == BsWord(2, 8)
    assert len(example_lam.vmap) == 17
    assert len(example_lam.emap) == 22
    assert example_lam == expected_example_lam(ctx.graph)
    assert (example_lam.range_, example_lam.source) == ("u", "u")


def test_lift_vertex_path(ctx):
    lam = lift_path(ctx.graph, ctx.collection, vertex_path(ctx.graph, "u"))
    assert lam == identity_morphism(BS, "u")
    assert lam.degree == BS.identity


def test_lift_equal_for_square_traversals(ctx):
    via_red = lift_path(ctx.graph, ctx.collection, validate_path(ctx.graph, ["f", "k", "k"]))
    via_blue = lift_path(ctx.graph, ctx.collection, validate_path(ctx.graph, ["g", "f"]))
    assert via_red == via_blue
    assert via_red.degree == BsWord(1, 2)
    # it is exactly phi1 viewed as a morphism
    phi1 = next(sq for sq in ctx.collection.squares if sq.name == "phi1")
    assert via_red.emap == phi1.emap


def test_lift_rejects_non_composable(ctx):
    path = validate_path(ctx.graph, ["g"])
    bad = type(path)(("g", "h"), "u", "u", path.colours * 2)  # forged junction
    with pytest.raises(NotComposable):
        lift_path(ctx.graph, ctx.collection, bad)


def test_lift_not_covered_without_phi2(ctx, incomplete_fixture):
    fx = incomplete_fixture
    coll = CompleteCollection(fx.ops, tuple(fx.squares))
    with pytest.raises(NotCovered) as exc:
        lift_path(fx.graph, coll, validate_path(fx.graph, ["g", "g", "f", "h"]))
    assert exc.value.boundary in (("k", "h"), ("h", "g", "g"))


def test_lift_loop_invariant(ctx):
    # check_each_step asserts totality after every prefix of the path
    path = validate_path(ctx.graph, ["g", "g", "f", "h", "g", "f"])
    lam = lift_path(ctx.graph, ctx.collection, path, check_each_step=True)
    assert check_traverses(ctx.graph, lam, path)


def test_check_traverses(ctx, example_lam):
    g = ctx.graph
    assert check_traverses(g, example_lam, validate_path(g, ["g", "g", "f", "h"]))
    assert check_traverses(g, example_lam, validate_path(g, ["f", "h"] + ["g"] * 8))
    assert not check_traverses(g, example_lam, validate_path(g, ["g", "g"]))
    lam_u = identity_morphism(BS, "u")
    assert check_traverses(g, lam_u, vertex_path(g, "u"))
    assert not check_traverses(g, lam_u, vertex_path(g, "v"))


def test_traversal_extremes(ctx, example_lam):
    short = shortest_traversal(ctx.graph, example_lam)
    long = longest_traversal(ctx.graph, example_lam)
    assert short.edges == ("g", "g", "f", "h")
    assert long.edges == ("f", "h") + ("g",) * 8
    assert len(short) == 4 and len(long) == 10
    from bsgraph.graphs import path_degree

    assert path_degree(BS, short) == path_degree(BS, long) == BsWord(2, 8)


def test_traversals_traverse_their_morphism(ctx):
    for names in (["g", "f"], ["g", "g", "f", "h"], ["f", "k", "k"]):
        lam = lift_path(ctx.graph, ctx.collection, validate_path(ctx.graph, names))
        assert check_traverses(ctx.graph, lam, shortest_traversal(ctx.graph, lam))
        assert check_traverses(ctx.graph, lam, longest_traversal(ctx.graph, lam))


def test_restrict(ctx, example_lam):
    bottom = restrict(example_lam, BsWord(0, 2))
    assert shortest_traversal(ctx.graph, bottom).edges == ("g", "g")
    assert restrict_shifted(example_lam, BS.identity, example_lam.degree) == example_lam
    top = restrict_shifted(example_lam, BsWord(0, 2), BsWord(2, 8))
    assert top.degree == BsWord(2, 0)
    assert shortest_traversal(ctx.graph, top).edges == ("f", "h")


def test_restrictions_stay_compatible(ctx, example_lam):
    for w1 in BS.prefixes(example_lam.degree):
        assert check_compatible(restrict(example_lam, w1), ctx.collection)
        assert check_compatible(
            restrict_shifted(example_lam, w1, example_lam.degree), ctx.collection
        )


def test_occurrences(ctx, example_lam, phi1, phi2):
    assert occurrences(identity_morphism(BS, "v")) == []
    sq_morph = lift_path(ctx.graph, ctx.collection, validate_path(ctx.graph, ["g", "f"]))
    occs = occurrences(sq_morph)
    assert len(occs) == 1 and occs[0].position == BS.identity
    occs28 = occurrences(example_lam)
    # one occurrence per square position of (2,8); brute count gives 6
    assert len(occs28) == len(square_positions(BS, BsWord(2, 8))) == 6
    known = {frozenset(phi1.emap.items()): 0, frozenset(phi2.emap.items()): 0}
    for occ in occs28:
        known[frozenset(occ.emap.items())] += 1
    # phi1 fills the bottom band twice, phi2 the top band four times
    assert known[frozenset(phi1.emap.items())] == 2
    assert known[frozenset(phi2.emap.items())] == 4


def test_check_compatible(ctx, example_lam, phi1):
    assert check_compatible(example_lam, ctx.collection)
    assert check_compatible(identity_morphism(BS, "v"), ctx.collection)
    only_phi1 = CompleteCollection(BS, (phi1,))
    assert not check_compatible(example_lam, only_phi1)


def test_rewrite_tail(ctx):
    g = ctx.graph
    sq1 = lift_path(g, ctx.collection, validate_path(g, ["g", "f"]))
    out = rewrite_tail(g, sq1, validate_path(g, ["g", "f"]))
    assert out.edges == ("f", "k", "k")
    assert check_traverses(g, sq1, out)
    sq2 = lift_path(g, ctx.collection, validate_path(g, ["k", "h"]))
    assert rewrite_tail(g, sq2, validate_path(g, ["k", "h"])).edges == ("h", "g", "g")
    from bsgraph.graphs import path_degree

    assert path_degree(BS, out) == BsWord(1, 2)


def test_rewrite_tail_preconditions(ctx, example_lam):
    g = ctx.graph
    with pytest.raises(PreconditionViolated):
        rewrite_tail(g, example_lam, validate_path(g, ["f", "h"] + ["g"] * 8))
    other = lift_path(g, ctx.collection, validate_path(g, ["k", "h"]))
    with pytest.raises(PreconditionViolated):
        rewrite_tail(g, other, validate_path(g, ["g", "f"]))


def test_enumerate_ba(ctx, phi1, phi2):
    found = enumerate_morphisms(ctx.graph, ctx.collection, BsWord(1, 2))
    assert len(found) == 2
    assert {frozenset(m.emap.items()) for m in found} == {
        frozenset(phi1.emap.items()),
        frozenset(phi2.emap.items()),
    }


def test_enumerate_identity_degree(ctx):
    found = enumerate_morphisms(ctx.graph, ctx.collection, BS.identity)
    assert found == [identity_morphism(BS, "u"), identity_morphism(BS, "v")]


def test_enumerate_contains_worked_example(ctx, example_lam):
    found = enumerate_morphisms(ctx.graph, ctx.collection, BsWord(2, 8))
    assert example_lam in found


def test_unique_lifting_against_oracle(ctx):
    """Uniqueness at small scale: each path picks out exactly one
    compatible morphism, the lift."""
    from bsgraph.category import all_paths
    from bsgraph.graphs import path_degree

    for path in all_paths(ctx.graph, 3):
        lam = lift_path(ctx.graph, ctx.collection, path)
        matches = [
            m
            for m in enumerate_morphisms(ctx.graph, ctx.collection, path_degree(BS, path))
            if check_traverses(ctx.graph, m, path)
        ]
        assert matches == [lam]


def test_conflict_reported_for_incompatible_seed(ctx, incomplete_fixture):
    """With phi2 missing, some path hits a boundary the collection lacks."""
    fx = incomplete_fixture
    coll = CompleteCollection(fx.ops, tuple(fx.squares))
    with pytest.raises((NotCovered, Conflict)):
        lift_path(fx.graph, coll, validate_path(fx.graph, ["k", "k", "h", "f"]))


def test_morphism_json_shape(example_lam):
    data = example_lam.to_json()
    assert data["mode"] == "bs"
    assert data["degree"]["pair"] == [2, 8]
    assert len(data["vertices"]) == 17
    assert len(data["edges"]) == 22
    assert data["vertices"][0] == {"prefix": "e", "pair": [0, 0], "vertex": "u"}
