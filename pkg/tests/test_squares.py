"""Squares, complete collections, and the boundary-path indices."""

from __future__ import annotations

import pytest

from bsgraph.errors import ColourMismatch, JunctionMismatch, NotCovered
from bsgraph.squares import (
    BS_SLOTS,
    CompleteCollection,
    build_square_slots,
    check_complete,
    paths_with_colour_word,
)
from bsgraph.words import BS, Letter

PHI1 = {"eA": "f", "aB": "k", "abB": "k", "eB": "g", "bA": "f"}
PHI2 = {"eA": "h", "aB": "g", "abB": "g", "eB": "k", "bA": "h"}


def test_build_phi1_phi2(graph_E):
    sq1 = build_square_slots(graph_E, BS, PHI1, "phi1")
    sq2 = build_square_slots(graph_E, BS, PHI2, "phi2")
    assert sq1.red_boundary() == ("f", "k", "k")
    assert sq1.blue_boundary() == ("g", "f")
    assert sq2.red_boundary() == ("h", "g", "g")
    assert sq2.blue_boundary() == ("k", "h")


def test_square_vertex_images(phi1):
    # phi1 sends e, b |-> u and everything else along the square to v/u
    assert phi1.vmap[BS.identity] == "u"
    assert phi1.vmap[BS.square_degree] == "v"


def test_colour_mismatch(graph_E):
    bad = dict(PHI1, eA="g")  # g is blue; slot eA needs red
    with pytest.raises(ColourMismatch):
        build_square_slots(graph_E, BS, bad, "bad")


def test_junction_mismatch(graph_E):
    # red boundary f,k,k meets blue boundary k,h nowhere: h starts at u, f ends at v
    bad = dict(PHI1, eB="k")
    with pytest.raises(JunctionMismatch):
        build_square_slots(graph_E, BS, bad, "bad")


def test_missing_and_unknown_slots(graph_E):
    with pytest.raises(JunctionMismatch):
        build_square_slots(graph_E, BS, {"eA": "f"}, "partial")
    with pytest.raises(JunctionMismatch):
        build_square_slots(graph_E, BS, dict(PHI1, zz="f"), "extra")


def test_boundary_path_enumeration(graph_E):
    assert sorted(paths_with_colour_word(graph_E, BS.red_first_word)) == [
        ("f", "k", "k"),
        ("h", "g", "g"),
    ]
    assert sorted(paths_with_colour_word(graph_E, BS.blue_first_word)) == [
        ("g", "f"),
        ("k", "h"),
    ]


def test_check_complete_on_fixture(ctx):
    report = check_complete(ctx.graph, BS, ctx.collection.squares)
    assert report.complete
    assert report.square_count == 2
    assert report.red_path_count == 2
    assert report.blue_path_count == 2


def test_check_incomplete_without_phi2(ctx, phi1):
    report = check_complete(ctx.graph, BS, [phi1])
    assert not report.complete
    assert report.uncovered_red == [("h", "g", "g")]
    assert report.uncovered_blue == [("k", "h")]


def test_check_duplicate(ctx, graph_E, phi1):
    clone = build_square_slots(graph_E, BS, PHI1, "phi1_again")
    report = check_complete(graph_E, BS, [phi1, clone, *ctx.collection.squares[1:]])
    assert not report.complete
    assert report.duplicated  # the shared boundary paths are reported


def test_check_complete_order_independent(ctx, graph_E):
    sqs = list(ctx.collection.squares)
    fwd = check_complete(graph_E, BS, sqs).to_json()
    rev = check_complete(graph_E, BS, sqs[::-1]).to_json()
    assert fwd["status"] == rev["status"] == "complete"


def test_lookup_round_trip(ctx, phi1, phi2):
    c = ctx.collection
    assert c.lookup_red(("f", "k", "k")) == phi1
    assert c.lookup_blue(("k", "h")) == phi2
    for sq in c.squares:
        assert c.lookup_red(sq.red_boundary()) == sq
        assert c.lookup_blue(sq.blue_boundary()) == sq


def test_lookup_not_covered(phi1):
    c = CompleteCollection(BS, (phi1,))
    with pytest.raises(NotCovered) as exc:
        c.lookup_blue(("k", "h"))
    assert exc.value.boundary == ("k", "h")


def test_malformed_square_reported(grid_ctx, phi1):
    # a bs-mode square validated against the grid graph cannot type-check
    report = check_complete(grid_ctx.graph, BS, [phi1])
    assert report.malformed and not report.complete


def test_slot_keys_match_square_model():
    from bsgraph.models import model

    domain_edges = set(model(BS, BS.square_degree).edges)
    assert set(BS_SLOTS.values()) == domain_edges
    assert BS_SLOTS["eA"] == (BS.identity, Letter.A)
