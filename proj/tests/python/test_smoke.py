"""Smoke tests for the _parrig module surface."""

import math

import pytest

import _parrig as pr

SQUARE_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3)]
SQUARE_POS = {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (1.0, 1.0), 3: (0.0, 1.0)}


def square():
    return pr.make_framework(SQUARE_EDGES, SQUARE_POS)


def test_framework_accessors():
    fw = square()
    assert fw.vertex_count == 4
    assert fw.edge_count == 4
    assert fw.vertices() == [0, 1, 2, 3]
    assert fw.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert fw.position(2) == pytest.approx((1.0, 1.0))


def test_classes_pair_opposite_edges():
    cls = pr.classes(square())
    assert len(cls) == 2
    assert sorted(sorted(c) for c in cls) == [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]


def test_check_clean_square():
    report = pr.check(square())
    assert report["placement_ok"] is True
    assert report["injective"] is True
    assert report["walk_independent"] is True
    assert report["classes"] == 2
    assert report["violations"] == []


def test_check_reports_violation():
    skewed = dict(SQUARE_POS)
    skewed[2] = (1.3, 1.1)
    report = pr.check(pr.make_framework(SQUARE_EDGES, skewed))
    assert report["placement_ok"] is False
    assert report["walk_independent"] is False
    witness = report["violations"][0]
    assert witness["cycle"][0] == witness["cycle"][-1]
    assert math.hypot(*witness["sum"]) > 1e-9


def test_verdict_square_flexible():
    assert pr.verdict(square()) == {"flexible": True, "classes": 2, "dof": 1}


def test_flex_preserves_edge_lengths():
    fw = square()
    base = {v: fw.position(v) for v in fw.vertices()}
    for t1 in (0.4, -1.1, 2.5):
        moved = pr.flex_at(fw, [0.0, t1])
        for u, v in fw.edges():
            assert math.dist(moved[u], moved[v]) == pytest.approx(
                math.dist(base[u], base[v]), abs=1e-9
            )


def test_flex_rejects_bad_angle_vector():
    with pytest.raises(ValueError):
        pr.flex_at(square(), [0.1, 0.2])
    with pytest.raises(ValueError):
        pr.flex_at(square(), [0.0])


def test_serialize_parse_roundtrip():
    fw = square()
    text = pr.serialize(fw)
    back = pr.parse(text)
    assert back.edges() == fw.edges()
    for v in fw.vertices():
        assert back.position(v) == pytest.approx(fw.position(v), abs=1e-12)
    assert pr.serialize(back) == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        pr.parse("not a document")


def test_make_framework_rejects_unplaced_endpoint():
    with pytest.raises(ValueError):
        pr.make_framework([(0, 4)], {0: (0.0, 0.0)})


def test_rigidity_rank_square():
    assert pr.rigidity_rank(square()) == 4


def test_nac_colorings_and_verify():
    fw = square()
    assert pr.nac_colorings(fw) == ["BRRB"]
    assert pr.nac_verify(fw, "BRRB")["ok"] is True
    assert pr.nac_verify(fw, "BRRB", cartesian=True)["ok"] is True

    bad = pr.nac_verify(fw, "RBBB")
    assert bad["ok"] is False
    assert "reason" in bad
    assert bad["witness_cycle"][0] == bad["witness_cycle"][-1]

    with pytest.raises(ValueError):
        pr.nac_verify(fw, "RB")


def test_embed_coords_square_is_product_of_two_edges():
    coords = pr.embed_coords(square())
    assert sorted(tuple(c) for c in coords.values()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_tiling_generation():
    names = pr.tiling_names()
    assert len(names) == 9
    assert "[4^4]" in names
    assert "[3.6.3.6]" in names

    grid = pr.tiling("[4^4]", 1)
    assert (grid.vertex_count, grid.edge_count) == (9, 12)
    assert len(pr.classes(grid)) == 4

    kagome = pr.tiling("kagome", 2, augment=True)
    assert (kagome.vertex_count, kagome.edge_count) == (366, 755)
    assert len(pr.classes(kagome)) == 4

    with pytest.raises(ValueError):
        pr.tiling("nope", 1)
    with pytest.raises(ValueError):
        pr.tiling("[4^4]", 0)


def test_symmetry_class_count():
    fw = pr.make_framework(
        SQUARE_EDGES,
        {0: (0.5, 0.5), 1: (-0.5, 0.5), 2: (-0.5, -0.5), 3: (0.5, -0.5)},
    )
    assert pr.symmetry_class_count(fw, 0.0, 0.0, 4) == 1
    assert pr.symmetry_class_count(fw, 0.0, 0.0, 2) == 2


def test_render_svg():
    text = pr.render_svg(square())
    assert text.startswith("<svg")
    assert text.rstrip().endswith("</svg>")
