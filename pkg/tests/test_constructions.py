import pytest

from onecross.bounds import upper_bound
from onecross.constructions import (
    ConstructionParams,
    b_family,
    balanced,
    best_known,
    k36_family,
    near_balanced,
    stacked_triangulation,
    w3_family,
)
from onecross.drawing import DrawingError, crossing_count, validate
from onecross.plane_map import euler_check, trace_faces


def classes(d):
    g = d.graph
    return tuple(sorted((len(g.black), len(g.white))))


def test_stacked_triangulation_counts():
    for x in (3, 4, 10):
        m = stacked_triangulation(x)
        faces = trace_faces(m)
        assert len(faces) == 2 * x - 4
        assert all(len(w) == 3 for w in faces)
        assert len(m.edge_darts) == 3 * x - 6
        assert euler_check(m).planar


def test_stacked_triangulation_rejects_small():
    with pytest.raises(DrawingError):
        stacked_triangulation(2)


@pytest.mark.parametrize("x,y,edges", [(3, 6, 18), (4, 12, 36), (3, 8, 22)])
def test_w3_examples(x, y, edges):
    d = w3_family(x, y)
    assert validate(d).passed
    assert classes(d) == (x, y)
    assert d.edge_count == edges


def test_w3_crossings_saturate_ceiling_on_boundary():
    for x in (3, 4, 6):
        d = w3_family(x, 6 * x - 12)
        assert crossing_count(d) == 6 * x - 12


def test_w3_parameter_checks():
    with pytest.raises(DrawingError):
        w3_family(2, 6)
    with pytest.raises(DrawingError):
        w3_family(4, 11)


@pytest.mark.parametrize("x,y,verts,edges", [(5, 12, 17, 39), (4, 7, 11, 21)])
def test_b_examples(x, y, verts, edges):
    d = b_family(x, y)
    assert validate(d).passed
    assert classes(d) == (x, y)
    assert (d.vertex_count, d.edge_count) == (verts, edges)


def test_b_rejects_out_of_range():
    with pytest.raises(DrawingError):
        b_family(4, 4)
    with pytest.raises(DrawingError):
        b_family(4, 13)


def test_b_dispatches_eleven_eleven_to_balanced():
    d = b_family(11, 11)
    assert classes(d) == (11, 11)
    assert d.edge_count == 3 * 22 - 8


def test_b_inserted_blacks_have_degree_three():
    # Before any white trimming (y divisible by six), every black vertex
    # beyond the triangulation corners has exactly three edges.
    for x, y in ((5, 12), (7, 12), (8, 18), (11, 12)):
        d = b_family(x, y)
        base = y // 6 + 2
        deg = {v: 0 for v in d.graph.vertices}
        for u, v in d.graph.edges:
            deg[u] += 1
            deg[v] += 1
        inserted = [v for v in d.graph.black if v >= base]
        assert len(inserted) == x - base
        assert all(deg[v] == 3 for v in inserted)


@pytest.mark.parametrize("x,verts,edges", [
    (2, 4, 4), (3, 6, 9), (4, 8, 16), (5, 10, 22), (7, 14, 34),
])
def test_balanced_examples(x, verts, edges):
    d = balanced(x)
    assert validate(d).passed
    assert classes(d) == (x, x)
    assert (d.vertex_count, d.edge_count) == (verts, edges)


def test_balanced_odd_modification_recipe():
    # The odd drawing is the even-ring drawing minus 2k-3 specific edges,
    # plus the longer chords and two degree-4 vertices (2k+3 edges).
    from onecross.constructions import _odd_sketch, _ring_sketch

    for k in (3, 5, 8):
        sk, _ = _odd_sketch(k)
        edges = {frozenset(e) for e in sk.graph_edges}
        ring_edges = {frozenset(e) for e in _ring_sketch(k)[0].graph_edges}
        for i in range(2, k + 1):
            assert frozenset((f"x1_{i}", f"y1_{i - 1}")) not in edges
        for i in range(2, k):
            assert frozenset((f"x1_{i}", f"y1_{i}")) not in edges
        added = {frozenset((f"x1_{i}", f"y1_{i + 2}")) for i in range(1, k - 1)}
        added |= {frozenset((f"x1_{i}", f"y1_{i + 3}")) for i in range(1, k - 2)}
        added |= {frozenset(("ub", w)) for w in ("y1_1", "y1_2", "y1_3", "y2_1")}
        added |= {frozenset(("uw", b))
                  for b in (f"x1_{k}", f"x1_{k - 1}", f"x1_{k - 2}", f"x2_{k}")}
        assert added <= edges
        assert len(added) == 2 * k + 3
        core = edges - added
        assert core <= ring_edges
        assert len(ring_edges - core) == 2 * k - 3


def test_balanced_even_crossing_count():
    # Four crossings per consecutive ring pair.
    for x in (4, 6, 10):
        assert crossing_count(balanced(x)) == 4 * (x // 2 - 1)


@pytest.mark.parametrize("x,y,verts,edges", [(4, 6, 10, 20), (5, 5, 10, 22), (7, 10, 17, 40)])
def test_near_balanced_examples(x, y, verts, edges):
    d = near_balanced(x, y)
    assert validate(d).passed
    assert (d.vertex_count, d.edge_count) == (verts, edges)


def test_near_balanced_rejects_x3():
    with pytest.raises(DrawingError):
        near_balanced(3, 5)


def test_k36_rejects_small_y():
    with pytest.raises(DrawingError):
        k36_family(5)


def test_balanced_rejects_x1():
    with pytest.raises(DrawingError):
        balanced(1)


@pytest.mark.parametrize("y,verts,edges", [(6, 9, 18), (7, 10, 20), (20, 23, 46)])
def test_k36_examples(y, verts, edges):
    d = k36_family(y)
    assert validate(d).passed
    assert classes(d) == (3, y)
    assert (d.vertex_count, d.edge_count) == (verts, edges)


def test_k36_is_complete_at_six():
    d = k36_family(6)
    assert d.edge_count == 18 == 3 * 6
    blacks = sorted(d.graph.black)
    whites = sorted(d.graph.white)
    assert {frozenset(e) for e in d.graph.edges} == {
        frozenset((b, w)) for b in blacks for w in whites}


def test_best_known_examples():
    assert best_known(3, 30).family == "w3"
    assert best_known(3, 30).edges == 66
    assert best_known(11, 11).family == "balanced"
    assert best_known(11, 11).edges == 58
    assert best_known(1, 9).family == "star"
    assert best_known(1, 9).edges == 9


def test_best_known_never_beats_upper_bound():
    for x in range(1, 9):
        for y in range(x, 21):
            bk = best_known(x, y)
            assert bk.edges <= upper_bound(x, y)
            assert validate(bk.drawing).passed


def test_best_known_monotone_in_y():
    for x in range(1, 7):
        prev = 0
        for y in range(x, 18):
            e = best_known(x, y).edges
            assert e >= prev
            prev = e


def test_face_templates_declared_counts():
    from onecross.constructions import face_templates

    templates = face_templates()
    assert [t.name for t in templates] == ["W3", "B1", "B2", "B3"]
    for i, t in enumerate(templates):
        assert (t.inserted_black, t.inserted_white) == (i, 3)
        assert t.edges == 9 + 3 * i
        assert len(t.fragment.graph_edges) == t.edges
    assert [t.crossings for t in templates] == [3, 3, 4, 6]


def test_construction_params():
    p = ConstructionParams(5, 14)
    assert p.remainder == (2, 2)
    assert p.surplus == 9
    assert p.half == 2
    assert ConstructionParams(5, 12).split == (0, 1)
