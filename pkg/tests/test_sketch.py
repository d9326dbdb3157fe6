import pytest

from onecross.plane_map import euler_check, trace_faces
from onecross.sketch import SketchError, compile_sketch


def test_plain_square_compiles():
    pts = {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)}
    sk = compile_sketch(pts, [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    m, _ = sk.to_plane_map()
    assert euler_check(m).planar
    assert len(trace_faces(m)) == 2


def test_declared_crossing_found():
    pts = {"a": (0, 0), "b": (1, 1), "c": (0, 1), "d": (1, 0)}
    sk = compile_sketch(pts, [("a", "b"), ("c", "d")],
                        crossings=[(("a", "b"), ("c", "d"))])
    assert len(sk.false_names) == 1
    assert len(sk.edge_paths[("a", "b")]) == 2
    m, _ = sk.to_plane_map()
    assert euler_check(m).planar


def test_undeclared_crossing_rejected():
    pts = {"a": (0, 0), "b": (1, 1), "c": (0, 1), "d": (1, 0)}
    with pytest.raises(SketchError, match="undeclared"):
        compile_sketch(pts, [("a", "b"), ("c", "d")])


def test_missing_declared_crossing_rejected():
    pts = {"a": (0, 0), "b": (1, 0), "c": (0, 1), "d": (1, 1)}
    with pytest.raises(SketchError, match="not realized"):
        compile_sketch(pts, [("a", "b"), ("c", "d")],
                       crossings=[(("a", "b"), ("c", "d"))])


def test_double_crossing_rejected():
    # A zig-zag polyline crossing a straight edge twice.
    pts = {"a": (0, 0), "b": (4, 0), "c": (0, 1), "d": (4, 1)}
    with pytest.raises(SketchError, match="cross more than once"):
        compile_sketch(
            pts,
            [("a", "b"), ("c", "d", [(2, -1), (3, 2)])],
            crossings=[(("a", "b"), ("c", "d"))],
        )


def test_shared_endpoint_edges_may_not_cross():
    pts = {"a": (0, 0), "b": (2, 0), "c": (1, 1)}
    with pytest.raises(SketchError, match="share an endpoint"):
        compile_sketch(pts, [("a", "b"), ("a", "c", [(1.0, -0.5), (1.0, 0.5)])])


def test_waypoint_edge_routes_around():
    # Edge a-b detours around c so it does not cross c-d.
    pts = {"a": (0, 0), "b": (2, 0), "c": (1, 1), "d": (1, -1)}
    sk = compile_sketch(
        pts,
        [("a", "b", [(1, -2)]), ("c", "d")],
    )
    assert len(sk.crossings) == 0
    m, _ = sk.to_plane_map()
    assert euler_check(m).planar


def test_fragment_corner_wedges():
    pts = {"A": (0.0, 2.0), "B": (-1.0, 0.0), "C": (1.0, 0.0), "m": (0.0, 0.7)}
    sk = compile_sketch(
        pts,
        [("A", "B"), ("B", "C"), ("C", "A"), ("m", "A"), ("m", "B"), ("m", "C")],
        boundary=[("A", "B"), ("B", "C"), ("C", "A")],
        corners=("A", "B", "C"),
    )
    assert set(sk.corners) == {"A", "B", "C"}
    assert all(sk.corner_wedges[c] == ("m",) for c in "ABC")
