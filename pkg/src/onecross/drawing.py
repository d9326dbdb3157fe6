"""One-crossing-per-edge drawings: the certified data model and its surgery.

A drawing couples an abstract simple graph with a set of crossing pairs and a
*planified* combinatorial map in which every crossing appears as a degree-4
false vertex whose rotation alternates between the two crossed edges.  The
validator re-derives every invariant from scratch, so a drawing object that
passes :func:`validate` is a self-contained certificate of a plane drawing
with at most one crossing per edge.

Drawings are immutable; operations return new certified drawings.
Independent drawings may be validated concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import plane_map as pm
from .plane_map import PlaneMap

Edge = tuple[int, int]
Crossing = tuple[Edge, Edge]


class DrawingError(ValueError):
    """Raised when drawing data violates an invariant."""


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise DrawingError(f"non-bipartite or non-simple graph: self-edge at {u}")
    return (u, v) if u < v else (v, u)


def crossing_key(e: Edge, f: Edge) -> Crossing:
    return (e, f) if e <= f else (f, e)


@dataclass(frozen=True)
class Graph:
    """A plain simple graph; the oracle certifies non-bipartite inputs too."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @staticmethod
    def make(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        vs = frozenset(vertices)
        es = frozenset(edge_key(u, v) for u, v in edges)
        for u, v in es:
            if u not in vs or v not in vs:
                raise DrawingError(f"edge ({u},{v}) leaves the vertex set")
        return Graph(vs, es)


@dataclass(frozen=True)
class BipartiteGraph:
    """A simple bipartite graph with black (smaller) and white vertex classes."""

    black: frozenset[int]
    white: frozenset[int]
    edges: frozenset[Edge]

    @staticmethod
    def make(black: Iterable[int], white: Iterable[int],
             edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        b, w = frozenset(black), frozenset(white)
        if b & w:
            raise DrawingError("non-bipartite or non-simple graph: classes overlap")
        es = frozenset(edge_key(u, v) for u, v in edges)
        for u, v in es:
            if not ((u in b and v in w) or (u in w and v in b)):
                raise DrawingError(
                    f"non-bipartite or non-simple graph: edge ({u},{v}) is not black-white")
        return BipartiteGraph(b, w, es)

    @property
    def vertices(self) -> frozenset[int]:
        return self.black | self.white


@dataclass(frozen=True)
class OnePlanarDrawing:
    """An abstract graph, its crossing pairs, and the planified map.

    ``edge_paths`` realizes every graph edge as one map edge or as two map
    edges through one false vertex; ``false_vertices`` names the map vertex
    standing for each crossing.
    """

    graph: BipartiteGraph | Graph
    crossings: frozenset[Crossing]
    planified: PlaneMap
    edge_paths: dict[Edge, tuple[int, ...]]
    false_vertices: dict[int, Crossing]

    @property
    def x(self) -> int | None:
        g = self.graph
        return min(len(g.black), len(g.white)) if isinstance(g, BipartiteGraph) else None

    @property
    def y(self) -> int | None:
        g = self.graph
        return max(len(g.black), len(g.white)) if isinstance(g, BipartiteGraph) else None

    @property
    def vertex_count(self) -> int:
        return len(self.graph.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.graph.edges)


@dataclass(frozen=True)
class ValidationReport:
    """Per-invariant outcome of validating a drawing."""

    passed: bool
    failures: tuple[str, ...]
    x: int | None
    y: int | None
    vertices: int
    edges: int
    crossings: int
    crossing_ceiling: int | None
    exceeds_minimal_bound: bool | None


def crossing_ceiling(x: int) -> int:
    """Crossings of a crossing-minimal drawing never exceed ``6x - 12``.

    ``x`` is the size of the smaller vertex class; meaningful for ``x >= 2``.
    """
    return 6 * x - 12


def validate(d: OnePlanarDrawing) -> ValidationReport:
    """Check every drawing invariant; failures are report entries, not errors.

    The ``6x - 12`` crossing ceiling applies only to crossing-minimal
    drawings, so exceeding it is reported as an advisory flag, never as a
    failure.
    """
    failures: list[str] = []
    g = d.graph
    bip = isinstance(g, BipartiteGraph)

    try:
        if bip:
            BipartiteGraph.make(g.black, g.white, g.edges)
        else:
            Graph.make(g.vertices, g.edges)
    except DrawingError as exc:
        failures.append(str(exc))

    seen: dict[Edge, int] = {}
    for e, f in d.crossings:
        for edge in (e, f):
            seen[edge] = seen.get(edge, 0) + 1
            if edge not in g.edges:
                failures.append(f"path/edge mismatch: crossing names unknown edge {edge}")
        if len({*e, *f}) != 4:
            failures.append(f"adjacent crossing pair: {e} x {f}")
    doubly = sorted(e for e, k in seen.items() if k > 1)
    for edge in doubly:
        failures.append(f"doubly-crossed edge: {edge}")

    m = d.planified
    true_vertices = set(g.vertices)
    map_vertices = set(m.rotations)
    false_set = set(d.false_vertices)
    if not true_vertices <= map_vertices:
        failures.append("path/edge mismatch: graph vertex missing from planified map")
    if map_vertices - true_vertices != false_set or false_set & true_vertices:
        failures.append("path/edge mismatch: false vertex set does not match planified map")
    if sorted(d.false_vertices.values()) != sorted(d.crossings) or \
            len(d.false_vertices) != len(d.crossings):
        failures.append("path/edge mismatch: false vertices do not enumerate crossings")

    for w in sorted(false_set & map_vertices):
        if m.degree(w) != 4:
            failures.append(f"false vertex degree != 4: vertex {w}")

    # Edge paths partition the map edges: one per uncrossed edge, two per
    # crossed edge through its false vertex.
    crossed = {e for pair in d.crossings for e in pair}
    used: dict[int, Edge] = {}
    path_ok = set(d.edge_paths) == set(g.edges)
    if not path_ok:
        failures.append("path/edge mismatch: edge_paths keys differ from graph edges")
    for e in sorted(d.edge_paths):
        path = d.edge_paths[e]
        if any(me not in m.edge_darts for me in path):
            failures.append(f"path/edge mismatch: unknown map edge in path of {e}")
            continue
        for me in path:
            if me in used:
                failures.append(f"path/edge mismatch: map edge {me} reused")
            used[me] = e
        if len(path) == 1:
            if set(m.edge_endpoints(path[0])) != set(e):
                failures.append(f"path/edge mismatch: wrong endpoints for {e}")
            if e in crossed:
                failures.append(f"path/edge mismatch: crossed edge {e} has a direct path")
        elif len(path) == 2:
            ends0, ends1 = map(set, (m.edge_endpoints(path[0]), m.edge_endpoints(path[1])))
            middle = ends0 & ends1
            if len(middle) != 1 or (ends0 | ends1) - middle != set(e):
                failures.append(f"path/edge mismatch: segments of {e} do not chain")
            else:
                w = next(iter(middle))
                if w not in d.false_vertices or e not in d.false_vertices.get(w, ()):
                    failures.append(
                        f"path/edge mismatch: edge {e} routed through foreign vertex {w}")
        else:
            failures.append(f"path/edge mismatch: path of {e} has length {len(path)}")
    if len(used) != len(m.edge_darts):
        failures.append("path/edge mismatch: planified map has unused edges")

    for w in sorted(false_set & map_vertices):
        if m.degree(w) != 4:
            continue
        owners = [used.get(m.dart_edge[dart]) for dart in m.rotations[w]]
        if None in owners or owners[0] != owners[2] or owners[1] != owners[3] \
                or owners[0] == owners[1]:
            failures.append(f"non-alternating rotation at false vertex {w}")

    euler = pm.euler_check(m)
    if not euler.planar:
        failures.append("non-planar planified map")

    for walk in pm.trace_faces(m):
        verts = [m.dart_vertex[dart] for dart in walk]
        if any(v in false_set for v in verts):
            if len(walk) < 3:
                failures.append("face of size < 3 at a false vertex")
            for a, b in zip(verts, verts[1:] + verts[:1]):
                if a in false_set and b in false_set:
                    failures.append(f"consecutive false vertices {a},{b} on a face")
                    break

    x = d.x if bip else None
    ceiling = crossing_ceiling(x) if bip and x is not None and x >= 2 else None
    return ValidationReport(
        passed=not failures,
        failures=tuple(dict.fromkeys(failures)),
        x=x,
        y=d.y if bip else None,
        vertices=d.vertex_count,
        edges=d.edge_count,
        crossings=len(d.crossings),
        crossing_ceiling=ceiling,
        exceeds_minimal_bound=(len(d.crossings) > ceiling) if ceiling is not None else None,
    )


def assemble_drawing(graph: BipartiteGraph | Graph,
                     crossings: Iterable[Crossing],
                     planified: PlaneMap,
                     edge_paths: Mapping[Edge, tuple[int, ...]],
                     false_vertices: Mapping[int, Crossing]) -> OnePlanarDrawing:
    """Construct a drawing and certify it, raising on the first failure."""
    d = OnePlanarDrawing(
        graph=graph,
        crossings=frozenset(crossing_key(*c) for c in crossings),
        planified=planified,
        edge_paths={edge_key(*e): tuple(p) for e, p in edge_paths.items()},
        false_vertices=dict(false_vertices),
    )
    report = validate(d)
    if not report.passed:
        raise DrawingError(report.failures[0])
    return d


def crossing_count(d: OnePlanarDrawing) -> int:
    return len(d.crossings)


def recover_graph(d: OnePlanarDrawing) -> BipartiteGraph | Graph:
    """The abstract graph of the drawing (round-trip identity)."""
    return d.graph


def black_extension(d: OnePlanarDrawing) -> PlaneMap:
    """Join the two black endpoints at every crossing by a new uncrossed edge.

    For each false vertex, one new black-black edge is drawn alongside the
    two crossing-edge segments that lead to black vertices, inside the face
    spanned by the corner between those segments.  The result is a plane
    multigraph with exactly one extra edge per crossing.
    """
    if not isinstance(d.graph, BipartiteGraph):
        raise DrawingError("black extension needs a bipartite drawing")
    black = d.graph.black
    m = d.planified
    for w in sorted(d.false_vertices):
        rot = m.rotations[w]
        spoke_to = {dart: (set(m.edge_endpoints(m.dart_edge[dart])) - {w}).pop()
                    for dart in rot}
        black_darts = [dart for dart in rot if spoke_to[dart] in black]
        if len(black_darts) != 2:
            raise DrawingError(f"false vertex {w} lacks two black spokes")
        t_p, t_q = black_darts
        if m._successor[t_p] != t_q:
            t_p, t_q = t_q, t_p
        if m._successor[t_p] != t_q:
            raise DrawingError(f"black spokes not adjacent at false vertex {w}")
        p, q = spoke_to[t_p], spoke_to[t_q]
        dart_p = m.opposite[t_p]
        dart_q = m.opposite[t_q]
        pos_p = m.rotations[p].index(dart_p)          # just before the segment
        pos_q = m.rotations[q].index(dart_q) + 1      # just after the segment
        m = pm.insert_edge(m, p, pos_p, q, pos_q)
    if len(m.edge_darts) != len(d.planified.edge_darts) + len(d.crossings):
        raise DrawingError("black extension produced a wrong edge count")
    if not pm.euler_check(m).planar:
        raise DrawingError("black extension broke planarity")
    return m


def _first_anchor_pair(d: OnePlanarDrawing, attach_class: str | None,
                       target_face: int | None) -> tuple[int, int]:
    """First two distinct same-class true vertices on the first eligible face."""
    g = d.graph
    if isinstance(g, BipartiteGraph):
        classes = {v: "black" for v in g.black}
        classes.update({v: "white" for v in g.white})
    else:
        raise DrawingError("degree-2 augmentation needs a bipartite drawing")
    faces = pm.trace_faces(d.planified)
    indices = [target_face] if target_face is not None else range(len(faces))
    for idx in indices:
        walk = faces[idx]
        corners = [d.planified.dart_vertex[dart] for dart in walk]
        for j in range(len(corners)):
            for i in range(j):
                a, b = corners[i], corners[j]
                if a == b or a not in classes or b not in classes:
                    continue
                if classes[a] != classes[b]:
                    continue
                if attach_class is not None and classes[a] != attach_class:
                    continue
                return a, b
    raise DrawingError("no eligible face for degree-2 augmentation")


def augment_degree2(d: OnePlanarDrawing, count: int,
                    attach_class: str | None = None,
                    target_face: int | None = None) -> OnePlanarDrawing:
    """Insert ``count`` degree-2 vertices joined to one same-class anchor pair.

    The anchors are the first two same-class true vertices on the first
    eligible face in face-trace order (or on ``target_face``); every inserted
    vertex joins the same pair without crossings and lands in the opposite
    class.  Adds ``count`` vertices and ``2 * count`` edges.
    """
    if count < 0:
        raise DrawingError("negative augmentation count")
    if count == 0:
        return d
    g = d.graph
    v1, v2 = _first_anchor_pair(d, attach_class, target_face)
    new_class_white = v1 in g.black

    m = d.planified
    edge_paths = dict(d.edge_paths)
    black, white = set(g.black), set(g.white)
    edges = set(g.edges)
    for _ in range(count):
        faces = pm.trace_faces(m)
        face_idx = None
        for idx, walk in enumerate(faces):
            corners = [m.dart_vertex[dart] for dart in walk]
            if v1 in corners and v2 in corners:
                face_idx = idx
                break
        if face_idx is None:
            raise DrawingError("anchor pair lost from every face")
        walk = faces[face_idx]
        corners = [m.dart_vertex[dart] for dart in walk]
        first = corners.index(v1)
        anchors = [v1, v2] if v2 in corners[first + 1:] else [v2, v1]
        base_edge = m.max_edge() + 1
        m, new_vertex = pm.insert_vertex_in_face(m, face_idx, anchors)
        (white if new_class_white else black).add(new_vertex)
        for offset, anchor in enumerate(anchors):
            e = edge_key(new_vertex, anchor)
            edges.add(e)
            edge_paths[e] = (base_edge + offset,)

    new_graph = BipartiteGraph.make(black, white, edges)
    return assemble_drawing(new_graph, d.crossings, m, edge_paths, d.false_vertices)


def remove_graph_edge(d: OnePlanarDrawing, u: int, v: int) -> OnePlanarDrawing:
    """Delete one graph edge; a crossed partner edge is healed to uncrossed."""
    e = edge_key(u, v)
    if e not in d.graph.edges:
        raise DrawingError(f"missing element: edge {e}")
    m = d.planified
    edge_paths = dict(d.edge_paths)
    crossings = set(d.crossings)
    false_vertices = dict(d.false_vertices)
    path = edge_paths.pop(e)
    for me in path:
        m = pm.delete_edge(m, me)
    hit = [c for c in crossings if e in c]
    if hit:
        (c,) = hit
        partner = c[0] if c[1] == e else c[1]
        w = next(wv for wv, cc in false_vertices.items() if cc == c)
        seg1, seg2 = edge_paths[partner]
        m = pm.smooth_degree2(m, w)
        edge_paths[partner] = (min(seg1, seg2),)
        crossings.remove(c)
        del false_vertices[w]
    g = d.graph
    edges = g.edges - {e}
    if isinstance(g, BipartiteGraph):
        new_graph: BipartiteGraph | Graph = BipartiteGraph(g.black, g.white, edges)
    else:
        new_graph = Graph(g.vertices, edges)
    return assemble_drawing(new_graph, crossings, m, edge_paths, false_vertices)


def remove_graph_vertex(d: OnePlanarDrawing, v: int) -> OnePlanarDrawing:
    """Delete a vertex with all incident edges, healing crossings en route."""
    if v not in d.graph.vertices:
        raise DrawingError(f"missing element: vertex {v}")
    for e in sorted(e for e in d.graph.edges if v in e):
        d = remove_graph_edge(d, *e)
    m = pm.delete_vertex(d.planified, v)
    g = d.graph
    if isinstance(g, BipartiteGraph):
        new_graph: BipartiteGraph | Graph = BipartiteGraph(
            g.black - {v}, g.white - {v}, g.edges)
    else:
        new_graph = Graph(g.vertices - {v}, g.edges)
    return assemble_drawing(new_graph, d.crossings, m, d.edge_paths, d.false_vertices)
