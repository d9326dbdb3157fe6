"""Combinatorial maps: rotation systems with face tracing and Euler certification.

A map is a set of darts (edge ends).  Two structures define the embedding:
the *rotation*, a cyclic sequence of darts around each vertex in a globally
consistent orientation, and the *opposite* involution pairing the two darts
of every edge.  Faces are the orbits of the next-dart permutation

    phi(d) = rotation-successor of opposite(d)

and Euler's formula applied per connected component (V - E + F = 2, where F
counts face orbits of the component; a component without darts counts one
face) certifies that the rotation system describes a plane embedding.

Maps are immutable values; every mutating operation returns a new map.  They
may contain parallel edges but never loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence


class MapError(ValueError):
    """Raised when map data violates a structural invariant."""


@dataclass(frozen=True)
class Dart:
    """One end of an edge: its id, owning vertex, and owning edge."""

    id: int
    vertex: int
    edge: int


@dataclass(frozen=True)
class EulerReport:
    """Outcome of an Euler-formula planarity check."""

    planar: bool
    vertices: int
    edges: int
    faces: int
    components: int


@dataclass(frozen=True)
class PlaneMap:
    """An embedded multigraph given by vertex rotations and a dart pairing.

    ``rotations`` maps each vertex id to the cyclic tuple of its darts,
    ``opposite`` pairs the two darts of each edge, and ``dart_edge`` names the
    edge owning each dart.  Instances should be built via :func:`build_map`
    or the operations in this module, which validate all invariants.
    """

    rotations: dict[int, tuple[int, ...]]
    opposite: dict[int, int]
    dart_edge: dict[int, int]

    # -- derived views -----------------------------------------------------

    @cached_property
    def dart_vertex(self) -> dict[int, int]:
        owner: dict[int, int] = {}
        for v, rot in self.rotations.items():
            for d in rot:
                owner[d] = v
        return owner

    @cached_property
    def edge_darts(self) -> dict[int, tuple[int, int]]:
        pairs: dict[int, tuple[int, int]] = {}
        for d, e in self.dart_edge.items():
            o = self.opposite[d]
            if d < o:
                pairs[e] = (d, o)
        return pairs

    @cached_property
    def _successor(self) -> dict[int, int]:
        succ: dict[int, int] = {}
        for rot in self.rotations.values():
            n = len(rot)
            for i, d in enumerate(rot):
                succ[d] = rot[(i + 1) % n]
        return succ

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rotations))

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_darts))

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        d, o = self.edge_darts[edge]
        return self.dart_vertex[d], self.dart_vertex[o]

    def degree(self, vertex: int) -> int:
        return len(self.rotations[vertex])

    def next_dart(self, dart: int) -> int:
        """The face-walk successor: rotation-successor of the opposite dart."""
        return self._successor[self.opposite[dart]]

    def dart(self, dart_id: int) -> Dart:
        return Dart(dart_id, self.dart_vertex[dart_id], self.dart_edge[dart_id])

    def max_dart(self) -> int:
        return max(self.dart_edge, default=-1)

    def max_edge(self) -> int:
        return max(self.edge_darts, default=-1)

    def max_vertex(self) -> int:
        return max(self.rotations, default=-1)


def _check_structure(rotations: Mapping[int, Sequence[int]],
                     opposite: Mapping[int, int]) -> None:
    seen: set[int] = set()
    owner: dict[int, int] = {}
    for v, rot in rotations.items():
        for d in rot:
            if d in seen:
                raise MapError(f"duplicate dart {d} (dart in two rotations)")
            seen.add(d)
            owner[d] = v
    if set(opposite) != seen:
        missing = seen.symmetric_difference(opposite)
        raise MapError(f"unpaired dart: pairing domain mismatch {sorted(missing)[:4]}")
    for d, o in opposite.items():
        if o == d or o not in owner or opposite.get(o) != d:
            raise MapError(f"unpaired dart {d}: opposite is not a fixed-point-free involution")
        if owner[o] == owner[d]:
            raise MapError(f"loop edge at vertex {owner[d]} (darts {d},{o})")


def build_map(vertex_rotations: Mapping[int, Sequence[int]],
              opposite: Mapping[int, int]) -> PlaneMap:
    """Build a structurally valid map from rotations and a dart pairing.

    Edge ids are assigned densely in increasing order of each edge's smaller
    dart id, so construction is reproducible.  Raises :class:`MapError` on a
    duplicate dart, an unpaired dart, a dart in two rotations, or a loop.
    """
    _check_structure(vertex_rotations, opposite)
    dart_edge: dict[int, int] = {}
    eid = 0
    for d in sorted(opposite):
        if d < opposite[d]:
            dart_edge[d] = dart_edge[opposite[d]] = eid
            eid += 1
    return PlaneMap(
        rotations={v: tuple(rot) for v, rot in vertex_rotations.items()},
        opposite=dict(opposite),
        dart_edge=dart_edge,
    )


def _make(rotations: Mapping[int, Sequence[int]], opposite: Mapping[int, int],
          dart_edge: Mapping[int, int]) -> PlaneMap:
    """Internal constructor preserving explicit edge ids; still validates."""
    _check_structure(rotations, opposite)
    return PlaneMap(
        rotations={v: tuple(rot) for v, rot in rotations.items()},
        opposite=dict(opposite),
        dart_edge=dict(dart_edge),
    )


def trace_faces(m: PlaneMap) -> tuple[tuple[int, ...], ...]:
    """Decompose the darts into face walks.

    Every dart appears in exactly one walk; walks follow
    ``next = rotation-successor of opposite(dart)``.  Faces are listed in
    increasing order of their smallest dart, each walk starting there.
    """
    unseen = set(m.dart_edge)
    faces: list[tuple[int, ...]] = []
    for start in sorted(m.dart_edge):
        if start not in unseen:
            continue
        walk = [start]
        unseen.discard(start)
        d = m.next_dart(start)
        while d != start:
            walk.append(d)
            unseen.discard(d)
            d = m.next_dart(d)
        faces.append(tuple(walk))
    return tuple(faces)


def _components(m: PlaneMap) -> dict[int, int]:
    """Union-find over vertices joined by edges; returns vertex -> root."""
    parent = {v: v for v in m.rotations}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for d, o in m.opposite.items():
        if d < o:
            a, b = find(m.dart_vertex[d]), find(m.dart_vertex[o])
            if a != b:
                parent[a] = b
    return {v: find(v) for v in m.rotations}


def euler_check(m: PlaneMap) -> EulerReport:
    """Certify planarity of the embedding via Euler's formula.

    The verdict is ``planar`` iff every connected component satisfies
    V - E + F = 2, where F counts the face orbits whose darts lie in the
    component (a dartless component contributes its single surrounding face).
    """
    roots = _components(m)
    comp_v: dict[int, int] = {}
    comp_e: dict[int, int] = {}
    comp_f: dict[int, int] = {}
    for v, r in roots.items():
        comp_v[r] = comp_v.get(r, 0) + 1
    for d, o in m.opposite.items():
        if d < o:
            r = roots[m.dart_vertex[d]]
            comp_e[r] = comp_e.get(r, 0) + 1
    faces = trace_faces(m)
    for walk in faces:
        r = roots[m.dart_vertex[walk[0]]]
        comp_f[r] = comp_f.get(r, 0) + 1
    planar = True
    total_faces = 0
    for r, nv in comp_v.items():
        ne = comp_e.get(r, 0)
        nf = comp_f.get(r, 0) if ne else 1
        total_faces += nf
        if nv - ne + nf != 2:
            planar = False
    return EulerReport(
        planar=planar,
        vertices=len(m.rotations),
        edges=len(m.edge_darts),
        faces=total_faces,
        components=len(comp_v),
    )


def _resolve_attachments(corners: Sequence[int],
                         attachments: Sequence[int]) -> list[int]:
    """Match attachment vertices to walk positions, in cyclic walk order.

    Tries each occurrence of the first attachment as anchor, then greedily
    takes the earliest later occurrence of each subsequent vertex.
    """
    n = len(corners)
    for vertex in attachments:
        if vertex not in corners:
            raise MapError(f"attachment not on face: vertex {vertex}")
    anchors = [i for i, v in enumerate(corners) if v == attachments[0]]
    for a in anchors:
        positions = [a]
        ok = True
        for want in attachments[1:]:
            nxt = None
            for off in range(positions[-1] - a + 1, n):
                i = (a + off) % n
                if corners[i] == want:
                    nxt = i
                    break
            if nxt is None:
                ok = False
                break
            positions.append(nxt)
        if ok:
            return positions
    raise MapError("order not realizable on the walk")


def insert_vertex_in_face(m: PlaneMap, face: int,
                          attachments: Sequence[int]) -> tuple[PlaneMap, int]:
    """Insert a new vertex inside a face, joined to boundary occurrences.

    ``face`` indexes the walk list of :func:`trace_faces`; ``attachments``
    names boundary vertices in cyclic walk order.  All new edges subdivide
    the chosen face, so a planar map stays planar.  Returns the new map and
    the id of the inserted vertex.
    """
    if not attachments:
        raise MapError("attachment not on face: empty attachment list")
    faces = trace_faces(m)
    if not 0 <= face < len(faces):
        raise MapError(f"no such face index {face}")
    walk = faces[face]
    corners = [m.dart_vertex[d] for d in walk]
    positions = _resolve_attachments(corners, attachments)

    new_vertex = m.max_vertex() + 1
    base_dart = m.max_dart() + 1
    base_edge = m.max_edge() + 1
    rotations = {v: list(rot) for v, rot in m.rotations.items()}
    opposite = dict(m.opposite)
    dart_edge = dict(m.dart_edge)

    hub_darts: list[int] = []
    inserts: list[tuple[int, int, int]] = []  # (vertex, anchor dart, new dart)
    for j, pos in enumerate(positions):
        v = corners[pos]
        d_in = walk[pos]
        prev = walk[pos - 1]
        anchor = m.opposite[prev]  # rotation predecessor of d_in on this face
        spoke = base_dart + 2 * j       # dart at v
        hub = base_dart + 2 * j + 1     # dart at the new vertex
        opposite[spoke] = hub
        opposite[hub] = spoke
        dart_edge[spoke] = dart_edge[hub] = base_edge + j
        hub_darts.append(hub)
        inserts.append((v, anchor, spoke))
        if m._successor[anchor] != d_in:  # sanity: corner wedge is intact
            raise MapError("face walk inconsistent with rotations")

    for v, anchor, spoke in inserts:
        rot = rotations[v]
        rot.insert(rot.index(anchor) + 1, spoke)
    # Reversed order closes each sub-face between consecutive attachments.
    rotations[new_vertex] = list(reversed(hub_darts))
    return _make(rotations, opposite, dart_edge), new_vertex


def delete_edge(m: PlaneMap, edge: int) -> PlaneMap:
    """Remove an edge, splicing both rotations; never increases genus."""
    if edge not in m.edge_darts:
        raise MapError(f"missing element: edge {edge}")
    d, o = m.edge_darts[edge]
    rotations = {v: [x for x in rot if x not in (d, o)]
                 for v, rot in m.rotations.items()}
    opposite = {k: v for k, v in m.opposite.items() if k not in (d, o)}
    dart_edge = {k: v for k, v in m.dart_edge.items() if k not in (d, o)}
    return _make(rotations, opposite, dart_edge)


def delete_vertex(m: PlaneMap, vertex: int) -> PlaneMap:
    """Remove a vertex together with all incident edges."""
    if vertex not in m.rotations:
        raise MapError(f"missing element: vertex {vertex}")
    doomed_edges = {m.dart_edge[d] for d in m.rotations[vertex]}
    doomed_darts = {d for e in doomed_edges for d in m.edge_darts[e]}
    rotations = {v: [x for x in rot if x not in doomed_darts]
                 for v, rot in m.rotations.items() if v != vertex}
    opposite = {k: v for k, v in m.opposite.items() if k not in doomed_darts}
    dart_edge = {k: v for k, v in m.dart_edge.items() if k not in doomed_darts}
    return _make(rotations, opposite, dart_edge)


def insert_edge(m: PlaneMap, u: int, pos_u: int, v: int, pos_v: int,
                dart_ids: tuple[int, int] | None = None,
                edge_id: int | None = None) -> PlaneMap:
    """Insert an edge with darts at exact rotation positions.

    ``pos_u``/``pos_v`` are indices into the stored rotation tuples where the
    new darts are placed.  Supplying the old ids makes deletion followed by
    re-insertion reproduce the original map exactly.
    """
    if u not in m.rotations or v not in m.rotations:
        raise MapError("missing element: endpoint vertex")
    if u == v:
        raise MapError("loop edge rejected")
    du, dv = dart_ids if dart_ids else (m.max_dart() + 1, m.max_dart() + 2)
    if du in m.dart_edge or dv in m.dart_edge or du == dv:
        raise MapError(f"duplicate dart {du} or {dv}")
    eid = edge_id if edge_id is not None else m.max_edge() + 1
    if eid in m.edge_darts:
        raise MapError(f"duplicate edge id {eid}")
    rotations = {w: list(rot) for w, rot in m.rotations.items()}
    if not (0 <= pos_u <= len(rotations[u]) and 0 <= pos_v <= len(rotations[v])):
        raise MapError("rotation position out of range")
    rotations[u].insert(pos_u, du)
    rotations[v].insert(pos_v, dv)
    opposite = dict(m.opposite)
    opposite[du], opposite[dv] = dv, du
    dart_edge = dict(m.dart_edge)
    dart_edge[du] = dart_edge[dv] = eid
    return _make(rotations, opposite, dart_edge)


def smooth_degree2(m: PlaneMap, vertex: int) -> PlaneMap:
    """Replace a degree-2 vertex by a single edge joining its neighbours.

    The surviving darts keep their ids and rotation positions; the merged
    edge takes the smaller of the two old edge ids.
    """
    if vertex not in m.rotations:
        raise MapError(f"missing element: vertex {vertex}")
    rot = m.rotations[vertex]
    if len(rot) != 2:
        raise MapError(f"vertex {vertex} does not have degree 2")
    d1, d2 = rot
    a, b = m.opposite[d1], m.opposite[d2]  # darts at the two neighbours
    if m.dart_vertex[a] == m.dart_vertex[b]:
        raise MapError("smoothing would create a loop")
    eid = min(m.dart_edge[d1], m.dart_edge[d2])
    rotations = {v: list(r) for v, r in m.rotations.items() if v != vertex}
    opposite = {k: v for k, v in m.opposite.items() if k not in (d1, d2, a, b)}
    opposite[a], opposite[b] = b, a
    dart_edge = {k: v for k, v in m.dart_edge.items() if k not in (d1, d2)}
    dart_edge[a] = dart_edge[b] = eid
    return _make(rotations, opposite, dart_edge)


def map_from_rotation_lists(neighbour_orders: Mapping[int, Sequence[tuple[int, int]]]) -> PlaneMap:
    """Build a map from per-vertex cyclic lists of (neighbour, edge id) pairs.

    Every edge id must occur exactly once at each endpoint.  Convenience
    constructor used by the planarity witness and the serialization layer.
    """
    darts_at: dict[tuple[int, int], list[int]] = {}
    rotations: dict[int, list[int]] = {}
    nxt = 0
    for v in sorted(neighbour_orders):
        rot = []
        for (_, e) in neighbour_orders[v]:
            darts_at.setdefault((e, v), []).append(nxt)
            rot.append(nxt)
            nxt += 1
        rotations[v] = rot
    opposite: dict[int, int] = {}
    by_edge: dict[int, list[int]] = {}
    for (e, _), ds in sorted(darts_at.items()):
        by_edge.setdefault(e, []).extend(ds)
    for e, ds in by_edge.items():
        if len(ds) != 2:
            raise MapError(f"edge {e} does not have exactly two darts")
        opposite[ds[0]], opposite[ds[1]] = ds[1], ds[0]
    return build_map(rotations, opposite)
