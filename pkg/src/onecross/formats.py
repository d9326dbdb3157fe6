"""Serialization of drawings plus DOT and SVG exporters.

The JSON document is the single canonical interchange format; DOT and SVG
are export-only.  A document stores the abstract graph, the crossing pairs
as edge-index pairs, and the planified rotation system, where every rotation
entry ``[edge_index, half]`` names the segment of that edge pointing toward
``edges[edge_index][half]``.  Loading always re-certifies the drawing.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from . import plane_map as pm
from .drawing import (
    BipartiteGraph,
    DrawingError,
    Graph,
    OnePlanarDrawing,
    assemble_drawing,
    crossing_key,
    edge_key,
)

FORMAT_VERSION = 1


class FormatError(ValueError):
    """Raised for malformed or wrong-version documents."""


def drawing_to_document(d: OnePlanarDrawing,
                        provenance: dict[str, Any] | None = None) -> dict[str, Any]:
    """Serialize a drawing; false vertices are keyed by crossing index."""
    edges = sorted(d.graph.edges)
    eidx = {e: i for i, e in enumerate(edges)}
    crossings = sorted(tuple(sorted((eidx[e], eidx[f]))) for e, f in d.crossings)
    cidx = {c: i for i, c in enumerate(crossings)}

    m = d.planified
    false_to_cross = {w: tuple(sorted((eidx[e], eidx[f])))
                      for w, (e, f) in d.false_vertices.items()}
    seg_owner: dict[int, tuple[int, int]] = {}
    for e, path in d.edge_paths.items():
        if len(path) == 1:
            seg_owner[path[0]] = (eidx[e], -1)
        else:
            for me in path:
                ends = set(m.edge_endpoints(me))
                true_end = (ends & set(e)).pop()
                seg_owner[me] = (eidx[e], e.index(true_end))

    def rotation_entries(v: int) -> list[list[int]]:
        out = []
        for dart in m.rotations[v]:
            me = m.dart_edge[dart]
            ei, half = seg_owner[me]
            if half == -1:
                other = m.dart_vertex[m.opposite[dart]]
                half = edges[ei].index(other)
            elif v not in false_to_cross:
                # At a true endpoint the segment points back to the crossing;
                # record the end the vertex itself occupies.
                half = edges[ei].index(v)
            out.append([ei, half])
        return out

    doc: dict[str, Any] = {"format_version": FORMAT_VERSION}
    if isinstance(d.graph, BipartiteGraph):
        doc["black"] = sorted(d.graph.black)
        doc["white"] = sorted(d.graph.white)
    else:
        doc["vertices"] = sorted(d.graph.vertices)
    doc["edges"] = [list(e) for e in edges]
    doc["crossings"] = [list(c) for c in crossings]
    doc["rotations"] = {
        "true": {str(v): rotation_entries(v) for v in sorted(d.graph.vertices)},
        "false": {str(cidx[false_to_cross[w]]): rotation_entries(w)
                  for w in sorted(d.false_vertices)},
    }
    if provenance:
        doc["provenance"] = provenance
    return doc


def document_to_drawing(doc: dict[str, Any]) -> OnePlanarDrawing:
    """Rebuild and re-certify a drawing from its document."""
    try:
        if doc.get("format_version") != FORMAT_VERSION:
            raise FormatError(f"unsupported format_version {doc.get('format_version')!r}")
        if "black" in doc or "white" in doc:
            graph: BipartiteGraph | Graph = BipartiteGraph.make(
                doc["black"], doc["white"],
                [tuple(e) for e in doc["edges"]])
        else:
            graph = Graph.make(doc["vertices"], [tuple(e) for e in doc["edges"]])
        edges = [edge_key(*e) for e in doc["edges"]]
        if sorted(set(edges)) != sorted(edges):
            raise FormatError("duplicate edges in document")
        crossing_list = [tuple(c) for c in doc["crossings"]]
        crossings = [crossing_key(edges[i], edges[j]) for i, j in crossing_list]

        base = max(graph.vertices, default=-1) + 1
        false_ids = {ci: base + k for k, ci in enumerate(range(len(crossing_list)))}
        crossed_at: dict[int, int] = {}
        for k, (i, j) in enumerate(crossing_list):
            for e in (i, j):
                if e in crossed_at:
                    raise FormatError("doubly-crossed edge in document")
                crossed_at[e] = k

        # Map edges in document order: toward end 0 first for crossed edges.
        map_edges: list[tuple[int, int]] = []
        seg_id: dict[tuple[int, int], int] = {}  # (edge index, half) -> map edge
        plain_id: dict[int, int] = {}
        edge_paths: dict[tuple[int, int], tuple[int, ...]] = {}
        for ei, e in enumerate(edges):
            if ei in crossed_at:
                w = false_ids[crossed_at[ei]]
                for half in (0, 1):
                    seg_id[(ei, half)] = len(map_edges)
                    map_edges.append((e[half], w))
                edge_paths[e] = (seg_id[(ei, 0)], seg_id[(ei, 1)])
            else:
                plain_id[ei] = len(map_edges)
                map_edges.append(e)
                edge_paths[e] = (plain_id[ei],)

        def dart_for(v: int, entry: list[int]) -> int:
            ei, half = entry
            if ei in crossed_at:
                me = seg_id[(ei, half)]
            else:
                me = plain_id[ei]
            a, b = map_edges[me]
            if v == a:
                return 2 * me
            if v == b:
                return 2 * me + 1
            raise FormatError(f"rotation entry {entry} not incident to vertex {v}")

        rotations: dict[int, list[int]] = {}
        for key, entries in doc["rotations"]["true"].items():
            v = int(key)
            rotations[v] = [dart_for(v, entry) for entry in entries]
        for v in graph.vertices:
            rotations.setdefault(v, [])
        for key, entries in doc["rotations"]["false"].items():
            w = false_ids[int(key)]
            rotations[w] = [dart_for(w, entry) for entry in entries]
        opposite = {}
        dart_edge = {}
        for me in range(len(map_edges)):
            opposite[2 * me] = 2 * me + 1
            opposite[2 * me + 1] = 2 * me
            dart_edge[2 * me] = dart_edge[2 * me + 1] = me
        planified = pm._make(rotations, opposite, dart_edge)
        false_vertices = {false_ids[k]: crossings[k] for k in range(len(crossings))}
        return assemble_drawing(graph, crossings, planified, edge_paths, false_vertices)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, (FormatError, DrawingError)):
            raise
        raise FormatError(f"malformed document: {exc}") from exc


def save_drawing(d: OnePlanarDrawing, path: str | Path,
                 provenance: dict[str, Any] | None = None) -> None:
    doc = drawing_to_document(d, provenance)
    Path(path).write_text(dumps_document(doc))


def load_drawing(path: str | Path) -> OnePlanarDrawing:
    return document_to_drawing(json.loads(Path(path).read_text()))


def dumps_document(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


# --------------------------------------------------------------------------
# Exporters
# --------------------------------------------------------------------------


def export_dot(d: OnePlanarDrawing) -> str:
    """The planified graph in DOT, with classes and false vertices styled."""
    g = d.graph
    black = g.black if isinstance(g, BipartiteGraph) else frozenset()
    lines = ["graph drawing {", "  node [shape=circle];"]
    for v in sorted(d.graph.vertices):
        fill = "black" if v in black else "white"
        color = ' style=filled fillcolor=black fontcolor=white' if v in black else ""
        lines.append(f'  v{v} [label="{v}" class="{fill}"{color}];')
    for w in sorted(d.false_vertices):
        lines.append(f'  v{w} [shape=point width=0.06 class="false"];')
    m = d.planified
    for me in sorted(m.edge_darts):
        a, b = sorted(m.edge_endpoints(me))
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tutte_positions(m: pm.PlaneMap) -> dict[int, tuple[float, float]]:
    """Barycentric layout per component; the largest face becomes the hull."""
    pos: dict[int, tuple[float, float]] = {}
    remaining = set(m.rotations)
    offset = 0.0
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            v = stack.pop()
            for dart in m.rotations[v]:
                w = m.dart_vertex[m.opposite[dart]]
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        comp_faces = [walk for walk in pm.trace_faces(m)
                      if m.dart_vertex[walk[0]] in comp]
        if not comp_faces:
            for i, v in enumerate(sorted(comp)):
                pos[v] = (offset + 30.0 * i, 0.0)
            offset += 30.0 * len(comp) + 60.0
            remaining -= comp
            continue
        outer = max(comp_faces, key=len)
        ring = []
        for dart in outer:
            v = m.dart_vertex[dart]
            if v not in ring:
                ring.append(v)
        radius = 100.0
        fixed: dict[int, tuple[float, float]] = {}
        for i, v in enumerate(ring):
            a = 2 * np.pi * i / len(ring)
            fixed[v] = (offset + radius * np.cos(a), radius * np.sin(a))
        interior = sorted(comp - set(fixed))
        if interior:
            index = {v: i for i, v in enumerate(interior)}
            a_mat = np.zeros((len(interior), len(interior)))
            b_vec = np.zeros((len(interior), 2))
            for v in interior:
                i = index[v]
                nbrs = [m.dart_vertex[m.opposite[dart]] for dart in m.rotations[v]]
                a_mat[i, i] = max(len(nbrs), 1)
                for w in nbrs:
                    if w in index:
                        a_mat[i, index[w]] -= 1.0
                    else:
                        b_vec[i] += fixed[w]
            sol = np.linalg.solve(a_mat, b_vec)
            for v in interior:
                pos[v] = tuple(sol[index[v]])
        pos.update(fixed)
        offset += 2 * radius + 60.0
        remaining -= comp
    return pos


def export_svg(d: OnePlanarDrawing) -> str:
    """A plane picture of the drawing; crossed edges stay visually continuous.

    Coordinates come from a barycentric layout of the planified map with its
    largest face pinned as the outer polygon.  The layout is presentation
    only and carries no certification weight.
    """
    m = d.planified
    pos = _tutte_positions(m)
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    pad = 20.0
    minx, miny = min(xs) - pad, min(ys) - pad
    width = max(xs) - min(xs) + 2 * pad
    height = max(ys) - min(ys) + 2 * pad

    def pt(v: int) -> str:
        x, y = pos[v]
        return f"{x - minx:.2f},{y - miny:.2f}"

    g = d.graph
    black = g.black if isinstance(g, BipartiteGraph) else frozenset()
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
    ]
    for e in sorted(d.graph.edges):
        path = d.edge_paths[e]
        if len(path) == 1:
            through = [e[0], e[1]]
        else:
            ends0 = set(m.edge_endpoints(path[0]))
            w = (ends0 - set(e)).pop()
            through = [e[0], w, e[1]]
        points = " ".join(pt(v) for v in through)
        cls = "crossed" if len(through) == 3 else "plain"
        lines.append(f'  <polyline class="edge {cls}" points="{points}" '
                     'fill="none" stroke="#333" stroke-width="1.2"/>')
    for v in sorted(d.graph.vertices):
        x, y = pos[v]
        fill = "#000" if v in black else "#fff"
        lines.append(f'  <circle class="vertex" cx="{x - minx:.2f}" cy="{y - miny:.2f}" '
                     f'r="4" fill="{fill}" stroke="#000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
