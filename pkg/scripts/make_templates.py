#!/usr/bin/env python3
"""Regenerate the small balanced templates shipped under onecross/data.

The size-2 case is the plain 4-cycle and the size-3 case is the complete
(3, 3) graph drawn with a single crossing; both are produced from verified
coordinate sketches and re-certified on load.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from onecross.constructions import _drawing_from_sketch, _ring_sketch  # noqa: E402
from onecross.formats import drawing_to_document, dumps_document  # noqa: E402
from onecross.sketch import compile_sketch  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "onecross" / "data"


def balanced2():
    sk, classes = _ring_sketch(1)
    return _drawing_from_sketch(sk, classes), {"generator": "balanced", "params": {"x": 2}}


def balanced3():
    points = {
        "b1": (0.0, 0.0), "b2": (1.0, 0.0), "b3": (0.5, 1.0),
        "w_in": (0.5, 0.33), "w_bot": (0.55, -0.5), "w_top": (0.5, 1.8),
    }
    classes = {n: ("black" if n.startswith("b") else "white") for n in points}
    edges = [(b, w) for b in ("b1", "b2", "b3") for w in ("w_in", "w_bot", "w_top")]
    crossings = [(("w_bot", "b3"), ("w_in", "b2"))]
    sk = compile_sketch(points, edges, crossings)
    return _drawing_from_sketch(sk, classes), {"generator": "balanced", "params": {"x": 3}}


def main() -> None:
    DATA.mkdir(exist_ok=True)
    for name, build in (("balanced2", balanced2), ("balanced3", balanced3)):
        drawing, provenance = build()
        doc = drawing_to_document(drawing, provenance)
        (DATA / f"{name}.json").write_text(dumps_document(doc))
        print(f"wrote {name}.json: {drawing.vertex_count} vertices, "
              f"{drawing.edge_count} edges, {len(drawing.crossings)} crossings")


if __name__ == "__main__":
    main()
