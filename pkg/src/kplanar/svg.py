"""SVG rendering of a k-plane decomposition.

Each plane gets one panel. Within a panel, edges are grouped into blocks
closed under shared vertices and surviving crossings; each block keeps its
original geometry and is translated as a rigid unit onto a shelf-packed
grid with 10% padding. Blocks are chosen so that the only crossings the
panels can show are exactly the surviving ones, which ``svg_recount``
verifies by re-running the exact crossing predicate on the emitted
integer coordinates.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .decompose import PlaneAssignment
from .geometry import segments_properly_cross
from .graph import Drawing

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#bcbd22", "#e377c2", "#7f7f7f")


def render_decomposition_svg(drawing: Drawing, assignment: PlaneAssignment) -> str:
    if drawing.coords is None:
        raise ValueError("SVG export needs a geometric drawing")
    coords = drawing.coords
    graph = drawing.graph

    # Panel layout: per plane, blocks with integer offsets; identity layout
    # for a one-plane decomposition with a single block.
    lines: list[tuple[int, int, tuple, tuple]] = []   # (plane, edge, a, b)
    dots: list[tuple[int, int, tuple]] = []           # (plane, vertex, point)
    x_origin = 0
    panel_rects = []
    for plane in range(assignment.k):
        edges = [e for e in range(graph.m) if assignment.planes[e] == plane]
        blocks = _blocks(drawing, assignment, edges)
        identity = assignment.k == 1 and len(blocks) == 1
        placed = _pack_blocks(drawing, blocks, identity=identity)
        min_x = min_y = max_x = max_y = None
        for block, (dx, dy) in placed:
            seen: set[int] = set()
            for e in block:
                u, v = graph.edges[e]
                a = (coords[u][0] + dx + x_origin, coords[u][1] + dy)
                b = (coords[v][0] + dx + x_origin, coords[v][1] + dy)
                lines.append((plane, e, a, b))
                seen.update((u, v))
                for x, y in (a, b):
                    min_x = x if min_x is None else min(min_x, x)
                    min_y = y if min_y is None else min(min_y, y)
                    max_x = x if max_x is None else max(max_x, x)
                    max_y = y if max_y is None else max(max_y, y)
            for u in sorted(seen):
                dots.append((plane, u, (coords[u][0] + dx + x_origin, coords[u][1] + dy)))
        if min_x is None:
            min_x = x_origin
            min_y = 0
            max_x = x_origin + 100
            max_y = 100
        panel_rects.append((plane, min_x, min_y, max_x, max_y))
        x_origin = max_x + max(40, (max_x - min_x) // 10 + 1)

    all_x = [r[1] for r in panel_rects] + [r[3] for r in panel_rects]
    all_y = [r[2] for r in panel_rects] + [r[4] for r in panel_rects]
    lo_x, hi_x = min(all_x), max(all_x)
    lo_y, hi_y = min(all_y), max(all_y)
    span = max(hi_x - lo_x, hi_y - lo_y, 100)
    margin = max(20, span // 40)
    r = max(2, span // 400)
    stroke = max(1, span // 1200)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'viewBox="{lo_x - margin} {lo_y - margin} '
             f'{hi_x - lo_x + 2 * margin} {hi_y - lo_y + 2 * margin}">']
    for plane, x0, y0, x1, y1 in panel_rects:
        pad = margin // 2
        parts.append(f'<rect x="{x0 - pad}" y="{y0 - pad}" width="{x1 - x0 + 2 * pad}" '
                     f'height="{y1 - y0 + 2 * pad}" fill="none" stroke="#cccccc" '
                     f'stroke-width="{stroke}" data-panel="{plane}"/>')
    for plane, e, (x1, y1), (x2, y2) in lines:
        color = _PALETTE[plane % len(_PALETTE)]
        parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     f'stroke="{color}" stroke-width="{stroke}" '
                     f'data-plane="{plane}" data-edge="{e}"/>')
    for plane, u, (cx, cy) in dots:
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="#333333" '
                     f'data-plane="{plane}" data-vertex="{u}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_recount(svg_text: str) -> dict[int, dict]:
    """Re-extract crossings from an emitted SVG, per plane.

    Returns {plane: {"total": count, "load": {edge_id: count}}} computed by
    the exact predicate on the rendered integer coordinates.
    """
    root = ET.fromstring(svg_text)
    per_plane: dict[int, list[tuple[int, tuple, tuple]]] = {}
    for elem in root.iter():
        if elem.tag.endswith("line") and "data-plane" in elem.attrib:
            plane = int(elem.attrib["data-plane"])
            edge = int(elem.attrib["data-edge"])
            a = (int(elem.attrib["x1"]), int(elem.attrib["y1"]))
            b = (int(elem.attrib["x2"]), int(elem.attrib["y2"]))
            per_plane.setdefault(plane, []).append((edge, a, b))
    result: dict[int, dict] = {}
    for plane, segs in per_plane.items():
        load: dict[int, int] = {e: 0 for e, _, _ in segs}
        total = 0
        for i in range(len(segs)):
            e1, a1, b1 = segs[i]
            for j in range(i + 1, len(segs)):
                e2, a2, b2 = segs[j]
                if {a1, b1} & {a2, b2}:
                    continue
                if segments_properly_cross(a1, b1, a2, b2):
                    total += 1
                    load[e1] += 1
                    load[e2] += 1
        result[plane] = {"total": total, "load": load}
    return result


def verify_svg(drawing: Drawing, assignment: PlaneAssignment, report, svg_text: str) -> None:
    """Assert the rendered crossings equal the reported surviving ones."""
    recount = svg_recount(svg_text)
    for plane in range(assignment.k):
        data = recount.get(plane, {"total": 0, "load": {}})
        if data["total"] != report.plane_totals[plane]:
            raise AssertionError(
                f"plane {plane}: rendered {data['total']} crossings, "
                f"report says {report.plane_totals[plane]}")
        for e in range(drawing.graph.m):
            if assignment.planes[e] != plane:
                continue
            if data["load"].get(e, 0) != report.g[e]:
                raise AssertionError(
                    f"edge {e} in plane {plane}: rendered load {data['load'].get(e, 0)}, "
                    f"report says {report.g[e]}")


def _blocks(drawing: Drawing, assignment: PlaneAssignment, edges: list[int]) -> list[list[int]]:
    """Group a plane's edges into translation units.

    Edges sharing a vertex must move together; so must edges whose crossing
    survives (same type, or co-plane when the assignment has no types),
    because the report counts that crossing and translation must keep it.
    Everything else may be pulled apart.
    """
    parent = {e: e for e in edges}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    by_vertex: dict[int, int] = {}
    for e in edges:
        for v in drawing.graph.edges[e]:
            if v in by_vertex:
                union(e, by_vertex[v])
            else:
                by_vertex[v] = e
    in_plane = set(edges)
    for e, f, _ in drawing.crossings:
        if e in in_plane and f in in_plane:
            if assignment.types is None or assignment.types[e] == assignment.types[f]:
                union(e, f)
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    return [sorted(g) for g in sorted(groups.values(), key=lambda g: g[0])]


def _pack_blocks(drawing: Drawing, blocks: list[list[int]],
                 identity: bool = False) -> list[tuple[list[int], tuple[int, int]]]:
    """Shelf-pack block bounding boxes with 10% padding.

    Returns [(block_edges, (dx, dy)), ...]. With ``identity`` the single
    block keeps its original coordinates.
    """
    if identity:
        return [(block, (0, 0)) for block in blocks]
    coords = drawing.coords
    boxes = []
    for block in blocks:
        xs = [coords[v][0] for e in block for v in drawing.graph.edges[e]]
        ys = [coords[v][1] for e in block for v in drawing.graph.edges[e]]
        boxes.append((min(xs), min(ys), max(xs), max(ys)))
    order = sorted(range(len(blocks)),
                   key=lambda i: (-(boxes[i][3] - boxes[i][1]),
                                  -(boxes[i][2] - boxes[i][0]), blocks[i][0]))
    sized = []
    for i in order:
        x0, y0, x1, y1 = boxes[i]
        w, h = x1 - x0, y1 - y0
        pad = max(1, math.ceil(0.1 * max(w, h, 1)))
        sized.append((i, w + 2 * pad, h + 2 * pad, pad))
    area = sum(w * h for _, w, h, _ in sized)
    target = max(max((w for _, w, _, _ in sized), default=1), math.isqrt(max(area, 1)) + 1)

    placed: list[tuple[list[int], tuple[int, int]]] = []
    cur_x = 0
    shelf_y = 0
    shelf_h = 0
    for i, w, h, pad in sized:
        if cur_x > 0 and cur_x + w > target:
            shelf_y += shelf_h
            cur_x = 0
            shelf_h = 0
        x0, y0, _, _ = boxes[i]
        placed.append((blocks[i], (cur_x + pad - x0, shelf_y + pad - y0)))
        cur_x += w
        shelf_h = max(shelf_h, h)
    return placed
