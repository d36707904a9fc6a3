"""Exact straight-line segment geometry over integer coordinates.

All predicates are sign-of-determinant tests on Python ints, so there is
no tolerance anywhere: a pair of segments either properly crosses or it
does not, and every degenerate configuration is detected and reported
rather than perturbed away.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Point = tuple[int, int]


class DegenerateDrawingError(ValueError):
    """Input geometry violates the general-position assumptions.

    ``witnesses`` is a list of tuples, one per offending configuration:
      ("coincident-vertices", u, v)
      ("vertex-on-edge", vertex, edge_id)
      ("collinear-overlap", edge_id, edge_id)
      ("concurrent-crossing", (x, y) as floats, sorted edge ids)
    """

    def __init__(self, witnesses: list[tuple]):
        self.witnesses = witnesses
        lines = ", ".join(repr(w) for w in witnesses[:8])
        more = "" if len(witnesses) <= 8 else f" (+{len(witnesses) - 8} more)"
        super().__init__(f"degenerate drawing: {lines}{more}")


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _between_collinear(a: Point, b: Point, p: Point) -> bool:
    """Whether p lies strictly inside segment ab, given a, b, p collinear."""
    if p == a or p == b:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_properly_cross(p: Point, q: Point, r: Point, s: Point) -> bool:
    """True iff open segments pq and rs share exactly one interior point."""
    o1 = orientation(p, q, r)
    o2 = orientation(p, q, s)
    if o1 == o2 or o1 == 0 or o2 == 0:
        return False
    o3 = orientation(r, s, p)
    o4 = orientation(r, s, q)
    return o3 != o4 and o3 != 0 and o4 != 0


def _collinear_segments_overlap(p: Point, q: Point, r: Point, s: Point) -> bool:
    """Whether segments pq and rs lie on one line and share more than a point."""
    if orientation(p, q, r) != 0 or orientation(p, q, s) != 0:
        return False
    # Project on the dominant axis of pq; overlap of the 1-D intervals must
    # have positive length.
    axis = 0 if abs(q[0] - p[0]) >= abs(q[1] - p[1]) else 1
    lo1, hi1 = sorted((p[axis], q[axis]))
    lo2, hi2 = sorted((r[axis], s[axis]))
    return min(hi1, hi2) > max(lo1, lo2)


def crossing_point_key(p: Point, q: Point, r: Point, s: Point) -> tuple[int, int, int]:
    """Canonical integer key (x_num, y_num, den) of the crossing point of pq and rs.

    Only valid for properly crossing segments. Two crossings coincide iff
    their keys are equal.
    """
    dqp = (q[0] - p[0], q[1] - p[1])
    dsr = (s[0] - r[0], s[1] - r[1])
    den = dqp[0] * dsr[1] - dqp[1] * dsr[0]
    t_num = (r[0] - p[0]) * dsr[1] - (r[1] - p[1]) * dsr[0]
    x_num = p[0] * den + t_num * dqp[0]
    y_num = p[1] * den + t_num * dqp[1]
    if den < 0:
        x_num, y_num, den = -x_num, -y_num, -den
    g = gcd(gcd(abs(x_num), abs(y_num)), den)
    return (x_num // g, y_num // g, den // g)


def crossing_point(p: Point, q: Point, r: Point, s: Point) -> tuple[Fraction, Fraction]:
    x, y, d = crossing_point_key(p, q, r, s)
    return Fraction(x, d), Fraction(y, d)


def extract_crossings(coords: Sequence[Point],
                      edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """All properly crossing non-adjacent edge pairs, as (e, f) with e < f.

    Validates the general-position assumptions first and raises
    DegenerateDrawingError listing every violation found. Output is sorted
    by (min edge id, max edge id).
    """
    witnesses: list[tuple] = []

    seen: dict[Point, int] = {}
    for v, pt in enumerate(coords):
        if pt in seen:
            witnesses.append(("coincident-vertices", seen[pt], v))
        else:
            seen[pt] = v

    for eid, (u, v) in enumerate(edges):
        a, b = coords[u], coords[v]
        for w, pt in enumerate(coords):
            if w != u and w != v and orientation(a, b, pt) == 0 and _between_collinear(a, b, pt):
                witnesses.append(("vertex-on-edge", w, eid))

    m = len(edges)
    crossings: list[tuple[int, int]] = []
    points: dict[tuple[int, int, int], set[int]] = {}
    for e in range(m):
        u1, v1 = edges[e]
        p, q = coords[u1], coords[v1]
        for f in range(e + 1, m):
            u2, v2 = edges[f]
            if u1 in (u2, v2) or v1 in (u2, v2):
                # Straight adjacent edges cannot properly cross; they can
                # only overlap, which is degenerate.
                if _collinear_segments_overlap(p, q, coords[u2], coords[v2]):
                    witnesses.append(("collinear-overlap", e, f))
                continue
            r, s = coords[u2], coords[v2]
            if _collinear_segments_overlap(p, q, r, s):
                witnesses.append(("collinear-overlap", e, f))
            elif segments_properly_cross(p, q, r, s):
                crossings.append((e, f))
                points.setdefault(crossing_point_key(p, q, r, s), set()).update((e, f))

    for key, involved in points.items():
        if len(involved) > 2:
            x, y, d = key
            witnesses.append(("concurrent-crossing", (x / d, y / d), tuple(sorted(involved))))

    if witnesses:
        raise DegenerateDrawingError(witnesses)
    crossings.sort()
    return crossings


def scale_to_integers(raw: Iterable[Sequence]) -> list[Point]:
    """Rescale arbitrary rational coordinates to integers.

    Floats are read through their decimal repr, so 0.1 means 1/10. The
    common denominator is applied uniformly, which preserves the crossing
    pattern exactly.
    """
    fracs: list[tuple[Fraction, Fraction]] = []
    for pt in raw:
        if len(pt) != 2:
            raise ValueError(f"coordinate {pt!r} is not a 2-D point")
        fracs.append((_to_fraction(pt[0]), _to_fraction(pt[1])))
    lcm = 1
    for x, y in fracs:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        lcm = lcm * y.denominator // gcd(lcm, y.denominator)
    return [(int(x * lcm), int(y * lcm)) for x, y in fracs]


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"coordinate {value!r} is not a number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"coordinate {value!r} is not finite")
        return Fraction(str(value))
    if isinstance(value, Fraction):
        return value
    raise ValueError(f"coordinate {value!r} is not a number")
