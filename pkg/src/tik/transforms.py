"""Constructive transformations between representation classes; each one
preserves the intersection graph exactly.

* circular-arc -> balanced 2-interval (cut the circle, split uncut arcs
  in half, pad the cut pairs outward to equal lengths),
* proper circular-arc -> unit 2-interval (cut, re-properize the cut
  pieces, add disjoint padding intervals, then unitize the proper ground
  set),
* open integer length-x -> length-(x+1) (left-to-right sweep),
* unit -> open integer length-2n (dilate and re-solve on the grid).
"""

from __future__ import annotations

from fractions import Fraction

from .model import (
    BALANCED,
    UNIT,
    XX,
    Arc,
    CircularArcRep,
    Interval,
    Representation,
    TwoInterval,
    family_check,
    intersects,
    q,
    two_interval,
)

HALF = Fraction(1, 2)


class TransformError(ValueError):
    pass


# --- circle cutting -----------------------------------------------------------


def _cut_positions(ca: CircularArcRep, p: Fraction):
    """Unroll the circle at cut point p: through-arcs become two line
    pieces anchored at the segment ends, others become one interior
    interval.  Returns (through, whole) keyed by label."""
    c = ca.circumference
    p = q(p)
    if not (0 <= p < c):
        raise TransformError("cut point must lie in [0, circumference)")
    for v in ca.labels():
        arc = ca[v]
        if p == arc.start or p == arc.end:
            raise TransformError(
                f"cut point touches an endpoint of {v!r}; pick a generic point"
            )

    def unroll(x: Fraction) -> Fraction:
        return (x - p) % c

    through: dict[str, tuple[Interval, Interval]] = {}
    whole: dict[str, Interval] = {}
    for v in ca.labels():
        arc = ca[v]
        if arc.contains_point(p, c):
            # clockwise from start: tail [phi(start), C], head [0, phi(end)]
            head = Interval(q(0), unroll(arc.end), True, arc.end_closed)
            tail = Interval(unroll(arc.start), c, arc.start_closed, True)
            through[v] = (head, tail)
        else:
            whole[v] = Interval(
                unroll(arc.start), unroll(arc.end), arc.start_closed, arc.end_closed
            )
    return through, whole


def generic_cut_point(ca: CircularArcRep) -> Fraction:
    """Midpoint of the widest endpoint-free stretch of the circle."""
    c = ca.circumference
    points = sorted({arc.start for arc in ca.arcs.values()}
                    | {arc.end for arc in ca.arcs.values()})
    if not points:
        return c / 2
    best_gap = None
    best_mid = None
    for i, a in enumerate(points):
        b = points[(i + 1) % len(points)]
        width = (b - a) % c
        if width == 0:
            continue
        if best_gap is None or width > best_gap:
            best_gap = width
            best_mid = (a + width / 2) % c
    if best_mid is None:
        raise TransformError("cannot pick a generic cut point")
    return best_mid


def balanced_from_circular_arc(ca: CircularArcRep, p) -> Representation:
    """Cut the circle at p; arcs through p become 2-intervals whose shorter
    side is extended outward to match the longer; the rest are halved at
    their midpoint (left half open at the split, so the halves stay
    disjoint)."""
    through, whole = _cut_positions(ca, q(p))
    items: dict[str, TwoInterval] = {}
    for v, (head, tail) in through.items():
        lh, lt = head.length, tail.length
        if lh < lt:
            head = Interval(head.hi - lt, head.hi, head.lo_closed, head.hi_closed)
        elif lt < lh:
            tail = Interval(tail.lo, tail.lo + lh, tail.lo_closed, tail.hi_closed)
        items[v] = two_interval(head, tail)
    for v, iv in whole.items():
        mid = (iv.lo + iv.hi) / 2
        left = Interval(iv.lo, mid, iv.lo_closed, False)
        right = Interval(mid, iv.hi, True, iv.hi_closed)
        items[v] = two_interval(left, right)
    rep = Representation(items)
    assert family_check(rep, BALANCED).ok
    return rep


def _assert_proper(intervals: dict[str, Interval]) -> None:
    labels = sorted(intervals)
    for i, u in enumerate(labels):
        for w in labels[i + 1:]:
            a, b = intervals[u], intervals[w]
            if (a.lo <= b.lo and b.hi <= a.hi) or (b.lo <= a.lo and a.hi <= b.hi):
                raise TransformError(f"containment between {u!r} and {w!r}")


def proper_circular_arc_check(ca: CircularArcRep) -> None:
    c = ca.circumference
    labels = ca.labels()
    for i, u in enumerate(labels):
        for w in labels:
            if u == w:
                continue
            au, aw = ca[u], ca[w]
            # u contains w iff every point of w lies on u; with finitely
            # many endpoints it is enough to test w's span endpoints and
            # that u covers w's segments
            if _arc_contains_arc(au, aw, c):
                raise TransformError(f"arc {u!r} contains arc {w!r}")


def _arc_contains_arc(a: Arc, b: Arc, c: Fraction) -> bool:
    segs_a = a.segments(c)
    for seg in b.segments(c):
        remaining = [seg]
        for sa in segs_a:
            nxt = []
            for piece in remaining:
                nxt.extend(_interval_minus(piece, sa))
            remaining = nxt
        if remaining:
            return False
    return True


def _interval_minus(piece: Interval, cover: Interval) -> list[Interval]:
    if not intersects(piece, cover):
        return [piece]
    out = []
    if piece.lo < cover.lo or (piece.lo == cover.lo and piece.lo_closed and not cover.lo_closed):
        out.append(Interval(piece.lo, cover.lo, piece.lo_closed, not cover.lo_closed))
    if cover.hi < piece.hi or (cover.hi == piece.hi and piece.hi_closed and not cover.hi_closed):
        out.append(Interval(cover.hi, piece.hi, not cover.hi_closed, piece.hi_closed))
    return out


def unit_from_proper_circular_arc(ca: CircularArcRep, p) -> Representation:
    """Cut a proper circular-arc representation at p, restore properness by
    extending the cut pieces outward (minimum overlap order plus a 1/(4n)
    slack step), pad single intervals with far-away partners, and unitize
    the resulting proper interval system."""
    proper_circular_arc_check(ca)
    through, whole = _cut_positions(ca, q(p))
    n = len(ca)
    if n == 0:
        return Representation({})
    step = Fraction(1, 4 * n)
    c = ca.circumference

    ground: dict[tuple[str, int], Interval] = {}
    # heads all start at the segment's left end: extend outward (left), the
    # piece with the smallest interior end reaching furthest out so that no
    # head contains another
    heads = sorted(through, key=lambda v: (through[v][0].hi, v))
    for idx, v in enumerate(heads):
        head = through[v][0]
        reach = len(heads) - idx
        ground[(v, 0)] = Interval(
            head.lo - reach * step, head.hi, head.lo_closed, head.hi_closed
        )
    tails = sorted(through, key=lambda v: (through[v][1].lo, v))
    for rank, v in enumerate(tails, start=1):
        tail = through[v][1]
        ground[(v, 1)] = Interval(
            tail.lo, tail.hi + rank * step, tail.lo_closed, tail.hi_closed
        )
    for v, iv in whole.items():
        ground[(v, 0)] = iv
    # disjoint padding partners for the uncut arcs
    far = c + n + 1
    for i, v in enumerate(sorted(whole)):
        ground[(v, 1)] = Interval(far + 2 * i, far + 2 * i + 1)

    _assert_proper({f"{v}|{s}": iv for (v, s), iv in ground.items()})
    units = proper_to_unit_interval(
        {f"{v}|{s}": iv for (v, s), iv in ground.items()}
    )
    items = {}
    for v in ca.labels():
        items[v] = two_interval(units[f"{v}|0"], units[f"{v}|1"])
    rep = Representation(items)
    assert family_check(rep, UNIT).ok
    return rep


# --- proper -> unit interval ---------------------------------------------------


def proper_to_unit_interval(intervals: dict[str, Interval]) -> dict[str, Interval]:
    """Unit realization of a proper (containment-free) interval system with
    the same intersection pattern; endpoints are multiples of 1/(2n) for n
    input intervals.

    Difference constraints on the unit starts u_i (in proper order): the
    order advances by at least 1/(2n) per interval, non-intersecting pairs
    sit at distance strictly over 1 (by the same 1/(2n) grid step), and
    intersecting pairs within 1.  Feasibility follows because the
    neighbors of an interval among its predecessors form a suffix and a
    clique; the minimal solution is computed by longest paths.
    """
    _assert_proper(intervals)
    labels = sorted(intervals, key=lambda v: (intervals[v].lo, intervals[v].hi, v))
    n = len(labels)
    if n == 0:
        return {}
    gamma = Fraction(1, 2 * n)

    lower: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]  # u_k >= u_j + w
    upper: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]  # u_k <= u_j + w
    for k in range(1, n):
        lower[k].append((k - 1, gamma))
        for j in range(k):
            if intersects(intervals[labels[j]], intervals[labels[k]]):
                upper[k].append((j, q(1)))
            else:
                lower[k].append((j, 1 + gamma))

    u = _longest_paths(n, lower, upper)
    if u is None:
        raise TransformError("input system is not unit-realizable (not proper?)")
    return {labels[k]: Interval(u[k], u[k] + 1) for k in range(n)}


def _longest_paths(n, lower, upper):
    """Least solution with u_0 = 0 of the difference system
    u_k >= u_j + w (lower) and u_k <= u_j + w (upper), or None.

    Both constraint kinds are longest-path edges (an upper bound forces
    u_j >= u_k - w), so Bellman-Ford propagates them jointly; a positive
    cycle means the system is inconsistent.
    """
    edges = []
    for k in range(n):
        for j, w in lower[k]:
            edges.append((j, k, w))
        for j, w in upper[k]:
            edges.append((k, j, -w))
    u = [q(0)] * n
    for round_ in range(n + 1):
        changed = False
        for j, k, w in edges:
            if u[j] + w > u[k]:
                u[k] = u[j] + w
                changed = True
        if not changed:
            return u
    return None


# --- stretch: (x,x) -> (x+1,x+1) ------------------------------------------------


def _infer_x(rep: Representation) -> int:
    if len(rep) == 0:
        return 0
    lengths = {iv.length for _, _, iv in rep.ground_set()}
    if len(lengths) != 1:
        raise TransformError("ground set is not of uniform length")
    x = lengths.pop()
    if x.denominator != 1 or x < 1:
        raise TransformError("ground set length is not a positive integer")
    verdict = family_check(rep, XX(int(x)))
    if not verdict.ok:
        raise TransformError(f"input is not an open integer rep: {verdict.reason}")
    return int(x)


def stretch(rep: Representation) -> Representation:
    """Grow every ground interval from length x to x+1 by the sweep: take
    the leftmost pending interval [a, b], stretch every pending interval
    starting before b in place, translate the rest right by one, repeat."""
    if len(rep) == 0:
        return rep
    x = _infer_x(rep)
    pending = []  # (left endpoint, key)
    for v, side, iv in rep.ground_set():
        pending.append([iv.lo, (v, side)])
    pending.sort(key=lambda t: (t[0], t[1]))
    done: dict[tuple[str, int], Fraction] = {}
    while pending:
        b = pending[0][0] + x
        keep = []
        for entry in pending:
            if entry[0] < b:
                done[entry[1]] = entry[0]
            else:
                entry[0] += 1
                keep.append(entry)
        pending = keep
    items = {}
    for v in rep.labels():
        a = done[(v, 0)]
        bpos = done[(v, 1)]
        items[v] = two_interval(
            Interval(a, a + x + 1, False, False),
            Interval(bpos, bpos + x + 1, False, False),
        )
    out = Representation(items)
    assert family_check(out, XX(x + 1)).ok
    return out


# --- unit -> open integer (2n,2n) -----------------------------------------------


def unit_rep_to_integer_xx(rep: Representation) -> Representation:
    """Open-interval realization with integer endpoints and length 2n from
    a unit realization (n vertices).

    The ground set of a unit realization is a proper interval system; its
    integer placement is re-solved on the grid: order steps >= 0,
    intersecting pairs within 2n - 1, disjoint pairs at least 2n apart
    (open intervals of length 2n at distance exactly 2n just touch).
    """
    verdict = family_check(rep, UNIT)
    if not verdict.ok:
        raise TransformError(f"input is not a unit representation: {verdict.reason}")
    n = len(rep)
    if n == 0:
        return rep
    ground = {f"{v}|{s}": iv for v, s, iv in rep.ground_set()}
    labels = sorted(ground, key=lambda k: (ground[k].lo, ground[k].hi, k))
    m = len(labels)
    span = 2 * n

    lower: list[list[tuple[int, Fraction]]] = [[] for _ in range(m)]
    upper: list[list[tuple[int, Fraction]]] = [[] for _ in range(m)]
    for k in range(1, m):
        lower[k].append((k - 1, q(0)))
        for j in range(k):
            if intersects(ground[labels[j]], ground[labels[k]]):
                upper[k].append((j, q(span - 1)))
            else:
                lower[k].append((j, q(span)))
    u = _longest_paths(m, lower, upper)
    if u is None:
        raise TransformError("unit ground set admits no integer placement")

    starts = {labels[k]: u[k] for k in range(m)}
    items = {}
    for v in rep.labels():
        a = starts[f"{v}|0"]
        b = starts[f"{v}|1"]
        items[v] = two_interval(
            Interval(a, a + span, False, False),
            Interval(b, b + span, False, False),
        )
    out = Representation(items)
    assert family_check(out, XX(span)).ok
    return out
