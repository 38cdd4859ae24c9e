"""Exact representation model: intervals, 2-intervals, circular arcs.

All endpoints are exact rationals (fractions.Fraction).  Intersection is a
single closedness-aware predicate; each family verifier imposes its own
endpoint convention on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph

Q = Fraction


class ModelError(ValueError):
    pass


def q(value) -> Fraction:
    """Coerce ints / 'p/q' strings / Fractions to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelError(f"bad rational literal {value!r}: {exc}") from None
    raise ModelError(f"cannot interpret {value!r} as a rational")


def q_str(value: Fraction) -> str:
    value = q(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Interval:
    """Interval with per-endpoint closedness.  Degenerate points ([p,p],
    both ends closed) are representable but rejected by every family
    verifier."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", q(self.lo))
        object.__setattr__(self, "hi", q(self.hi))
        if self.lo > self.hi:
            raise ModelError(f"interval with lo > hi: {self}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ModelError("degenerate interval must be closed at both ends")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains_point(self, x: Fraction) -> bool:
        x = q(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self):
        l = "[" if self.lo_closed else "("
        r = "]" if self.hi_closed else ")"
        return f"{l}{q_str(self.lo)}, {q_str(self.hi)}{r}"


def interval(lo, hi, lo_closed=True, hi_closed=True) -> Interval:
    return Interval(q(lo), q(hi), lo_closed, hi_closed)


def open_interval(lo, hi) -> Interval:
    return Interval(q(lo), q(hi), False, False)


def intersects(a: Interval, b: Interval) -> bool:
    """True iff some point lies in both intervals, respecting closedness."""
    if a.lo > b.lo or (a.lo == b.lo and not a.lo_closed and b.lo_closed):
        a, b = b, a
    # now a starts no later than b
    if b.lo > a.hi:
        return False
    if b.lo < a.hi:
        return True
    # touching at a single point b.lo == a.hi
    return a.hi_closed and b.lo_closed


@dataclass(frozen=True)
class TwoInterval:
    """Union of two disjoint intervals, normalized so left.lo <= right.lo."""

    left: Interval
    right: Interval

    def __post_init__(self):
        if intersects(self.left, self.right):
            raise ModelError(f"2-interval halves intersect: {self.left} {self.right}")
        if self.left.lo > self.right.lo:
            raise ModelError("2-interval not normalized: left.lo > right.lo")

    def parts(self) -> tuple[Interval, Interval]:
        return (self.left, self.right)

    def __str__(self):
        return f"{self.left} u {self.right}"


def two_interval(a: Interval, b: Interval) -> TwoInterval:
    """Build a TwoInterval from two disjoint intervals in either order."""
    if (b.lo, not b.lo_closed) < (a.lo, not a.lo_closed):
        a, b = b, a
    return TwoInterval(a, b)


class Representation:
    """Map vertex label -> TwoInterval."""

    def __init__(self, items: dict[str, TwoInterval]):
        self._items = dict(items)

    @property
    def items(self) -> dict[str, TwoInterval]:
        return dict(self._items)

    def labels(self) -> list[str]:
        return sorted(self._items)

    def __len__(self):
        return len(self._items)

    def __getitem__(self, label: str) -> TwoInterval:
        return self._items[label]

    def __contains__(self, label: str) -> bool:
        return label in self._items

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self._items == other._items

    def ground_set(self) -> list[tuple[str, int, Interval]]:
        """All intervals as (label, side, interval), side 0 = left, 1 = right."""
        out = []
        for v in self.labels():
            ti = self._items[v]
            out.append((v, 0, ti.left))
            out.append((v, 1, ti.right))
        return out

    def span(self) -> Interval:
        if not self._items:
            raise ModelError("empty representation has no span")
        los = [iv.lo for _, _, iv in self.ground_set()]
        his = [iv.hi for _, _, iv in self.ground_set()]
        return Interval(min(los), max(his))


@dataclass(frozen=True)
class Arc:
    """Circular arc running clockwise from start to end, wrap allowed.
    start == end (full circle) is not representable."""

    start: Fraction
    end: Fraction
    start_closed: bool = True
    end_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "start", q(self.start))
        object.__setattr__(self, "end", q(self.end))
        if self.start == self.end:
            raise ModelError("full-circle arcs are not representable")

    def wraps(self) -> bool:
        return self.end < self.start

    def segments(self, circumference: Fraction) -> list[Interval]:
        """Decompose into linear intervals on [0, C]; the wrap point is
        interior, so cut ends there are closed."""
        if not self.wraps():
            return [Interval(self.start, self.end, self.start_closed, self.end_closed)]
        return [
            Interval(self.start, circumference, self.start_closed, True),
            Interval(q(0), self.end, True, self.end_closed),
        ]

    def contains_point(self, x: Fraction, circumference: Fraction) -> bool:
        return any(seg.contains_point(x) for seg in self.segments(circumference))


class CircularArcRep:
    """Arcs on a circle of rational circumference."""

    def __init__(self, circumference, arcs: dict[str, Arc]):
        self.circumference = q(circumference)
        if self.circumference <= 0:
            raise ModelError("circumference must be positive")
        for v, a in arcs.items():
            for x in (a.start, a.end):
                if not (0 <= x < self.circumference):
                    raise ModelError(f"arc endpoint {q_str(x)} of {v!r} outside [0, C)")
        self._arcs = dict(arcs)

    @property
    def arcs(self) -> dict[str, Arc]:
        return dict(self._arcs)

    def labels(self) -> list[str]:
        return sorted(self._arcs)

    def __len__(self):
        return len(self._arcs)

    def __getitem__(self, label: str) -> Arc:
        return self._arcs[label]

    def __eq__(self, other):
        if not isinstance(other, CircularArcRep):
            return NotImplemented
        return (
            self.circumference == other.circumference and self._arcs == other._arcs
        )


def arcs_intersect(a: Arc, b: Arc, circumference: Fraction) -> bool:
    if a.wraps() and b.wraps():
        return True  # both contain the wrap point's neighborhood
    return any(
        intersects(sa, sb)
        for sa in a.segments(circumference)
        for sb in b.segments(circumference)
    )


# --- intersection graphs ---------------------------------------------------


def two_intervals_intersect(a: TwoInterval, b: TwoInterval) -> bool:
    return any(intersects(p, r) for p in a.parts() for r in b.parts())


def intersection_graph(rep: Representation) -> Graph:
    labels = rep.labels()
    edges = []
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            if two_intervals_intersect(rep[u], rep[v]):
                edges.append((u, v))
    return Graph.build(labels, edges)


def circular_intersection_graph(ca: CircularArcRep) -> Graph:
    labels = ca.labels()
    c = ca.circumference
    edges = []
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            if arcs_intersect(ca[u], ca[v], c):
                edges.append((u, v))
    return Graph.build(labels, edges)


# --- family selectors and verifiers ----------------------------------------


@dataclass(frozen=True)
class FamilySelector:
    kind: str
    x: int | None = None

    _KINDS = {
        "2interval", "balanced", "unit", "xx",
        "interval", "unit-interval", "circular-arc",
    }

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ModelError(f"unknown family {self.kind!r}")
        if self.kind == "xx":
            if self.x is None or self.x < 1:
                raise ModelError("xx family needs x >= 1")
        elif self.x is not None:
            raise ModelError(f"family {self.kind!r} takes no x parameter")

    def __str__(self):
        return f"xx({self.x})" if self.kind == "xx" else self.kind


TWO_INTERVAL = FamilySelector("2interval")
BALANCED = FamilySelector("balanced")
UNIT = FamilySelector("unit")
INTERVAL_CLASS = FamilySelector("interval")
UNIT_INTERVAL = FamilySelector("unit-interval")
CIRCULAR_ARC = FamilySelector("circular-arc")


def XX(x: int) -> FamilySelector:
    return FamilySelector("xx", x)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def _fail(reason: str) -> Verdict:
    return Verdict(False, reason)


def family_check(rep, family: FamilySelector) -> Verdict:
    """Check that a representation satisfies a family's metric convention.

    For interval / unit-interval selectors the right intervals must be pure
    padding (they intersect nothing), so the left intervals alone realize
    the graph; certificates from the recognizer have that shape.
    """
    if family.kind == "circular-arc":
        if not isinstance(rep, CircularArcRep):
            return _fail("circular-arc check expects a CircularArcRep")
        return PASS
    if not isinstance(rep, Representation):
        return _fail(f"{family} check expects a Representation")

    for v in rep.labels():
        for side, iv in zip(("left", "right"), rep[v].parts()):
            if iv.is_degenerate():
                return _fail(f"degenerate {side} interval at {v!r}")

    if family.kind == "2interval":
        return PASS

    if family.kind == "balanced":
        for v in rep.labels():
            ti = rep[v]
            if ti.left.length != ti.right.length:
                return _fail(
                    f"{v!r} unbalanced: |left| = {q_str(ti.left.length)}, "
                    f"|right| = {q_str(ti.right.length)}"
                )
        return PASS

    if family.kind in ("unit", "unit-interval"):
        for v, side, iv in rep.ground_set():
            if iv.length != 1:
                return _fail(f"{v!r} has interval of length {q_str(iv.length)} != 1")
        if family.kind == "unit-interval":
            return _padding_rights(rep)
        return PASS

    if family.kind == "xx":
        x = family.x
        for v, side, iv in rep.ground_set():
            if iv.lo_closed or iv.hi_closed:
                return _fail(f"{v!r} has a non-open interval")
            if iv.lo.denominator != 1 or iv.hi.denominator != 1:
                return _fail(f"{v!r} has a non-integer endpoint")
            if iv.length != x:
                return _fail(f"{v!r} has interval of length {q_str(iv.length)} != {x}")
        return PASS

    if family.kind == "interval":
        return _padding_rights(rep)

    raise ModelError(f"unhandled family {family}")


def _padding_rights(rep: Representation) -> Verdict:
    ground = rep.ground_set()
    for v, side, iv in ground:
        if side != 1:
            continue
        for w, side2, jv in ground:
            if (v, side) == (w, side2):
                continue
            if intersects(iv, jv):
                return _fail(f"right interval of {v!r} is not pure padding")
    return PASS


# --- contiguity -------------------------------------------------------------


@dataclass(frozen=True)
class Contiguity:
    contiguous: bool
    holes: tuple[Interval, ...]


def contiguity(rep: Representation) -> Contiguity:
    """Is the union of the ground set a single interval?  Holes are the
    maximal uncovered gaps strictly inside the span."""
    if len(rep) == 0:
        raise ModelError("contiguity undefined for an empty representation")
    items = sorted(
        ((iv.lo, not iv.lo_closed, iv) for _, _, iv in rep.ground_set()),
        key=lambda t: (t[0], t[1]),
    )
    holes: list[Interval] = []
    cur = items[0][2]
    cur_hi, cur_hi_closed = cur.hi, cur.hi_closed
    for lo, _, iv in items[1:]:
        joined = lo < cur_hi or (
            lo == cur_hi and (iv.lo_closed or cur_hi_closed)
        )
        if joined:
            if (iv.hi, iv.hi_closed) > (cur_hi, cur_hi_closed):
                cur_hi, cur_hi_closed = iv.hi, iv.hi_closed
        else:
            holes.append(
                Interval(cur_hi, lo, not cur_hi_closed, not iv.lo_closed)
                if cur_hi < lo
                else Interval(cur_hi, cur_hi)  # single uncovered point
            )
            cur_hi, cur_hi_closed = iv.hi, iv.hi_closed
    return Contiguity(contiguous=not holes, holes=tuple(holes))


# --- transformations used across modules ------------------------------------


def affine(rep: Representation, scale, shift) -> Representation:
    """Map every endpoint e to scale*e + shift.  Intersection graph is
    unchanged (scale must be positive)."""
    scale, shift = q(scale), q(shift)
    if scale <= 0:
        raise ModelError("affine scale must be positive")

    def f(iv: Interval) -> Interval:
        return Interval(scale * iv.lo + shift, scale * iv.hi + shift,
                        iv.lo_closed, iv.hi_closed)

    return Representation({
        v: TwoInterval(f(ti.left), f(ti.right)) for v, ti in rep.items.items()
    })


def normalize(rep: Representation) -> Representation:
    """Rewrite a closed representation so all 4n endpoints are distinct
    integers in [0, 4n), preserving the intersection graph.

    Sorting endpoint events by (value, lo-before-hi) encodes closed-interval
    intersection exactly: after the rewrite, [a,b] and [c,d] intersect iff
    they did before, and degenerate points become proper intervals.
    """
    events = []
    for v, side, iv in rep.ground_set():
        if not (iv.lo_closed and iv.hi_closed):
            raise ModelError("normalize is defined for the all-closed model only")
        events.append((iv.lo, 0, v, side))
        events.append((iv.hi, 1, v, side))
    events.sort(key=lambda t: (t[0], t[1], t[2], t[3]))
    pos = {(v, side, which): i
           for i, (_, which, v, side) in enumerate(events)}
    out = {}
    for v in rep.labels():
        parts = []
        for side in (0, 1):
            parts.append(Interval(q(pos[(v, side, 0)]), q(pos[(v, side, 1)])))
        out[v] = two_interval(parts[0], parts[1])
    return Representation(out)
