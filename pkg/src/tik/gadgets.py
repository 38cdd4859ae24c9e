"""Special graphs and fixture realizations used by the reductions.

The rigid building blocks are K_{5,3} (all of whose 2-interval
realizations are contiguous) and K_{4,4} minus a matching edge (same
property with open length-2 intervals).  Everything here is
deterministic: fixed labels, identical output across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError, complete_bipartite
from .model import Interval, Representation, q, two_interval

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def k53() -> Graph:
    return complete_bipartite(5, 3)


def k44_minus_e() -> Graph:
    """K_{4,4} minus the matching edge (s4, t4); s4 and t4 are the two
    degree-3 vertices."""
    g = complete_bipartite(4, 4)
    edges = [e for e in g.edges if e != ("s4", "t4")]
    return Graph.build(g.vertices, edges)


def _rep(items: dict[str, tuple]) -> Representation:
    out = {}
    for v, (a, b, c, d) in items.items():
        out[v] = two_interval(Interval(q(a), q(b)), Interval(q(c), q(d)))
    return Representation(out)


# The balanced K_{5,3} layout: the six length-11 intervals of t1..t3 form a
# row; the ten length-7 intervals of s1..s5 bridge consecutive gaps or nest
# inside a t interval.  s1 owns the interval at the right extremity, which
# is where later constructions hook on.
_K53_LAYOUT = {
    "t1": (0, 11, 40, 51),
    "t2": (12, 23, 52, 63),
    "t3": (24, 35, 66, 77),
    "s1": (48, 55, 72, 79),
    "s2": (1, 8, 19, 26),
    "s3": (9, 16, Fraction(105, 4), Fraction(133, 4)),   # 26.25 .. 33.25
    "s4": (Fraction(67, 2), Fraction(81, 2), Fraction(221, 4), Fraction(249, 4)),
    "s5": (Fraction(163, 4), Fraction(191, 4), Fraction(125, 2), Fraction(139, 2)),
}


def k53_balanced_realization() -> Representation:
    """Balanced, contiguous realization of K_{5,3}: s-side lengths 7,
    t-side lengths 11, total span 79."""
    return _rep(_K53_LAYOUT)


def k53_block(prefix: str, offset, scale=1, mirror: bool = False,
              left_overhang: bool = False) -> dict[str, tuple]:
    """Interval quadruples of the K_{5,3} layout, optionally mirrored
    (so s1's extremal interval sits at the block's left edge), scaled and
    shifted.  With left_overhang, s2's first interval is slid out past the
    left edge, giving the block s-owned extremities on both sides."""
    offset, scale = q(offset), q(scale)
    span = q(79)
    items = {}
    for v, (a, b, c, d) in _K53_LAYOUT.items():
        quad = [q(a), q(b), q(c), q(d)]
        if v == "s2" and left_overhang:
            quad[0], quad[1] = -HALF, Fraction(13, 2)
        if mirror:
            a2, b2, c2, d2 = quad
            quad = [span - d2, span - c2, span - b2, span - a2]
        items[f"{prefix}:{v}"] = tuple(scale * e + offset for e in quad)
    return items


# K_{4,4}-e with open intervals of length 2: the eight intervals of the
# s side tile the even positions, the eight t intervals sit at odd
# positions bridging them; the degree-3 vertices own the two extremities.
_K44E_POSITIONS = {
    "s4": (0, 4), "s1": (2, 6), "s2": (8, 12), "s3": (10, 14),
    "t1": (1, 9), "t2": (3, 11), "t3": (5, 13), "t4": (7, 15),
}


def k44e_22_realization() -> Representation:
    items = {}
    for v, (a, b) in _K44E_POSITIONS.items():
        items[v] = two_interval(
            Interval(q(a), q(a + 2), False, False),
            Interval(q(b), q(b + 2), False, False),
        )
    return Representation(items)


def _k44e_block_positions(length: int) -> dict[str, tuple[int, int]]:
    """Left endpoints of the open length-`length` K_{4,4}-e block used by
    the crown construction (length >= 3).  The block spans (0, 9*length):
    a slot row plus bridges, with a one-unit gap before slot 6 that leaves
    room for an external interval meeting exactly s1 and t1."""
    if length < 3:
        raise GraphError("k44e block needs interval length >= 3")
    m = length
    return {
        "s4": (0, 6 * m + 1),
        "s2": (m, 4 * m),
        "s3": (2 * m, 7 * m + 1),
        "s1": (3 * m, 5 * m),
        "t2": (1, 2 * m + 1),
        "t1": (m + 1, 5 * m + 2),
        "t3": (4 * m + 1, 7 * m),
        "t4": (3 * m + 1, 8 * m),
    }


def _open_pair(a, b, length, offset=0, mirror_span=None):
    lo1, lo2 = q(a), q(b)
    m = q(length)
    if mirror_span is not None:
        lo1, lo2 = mirror_span - lo2 - m, mirror_span - lo1 - m
    return two_interval(
        Interval(lo1 + offset, lo1 + m + offset, False, False),
        Interval(lo2 + offset, lo2 + m + offset, False, False),
    )


def degree4_anchor_pair(gadget: Graph) -> tuple[str, str]:
    """Lexicographically first adjacent pair of degree-4 vertices of a
    K_{4,4}-e copy (the anchor that external hub vertices attach to)."""
    deg4 = [v for v in sorted(gadget.vertices) if gadget.degree(v) == 4]
    for u in deg4:
        for w in deg4:
            if u < w and gadget.has_edge(u, w):
                return (u, w)
    raise GraphError("gadget has no adjacent degree-4 pair")


def _prefixed_k44e(prefix: str) -> Graph:
    base = k44_minus_e()
    vs = [f"{prefix}:{v}" for v in base.vertices]
    es = [(f"{prefix}:{u}", f"{prefix}:{w}") for u, w in base.edges]
    return Graph.build(vs, es)


# --- unbalanced chain --------------------------------------------------------

# Seven K_{5,3} blocks B1..B7 in a row; three extra vertices I1,I2,I3 whose
# six intervals straddle the six junctions in the order I2,I1,I3,I2,I1,I3.
# A straddling interval meets exactly the right-extremal vertex (s1) of the
# block on its left and the left-extremal vertex (t1) of the block on its
# right.  The fixture realization gives the two straddles of each I vertex
# different lengths, so it passes the 2-interval validity check but is not
# balanced as given.
_CHAIN_JUNCTIONS = {1: "I2", 2: "I1", 3: "I3", 4: "I2", 5: "I1", 6: "I3"}


def unbalanced_chain() -> Graph:
    vertices = []
    edges = []
    base = k53()
    for i in range(1, 8):
        vertices.extend(f"B{i}:{v}" for v in base.vertices)
        edges.extend((f"B{i}:{u}", f"B{i}:{w}") for u, w in base.edges)
    vertices.extend(["I1", "I2", "I3"])
    for j, iv in _CHAIN_JUNCTIONS.items():
        edges.append((iv, f"B{j}:s1"))
        edges.append((iv, f"B{j + 1}:t1"))
    return Graph.build(vertices, edges)


def unbalanced_chain_realization() -> Representation:
    rep = {}
    for i in range(1, 8):
        for v, quad in k53_block(f"B{i}", 100 * (i - 1)).items():
            rep[v] = two_interval(Interval(quad[0], quad[1]),
                                  Interval(quad[2], quad[3]))
    straddles: dict[str, list] = {"I1": [], "I2": [], "I3": []}
    for j in sorted(_CHAIN_JUNCTIONS):
        iv = _CHAIN_JUNCTIONS[j]
        delta = q(0) if not straddles[iv] else HALF
        lo = q(100 * (j - 1) + 78) - delta
        hi = q(100 * j) + QUARTER
        straddles[iv].append(Interval(lo, hi))
    for iv, (a, b) in straddles.items():
        rep[iv] = two_interval(a, b)
    return Representation(rep)


# --- crown ladder: the (x,x) vs (x+1,x+1) separator --------------------------


@dataclass(frozen=True)
class XxSeparatorInstance:
    """Cocktail-party core v_i / v'_i anchored between four K_{4,4}-e
    blocks, plus hub vertices a and b; realizable with open integer
    intervals of length x+1."""

    graph: Graph
    x: int
    roles: dict


def xx_separator(x: int) -> XxSeparatorInstance:
    if x < 2:
        raise GraphError("xx_separator needs x >= 2")
    vs_plain = [f"v{i}" for i in range(1, x + 1)]
    vs_prime = [f"v'{i}" for i in range(1, x + 1)]
    vertices = vs_plain + vs_prime
    core = list(vertices)
    matching = {tuple(sorted((f"v{i}", f"v'{i}"))) for i in range(1, x + 1)}
    edges = [
        (u, w)
        for i, u in enumerate(core)
        for w in core[i + 1:]
        if tuple(sorted((u, w))) not in matching
    ]

    blocks = {}
    for j in range(1, 5):
        blk = _prefixed_k44e(f"X{j}")
        blocks[j] = blk
        vertices.extend(blk.vertices)
        edges.extend(blk.edges)

    # degree-3 extremity roles per block; X2 and X4 appear mirrored in the
    # companion realization, which swaps which extremity faces left
    v_left = {1: "X1:s4", 2: "X2:t4", 3: "X3:s4", 4: "X4:t4"}
    v_right = {1: "X1:t4", 2: "X2:s4", 3: "X3:t4", 4: "X4:s4"}

    edges.append((v_right[2], v_left[3]))
    for u in vs_plain:
        edges.append((u, v_right[1]))
        edges.append((u, v_left[4]))
    for u in vs_prime:
        edges.append((u, v_left[2]))
        edges.append((u, v_right[3]))

    anchor1 = degree4_anchor_pair(blocks[1])
    anchor4 = degree4_anchor_pair(blocks[4])
    vertices.extend(["a", "b"])
    for u in vs_plain + vs_prime:
        edges.append(("a", u))
        edges.append(("b", u))
    edges.extend(("a", w) for w in anchor1)
    edges.extend(("b", w) for w in anchor4)

    roles = {
        "v": vs_plain,
        "v_prime": vs_prime,
        "blocks": {j: sorted(blocks[j].vertices) for j in blocks},
        "v_left": v_left,
        "v_right": v_right,
        "a": "a",
        "b": "b",
        "anchors": {"a": anchor1, "b": anchor4},
    }
    return XxSeparatorInstance(Graph.build(vertices, edges), x, roles)


def xx_separator_realization(x: int) -> Representation:
    """Open integer intervals of length x+1 realizing xx_separator(x):
    two interlocking stairways of v / v' intervals between the anchored
    blocks."""
    if x < 2:
        raise GraphError("xx_separator needs x >= 2")
    m = x + 1
    block = _k44e_block_positions(m)
    span = q(9 * m)  # block span, used when mirroring
    t2 = q(10 * m)
    t3 = q(19 * m - 1)
    t4 = q(29 * m - 1)

    items: dict[str, object] = {}
    for v, (a, b) in block.items():
        items[f"X1:{v}"] = _open_pair(a, b, m)
        items[f"X2:{v}"] = _open_pair(a, b, m, offset=t2, mirror_span=span)
        items[f"X3:{v}"] = _open_pair(a, b, m, offset=t3)
        items[f"X4:{v}"] = _open_pair(a, b, m, offset=t4, mirror_span=span)

    def open_iv(lo):
        return Interval(q(lo), q(lo) + m, False, False)

    for i in range(1, x + 1):
        items[f"v{i}"] = two_interval(
            open_iv(9 * m - i), open_iv(t3 + 10 * m - i)
        )
        items[f"v'{i}"] = two_interval(
            open_iv(10 * m - i), open_iv(t3 + 9 * m - i)
        )
    items["a"] = two_interval(open_iv(5 * m + 1), open_iv(9 * m))
    items["b"] = two_interval(open_iv(t3 + 9 * m), open_iv(t4 + 3 * m - 1))
    return Representation(items)


# --- the all-4-simplicial but not unit gadget --------------------------------


def c4_anchored() -> Graph:
    """A 4-cycle whose vertices are each tied to the anchor pair of a
    private K_{4,4}-e block."""
    vertices = [f"v{i}" for i in range(1, 5)]
    edges = [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v1", "v4")]
    for i in range(1, 5):
        blk = _prefixed_k44e(f"X{i}")
        vertices.extend(blk.vertices)
        edges.extend(blk.edges)
        for w in degree4_anchor_pair(blk):
            edges.append((f"v{i}", w))
    return Graph.build(vertices, edges)


# --- the Hamiltonicity expansion ---------------------------------------------


@dataclass(frozen=True)
class HamiltonicityInstance:
    """Expansion of a 3-regular triangle-free graph used by the balanced
    recognition reduction: per-vertex K_{5,3} anchors M(v), a hub z, and
    three more blocks H1, H2, H3."""

    graph: Graph
    base: Graph
    n: int  # |V(base)| - 1
    roles: dict


def _k53_prefixed(prefix: str) -> tuple[list[str], list[tuple[str, str]]]:
    base = k53()
    vs = [f"{prefix}:{v}" for v in base.vertices]
    es = [(f"{prefix}:{u}", f"{prefix}:{w}") for u, w in base.edges]
    return vs, es


def hamiltonicity_expansion(g: Graph) -> HamiltonicityInstance:
    from .graphs import is_triangle_free_3regular

    if g.n == 0:
        raise GraphError("expansion needs a nonempty base graph")
    if not is_triangle_free_3regular(g):
        raise GraphError("base graph must be 3-regular and triangle-free")
    for v in g.vertices:
        if ":" in v or v == "z":
            raise GraphError(f"base label {v!r} collides with gadget labels")

    order = sorted(g.vertices)
    v0 = order[0]
    n = g.n - 1

    vertices = list(g.vertices)
    edges = list(g.edges)

    m_anchor = {}
    for u in order:
        vs, es = _k53_prefixed(f"M({u})")
        vertices.extend(vs)
        edges.extend(es)
        m_anchor[u] = f"M({u}):s1"
        edges.append((u, m_anchor[u]))

    vertices.append("z")
    for u in order:
        edges.append((u, "z"))
    # z reaches the whole block M(v_0) and no other M block
    for w in sorted(k53().vertices):
        edges.append(("z", f"M({v0}):{w}"))

    for name in ("H1", "H2", "H3"):
        vs, es = _k53_prefixed(name)
        vertices.extend(vs)
        edges.extend(es)
    # H1 hosts z at its right extremity (s1) and inside the hole covered
    # by s3; its left extremity (s2) hooks onto H2's extremal vertex s1
    edges.append(("z", "H1:s1"))
    edges.append(("z", "H1:s3"))
    edges.append(("H1:s2", "H2:s1"))
    edges.append(("z", "H3:s1"))
    for w in sorted(k53().vertices):
        edges.append((v0, f"H3:{w}"))

    roles = {
        "v0": v0,
        "base_order": order,
        "m_anchor": m_anchor,
        "z": "z",
        "z_links_h1": ("H1:s1", "H1:s3"),
        "h1_h2_link": ("H1:s2", "H2:s1"),
        "z_link_h3": "H3:s1",
    }
    return HamiltonicityInstance(Graph.build(vertices, edges), g, n, roles)
