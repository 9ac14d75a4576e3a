"""Nonintersecting lattice-path families and the colour-exchange bijection.

Paths take unit east/north steps; a family's i-th path starts at
(i-1, start_row) and all paths of one family are pairwise vertex-disjoint.
East steps at height h carry the weight variable indexed by h, so a family
with start row 1 and top row n generates a Schur polynomial in x_1..x_n.
"""

from __future__ import annotations

from .poly import Poly


class TrailError(ValueError):
    """Malformed input to a trail traversal (overlapping endpoints etc.)."""


def paths_between(start, end):
    """All monotone east/north paths from start to end, as vertex tuples."""
    (x0, y0), (x1, y1) = start, end
    if x1 < x0 or y1 < y0:
        return
    if start == end:
        yield (start,)
        return
    if x1 > x0:
        for rest in paths_between((x0 + 1, y0), end):
            yield ((x0, y0),) + rest
    if y1 > y0:
        for rest in paths_between((x0, y0 + 1), end):
            yield ((x0, y0),) + rest


def enumerate_families(ends, top_row, start_row=1):
    """All vertex-disjoint families, i-th path (i-1, start_row) -> (ends_i, top_row)."""
    ends = tuple(ends)
    out = []

    def build(i, chosen, occupied):
        if i == len(ends):
            out.append(tuple(chosen))
            return
        for path in paths_between((i, start_row), (ends[i], top_row)):
            if occupied.isdisjoint(path):
                chosen.append(path)
                build(i + 1, chosen, occupied | set(path))
                chosen.pop()

    build(0, [], frozenset())
    return out


def family_weight(family, nvars, height_offset=1):
    """Exponent vector of the family's weight monomial.

    East steps at height h contribute to variable index h - height_offset.
    """
    expo = [0] * nvars
    for path in family:
        for (x0, y0), (x1, _y1) in zip(path, path[1:]):
            if x1 == x0 + 1:
                expo[y0 - height_offset] += 1
    return tuple(expo)


def weight_sum_poly(families, nvars, height_offset=1):
    """Sum of family weights as a polynomial (the LGV generating function)."""
    total = Poly.zero(nvars)
    for fam in families:
        total = total + Poly.monomial(family_weight(fam, nvars, height_offset))
    return total


class _Trail:
    __slots__ = ("edges", "termini")

    def __init__(self, edges, termini):
        self.edges = edges  # list of (colour, lower, upper)
        self.termini = termini  # list of (vertex, kind), kind endpoint/startpoint


def _check_disjoint(family):
    seen = set()
    for path in family:
        for v in path:
            if v in seen:
                raise TrailError(f"family paths overlap at {v}")
            seen.add(v)


def _trail_components(green, red):
    """Decompose the two families' edges into down-up trails.

    Each edge of either family carries two half-edge slots, one at each of
    its ends.  At every vertex the slots are paired locally: the two
    lower-edge slots of opposite colours pair with each other, as do the two
    upper-edge slots, and a leftover lower/upper slot of one colour pairs
    with its own continuation.  Slots left unpaired are trail ends.  The
    trails are the chains of this pairing; interchanging colours along any
    one of them keeps both families vertex-disjoint, because every shared
    vertex either keeps or swaps both of its passages.

    Returns (trails, cycles) where each trail records its edges and its two
    end vertices, classified as "endpoint" (a topmost path vertex) or
    "startpoint" (anywhere else, necessarily a path start).
    """
    _check_disjoint(green)
    _check_disjoint(red)
    at = {}  # vertex -> {"gd": edge, "gu": edge, "rd": edge, "ru": edge, "g": 1, "r": 1}
    for colour, fam in (("g", green), ("r", red)):
        for path in fam:
            for v in path:
                at.setdefault(v, {})[colour] = 1
            for u, v in zip(path, path[1:]):
                at[u][colour + "u"] = (u, v)
                at[v][colour + "d"] = (u, v)

    def slot(colour, edge, end):
        return (colour, edge, end)  # end 1 = at the edge's upper vertex

    partner = {}
    term_kind = {}

    def pair(a, b):
        partner[a] = b
        partner[b] = a

    for slots in at.values():
        gd, gu = slots.get("gd"), slots.get("gu")
        rd, ru = slots.get("rd"), slots.get("ru")
        if gd and rd:
            pair(slot("g", gd, 1), slot("r", rd, 1))
        if gu and ru:
            pair(slot("g", gu, 0), slot("r", ru, 0))
        for c, cd, cu, other in (("g", gd, gu, "r"), ("r", rd, ru, "g")):
            # a leftover lower slot faces the other path's start (dead end)
            # when that path is present; otherwise it continues upward along
            # its own colour or, failing that, marks the path's own endpoint
            if cd and slot(c, cd, 1) not in partner:
                if other in slots:
                    term_kind[slot(c, cd, 1)] = "startpoint"
                elif cu:
                    pair(slot(c, cd, 1), slot(c, cu, 0))
                else:
                    term_kind[slot(c, cd, 1)] = "endpoint"
            # a leftover upper slot faces the other path's endpoint when that
            # path is present, and a bare start of its own path otherwise
            if cu and slot(c, cu, 0) not in partner:
                term_kind[slot(c, cu, 0)] = (
                    "endpoint" if other in slots else "startpoint"
                )

    def vertex_of(s):
        _colour, (u, v), end = s
        return v if end else u

    all_slots = [
        (colour, edge, end)
        for colour, fam in (("g", green), ("r", red))
        for path in fam
        for edge in zip(path, path[1:])
        for end in (0, 1)
    ]
    seen = set()
    trails = []
    for s in all_slots:
        if s in partner or s in seen:
            continue
        # walk the chain from this loose end
        edges = []
        termini = [(vertex_of(s), term_kind[s])]
        cur = s
        while True:
            seen.add(cur)
            colour, edge, end = cur
            far = (colour, edge, 1 - end)
            seen.add(far)
            edges.append((colour,) + edge)
            if far not in partner:
                termini.append((vertex_of(far), term_kind[far]))
                break
            cur = partner[far]
        trails.append(_Trail(edges, termini))
    cycles = []
    for s in all_slots:
        if s in seen:
            continue
        edges = []
        cur = s
        while cur not in seen:
            seen.add(cur)
            colour, edge, end = cur
            far = (colour, edge, 1 - end)
            seen.add(far)
            edges.append((colour,) + edge)
            cur = partner[far]
        cycles.append(edges)
    return trails, cycles


def _endpoint_order(green, red):
    """Sorted endpoint x-coordinates with their (colour, path index) owners."""
    owners = {}
    for colour, fam in (("g", green), ("r", red)):
        for i, path in enumerate(fam):
            end = path[-1]
            if end in owners:
                raise TrailError(f"duplicate endpoint {end}")
            owners[end] = (colour, i)
    ends = sorted(owners, key=lambda v: v[0])
    return ends, owners


def _endpoint_trails(green, red):
    """Trails keyed by endpoint index, plus the sorted endpoint data.

    Returns (ends, owners, by_index, distinguished) where by_index maps a
    1-based endpoint index to its trail and distinguished is (index, vertex)
    for the unique trail running from an endpoint to a start point, or None.
    """
    trails, _cycles = _trail_components(green, red)
    ends, owners = _endpoint_order(green, red)
    pos_of = {v: i + 1 for i, v in enumerate(ends)}
    by_index = {}
    distinguished = None
    for trail in trails:
        idxs = [pos_of[v] for v, kind in trail.termini if kind == "endpoint"]
        for idx in idxs:
            if idx in by_index:
                raise TrailError(f"endpoint {idx} lies on two trails")
            by_index[idx] = trail
        if len(idxs) == 1:
            if distinguished is not None:
                raise TrailError("two trails terminate at start points")
            start = next(v for v, kind in trail.termini if kind == "startpoint")
            distinguished = (idxs[0], start)
    if len(by_index) != len(ends):
        raise TrailError("some endpoint lies on no trail")
    return ends, owners, by_index, distinguished


def downup_matching(green, red):
    """Pairing of endpoint indices (1-based) defined by the down-up trails.

    Returns (pairs, distinguished) where pairs is a list of (odd_index,
    even_index) tuples and distinguished is the index whose trail terminates
    at a start point (None when the endpoint count is even).
    """
    ends, _owners, by_index, distinguished = _endpoint_trails(green, red)
    pos_of = {v: i + 1 for i, v in enumerate(ends)}
    pairs = []
    for idx in range(1, len(ends) + 1, 2):
        if distinguished is not None and idx == distinguished[0]:
            continue
        trail = by_index[idx]
        other = [
            pos_of[v] for v, kind in trail.termini
            if kind == "endpoint" and pos_of[v] != idx
        ]
        if len(other) != 1:
            raise TrailError(f"trail at endpoint {idx} has no partner endpoint")
        j = other[0]
        if j % 2 != 0:
            raise TrailError(f"trail pairs two odd endpoints {idx}, {j}")
        pairs.append((idx, j))
    return pairs, distinguished[0] if distinguished is not None else None


def _family_edges(family):
    edges = set()
    for path in family:
        for u, v in zip(path, path[1:]):
            edges.add((u, v))
    return edges


def _rebuild_family(edges, starts):
    """Reassemble a family from directed step edges and known start points."""
    step = {}
    for u, v in edges:
        if u in step:
            raise TrailError(f"vertex {u} has two outgoing steps")
        step[u] = v
    fam = []
    used = 0
    for s in starts:
        path = [s]
        while path[-1] in step:
            path.append(step[path[-1]])
            used += 1
        fam.append(tuple(path))
    if used != len(edges):
        raise TrailError("leftover edges after rebuilding paths")
    return tuple(fam)


def _exchange(green, red, flip_decider):
    """Common engine for the forward and inverse colour-exchange maps.

    ``flip_decider(seq, odd_index, colour)`` is called once per non-degenerate
    trail, in increasing order of odd endpoint index, with the colour of the
    path ending there; it returns True to interchange colours along the trail.
    """
    ends, owners, by_index, distinguished = _endpoint_trails(green, red)
    if distinguished is not None and owners[ends[distinguished[0] - 1]][0] != "r":
        raise TrailError("distinguished trail must end a red path")
    flips = []
    seq = 0
    for idx in range(1, len(ends) + 1, 2):
        if distinguished is not None and idx == distinguished[0]:
            continue
        colour = owners[ends[idx - 1]][0]
        if flip_decider(seq, idx, colour):
            flips.append(by_index[idx])
        seq += 1

    green_edges = _family_edges(green)
    red_edges = _family_edges(red)
    out = {"g": set(), "r": set()}
    for trail in flips:
        for col, u, v in trail.edges:
            if (u, v) in out[col]:
                raise TrailError(f"flipped trails overlap at edge {(col, u, v)}")
            out[col].add((u, v))
    if not out["g"] <= green_edges or not out["r"] <= red_edges:
        raise TrailError("trail edge on neither family")
    new_green = (green_edges - out["g"]) | out["r"]
    new_red = (red_edges - out["r"]) | out["g"]
    if len(new_green) != len(green_edges) - len(out["g"]) + len(out["r"]):
        raise TrailError("recoloured edge collides with an existing green edge")
    if len(new_red) != len(red_edges) - len(out["r"]) + len(out["g"]):
        raise TrailError("recoloured edge collides with an existing red edge")
    green_edges, red_edges = new_green, new_red
    green2 = _rebuild_family(green_edges, [p[0] for p in green])
    red2 = _rebuild_family(red_edges, [p[0] for p in red])
    return green2, red2, distinguished


def fulmek_forward(green, red):
    """Forward colour exchange for an even endpoint set.

    Returns (green', red', C): green' ends at the even-indexed endpoints,
    red' at the odd-indexed ones, and C_i records whether the path ending at
    the i-th odd endpoint was green (and therefore had its trail recoloured).
    """
    bits = []

    def decide(_seq, _idx, colour):
        flip = colour == "g"
        bits.append(1 if flip else 0)
        return flip

    green2, red2, distinguished = _exchange(green, red, decide)
    if distinguished is not None:
        raise TrailError("unexpected trail into a start point")
    return green2, red2, tuple(bits)


def fulmek_forward_odd(green, red):
    """Forward map when red has one extra path starting one row lower.

    The trail reaching the extra red start point is left untouched; its
    endpoint must be odd-indexed and red.  Returns (green', red', C) with
    len(C) = len(green).
    """
    bits = []

    def decide(_seq, _idx, colour):
        flip = colour == "g"
        bits.append(1 if flip else 0)
        return flip

    green2, red2, distinguished = _exchange(green, red, decide)
    if distinguished is None:
        raise TrailError("no trail terminates at the extra start point")
    expected = (len(green), green[0][0][1] - 1 if green else red[0][0][1])
    if distinguished[1] != expected:
        raise TrailError(
            f"distinguished trail ends at {distinguished[1]}, expected {expected}"
        )
    return green2, red2, tuple(bits)


def fulmek_inverse(green, red, bits):
    """Inverse of the forward maps: flip exactly the trails with C_i = 1."""
    bits = tuple(bits)

    def decide(seq, _idx, _colour):
        if seq >= len(bits):
            raise TrailError("bit sequence too short")
        return bits[seq] == 1

    green2, red2, _distinguished = _exchange(green, red, decide)
    return green2, red2
