"""Holey Aztec rectangle graphs and exact matching-count oracles.

An M x N Aztec rectangle has vertex rows r = 1..2M+1, numbered top-down;
odd rows hold N vertices, even rows N+1, numbered 1..len left to right.
Every edge joins consecutive rows: (odd r, k) ~ (r+1, k), (r+1, k+1) and
(even r, k) ~ (r+1, k-1), (r+1, k), clipped to the row ranges.
"""

from __future__ import annotations

import json
from itertools import combinations


class GeometryError(ValueError):
    """Invalid rectangle, row, or hole specification."""


class OddVertexCountError(GeometryError):
    """The surviving vertex count is odd, so no perfect matching exists."""


def row_length(r, N):
    return N if r % 2 == 1 else N + 1


def central_row(M):
    """Index of the central vertex row of an M x N rectangle."""
    if M < 1:
        raise GeometryError("M must be >= 1")
    return M + 1


def row_below(M, d):
    """Vertex row by d below the central row (d edge-steps away)."""
    if not 0 <= d <= M:
        raise GeometryError(f"d must lie in [0, {M}], got {d}")
    return M + 1 + d


def row_above(M, d):
    """Mirror image of ``row_below``; counts agree by up-down symmetry."""
    if not 0 <= d <= M:
        raise GeometryError(f"d must lie in [0, {M}], got {d}")
    return M + 1 - d


class AztecRectangle:
    """The full (hole-free) rectangle; rows and diagonal adjacency."""

    def __init__(self, M, N):
        if M < 1 or N < 1:
            raise GeometryError(f"M, N must be >= 1, got {M}, {N}")
        self.M = M
        self.N = N

    @property
    def n_rows(self):
        return 2 * self.M + 1

    def row_length(self, r):
        if not 1 <= r <= self.n_rows:
            raise GeometryError(f"row {r} out of range 1..{self.n_rows}")
        return row_length(r, self.N)

    def vertices(self):
        for r in range(1, self.n_rows + 1):
            for k in range(1, self.row_length(r) + 1):
                yield (r, k)

    def neighbours_below(self, r, k):
        """Neighbours of (r, k) in row r+1, in left-to-right order."""
        if r >= self.n_rows:
            return ()
        below = self.row_length(r + 1)
        cand = (k, k + 1) if r % 2 == 1 else (k - 1, k)
        return tuple(c for c in cand if 1 <= c <= below)

    def edges(self):
        for r, k in self.vertices():
            for c in self.neighbours_below(r, k):
                yield ((r, k), (r + 1, c))


class HoleyAztecGraph:
    """Immutable rectangle-with-holes graph over the surviving vertices."""

    def __init__(self, base, removed):
        self.base = base
        removed = frozenset(removed)
        for r, k in removed:
            if not (1 <= r <= base.n_rows and 1 <= k <= base.row_length(r)):
                raise GeometryError(f"removed vertex {(r, k)} outside rectangle")
        self.removed = removed
        self.vertices = tuple(v for v in base.vertices() if v not in removed)
        alive = set(self.vertices)
        adj = {v: [] for v in self.vertices}
        for u, w in base.edges():
            if u in alive and w in alive:
                adj[u].append(w)
                adj[w].append(u)
        self.adjacency = {v: tuple(ns) for v, ns in adj.items()}

    def to_json(self):
        """Adjacency serialization with vertices as [row, index] pairs."""
        return json.dumps(
            {
                "M": self.base.M,
                "N": self.base.N,
                "removed": sorted(map(list, self.removed)),
                "adjacency": {
                    f"{r},{k}": sorted(map(list, self.adjacency[(r, k)]))
                    for r, k in self.vertices
                },
            },
            sort_keys=True,
        )


def build_holey_graph(M, N, row, kept, allow_odd=False):
    """Rectangle with holes in one vertex row: keep exactly ``kept`` there.

    ``kept`` lists the surviving 1-based positions of the row; every other
    vertex of that row is removed.  An odd surviving-vertex count is rejected
    unless ``allow_odd`` (useful for rendering only).
    """
    base = AztecRectangle(M, N)
    length = base.row_length(row)
    kept = sorted(set(kept))
    if any(not 1 <= k <= length for k in kept):
        raise GeometryError(f"kept positions {kept} outside row of length {length}")
    removed = {(row, k) for k in range(1, length + 1) if k not in set(kept)}
    g = HoleyAztecGraph(base, removed)
    if len(g.vertices) % 2 != 0 and not allow_odd:
        raise OddVertexCountError(
            f"{len(g.vertices)} surviving vertices; no perfect matching exists"
        )
    return g


def count_matchings(g):
    """Exact perfect-matching count by recursive min-degree elimination."""
    adj = {v: set(ns) for v, ns in g.adjacency.items()}

    def rec(alive):
        if not alive:
            return 1
        v = min(alive, key=lambda u: len(adj[u] & alive))
        nbrs = adj[v] & alive
        if not nbrs:
            return 0
        total = 0
        rest = alive - {v}
        for u in nbrs:
            total += rec(rest - {u})
        return total

    if len(g.vertices) % 2 != 0:
        return 0
    return rec(set(g.vertices))


def count_matchings_profile_dp(g):
    """Exact count by row-frontier dynamic programming.

    All edges join consecutive rows, so after processing rows 1..r the only
    state needed is which survivors of row r are already matched upward.
    States are bitmasks over the row's surviving positions.
    """
    if len(g.vertices) % 2 != 0:
        return 0
    base = g.base
    rows = []
    for r in range(1, base.n_rows + 1):
        rows.append(
            tuple(
                k
                for k in range(1, base.row_length(r) + 1)
                if (r, k) not in g.removed
            )
        )

    dp = {0: 1}
    for r in range(1, base.n_rows + 1):
        cur = rows[r - 1]
        nxt = rows[r] if r < base.n_rows else ()
        nxt_pos = {k: i for i, k in enumerate(nxt)}
        # neighbour bitmask in the next row for each current-row position
        down = []
        for k in cur:
            mask = 0
            for c in base.neighbours_below(r, k):
                if c in nxt_pos:
                    mask |= 1 << nxt_pos[c]
            down.append(mask)

        new_dp = {}
        for state, ways in dp.items():
            unmatched = [i for i in range(len(cur)) if not state & (1 << i)]

            def assign(j, used):
                if j == len(unmatched):
                    new_dp[used] = new_dp.get(used, 0) + ways
                    return
                free = down[unmatched[j]] & ~used
                while free:
                    bit = free & -free
                    assign(j + 1, used | bit)
                    free ^= bit

            assign(0, 0)
        dp = new_dp
        if not dp:
            return 0
    return dp.get(0, 0)
