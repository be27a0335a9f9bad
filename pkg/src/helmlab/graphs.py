"""Helm graphs and their distance matrices.

The helm graph on 2n-1 vertices is a wheel (hub plus an (n-1)-cycle rim)
with one pendant vertex hanging off each rim vertex.  Vertices are
ordered hub first, then the rim v_1..v_{n-1}, then the pendants
u_1..u_{n-1}; every closed-form block below depends on this order.

Two independent routes to the distance matrix are provided: plain BFS
from every vertex, and the 3x3 block formula built from the rim distance
circulant.  They are cross-checked against each other in the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .exact_core import RatMatrix, VerificationError
from .circulant import (
    cycle_signless_laplacian_spec,
    materialize,
    rim_distance_spec,
)


class NTooSmallError(ValueError):
    """Helm graphs need n >= 4."""


@dataclass(frozen=True)
class HelmInstance:
    """Adjacency lists of a helm graph, in hub / rim / pendant order."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return 2 * self.n - 1

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2


def build_helm(n: int) -> HelmInstance:
    """Helm graph: hub 0, rim 1..n-1 in a cycle, pendant n-1+i below rim i."""
    if n < 4:
        raise NTooSmallError(f"helm graphs need n >= 4, got {n}")
    size = 2 * n - 1
    nbrs: list[list[int]] = [[] for _ in range(size)]

    def link(a: int, b: int) -> None:
        nbrs[a].append(b)
        nbrs[b].append(a)

    for i in range(1, n):
        link(0, i)
    for i in range(1, n - 1):
        link(i, i + 1)
    link(n - 1, 1)
    for i in range(1, n):
        link(i, n - 1 + i)
    return HelmInstance(n, tuple(tuple(sorted(a)) for a in nbrs))


def bfs_distance_matrix(g: HelmInstance) -> RatMatrix:
    """All-pairs shortest path lengths via BFS from every vertex."""
    size = g.vertex_count
    rows: list[list[int]] = []
    for src in range(size):
        dist = [-1] * size
        dist[src] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        rows.append(dist)
    return RatMatrix.from_rows(rows)


def helm_distance_block(n: int) -> RatMatrix:
    """Distance matrix of the helm graph from its 3x3 block closed form.

    With Dr the rim distance circulant of order n-1, J the all-ones and
    I the identity:

        [ 0    e'      2e'          ]
        [ e    Dr      Dr + J       ]
        [ 2e   Dr + J  Dr + 2(J - I)]

    Before returning, the assembly is checked against the equivalent
    split into a rank-structured part plus a circulant correction built
    from the rim cycle's signless Laplacian S (spec (2,1,0,...,0,1)):
    the rim distance block is 2J - S.
    """
    if n < 4:
        raise NTooSmallError(f"helm graphs need n >= 4, got {n}")
    k = n - 1
    d_rim = materialize(rim_distance_spec(k))
    j = RatMatrix.ones(k, k)
    i = RatMatrix.identity(k)
    e_row = RatMatrix.ones(1, k)
    e_col = RatMatrix.ones(k, 1)
    d = RatMatrix.from_blocks(
        [
            [0, e_row, 2 * e_row],
            [e_col, d_rim, d_rim + j],
            [2 * e_col, d_rim + j, d_rim + 2 * (j - i)],
        ]
    )
    s = materialize(cycle_signless_laplacian_spec(k))
    zeros_row = RatMatrix.zeros(1, k)
    zeros_col = RatMatrix.zeros(k, 1)
    d_flat = RatMatrix.from_blocks(
        [
            [0, e_row, 2 * e_row],
            [e_col, 2 * j, 3 * j],
            [2 * e_col, 3 * j, 4 * j],
        ]
    )
    d_corr = RatMatrix.from_blocks(
        [
            [0, zeros_row, zeros_row],
            [zeros_col, -1 * s, -1 * s],
            [zeros_col, -1 * s, -1 * (s + 2 * i)],
        ]
    )
    if d != d_flat + d_corr:
        raise VerificationError("block distance matrix disagrees with its split form")
    return d
