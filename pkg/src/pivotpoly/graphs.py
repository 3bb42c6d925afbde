"""Graphs as symmetric GF(2) matrices, with loops on the diagonal.

Pivots on graphs decompose into two elementary moves: local complementation
at a looped vertex and edge complementation on an edge between loopless
vertices.  Both are implemented directly as row-mask updates and agree
entrywise with the matrix pivot on the same subset.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .matrix import (
    GF2,
    Matrix,
    PivotUndefinedError,
    SubsetMask,
    nullity_by_bits,
)
from .setsystems import SetSystem

__all__ = [
    "OrbitOverflowError",
    "PivotOrbit",
    "graph_from_edges",
    "require_graph",
    "edges_of",
    "local_complement",
    "edge_complement",
    "elementary_pivots",
    "elementary_decomposition",
    "pivot_orbit",
    "graph_from_set_system",
]


class OrbitOverflowError(RuntimeError):
    """Pivot-orbit enumeration exceeded the configured graph cap."""


def graph_from_edges(labels, edges) -> Matrix:
    """Build a graph from (u, v) pairs; a pair (u, u) is a loop."""
    domain = tuple(sorted(set(labels)))
    A = Matrix.zeros(GF2, domain)
    rows = list(A.rows)
    for u, v in edges:
        i = A.index_of(u)
        j = A.index_of(v)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Matrix(GF2, domain, tuple(rows))


def require_graph(G: Matrix) -> None:
    """Reject matrices that are not symmetric GF(2) adjacency matrices."""
    if G.field != GF2:
        raise ValueError("graphs are matrices over GF(2)")
    if not G.is_symmetric():
        raise ValueError("graph adjacency matrix must be symmetric")


def edges_of(G: Matrix) -> tuple[tuple[str, str], ...]:
    """All edges as sorted label pairs; loops appear as (u, u)."""
    require_graph(G)
    out = []
    for i in range(G.n):
        for j in range(i, G.n):
            if G.rows[i] >> j & 1:
                out.append((G.domain[i], G.domain[j]))
    return tuple(out)


def local_complement(G: Matrix, u: str) -> Matrix:
    """Pivot on a looped vertex: complement all adjacencies inside its
    neighbourhood, loops included."""
    require_graph(G)
    i = G.index_of(u)
    if not G.rows[i] >> i & 1:
        raise PivotUndefinedError(
            f"elementary pivot undefined: no loop at {u}", SubsetMask(G.domain, 1 << i)
        )
    hood = G.rows[i] & ~(1 << i)
    rows = list(G.rows)
    m = hood
    while m:
        v = (m & -m).bit_length() - 1
        rows[v] ^= hood
        m &= m - 1
    return Matrix(GF2, G.domain, tuple(rows))


def edge_complement(G: Matrix, u: str, v: str) -> Matrix:
    """Pivot on an edge between loopless vertices.

    The closed neighbourhoods of u and v split the affected vertices into
    three classes; every adjacency between two different classes is toggled,
    which also hands u's neighbours to v and vice versa.  Loops never change.
    """
    require_graph(G)
    i = G.index_of(u)
    j = G.index_of(v)
    if i == j:
        raise PivotUndefinedError(f"elementary pivot undefined: {u} is not an edge")
    if not G.rows[i] >> j & 1:
        raise PivotUndefinedError(
            f"elementary pivot undefined: no edge between {u} and {v}",
            SubsetMask(G.domain, (1 << i) | (1 << j)),
        )
    if G.rows[i] >> i & 1 or G.rows[j] >> j & 1:
        raise PivotUndefinedError(
            f"elementary pivot undefined: loop on an endpoint of {{{u},{v}}}",
            SubsetMask(G.domain, (1 << i) | (1 << j)),
        )
    closed_u = G.rows[i] | (1 << i)
    closed_v = G.rows[j] | (1 << j)
    only_u = closed_u & ~closed_v
    only_v = closed_v & ~closed_u
    both = closed_u & closed_v
    rows = list(G.rows)
    for cls, others in ((only_u, only_v | both), (only_v, only_u | both), (both, only_u | only_v)):
        m = cls
        while m:
            x = (m & -m).bit_length() - 1
            rows[x] ^= others
            m &= m - 1
    return Matrix(GF2, G.domain, tuple(rows))


def _apply_elementary(G: Matrix, part_bits: int) -> Matrix:
    if part_bits.bit_count() == 1:
        return local_complement(G, G.domain[part_bits.bit_length() - 1])
    i = (part_bits & -part_bits).bit_length() - 1
    j = part_bits.bit_length() - 1
    return edge_complement(G, G.domain[i], G.domain[j])


def _elementary_parts_bits(G: Matrix, within: "int | None" = None) -> list[int]:
    """Applicable elementary pivots as bitmasks: loops first by label, then
    loopless edges in lexicographic order, optionally confined to a mask."""
    scope = ((1 << G.n) - 1) if within is None else within
    loops = []
    edges = []
    for i in range(G.n):
        if not scope >> i & 1:
            continue
        if G.rows[i] >> i & 1:
            loops.append(1 << i)
            continue
        for j in range(i + 1, G.n):
            if (
                scope >> j & 1
                and G.rows[i] >> j & 1
                and not G.rows[j] >> j & 1
            ):
                edges.append((1 << i) | (1 << j))
    return loops + edges


def elementary_pivots(G: Matrix) -> tuple[SubsetMask, ...]:
    """The applicable elementary pivots of G: loops and loopless edges."""
    require_graph(G)
    return tuple(SubsetMask(G.domain, b) for b in _elementary_parts_bits(G))


def elementary_decomposition(G: Matrix, Y: SubsetMask) -> list[SubsetMask]:
    """Split a valid pivot subset into loops and loopless edges.

    The parts are disjoint with union Y, and applying the matching
    elementary pivots left to right reproduces the pivot of G on Y.  The
    greedy choice (smallest loop, else smallest edge) is taken first; if it
    ever left a dead end, the search would back off and try the remaining
    candidates.
    """
    require_graph(G)
    if G.domain != Y.domain:
        raise ValueError("subset domain differs from graph domain")
    if nullity_by_bits(G, Y.bits) != 0:
        raise PivotUndefinedError(f"pivot undefined: G[{Y}] singular", Y)
    parts = _decompose(G, Y.bits)
    if parts is None:
        raise RuntimeError(f"no elementary decomposition found for {Y}")
    return [SubsetMask(G.domain, b) for b in parts]


def _decompose(G: Matrix, remaining: int):
    if remaining == 0:
        return []
    for part in _elementary_parts_bits(G, within=remaining):
        rest = _decompose(_apply_elementary(G, part), remaining ^ part)
        if rest is not None:
            return [part] + rest
    return None


@dataclass(frozen=True)
class PivotOrbit:
    """Closure of a graph under pivot, with the elementary moves that connect it.

    ``graphs`` is ordered canonically by adjacency rows; each move is a
    triple (i, X, j) meaning graphs[i] pivoted on X gives graphs[j], stored
    once per unordered pair.
    """

    graphs: tuple[Matrix, ...]
    moves: tuple[tuple[int, SubsetMask, int], ...]


def pivot_orbit(G: Matrix, max_graphs: int = 10**6) -> PivotOrbit:
    """Breadth-first closure of G under all pivots.

    Every pivot factors into elementary ones, so expanding only loops and
    loopless edges reaches the whole orbit.
    """
    require_graph(G)
    seen: dict[Matrix, int] = {G: 0}
    order = [G]
    raw_moves: list[tuple[int, int, int]] = []
    queue = deque([G])
    while queue:
        H = queue.popleft()
        hi = seen[H]
        for part in _elementary_parts_bits(H):
            K = _apply_elementary(H, part)
            ki = seen.get(K)
            if ki is None:
                if len(order) >= max_graphs:
                    raise OrbitOverflowError(
                        f"pivot orbit exceeds {max_graphs} graphs"
                    )
                ki = len(order)
                seen[K] = ki
                order.append(K)
                queue.append(K)
            raw_moves.append((hi, part, ki))
    ranking = sorted(range(len(order)), key=lambda idx: order[idx].rows)
    relabel = {old: new for new, old in enumerate(ranking)}
    graphs = tuple(order[idx] for idx in ranking)
    dedup = set()
    for i, part, j in raw_moves:
        a, b = sorted((relabel[i], relabel[j]))
        dedup.add((a, b, part))
    moves = tuple(
        (a, SubsetMask(G.domain, part), b) for a, b, part in sorted(dedup)
    )
    return PivotOrbit(graphs, moves)


def graph_from_set_system(M: SetSystem) -> Matrix:
    """Rebuild a graph from its nonsingular-subset system.

    A vertex is looped exactly when its singleton is a member, and a pair is
    an edge exactly when its pair-membership differs from the conjunction of
    the two singleton memberships.  Garbage in, garbage out: the input is
    assumed to come from a graph.
    """
    n = len(M.domain)
    members = M.members
    rows = [0] * n
    for i in range(n):
        if (1 << i) in members:
            rows[i] |= 1 << i
    for i in range(n):
        for j in range(i + 1, n):
            singles = ((1 << i) in members) and ((1 << j) in members)
            if (((1 << i) | (1 << j)) in members) != singles:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Matrix(GF2, M.domain, tuple(rows))
