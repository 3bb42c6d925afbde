"""Double occurrence strings, overlap graphs, and closed-walk tracing.

A double occurrence string (every letter exactly twice) describes an Euler
circuit of a 2-in, 2-out digraph: consecutive letters give the arcs.  At
each vertex the circuit pairs one incoming arc with one outgoing arc; a
subset X of vertices selects the swapped pairing there instead, and the
arcs then decompose into closed walks.  The number of walks is tied to the
nullity of the overlap graph: walks = nullity(overlap[X]) + 1, which makes
this tracer an independent oracle for the algebra.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import GF2, Matrix, SubsetMask, check_labels, nullity_by_bits
from .setsystems import ENUMERATION_CAP

__all__ = [
    "TwoInTwoOutDigraph",
    "WalkPartition",
    "check_double_occurrence",
    "parse_dos",
    "dos_domain",
    "overlap_graph",
    "digraph_of",
    "trace_partition",
    "walk_labels",
    "cohn_lempel_check",
    "walk_distribution",
    "count_euler_circuits",
    "canonical_rotation",
    "cyclic_equal",
    "align_rotation",
]


def check_double_occurrence(letters: Iterable[str]) -> tuple[str, ...]:
    """Validate and normalize a double occurrence string to a letter tuple."""
    s = tuple(letters)
    if not s:
        raise ValueError("double occurrence string must be non-empty")
    counts = Counter(s)
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise ValueError(f"every letter must occur exactly twice; offenders: {bad}")
    check_labels(counts.keys())
    return s


def parse_dos(text: str) -> tuple[str, ...]:
    """Parse a string argument: whitespace-separated tokens if any whitespace
    is present, otherwise one letter per character."""
    stripped = text.strip()
    tokens = stripped.split() if any(ch.isspace() for ch in stripped) else list(stripped)
    return check_double_occurrence(tokens)


def dos_domain(s: Sequence[str]) -> tuple[str, ...]:
    return tuple(sorted(set(s)))


def _occurrences(s: Sequence[str]) -> dict[str, tuple[int, int]]:
    occ: dict[str, list[int]] = {}
    for pos, lab in enumerate(s):
        occ.setdefault(lab, []).append(pos)
    return {lab: (ps[0], ps[1]) for lab, ps in occ.items()}


def overlap_graph(s: Sequence[str]) -> Matrix:
    """The loopless graph joining letters whose occurrences interleave.

    Letters u and v interleave when they read u,v,u,v or v,u,v,u along the
    string, i.e. exactly one occurrence of v falls between the two
    occurrences of u.
    """
    s = check_double_occurrence(s)
    domain = dos_domain(s)
    occ = _occurrences(s)
    n = len(domain)
    rows = [0] * n
    for i in range(n):
        p, q = occ[domain[i]]
        for j in range(i + 1, n):
            inside = sum(p < t < q for t in occ[domain[j]])
            if inside == 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Matrix(GF2, domain, tuple(rows))


@dataclass(frozen=True)
class TwoInTwoOutDigraph:
    """A digraph where every vertex has two incoming and two outgoing arcs.

    Arcs are ordered pairs and may be parallel; their tuple position is the
    arc identity used by walk traces.
    """

    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        outs = Counter(t for t, _ in self.arcs)
        ins = Counter(h for _, h in self.arcs)
        for v in self.vertices:
            if outs[v] != 2 or ins[v] != 2:
                raise ValueError(f"vertex {v!r} is not 2-in, 2-out")
        if set(outs) | set(ins) != set(self.vertices):
            raise ValueError("arcs mention vertices outside the vertex set")


def digraph_of(s: Sequence[str]) -> TwoInTwoOutDigraph:
    """The 2-in, 2-out digraph whose Euler circuit reads the string.

    Arc i runs from s[i] to s[i+1], cyclically.
    """
    s = check_double_occurrence(s)
    L = len(s)
    arcs = tuple((s[i], s[(i + 1) % L]) for i in range(L))
    return TwoInTwoOutDigraph(dos_domain(s), arcs)


@dataclass(frozen=True)
class WalkPartition:
    """Closed walks covering every arc exactly once.

    Each walk is a cyclic arc-index sequence rotated to start at its
    smallest arc; walks are listed in order of that starting arc.
    """

    walks: tuple[tuple[int, ...], ...]
    inducing_set: SubsetMask

    def __len__(self) -> int:
        return len(self.walks)


def _successors(s: Sequence[str], flip_bits: int, domain: Sequence[str]) -> list[int]:
    """succ[a] is the arc leaving the head of arc a under the chosen pairing.

    The circuit pairing sends the arc entering an occurrence to the arc
    leaving that same occurrence; flipped vertices route to the other
    occurrence instead.
    """
    L = len(s)
    occ = _occurrences(s)
    position = {lab: i for i, lab in enumerate(domain)}
    succ = [0] * L
    for a in range(L):
        t = (a + 1) % L
        head = s[t]
        if flip_bits >> position[head] & 1:
            p, q = occ[head]
            succ[a] = q if t == p else p
        else:
            succ[a] = t
    return succ


def trace_partition(s: Sequence[str], X: SubsetMask) -> WalkPartition:
    """Decompose the arcs into closed walks, swapping the pairing inside X."""
    s = check_double_occurrence(s)
    domain = dos_domain(s)
    if X.domain != domain:
        raise ValueError("flip set domain differs from the string's letters")
    succ = _successors(s, X.bits, domain)
    L = len(s)
    visited = [False] * L
    walks = []
    for start in range(L):
        if visited[start]:
            continue
        walk = []
        a = start
        while not visited[a]:
            visited[a] = True
            walk.append(a)
            a = succ[a]
        walks.append(tuple(walk))
    return WalkPartition(tuple(walks), X)


def walk_labels(s: Sequence[str], walk: Sequence[int]) -> tuple[str, ...]:
    """The vertex string read along a walk: the tail of each arc in order."""
    return tuple(s[a] for a in walk)


def cohn_lempel_check(s: Sequence[str], X: SubsetMask) -> tuple[int, int]:
    """The pair (walk count, nullity of overlap[X] + 1); equal in every case."""
    part = trace_partition(s, X)
    ov = overlap_graph(s)
    return len(part), nullity_by_bits(ov, X.bits) + 1


def walk_distribution(s: Sequence[str]) -> tuple[int, ...]:
    """Histogram over all flip subsets of (walk count - 1).

    Entry i counts the subsets that split the arcs into i+1 closed walks;
    entry 0 is the number of Euler circuits of the digraph.  Matches the
    norm of the overlap graph's partition sequence.
    """
    s = check_double_occurrence(s)
    domain = dos_domain(s)
    n = len(domain)
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"alphabet size {n} exceeds the subset enumeration cap {ENUMERATION_CAP}"
        )
    counts = [0] * (n + 1)
    for bits in range(1 << n):
        part = trace_partition(s, SubsetMask(domain, bits))
        counts[len(part) - 1] += 1
    return tuple(counts)


def count_euler_circuits(d: TwoInTwoOutDigraph) -> int:
    """Count Euler circuits by backtracking over arcs.

    Each circuit uses arc 0 exactly once, so rooting the search there counts
    every circuit once, independently of any pairing sweep.
    """
    L = len(d.arcs)
    if L == 0:
        return 0
    out_arcs: dict[str, list[int]] = {v: [] for v in d.vertices}
    for idx, (tail, _) in enumerate(d.arcs):
        out_arcs[tail].append(idx)
    used = [False] * L
    used[0] = True
    start_tail, start_head = d.arcs[0]

    def extend(cur: str, remaining: int) -> int:
        if remaining == 0:
            return 1 if cur == start_tail else 0
        total = 0
        for idx in out_arcs[cur]:
            if not used[idx]:
                used[idx] = True
                total += extend(d.arcs[idx][1], remaining - 1)
                used[idx] = False
        return total

    return extend(start_head, L - 1)


def canonical_rotation(seq: Sequence) -> tuple:
    """The lexicographically smallest rotation of a cyclic sequence."""
    t = tuple(seq)
    if not t:
        return t
    return min(t[i:] + t[:i] for i in range(len(t)))


def cyclic_equal(a: Sequence, b: Sequence) -> bool:
    """Whether two sequences are equal up to rotation (reversal is distinct)."""
    return len(a) == len(b) and canonical_rotation(a) == canonical_rotation(b)


def align_rotation(a: Sequence, b: Sequence) -> "int | None":
    """An r with rotate(a, r) == b, or None; rotate moves a[r] to the front."""
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        return None
    for r in range(len(a) or 1):
        if a[r:] + a[:r] == b:
            return r
    return None
