"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one pass/fail line (run with ``pytest -s`` to see them all).
All equality checks are bit-exact; the time limits bound the core
computation, measured after one warm-up run where the criterion is a fixed
instance.
"""

import random
import time

from pivotpoly import (
    GF2,
    RATIONAL,
    Matrix,
    SubsetMask,
    cohn_lempel_check,
    count_euler_circuits,
    cyclic_equal,
    digraph_of,
    edge_complement,
    edges_of,
    elementary_decomposition,
    elementary_pivots,
    interlace_polynomial,
    interlace_recursive,
    local_complement,
    norm,
    nullity,
    nullity_polynomial,
    overlap_graph,
    partition_sequence_of,
    pivot,
    principal_submatrix,
    set_system_of,
    trace_partition,
    tucker_determinant_check,
    walk_distribution,
    walk_labels,
)
from pivotpoly.circuits import dos_domain
from pivotpoly.interlace import Poly
from pivotpoly.matrix import nullity_by_bits
from pivotpoly.randgen import random_graph, random_matrix, random_valid_pivot_subset

from samples import (
    LEFT_CLASSES,
    PAIR_NORM,
    RIGHT_CLASSES,
    SAMPLE_OVERLAP_EDGES,
    SAMPLE_PIVOT_AB,
    SAMPLE_STRING,
    REROUTED_STRING,
    SMALL_ORBIT_MOVES,
    classes_to_masks,
    pivot_pair_left,
    pivot_pair_right,
    sample_rational_matrix,
    small_orbit_graphs,
)
from test_interlace import all_graphs


def _report(num: int, ok: bool, elapsed: float, limit: float, detail: str = ""):
    note = f" {detail}" if detail else ""
    print(
        f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} "
        f"({elapsed * 1000:.2f} ms, limit {limit * 1000:.0f} ms){note}"
    )
    assert ok, f"criterion {num} failed{note}"
    assert elapsed < limit, f"criterion {num} exceeded {limit}s ({elapsed:.3f}s)"


def test_criterion_01_rational_pivot_reproduction():
    A = sample_rational_matrix()
    X = A.subset("a", "b")
    pivot(A, X)  # warm up
    t0 = time.perf_counter()
    B = pivot(A, X)
    elapsed = time.perf_counter() - t0
    ok = B.to_entries() == SAMPLE_PIVOT_AB
    ok = ok and nullity(principal_submatrix(A, A.subset("b", "c"))) == 1
    ok = ok and nullity(principal_submatrix(B, A.subset("a", "c"))) == 1
    _report(1, ok, elapsed, 0.001)


def test_criterion_02_graph_pair_reproduction():
    G = pivot_pair_left()
    H = pivot_pair_right()
    X = G.subset("1", "2", "3")
    pivot(G, X)
    partition_sequence_of(G)
    t0 = time.perf_counter()
    pivoted = pivot(G, X)
    P = partition_sequence_of(G)
    Q = partition_sequence_of(pivoted)
    elapsed = time.perf_counter() - t0
    ok = pivoted == H
    ok = ok and P.classes == classes_to_masks(G.domain, LEFT_CLASSES)
    ok = ok and Q.classes == classes_to_masks(H.domain, RIGHT_CLASSES)
    ok = ok and norm(P) == PAIR_NORM and norm(Q) == PAIR_NORM
    _report(2, ok, elapsed, 0.010)


def test_criterion_03_five_graph_orbit():
    from pivotpoly import pivot_orbit

    graphs = small_orbit_graphs()
    pivot_orbit(graphs[0])
    t0 = time.perf_counter()
    orbit = pivot_orbit(graphs[0])
    elapsed = time.perf_counter() - t0
    ok = len(orbit.graphs) == 5 and set(orbit.graphs) == set(graphs)
    position = {G: i for i, G in enumerate(orbit.graphs)}
    listed = {(a, X.labels(), b) for a, X, b in orbit.moves}
    for a, labels, b in SMALL_ORBIT_MOVES:
        i, j = position[graphs[a]], position[graphs[b]]
        want = (min(i, j), tuple(labels), max(i, j))
        ok = ok and want in listed
    _report(3, ok, elapsed, 0.010)


def test_criterion_04_string_reproduction():
    s = SAMPLE_STRING
    domain = dos_domain(s)
    overlap_graph(s)
    t0 = time.perf_counter()
    ov = overlap_graph(s)
    flip_four = SubsetMask.of(domain, ["3", "4", "5", "6"])
    part_four = trace_partition(s, flip_four)
    flip_two = SubsetMask.of(domain, ["1", "3"])
    part_two = trace_partition(s, flip_two)
    rerouted_overlap = overlap_graph(REROUTED_STRING)
    pivoted = pivot(ov, flip_two)
    elapsed = time.perf_counter() - t0
    ok = {frozenset(e) for e in edges_of(ov)} == SAMPLE_OVERLAP_EDGES
    ok = ok and nullity(ov) == 0
    ok = ok and len(part_four) == 3
    ok = ok and len(part_two) == 1
    ok = ok and cyclic_equal(walk_labels(s, part_two.walks[0]), REROUTED_STRING)
    ok = ok and rerouted_overlap == pivoted
    _report(4, ok, elapsed, 0.010)


def test_criterion_05_walk_count_law_exhaustive():
    s = SAMPLE_STRING
    domain = dos_domain(s)
    t0 = time.perf_counter()
    ok = True
    for bits in range(1 << len(domain)):
        walks, alg = cohn_lempel_check(s, SubsetMask(domain, bits))
        ok = ok and walks == alg
    dist = walk_distribution(s)
    alg_norm = norm(partition_sequence_of(overlap_graph(s)))
    circuits = count_euler_circuits(digraph_of(s))
    elapsed = time.perf_counter() - t0
    ok = ok and dist == alg_norm and dist[0] == circuits
    _report(5, ok, elapsed, 1.0, f"distribution {dist}, euler circuits {circuits}")


def test_criterion_06_nullity_invariance_suite():
    rng = random.Random(2024)
    failures = 0
    t0 = time.perf_counter()
    for _ in range(1000):
        n = rng.randint(1, 8)
        A = random_matrix(rng, GF2, n)
        X = random_valid_pivot_subset(rng, A)
        B = pivot(A, X)
        for y in range(1 << n):
            if nullity_by_bits(B, y) != nullity_by_bits(A, y ^ X.bits):
                failures += 1
                break
    for _ in range(1000):
        n = rng.randint(1, 6)
        A = random_matrix(rng, RATIONAL, n)
        X = random_valid_pivot_subset(rng, A)
        Y = SubsetMask(A.domain, rng.randrange(1 << n))
        B = pivot(A, X)
        if nullity(principal_submatrix(B, Y)) != nullity(
            principal_submatrix(A, X ^ Y)
        ):
            failures += 1
    elapsed = time.perf_counter() - t0
    _report(6, failures == 0, elapsed, 30.0, f"failures {failures}/2000")


def test_criterion_07_tucker_suite():
    rng = random.Random(2025)
    failures = 0
    t0 = time.perf_counter()
    for _ in range(1000):
        n = rng.randint(1, 6)
        A = random_matrix(rng, RATIONAL, n)
        X = random_valid_pivot_subset(rng, A)
        Y = SubsetMask(A.domain, rng.randrange(1 << n))
        if not tucker_determinant_check(A, X, Y):
            failures += 1
    elapsed = time.perf_counter() - t0
    _report(7, failures == 0, elapsed, 30.0, f"failures {failures}/1000")


def test_criterion_08_interlace_cross_method():
    rng = random.Random(2026)
    failures = 0
    t0 = time.perf_counter()
    count = 0
    for n in range(5):
        for G in all_graphs(n):
            count += 1
            if interlace_recursive(G) != interlace_polynomial(G):
                failures += 1
    for _ in range(500):
        G = random_graph(rng, rng.randint(1, 10))
        if interlace_recursive(G) != interlace_polynomial(G):
            failures += 1
    for n in range(7):
        discrete = Matrix.zeros(GF2, [f"v{i}" for i in range(n)])
        if interlace_recursive(discrete) != Poly.monomial(n):
            failures += 1
        if nullity_polynomial(discrete) != Poly.of([1, 1]) ** n:
            failures += 1
    elapsed = time.perf_counter() - t0
    _report(
        8,
        failures == 0,
        elapsed,
        60.0,
        f"failures {failures} over {count} exhaustive + 500 random graphs",
    )


def test_criterion_09_polynomial_pivot_invariance():
    rng = random.Random(2027)
    failures = 0
    t0 = time.perf_counter()
    for field, max_n, trials in ((GF2, 8, 250), (RATIONAL, 6, 250)):
        for _ in range(trials):
            n = rng.randint(1, max_n)
            A = random_matrix(rng, field, n)
            X = random_valid_pivot_subset(rng, A)
            if interlace_polynomial(pivot(A, X)) != interlace_polynomial(A):
                failures += 1
    elapsed = time.perf_counter() - t0
    _report(9, failures == 0, elapsed, 30.0, f"failures {failures}/500")


def test_criterion_10_elementary_pivot_correctness():
    rng = random.Random(2028)
    failures = 0
    t0 = time.perf_counter()
    for _ in range(500):
        G = random_graph(rng, rng.randint(1, 8))
        for X in elementary_pivots(G):
            labels = X.labels()
            if len(labels) == 1:
                built = local_complement(G, labels[0])
            else:
                built = edge_complement(G, labels[0], labels[1])
            if built != pivot(G, X):
                failures += 1
        for bits in sorted(set_system_of(G).members):
            Y = SubsetMask(G.domain, bits)
            H = G
            for part in elementary_decomposition(G, Y):
                part_labels = part.labels()
                if len(part_labels) == 1:
                    H = local_complement(H, part_labels[0])
                else:
                    H = edge_complement(H, part_labels[0], part_labels[1])
            if H != pivot(G, Y):
                failures += 1
    elapsed = time.perf_counter() - t0
    _report(10, failures == 0, elapsed, 60.0, f"failures {failures}")
