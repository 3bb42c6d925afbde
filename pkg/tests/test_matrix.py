import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pivotpoly import (
    GF2,
    RATIONAL,
    Matrix,
    SingularMatrixError,
    SubsetMask,
    delete_label,
    determinant,
    identity_outside,
    inverse,
    mat_mul,
    mat_vec,
    nullity,
    principal_submatrix,
    rank,
    schur_complement,
    transpose,
)
from pivotpoly.randgen import random_graph, random_matrix

import oracles
from samples import pivot_pair_left, sample_rational_matrix


# --- labels, masks, construction -------------------------------------------

@pytest.mark.parametrize("bad", ["", "a b", "x\t", "new\nline"])
def test_bad_labels_rejected(bad):
    with pytest.raises(ValueError):
        Matrix.zeros(GF2, ["ok", bad])


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        Matrix.zeros(GF2, ["a", "a"])


def test_from_entries_canonicalizes_label_order():
    A = Matrix.from_entries(RATIONAL, ["b", "a"], [[1, 2], [3, 4]])
    assert A.domain == ("a", "b")
    assert A.entry("a", "a") == 4
    assert A.entry("a", "b") == 3
    assert A.entry("b", "a") == 2
    assert A.entry("b", "b") == 1


def test_gf2_entries_validated():
    with pytest.raises(ValueError):
        Matrix.from_entries(GF2, ["a"], [[2]])


def test_subset_mask_basics():
    dom = ("a", "b", "c")
    X = SubsetMask.of(dom, ["c", "a"])
    assert X.labels() == ("a", "c")
    assert X.indices() == (0, 2)
    assert "a" in X and "b" not in X
    assert len(X) == 2
    assert str(X) == "{a,c}"
    assert X.complement().labels() == ("b",)
    with pytest.raises(ValueError):
        SubsetMask.of(dom, ["z"])
    with pytest.raises(ValueError):
        X ^ SubsetMask.empty(("a", "b"))


@given(st.integers(0, 255), st.integers(0, 255))
def test_mask_xor_is_symmetric_difference(x, y):
    dom = tuple(f"v{i}" for i in range(8))
    a, b = SubsetMask(dom, x), SubsetMask(dom, y)
    assert (a ^ b).bits == x ^ y
    assert (a ^ b) ^ b == a
    assert a ^ SubsetMask.empty(dom) == a
    assert (a ^ a).bits == 0


# --- principal submatrices ---------------------------------------------------

def test_submatrix_of_rational_sample():
    A = sample_rational_matrix()
    sub = principal_submatrix(A, A.subset("b", "c"))
    assert sub.domain == ("b", "c")
    assert sub.to_entries() == [[4, 2], [2, 1]]


def test_submatrix_empty_and_full():
    A = sample_rational_matrix()
    empty = principal_submatrix(A, A.subset())
    assert empty.n == 0 and empty.to_entries() == []
    assert principal_submatrix(A, A.full_subset()) == A


def test_submatrix_of_graph():
    G = pivot_pair_left()
    sub = principal_submatrix(G, G.subset("1", "2", "3"))
    assert sub.to_entries() == [[0, 0, 1], [0, 1, 1], [1, 1, 1]]


def test_submatrix_domain_mismatch():
    A = sample_rational_matrix()
    with pytest.raises(ValueError):
        principal_submatrix(A, SubsetMask.empty(("x", "y", "z")))


def test_delete_label():
    A = sample_rational_matrix()
    B = delete_label(A, "b")
    assert B.domain == ("a", "c")
    assert B.to_entries() == [[1, 5], [3, 1]]


# --- rank / nullity / determinant -------------------------------------------

def test_nullity_worked_values():
    A = sample_rational_matrix()
    assert nullity(principal_submatrix(A, A.subset("b", "c"))) == 1
    assert nullity(Matrix.zeros(RATIONAL, [])) == 0
    assert nullity(pivot_pair_left()) == 0


def test_determinant_worked_values():
    G = pivot_pair_left()
    assert determinant(principal_submatrix(G, G.subset("1", "2", "3"))) == 1
    assert determinant(Matrix.zeros(GF2, [])) == 1
    assert determinant(Matrix.zeros(RATIONAL, [])) == 1
    B = Matrix.from_entries(RATIONAL, ["a", "b"], [[1, 2], [1, 4]])
    assert determinant(B) == 2


def test_rank_nullity_and_transpose_agree():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(0, 7)
        field = rng.choice([GF2, RATIONAL])
        A = random_matrix(rng, field, n)
        assert rank(A) + nullity(A) == n
        assert rank(A) == rank(transpose(A))


def test_det_nonzero_iff_nullity_zero():
    rng = random.Random(13)
    for _ in range(80):
        n = rng.randint(0, 6)
        field = rng.choice([GF2, RATIONAL])
        A = random_matrix(rng, field, n)
        assert (determinant(A) != 0) == (nullity(A) == 0)


def test_rational_rank_and_det_against_expansion_oracle():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 5)
        A = random_matrix(rng, RATIONAL, n)
        dense = A.to_entries()
        assert determinant(A) == oracles.det_by_expansion(dense)
        assert rank(A) == oracles.rank_by_minors(dense)


def test_gf2_packed_rank_against_entrywise_oracle():
    rng = random.Random(19)
    for n in [1, 2, 3, 5, 8, 13, 21, 32, 48, 64]:
        A = random_matrix(rng, GF2, n)
        assert rank(A) == oracles.gf2_rank_entrywise(A.to_entries())


@given(
    st.lists(
        st.lists(st.integers(0, 1), min_size=6, max_size=6),
        min_size=6,
        max_size=6,
    )
)
def test_gf2_rank_matches_oracle_hypothesis(entries):
    A = Matrix.from_entries(GF2, [f"v{i}" for i in range(6)], entries)
    assert rank(A) == oracles.gf2_rank_entrywise(entries)


# --- inverse -----------------------------------------------------------------

def test_inverse_identity_and_permutation():
    I = Matrix.identity(RATIONAL, ["a", "b", "c"])
    assert inverse(I) == I
    swap = Matrix.from_entries(GF2, ["a", "b"], [[0, 1], [1, 0]])
    assert inverse(swap) == swap


def test_inverse_matches_gauss_jordan_oracle():
    A = sample_rational_matrix()
    inv = inverse(A)
    oracle = oracles.gauss_jordan_inverse(A.to_entries())
    assert inv.to_entries() == oracle
    assert mat_mul(A, inv) == Matrix.identity(RATIONAL, A.domain)


def test_inverse_random_round_trip():
    rng = random.Random(23)
    done = 0
    while done < 25:
        n = rng.randint(1, 6)
        field = rng.choice([GF2, RATIONAL])
        A = random_matrix(rng, field, n)
        if nullity(A) != 0:
            continue
        assert mat_mul(A, inverse(A)) == Matrix.identity(field, A.domain)
        done += 1


def test_inverse_singular_raises():
    with pytest.raises(SingularMatrixError):
        inverse(Matrix.zeros(RATIONAL, ["a", "b"]))
    with pytest.raises(SingularMatrixError):
        inverse(Matrix.zeros(GF2, ["a"]))


# --- identity_outside (row replacement) --------------------------------------

def test_identity_outside_trivial_cases():
    A = sample_rational_matrix()
    assert identity_outside(A, A.full_subset()) == A
    assert identity_outside(A, A.subset()) == Matrix.identity(RATIONAL, A.domain)


def test_identity_outside_worked_nullity():
    A = sample_rational_matrix()
    M = identity_outside(A, A.subset("b", "c"))
    assert M.to_entries()[0] == [1, 0, 0]
    assert nullity(M) == 1
    assert oracles.rank_by_minors(M.to_entries()) == 2


def test_identity_outside_nullity_matches_submatrix():
    rng = random.Random(29)
    for _ in range(100):
        n = rng.randint(1, 8)
        field = rng.choice([GF2, RATIONAL])
        A = random_matrix(rng, field, n)
        X = SubsetMask(A.domain, rng.randrange(1 << n))
        assert nullity(identity_outside(A, X)) == nullity(principal_submatrix(A, X))


# --- Schur complement ---------------------------------------------------------

def test_schur_empty_block_is_identity_on_A():
    A = sample_rational_matrix()
    assert schur_complement(A, A.subset()) == A


def test_schur_worked_value():
    A = sample_rational_matrix()
    S = schur_complement(A, A.subset("a", "b"))
    assert S.domain == ("c",)
    assert S.to_entries() == [[-20]]


def test_schur_singular_block_raises():
    A = sample_rational_matrix()
    with pytest.raises(SingularMatrixError):
        schur_complement(A, A.subset("b", "c"))


def test_schur_preserves_nullity():
    rng = random.Random(31)
    done = 0
    while done < 60:
        n = rng.randint(1, 7)
        field = rng.choice([GF2, RATIONAL])
        A = random_matrix(rng, field, n)
        X = SubsetMask(A.domain, rng.randrange(1 << n))
        if nullity(principal_submatrix(A, X)) != 0:
            continue
        assert nullity(schur_complement(A, X)) == nullity(A)
        done += 1


# --- products -----------------------------------------------------------------

def test_mat_mul_identity_and_mismatch():
    A = sample_rational_matrix()
    assert mat_mul(A, Matrix.identity(RATIONAL, A.domain)) == A
    G = random_graph(random.Random(1), 3)
    with pytest.raises(ValueError):
        mat_mul(A, G)


def test_mat_vec_both_fields():
    A = sample_rational_matrix()
    assert mat_vec(A, [1, 0, 0]) == [Fraction(1), Fraction(1), Fraction(3)]
    G = pivot_pair_left()
    ones = [1] * 4
    assert mat_vec(G, ones) == [(G.rows[i].bit_count()) & 1 for i in range(4)]
    with pytest.raises(ValueError):
        mat_vec(A, [1, 2])
