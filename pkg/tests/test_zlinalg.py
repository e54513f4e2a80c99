import itertools

import pytest
from hypothesis import given, strategies as st

from f1cong import zlinalg as zl

entry = st.integers(-3, 3)


def basis(n):
    return st.lists(st.lists(entry, min_size=n, max_size=n), max_size=3)


@given(basis(3))
def test_hnf_idempotent(rows):
    L = zl.hnf(rows, 3)
    assert zl.hnf(L.basis, 3) == L


def _search(rows, v, bound):
    return any(all(sum(c * r[i] for c, r in zip(cs, rows)) == v[i] for i in range(2))
               for cs in itertools.product(range(-bound, bound + 1), repeat=len(rows)))


@given(st.lists(st.lists(entry, min_size=2, max_size=2), max_size=2), st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_member_agrees_with_exhaustive_search(rows, v):
    member = zl.lattice_member(v, zl.hnf(rows, 2))
    if _search(rows, v, 5):
        assert member
    # some members need coefficients beyond 5 (e.g. (3,-6) from (3,1),(-1,0)); widen for the converse
    if member:
        assert _search(rows, v, 40)


def test_member_needing_large_coefficients():
    rows = [[3, 1], [-1, 0]]
    assert zl.lattice_member([3, -6], zl.hnf(rows, 2))
    assert not _search(rows, [3, -6], 5)


@given(basis(2), basis(2), basis(2))
def test_sum_is_commutative_associative_with_identity(a, b, c):
    A, B, C = (zl.hnf(x, 2) for x in (a, b, c))
    assert zl.lattice_equal(zl.lattice_sum(A, B), zl.lattice_sum(B, A))
    assert zl.lattice_equal(zl.lattice_sum(zl.lattice_sum(A, B), C), zl.lattice_sum(A, zl.lattice_sum(B, C)))
    assert zl.lattice_equal(zl.lattice_sum(A, zl.zero_lattice(2)), A)


@given(basis(2), basis(2))
def test_intersection_is_contained_in_both(a, b):
    A, B = zl.hnf(a, 2), zl.hnf(b, 2)
    I = zl.intersection(A, B)
    assert zl.lattice_le(I, A) and zl.lattice_le(I, B)
    assert zl.lattice_equal(zl.intersection(A, A), A)


@given(st.lists(st.lists(entry, min_size=3, max_size=3), min_size=1, max_size=2))
def test_kernel_vectors_are_killed(M):
    K = zl.kernel(M, 3)
    for v in K.basis:
        assert all(sum(m * x for m, x in zip(row, v)) == 0 for row in M)


def test_known_values():
    L = zl.hnf([[2, 4], [0, 6]])
    assert L.basis == ((2, 4), (0, 6))
    assert zl.lattice_member([2, -2], L)
    assert not zl.lattice_member([1, 0], L)
    assert zl.full_lattice(2).is_full()
    assert zl.kernel([[1, 1]], 2).basis == ((1, -1),)


def test_dimension_errors():
    with pytest.raises(zl.DimensionError):
        zl.hnf([[1, 2], [1]])
    with pytest.raises(zl.DimensionError):
        zl.lattice_sum(zl.zero_lattice(1), zl.zero_lattice(2))


def test_small_lattices_are_distinct_and_in_hnf():
    Ls = list(zl.small_lattices(2, 2))
    assert len(set(Ls)) == len(Ls)
    assert all(zl.hnf(L.basis, 2) == L for L in Ls)
