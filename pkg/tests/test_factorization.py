from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import product_census, total_count, transitive_count
from hurwitz.errors import BudgetExceeded, ValidationError
from hurwitz.factorization import (
    canonical_permutation,
    class_vector,
    connected_sieve,
    cut_join_step,
    cycle_type,
    hurwitz_from_factorizations,
    identity_class_vector,
    is_transitive,
    total_factorization_count,
    transitive_factorization_count_dfs,
)
from hurwitz.closed_form import hurwitz_closed
from hurwitz.partitions import conjugacy_class_size, make_partition, partitions_of, r_value

P = make_partition


@pytest.mark.parametrize("d", range(1, 7))
def test_canonical_permutation_has_requested_type(d):
    for alpha in partitions_of(d):
        assert cycle_type(canonical_permutation(alpha)) == alpha


def test_cycle_type_rejects_non_permutations():
    with pytest.raises(ValidationError):
        cycle_type((0, 0, 1))


def test_is_transitive():
    assert is_transitive(3, [(0, 1), (1, 2)])
    assert not is_transitive(3, [(0, 1), (0, 1)])
    assert is_transitive(1, [])


@pytest.mark.parametrize("raw, r, expected", [
    ([2, 1], 3, 8),
    ([2], 1, 1),
    ([1, 1, 1], 4, 24),
    ([1, 1], 6, 1),
    ([1], 0, 1),
    ([1, 1], 0, 0),
])
def test_dfs_examples(raw, r, expected):
    assert transitive_factorization_count_dfs(P(raw), r) == expected


@pytest.mark.parametrize("d, r", [(2, 3), (3, 2), (3, 3), (3, 4), (3, 5), (4, 3), (4, 4)])
def test_dfs_matches_product_enumeration(d, r):
    for alpha in partitions_of(d):
        assert transitive_factorization_count_dfs(alpha, r) == transitive_count(alpha.parts, r)


def test_dfs_budget():
    with pytest.raises(BudgetExceeded) as info:
        transitive_factorization_count_dfs(P([1] * 5), 8, budget=10**6)
    assert info.value.cap == 10**6
    assert "cap 1000000" in str(info.value)
    with pytest.raises(ValidationError):
        transitive_factorization_count_dfs(P([2]), -1)


def test_dfs_parallel_split_agrees():
    alpha = P([2, 1, 1])
    assert transitive_factorization_count_dfs(alpha, 5, workers=2) == transitive_factorization_count_dfs(alpha, 5)


def test_cut_join_examples():
    v1 = cut_join_step(identity_class_vector(3))
    assert v1.coeffs == {P([2, 1]): 3}
    v2 = cut_join_step(v1)
    assert v2.coeffs == {P([1, 1, 1]): 3, P([3]): 6}
    assert v2.steps == 2
    assert cut_join_step(identity_class_vector(2)).coeffs == {P([2]): 1}


@pytest.mark.parametrize("d, steps", [(2, 3), (3, 4), (4, 3), (4, 4)])
def test_class_vector_matches_product_enumeration(d, steps):
    census = product_census(d, steps)
    by_type = Counter()
    for (parts, _), n in census.items():
        by_type[P(list(parts))] += n
    assert class_vector(d, steps).coeffs == dict(by_type)


@pytest.mark.parametrize("d", range(1, 9))
def test_class_vector_invariants(d):
    n_trans = d * (d - 1) // 2
    for steps in range(0, 13):
        v = class_vector(d, steps)
        assert v.total() == n_trans ** steps
        for lam, coeff in v.coeffs.items():
            if (steps - (d - lam.length)) % 2:
                assert coeff == 0
            assert coeff % conjugacy_class_size(lam) == 0


@pytest.mark.parametrize("raw, r, expected", [([2, 1], 3, 9), ([1, 1], 2, 1), ([3], 2, 3)])
def test_total_factorization_examples(raw, r, expected):
    assert total_factorization_count(P(raw), r) == expected
    assert total_count(tuple(raw), r) == expected


@pytest.mark.parametrize("raw, r, expected", [([2, 1], 3, 8), ([1, 1], 2, 1), ([1], 0, 1), ([1], 2, 0)])
def test_sieve_examples(raw, r, expected):
    assert connected_sieve(P(raw), r) == expected


@pytest.mark.parametrize("d", range(1, 5))
def test_sieve_matches_dfs_small(d):
    for alpha in partitions_of(d):
        for r in range(0, 7):
            if (d * (d - 1) // 2) ** r > 2 * 10**5:
                break
            assert connected_sieve(alpha, r) == transitive_factorization_count_dfs(alpha, r)


@pytest.mark.parametrize("d", range(1, 9))
def test_sieve_vanishes_below_riemann_hurwitz_bound(d):
    for alpha in partitions_of(d):
        for r in range(0, r_value(0, alpha)):
            assert connected_sieve(alpha, r) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=5), st.integers(0, 14))
def test_sieve_nonnegative_and_bounded_by_total(raw, r):
    alpha = P(raw)
    if alpha.d > 9:
        return
    c = connected_sieve(alpha, r)
    assert 0 <= c <= total_factorization_count(alpha, r)


@pytest.mark.parametrize("g, raw, method, expected", [
    (0, [2, 1], "dfs", 4),
    (1, [2], "dfs", Fraction(1, 2)),
    (2, [1, 1], "sieve", 1),
    (2, [1, 1], "dfs", 1),
])
def test_hurwitz_from_factorizations_examples(g, raw, method, expected):
    assert hurwitz_from_factorizations(g, P(raw), method) == expected


def test_hurwitz_from_factorizations_rejects():
    with pytest.raises(ValidationError):
        hurwitz_from_factorizations(-2, P([1]), "sieve")
    with pytest.raises(ValidationError):
        hurwitz_from_factorizations(0, P([1]), "magic")


@pytest.mark.parametrize("d", range(1, 9))
def test_sieve_reproduces_closed_forms(d):
    for alpha in partitions_of(d):
        for g in (0, 1):
            assert hurwitz_from_factorizations(g, alpha, "sieve") == hurwitz_closed(g, alpha)
