import pytest
from collections import Counter

from perimeter.counting import (
    IntPolynomial,
    a_even,
    a_odd,
    extraordinary_count,
    fibonacci,
    h_poly,
    h_zero_pattern,
    sum_dif,
    table_A,
    table_B,
    table_C,
)
from perimeter.errors import DomainError

from oracles import dif, even, extraordinary_brute, partitions_with_perimeter, rep


def _dist(values):
    c = Counter(values)
    return {k: v for k, v in c.items()}


@pytest.mark.parametrize("n", range(1, 13))
def test_tables_match_enumeration(n):
    H = partitions_with_perimeter(n)
    assert table_A(n).values == _dist(rep(lam) for lam in H)
    assert table_B(n).values == _dist(even(lam) for lam in H)


def test_small_rows():
    assert table_A(5).as_list() == [5, 5, 4, 1, 1]
    assert table_A(1).as_list() == [1]
    assert table_A(3).as_list() == [2, 1, 1]
    assert table_A(20).total() == 2**19


@pytest.mark.parametrize("n", range(1, 10))
def test_extraordinary_counts_match_brute_force(n):
    for k in range(1, n + 1):
        assert extraordinary_count(n, k) == extraordinary_brute(n, k)


def test_diagonal_boundary():
    assert [extraordinary_count(n, n) for n in range(1, 6)] == [1] * 5
    assert extraordinary_count(5, 2) == 5


@pytest.mark.parametrize("n", range(1, 17))
def test_rep_table_is_shifted_extraordinary_table(n):
    A = table_A(n)
    C = table_C(n)
    assert all(A[k] == C[k + 1] for k in range(n))


def test_h_poly_small():
    assert h_poly(1) == IntPolynomial([-1])
    assert h_poly(2) == IntPolynomial([-1, 1])
    assert list(h_poly(5)) == [1, -3, 2, 1, -1]
    assert str(IntPolynomial([0, 1, -1])) == "p - p^2"


@pytest.mark.parametrize("n", range(1, 13))
def test_h_poly_is_signed_distribution(n):
    acc = Counter()
    for lam in partitions_with_perimeter(n):
        acc[rep(lam)] += (-1) ** len(lam)
    assert list(h_poly(n)) == [acc[k] for k in range(len(h_poly(n)))]
    assert not any(acc[k] for k in range(len(h_poly(n)), n + 1))


def test_h_specializations():
    for n in range(3, 31):
        assert h_poly(n)(1) == 0
    for n in range(1, 31):
        assert h_poly(n)(0) == h_zero_pattern(n)
        assert abs(h_poly(n)(2)) == fibonacci(n)


def test_h_zero_pattern_values():
    assert [h_zero_pattern(n) for n in range(1, 10)] == [-1, -1, 0, 1, 1, 0, -1, -1, 0]


def test_fibonacci():
    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


@pytest.mark.parametrize("n", range(2, 13))
def test_part_parity_totals(n):
    H = partitions_with_perimeter(n)
    assert a_odd(n) == sum(sum(a % 2 for a in lam) for lam in H)
    assert a_even(n) == sum(even(lam) for lam in H)


def test_parity_totals_need_n_at_least_two():
    with pytest.raises(DomainError):
        a_odd(1)
    with pytest.raises(DomainError):
        a_even(1)


@pytest.mark.parametrize("n", range(2, 12))
def test_sum_dif_matches_enumeration(n):
    H = partitions_with_perimeter(n)
    for d in range(1, n):
        assert sum_dif(n, d) == sum(dif(lam, d) for lam in H)


def test_sum_dif_examples():
    assert sum_dif(5, 1) == 20
    assert sum_dif(4, 2) == 11


def test_sum_dif_degenerate_range():
    with pytest.raises(DomainError):
        sum_dif(4, 4)
    H = partitions_with_perimeter(4)
    assert sum_dif(4, 4, allow_degenerate=True) == sum(dif(lam, 4) for lam in H)
    assert sum_dif(1, 3, allow_degenerate=True) == 0


def test_count_domain_errors():
    with pytest.raises(DomainError):
        table_A(0)
    with pytest.raises(DomainError):
        sum_dif(5, 0)


def test_large_rows_are_exact():
    row = table_A(200)
    assert row.total() == 2**199
    assert h_poly(200)(1) == 0
