import pytest
from itertools import combinations

from perimeter.enumeration import (
    EnumerationRequest,
    enum_extraordinary,
    enum_labeled_D,
    enum_labeled_M,
    enum_perimeter,
    enum_size,
    enum_words,
    perimeter_word,
    run_request,
)
from perimeter.errors import DomainError
from perimeter.partitions import LabeledPartition, perimeter, to_bits

from oracles import partitions_of, partitions_with_perimeter


@pytest.mark.parametrize("n", range(1, 11))
def test_perimeter_family_matches_oracle(n):
    got = list(enum_perimeter(n))
    assert len(got) == 2 ** (n - 1)
    assert len(set(got)) == len(got)
    assert set(got) == set(partitions_with_perimeter(n))


def test_perimeter_order_is_lexicographic_in_words():
    words = [to_bits(lam) for lam in enum_perimeter(7)]
    assert words == sorted(words)
    assert words == list(enum_words(7))


def test_perimeter_one():
    assert list(enum_perimeter(1)) == [(1,)]


def test_perimeter_slices_cover_the_family():
    whole = list(enum_perimeter(9))
    pieces = [list(enum_perimeter(9, a, a + 50)) for a in range(0, 256, 50)]
    assert sum(pieces, []) == whole
    assert to_bits(whole[77]) == perimeter_word(9, 77)


def test_every_enumerated_partition_has_the_right_perimeter():
    assert all(perimeter(lam) == 12 for lam in enum_perimeter(12))


@pytest.mark.parametrize("n", range(1, 16))
def test_size_family_matches_oracle(n):
    got = list(enum_size(n))
    assert got == list(partitions_of(n))


def test_partition_numbers():
    assert len(list(enum_size(30))) == 5604
    assert [len(list(enum_size(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_extraordinary_small_example():
    assert list(enum_extraordinary(5, 2)) == [(1, 2), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 3, 5)]


@pytest.mark.parametrize("n", range(1, 9))
def test_extraordinary_matches_brute_force(n):
    for k in range(1, n + 1):
        expect = [
            s
            for size in range(k, n + 1)
            for s in combinations(range(1, n + 1), size)
            if s[k - 1] == size
        ]
        assert sorted(enum_extraordinary(n, k)) == sorted(expect)


def test_extraordinary_rejects_bad_k():
    with pytest.raises(DomainError):
        list(enum_extraordinary(3, 4))
    with pytest.raises(DomainError):
        list(enum_extraordinary(3, 0))


def test_labeled_sets_small_example():
    D = {str(lp) for lp in enum_labeled_D(4, 2)}
    M = {str(lp) for lp in enum_labeled_M(4, 2)}
    assert D == {
        "3,2*", "3,3*", "2,1*,1", "2,1,1*", "2,2*,1", "2,2,1*",
        "2,2,2*", "2,2*,2", "1,1,1,1*", "1,1,1*,1", "1,1*,1,1",
    }
    assert M == {
        "3*,1", "3,2*", "3*,2", "3,3*", "3*,3", "2*,1,1", "2,2*,1",
        "2*,2,1", "2,2,2*", "2,2*,2", "2*,2,2",
    }
    assert len(D) == len(M) == 11


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 9) for d in range(1, 4)])
def test_labeled_sets_by_definition(n, d):
    D = set(enum_labeled_D(n, d))
    M = set(enum_labeled_M(n, d))
    expect_D, expect_M = set(), set()
    for lam in partitions_with_perimeter(n):
        for i in range(2, len(lam) + 1):
            if lam[i - 2] - lam[i - 1] < d:
                expect_D.add(LabeledPartition(lam, i))
        for i in range(1, len(lam) + 1):
            if lam[i - 1] % (d + 1) != 1:
                expect_M.add(LabeledPartition(lam, i))
    assert D == expect_D
    assert M == expect_M


def test_enumeration_is_deterministic():
    assert list(enum_labeled_D(8, 3)) == list(enum_labeled_D(8, 3))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(family="nope", n=3),
        dict(family="labeled-d", n=3),
        dict(family="perimeter", n=3, d=1),
        dict(family="extraordinary", n=3),
        dict(family="size", n=3, k=1),
    ],
)
def test_request_validation(kwargs):
    with pytest.raises(DomainError):
        EnumerationRequest(**kwargs)


def test_run_request():
    assert list(run_request(EnumerationRequest("perimeter", 1))) == [(1,)]
    assert len(list(run_request(EnumerationRequest("labeled-m", 4, d=2)))) == 11
    assert len(list(run_request(EnumerationRequest("extraordinary", 5, k=2)))) == 5


def test_nonpositive_n_rejected():
    with pytest.raises(DomainError):
        list(enum_perimeter(0))
    with pytest.raises(DomainError):
        list(enum_size(0))
