import pytest
from hypothesis import given, strategies as st

from rckostka.core_partitions import (
    conjugate,
    dominates,
    hooks,
    interleave,
    parse_partition,
    parse_rects,
    partition,
    partitions_of,
    rects_to_partition,
    scale_partition,
    syt_count,
    unit_rows,
)
from rckostka.errors import NotAPartition


partitions = st.lists(st.integers(1, 8), max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_parse_partition():
    assert parse_partition("4,4,3,3,2") == (4, 4, 3, 3, 2)
    assert parse_partition("") == ()
    with pytest.raises(NotAPartition):
        parse_partition("1,2")


def test_parse_rects():
    assert parse_rects("2^3,2^2,2^2,1,1") == (
        (2, 3), (2, 2), (2, 2), (1, 1), (1, 1)
    )
    assert parse_rects("3") == ((3, 1),)


def test_partition_rejects_garbage():
    with pytest.raises(NotAPartition):
        partition((1, 2, 1))
    with pytest.raises(NotAPartition):
        partition((2, -1))
    assert partition((2, 0)) == (2,)  # zeros are stripped, not an error


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@given(partitions)
def test_hooks_count(p):
    assert len(hooks(p)) == sum(p)


def test_syt_counts():
    assert syt_count(()) == 1
    assert syt_count((3, 2)) == 5
    # three-row rectangles: 1, 5, 42, 462, 6006, 87516
    assert [syt_count((n, n, n)) for n in range(1, 7)] == [
        1, 5, 42, 462, 6006, 87516
    ]


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 2))


@given(partitions, partitions)
def test_dominance_conjugate_antitone(p, q):
    if sum(p) == sum(q) and dominates(p, q):
        assert dominates(conjugate(q), conjugate(p))


def test_partitions_of_counts():
    # p(n) for n = 0..10
    want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(partitions_of(n)) for n in range(11)] == want


def test_partitions_of_bounds():
    assert partitions_of(4, max_part=2) == ((2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert all(len(p) <= 2 for p in partitions_of(6, max_length=2))


def test_rects_to_partition():
    assert rects_to_partition(unit_rows((3, 2, 1))) == (3, 2, 1)
    assert rects_to_partition(((2, 2), (1, 1))) == (2, 2, 1)


def test_interleave():
    assert interleave((3, 2), (2, 1)) == (3, 2, 2, 1)
    with pytest.raises(NotAPartition):
        interleave((3, 1), (2, 2))


@given(partitions, st.integers(1, 4))
def test_scale_partition(p, N):
    assert scale_partition(p, N) == tuple(N * x for x in p)
    assert sum(scale_partition(p, N)) == N * sum(p)
