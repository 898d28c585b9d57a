import pytest
from hypothesis import given, settings, strategies as st

from rckostka.errors import ShapeNotContained

from rckostka.core_partitions import partitions_of, syt_count
from rckostka.tableaux_oracles import (
    charge_statistic,
    count_lr_tableaux,
    enumerate_skew_lr,
    enumerate_ssyt,
    is_lattice,
    lattice_paths_asc,
    lattice_words,
    word_charge,
)


def test_ssyt_kostka_numbers():
    assert len(enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert len(enumerate_ssyt((3, 1), (2, 1, 1))) == 2
    assert len(enumerate_ssyt((2, 2), (3, 1))) == 0
    # K_{lam,(1^n)} = f^lam
    assert len(enumerate_ssyt((3, 2), (1,) * 5)) == 5


def test_charge_anchors():
    # K_{(2,1),(1,1,1)}(q) = q + q^2
    charges = sorted(
        charge_statistic(t) for t in enumerate_ssyt((2, 1), (1, 1, 1))
    )
    assert charges == [1, 2]
    charges = sorted(
        charge_statistic(t) for t in enumerate_ssyt((3, 1), (1,) * 4)
    )
    assert charges == [3, 4, 5]


def test_word_charge_values():
    assert word_charge((1, 1, 1)) == 0
    assert word_charge((2, 1)) == 0
    assert word_charge((1, 2)) == 1


def test_is_lattice():
    assert is_lattice((1, 1, 2, 2))
    assert is_lattice((1, 2, 1, 2))
    assert not is_lattice((2, 1, 1, 2))
    assert not is_lattice((1, 2, 2))


def test_lattice_word_counts_are_syt_rectangles():
    # words with n copies of 1..m <-> standard-like ballot sequences,
    # counted by the m-row rectangular Catalan number
    def count(n, m):
        return len(lattice_words((n,) * m))

    assert count(2, 2) == 2
    assert count(3, 2) == 5
    assert count(4, 2) == 14
    assert count(2, 3) == 5
    assert count(3, 3) == 42
    assert count(3, 4) == 462


def test_lattice_words_des_maj_ranges():
    for w, maj, des in lattice_words((3, 3)):
        assert des == sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])
        assert maj >= des  # each descent position is >= 1


def test_lattice_paths_against_words():
    # asc-distribution over monotone paths == des-distribution over words
    for d, n in ((2, 3), (3, 3), (2, 4), (3, 2)):
        paths = lattice_paths_asc(d, n)
        words = {}
        for _, _, des in lattice_words((n,) * d):
            words[des] = words.get(des, 0) + 1
        assert paths == words, (d, n)


def test_lr_counts():
    # c_{(2,1),(2,1)}^{(3,2,1)} = 2
    assert count_lr_tableaux((3, 2, 1), (2, 1), (2, 1)) == 2
    assert count_lr_tableaux((4, 2), (2, 1), (2, 1)) == 1
    assert count_lr_tableaux((2, 2, 1, 1), (2, 1), (2, 1)) == 1
    with pytest.raises(ShapeNotContained):
        count_lr_tableaux((2, 2), (3,), (1,))


def test_skew_lr_counter_agrees():
    assert enumerate_skew_lr((3, 2, 1), (2, 1), (2, 1)) == count_lr_tableaux(
        (3, 2, 1), (2, 1), (2, 1)
    )


@settings(deadline=None, max_examples=25)
@given(st.integers(2, 7), st.data())
def test_standard_counts_match_hook_lengths(n, data):
    lam = data.draw(st.sampled_from(partitions_of(n)))
    assert len(enumerate_ssyt(lam, (1,) * n)) == syt_count(lam)
