import pytest
from hypothesis import given, settings, strategies as st

from rckostka.core_partitions import (
    parse_rects,
    partitions_of,
    unit_rows,
)
from rckostka.errors import SizeMismatch
from rckostka.kostka_polynomials import (
    kostka_foulkes,
    lr_coefficient,
    min_degree_and_leading,
    parabolic_kostka,
    parabolic_kostka_value,
    saturation_check,
    schur_product_coefficient,
    verify_duality,
)
from rckostka.qalgebra import QPolynomial


def test_kostka_foulkes_anchors():
    assert kostka_foulkes((2, 1), (1, 1, 1)).polynomial == QPolynomial(
        {1: 1, 2: 1}
    )
    assert kostka_foulkes((3, 1), (1, 1, 1, 1)).polynomial == QPolynomial(
        {3: 1, 4: 1, 5: 1}
    )
    # frozen from the independent charge oracle
    assert kostka_foulkes((4, 2), (2, 2, 1, 1)).polynomial == QPolynomial(
        {3: 2, 4: 1, 5: 1}
    )


def test_parabolic_flagship():
    res = parabolic_kostka((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1"))
    assert res.polynomial == QPolynomial(
        {6: 1, 7: 2, 8: 5, 9: 6, 10: 8, 11: 5, 12: 3}
    )
    assert len(res.contributions) == 6
    assert parabolic_kostka_value(
        (4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1"), generic_q=False
    ) == 30


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        parabolic_kostka((3, 1), parse_rects("1,1,1"))


def test_duality_flagship():
    assert verify_duality((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1"))


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 7), st.data())
def test_duality_random_kf_types(n, data):
    lam = data.draw(st.sampled_from(partitions_of(n)))
    mu = data.draw(st.sampled_from(partitions_of(n)))
    assert verify_duality(lam, unit_rows(mu))


def test_min_degree_and_leading():
    a, b = min_degree_and_leading((2, 1), unit_rows((1, 1, 1)))
    assert (a, b) == (1, 1)
    a, b = min_degree_and_leading(
        (4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1")
    )
    assert (a, b) == (6, 1)


def test_saturation_check():
    assert saturation_check((2, 1), unit_rows((1, 1, 1)))
    assert saturation_check((3, 2, 1), parse_rects("2^1,2^1,1,1"))
    assert saturation_check((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1"),
                            n_values=(1, 2))


def test_lr_coefficients():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2,), (2,), (3, 1)) == 1
    assert lr_coefficient((2,), (2,), (2, 1, 1)) == 0


def test_parabolic_at_one_is_lr_product():
    cases = [
        ((3, 3), parse_rects("2^2,1^2")),
        ((4, 2), parse_rects("2^1,2^1,1,1")),
        ((3, 2, 1), parse_rects("2^1,2^1,1,1")),
        ((2, 2, 1, 1), parse_rects("1^2,1^2,1,1")),
        ((4, 4), parse_rects("2^2,2^2")),
        ((3, 3, 2), parse_rects("2^2,2^1,2^1")),
    ]
    for lam, rects in cases:
        v = parabolic_kostka_value(lam, rects, generic_q=False)
        assert v == schur_product_coefficient(lam, rects), (lam, rects)


def test_embedding_recovers_lr_coefficient():
    # b((3,2,1), {(2,2),(2,1)}) picks out c_{(1),(1)}^{(2)} = 1 under the
    # rectangle-padding embedding of LR coefficients into parabolic numbers
    assert parabolic_kostka_value(
        (3, 2, 1), ((2, 2), (2, 1)), generic_q=False
    ) == lr_coefficient((1,), (1,), (2,))
