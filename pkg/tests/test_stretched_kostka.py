import pytest

from rckostka.errors import FitFailure, UnsupportedN
from rckostka.stretched_kostka import (
    denominator_power,
    family_parameters,
    fit_stretched,
    fit_stretched_symmetric,
    general_counterexample_scan,
    gt_generating_function_check,
    numerator_degree,
    okounkov_certificate,
    okounkov_closed_forms,
    okounkov_threshold,
    stretched_values,
)


def test_family_parameters():
    assert family_parameters((3, 3, 1, 1), ((1, 2),) * 4) == (2, 1, 3)
    assert family_parameters((4, 4, 4, 1, 1, 1), ((1, 3),) * 5) == (3, 1, 4)
    assert family_parameters((3, 3, 1, 1, 1, 1), ((1, 2),) * 5) == (2, 2, 3)
    assert family_parameters((3, 2), ((1, 2),) * 2) is None
    # the hook (2,1) is the k=1, d=1, n=2 member
    assert family_parameters((2, 1), ((1, 1),) * 3) == (1, 1, 2)


def test_denominator_power():
    assert denominator_power(2, 1, 3) == 6
    assert denominator_power(2, 1, 2) == 3
    assert denominator_power(3, 1, 3) == 11
    assert denominator_power(2, 2, 3) == 14


def test_numerator_degree():
    assert numerator_degree(2, 3) == 0
    assert numerator_degree(2, 4) == 2
    assert numerator_degree(2, 5) == 4
    assert numerator_degree(3, 3) == 2
    assert numerator_degree(3, 4) == 8
    assert numerator_degree(2, 2) == 0


def test_stretched_values_hook():
    s = stretched_values((2, 1), ((1, 1),) * 3, 5)
    assert s.values == (1, 2, 3, 4, 5, 6)


def test_fit_small_families():
    # (2,3): constant numerator over (1-t)^6
    s = stretched_values((3, 3, 1, 1), ((1, 2),) * 4, 9)
    assert fit_stretched(s).numerator_int_list() == [1]
    # (2,4): numerator (1, 0, 1)
    s = stretched_values((4, 4, 1, 1), ((1, 2),) * 5, 15)
    assert fit_stretched(s).numerator_int_list() == [1, 0, 1]


def test_fit_symmetric_matches_plain():
    s = stretched_values((4, 4, 1, 1), ((1, 2),) * 5, 8)
    gf = fit_stretched_symmetric(s)
    assert gf.numerator_int_list() == [1, 0, 1]


def test_fit_symmetric_sign_alternating():
    s = stretched_values((3, 3, 3, 1, 1, 1), ((1, 3),) * 4, 8)
    gf = fit_stretched_symmetric(s)
    assert gf.numerator_int_list() == [1, -1, 1]


def test_fit_needs_enough_values():
    s = stretched_values((3, 3, 1, 1), ((1, 2),) * 4, 3)
    with pytest.raises(FitFailure):
        fit_stretched(s)


def test_fit_requires_known_family_or_power():
    # not in the (n^k, 1^{kd}) family and no explicit power -> error
    s = stretched_values((2, 2), ((2, 1), (1, 1), (1, 1)), 6)
    with pytest.raises(UnsupportedN):
        fit_stretched(s)
    # the constant series 1,1,1,... as (1-t)/(1-t)^2
    assert fit_stretched(s, power=2).numerator_int_list() == [1, -1]
    assert fit_stretched(s, power=1).numerator_int_list() == [1]


def test_okounkov_closed_forms_small():
    K, K2 = okounkov_closed_forms(3)
    assert [K(N) for N in range(5)] == [1, 3, 6, 10, 15]
    assert K2(0) == 1
    with pytest.raises(UnsupportedN):
        okounkov_closed_forms(6)


def test_okounkov_thresholds():
    assert okounkov_threshold(3) == 21
    assert okounkov_threshold(4) == 8
    assert okounkov_threshold(5) == 6
    assert okounkov_threshold(5, power=3) == 45010


def test_okounkov_certificates():
    assert okounkov_certificate(3)
    assert okounkov_certificate(5)
    with pytest.raises(UnsupportedN):
        okounkov_certificate(4)


def test_gt_generating_function():
    assert gt_generating_function_check(2, 1, 4)
    assert gt_generating_function_check(3, 1, 4)
    assert gt_generating_function_check(2, 2, 4)


def test_general_scan_shape():
    out = general_counterexample_scan(3, 2, 1, 2)
    assert out["certified"] is False
    assert len(out["values"]) == 2
    with pytest.raises(UnsupportedN):
        general_counterexample_scan(3, 1, 1, 2)
