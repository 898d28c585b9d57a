import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rckostka.core_partitions import conjugate, partitions_of
from rckostka.errors import CapExceeded, SizeMismatch, TooSmallN
from rckostka.qalgebra import QPolynomial, is_symmetric_unimodal
from rckostka.schur_internal import (
    bracket_partition,
    character_table,
    hook_polynomial,
    internal_fermionic,
    internal_fermionic_value,
    kronecker_coefficients,
    liskova,
    principal_specialization_character,
    stable_limit,
    symmetry_center_identity,
    verify_dual_form,
    z_order,
)


def test_z_order():
    assert z_order((1, 1, 1)) == 6
    assert z_order((3,)) == 3
    assert z_order((2, 1)) == 2
    assert z_order((2, 2, 1)) == 8


def test_character_table_orthogonality():
    for n in range(2, 6):
        table = character_table(n)
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                dot = sum(
                    Fraction(1, z_order(rho))
                    * table.chi[(lam, rho)]
                    * table.chi[(mu, rho)]
                    for rho in parts
                )
                assert dot == (1 if lam == mu else 0), (lam, mu)


def test_character_table_cap():
    with pytest.raises(CapExceeded):
        character_table(11)


def test_character_anchors():
    table = character_table(4)
    for rho in partitions_of(4):
        assert table.chi[((4,), rho)] == 1
        assert table.chi[((1, 1, 1, 1), rho)] in (-1, 1)
    assert table.chi[((2, 2), (1, 1, 1, 1))] == 2


def test_kronecker_anchors():
    assert kronecker_coefficients((2, 1), (2, 1)) == {
        (3,): 1,
        (2, 1): 1,
        (1, 1, 1): 1,
    }
    # s_(n) is the unit: g_{alpha,(n),gamma} = delta_{alpha,gamma}
    for alpha in partitions_of(4):
        assert kronecker_coefficients(alpha, (4,)) == {alpha: 1}
        assert kronecker_coefficients(alpha, (1, 1, 1, 1)) == {
            conjugate(alpha): 1
        }


def test_kronecker_size_mismatch():
    with pytest.raises(SizeMismatch):
        kronecker_coefficients((2, 1), (2, 2))


def test_bracket_partition():
    assert bracket_partition((4, 2), (2, 2, 1, 1), 8) == (6, 4, 2, 2, 1, 1)
    assert bracket_partition((3,), (3,), 4) == (6, 3, 3)
    with pytest.raises(TooSmallN):
        bracket_partition((4, 2), (2, 2, 1, 1), 6)


def test_internal_fermionic_census():
    total, contribs = internal_fermionic((4, 2), (2, 2, 1, 1), 8)
    assert sorted(c for _, c, _ in contribs) == [
        9, 9, 11, 13, 15, 17, 19, 21
    ]
    assert internal_fermionic_value((4, 2), (2, 2, 1, 1), 8) == total


def test_fermionic_equals_character_up_to_power():
    for alpha, beta, N in (
        ((4, 2), (2, 2, 1, 1), 8),
        ((3,), (2, 1), 5),
        ((2, 2), (2, 1, 1), 6),
        ((2, 1), (2, 1), 5),
    ):
        f = internal_fermionic_value(alpha, beta, N)
        c = principal_specialization_character(alpha, beta, N)
        assert f.shift(-f.min_degree()) == c.shift(-c.min_degree()), (
            alpha, beta, N,
        )


def test_symmetry_center():
    assert symmetry_center_identity((4, 2), (2, 2, 1, 1), 8)
    assert symmetry_center_identity((3,), (2, 1), 5)
    assert symmetry_center_identity((2, 2), (2, 2), 6)


@settings(deadline=None, max_examples=30)
@given(st.integers(2, 5), st.integers(3, 6), st.data())
def test_specialization_symmetric_unimodal(n, N, data):
    alpha = data.draw(st.sampled_from(partitions_of(n)))
    beta = data.draw(st.sampled_from(partitions_of(n)))
    p = principal_specialization_character(alpha, beta, N)
    if p.is_zero():
        return
    sym, uni, _ = is_symmetric_unimodal(p)
    assert sym and uni, (alpha, beta, N)


def test_verify_dual_form():
    assert verify_dual_form((2,), (2,), 2)
    assert verify_dual_form((2, 1), (3,), 3)
    assert verify_dual_form((1,), (1,), 4)


def test_hook_polynomial():
    # H_(n) = (1-q)(1-q^2)...(1-q^n)
    p = hook_polynomial((2,))
    assert p == QPolynomial({0: 1, 1: -1, 2: -1, 3: 1})
    assert hook_polynomial(()).at_one() == 1


def test_stable_limit_flagship():
    p = stable_limit((4, 2), (2, 2, 1, 1), 7)
    assert p == QPolynomial({9: 2, 10: 1, 11: 2, 12: 2, 13: 1, 15: 1})


def test_stable_limit_trivial():
    # alpha = beta = (n): the limit is the constant 1 at q^n
    assert stable_limit((3,), (3,), 3) == QPolynomial({3: 1, 4: 0, 5: 0})


def test_liskova_anchors():
    table = liskova((2, 1), (2, 1))
    assert table[(3,)] == QPolynomial.one()
    assert table[(2, 1)] == QPolynomial({0: 1, 1: 1})
    assert table[(1, 1, 1)] == QPolynomial({0: 1, 1: 1, 2: 1, 3: 1})


def test_liskova_unit_reduces_to_kostka_foulkes():
    from rckostka.kostka_polynomials import kostka_foulkes

    table = liskova((3, 1), (4,))
    for mu, p in table.items():
        assert p == kostka_foulkes((3, 1), mu).polynomial, mu
