"""The library's end-to-end verification suite.

Each criterion is a function that raises AssertionError on failure; the
CLI `verify` runner and the test suite both execute them.  Criteria touch
every computational route and cross-check them against each other and
against independent brute-force oracles.
"""

import math
from fractions import Fraction

from .catalan_narayana import (
    catalan_poly,
    hvector_identity,
    macmahon_ehrhart,
    narayana_bosonic,
    narayana_fermionic,
    narayana_maj,
    sulanke_mn,
)
from .core_partitions import (
    dominates,
    parse_rects,
    partitions_of,
    scale_partition,
    scale_rects,
    syt_count,
    unit_rows,
)
from .gelfand_tsetlin import count_gt_points
from .kostka_polynomials import (
    kostka_foulkes,
    min_degree_and_leading,
    parabolic_kostka,
    schur_product_coefficient,
    verify_duality,
)
from .qalgebra import (
    QPolynomial,
    gauss_binomial,
    generalized_gaussian,
    is_symmetric_unimodal,
)
from .rigged_configurations import charge, enumerate_admissible, kostka_sum
from .schur_internal import (
    internal_fermionic,
    internal_fermionic_value,
    principal_specialization_character,
    stable_limit,
    symmetry_center_identity,
)
from .stretched_kostka import (
    denominator_power,
    fit_stretched,
    fit_stretched_symmetric,
    gt_generating_function_check,
    numerator_degree,
    okounkov_certificate,
    okounkov_closed_forms,
    okounkov_threshold,
    stretched_values,
)
from .tableaux_oracles import charge_statistic, enumerate_ssyt


def criterion_01_flagship_type():
    """(4,4,3,3,2) with rectangles 2^3,2^2,2^2,1,1: six configurations,
    the closed expansion, and the charge of the configuration whose top
    level is (2)."""
    res = parabolic_kostka((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1"))
    assert len(res.contributions) == 6, len(res.contributions)
    M = QPolynomial.monomial
    gb = gauss_binomial
    want = (
        M(10) * gb(3, 1)
        + M(8) * gb(2, 1) ** 4
        + M(8) * gb(3, 2)
        + M(12)
        + M(6) * gb(2, 1) * gb(3, 2)
        + M(8)
    )
    assert res.polynomial == want, str(res.polynomial)
    charges = [c for cfg, c, _ in res.contributions if cfg.levels[0] == (2, 2)]
    assert charges == [8], charges


def criterion_02_config_counts():
    """Admissible-configuration counts for ((n,n,n),(1^{3n})), n=1..6.

    The n=5 count is 32 (three independent routes agree; the q=1 totals
    equal the standard-tableau numbers, which a missing configuration
    would strictly lower)."""
    counts = []
    for n in range(1, 7):
        lam = (n, n, n)
        rects = unit_rows((1,) * (3 * n))
        cfgs = enumerate_admissible(lam, rects)
        counts.append(len(cfgs))
        total = kostka_sum(lam, rects, generic_q=False)
        assert total == syt_count(lam), (n, total)
    assert counts == [1, 3, 6, 16, 32, 78], counts


def criterion_03_narayana_cross():
    """(n,m)=(3,4) Narayana data by four routes, and the per-level
    fermionic distribution."""
    maj = narayana_maj(3, 4)
    assert maj.values_at_one() == (1, 22, 113, 190, 113, 22, 1)
    assert catalan_poly(3, 4).at_one() == 462
    for k in range(7):
        v = maj.by_k[k].at_one()
        assert narayana_bosonic(3, 4, k).at_one() == v
        assert sulanke_mn(3, 4, k) == v
        assert narayana_bosonic(3, 4, k) == maj.by_k[k]
    groups = narayana_fermionic(4, 3)
    dist = {k: sorted(t.at_one() for t in terms) for k, (terms, _) in groups.items()}
    # the level-4 group is (1,21,28,63); its printed form omits the 1
    assert dist == {
        0: [1],
        1: [1, 21],
        2: [15, 35, 63],
        3: [15, 35, 140],
        4: [1, 21, 28, 63],
        5: [6, 16],
        6: [1],
    }, dist
    assert sum(tot.at_one() for _, tot in groups.values()) == 462


def criterion_04_two_row_distribution():
    """((6,6),(1^12)): distribution of contributions over the length of
    the single level."""
    groups = narayana_fermionic(6, 2, group_by="length")
    dist = {
        k: sorted((t.at_one() for t in terms), reverse=True)
        for k, (terms, _) in groups.items()
    }
    assert dist == {
        0: [1],
        1: [9, 5, 1],
        2: [28, 21, 1],
        3: [35, 15],
        4: [15],
        5: [1],
    }, dist
    assert sum(sum(v) for v in dist.values()) == 132


def criterion_05_oracle_equivalence():
    """Fermionic formula == charge statistic over semistandard tableaux ==
    Gelfand-Tsetlin point count, exhaustively for |lambda| <= 7."""
    for n in range(1, 8):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if not dominates(lam, mu):
                    continue
                poly = kostka_foulkes(lam, mu).polynomial
                oracle = QPolynomial.zero()
                for t in enumerate_ssyt(lam, mu):
                    oracle = oracle + QPolynomial.monomial(charge_statistic(t))
                assert poly == oracle, (lam, mu, str(poly), str(oracle))
                assert poly.at_one() == count_gt_points(lam, mu), (lam, mu)


def criterion_06_duality():
    """K_{lambda,R}(q) = q^{n(R)} K_{lambda',R'}(1/q) on every
    Kostka-Foulkes type with |lambda| <= 8 plus parabolic types."""
    checked = 0
    for n in range(1, 9):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert verify_duality(lam, unit_rows(mu)), (lam, mu)
                checked += 1
    parabolic = [
        ((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1")),
        ((3, 3, 2), parse_rects("2^2,2,2")),
        ((4, 2), parse_rects("3,2,1")),
        ((2, 2, 1, 1), parse_rects("1^2,1^2,1,1")),
        ((3, 3), parse_rects("2^2,1^2")),
        ((4, 4), parse_rects("2^2,2^2")),
    ]
    for lam, rects in parabolic:
        assert verify_duality(lam, rects), (lam, rects)
        checked += 1
    assert checked >= 50, checked


def criterion_07_hvector():
    """Ehrhart series of the box polytope has the Narayana numerator."""
    assert macmahon_ehrhart(2, 2, 1) == 6
    for n in range(1, 13):
        for m in range(1, 13):
            if n * m <= 12:
                assert hvector_identity(n, m, 12), (n, m)


def criterion_08_stretched_numerators():
    """Numerators of the stretched generating functions match the known
    coefficient lists; the d=1, k=2 family sums to products of Catalan
    numbers."""
    expected_2 = {
        3: [1],
        4: [1, 0, 1],
        5: [1, 1, 6, 1, 1],
        6: [1, 3, 21, 20, 21, 3, 1],
        7: [1, 6, 56, 126, 210, 126, 56, 6, 1],
        8: [1, 10, 125, 500, 1310, 1652, 1310, 500, 125, 10, 1],
    }
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n in range(3, 9):
        deg = numerator_degree(2, n)
        if n <= 6:
            # plain fit, no symmetry assumption
            power = denominator_power(2, 1, n)
            s = stretched_values((n, n, 1, 1), ((1, 2),) * (n + 1), power + deg + 1)
            gf = fit_stretched(s)
        else:
            s = stretched_values((n, n, 1, 1), ((1, 2),) * (n + 1), deg // 2 + 5)
            gf = fit_stretched_symmetric(s)
        nums = gf.numerator_int_list()
        assert nums == expected_2[n], (n, nums)
        assert sum(nums) == catalan[n - 3] * catalan[n - 2], n
    expected_3 = {
        3: [1, -1, 1],
        4: [1, 0, 20, 20, 55, 20, 20, 0, 1],
        5: [1, 6, 141, 931, 4816, 13916, 27531, 33391, 27531, 13916, 4816,
            931, 141, 6, 1],
    }
    for n in range(3, 6):
        deg = numerator_degree(3, n)
        s = stretched_values(
            (n, n, n, 1, 1, 1), ((1, 3),) * (n + 1), deg // 2 + 4
        )
        gf = fit_stretched_symmetric(s)
        assert gf.numerator_int_list() == expected_3[n], (n, gf.numerator_int_list())
    s = stretched_values(
        (3, 3, 3, 3, 1, 1, 1, 1), ((1, 4),) * 4, numerator_degree(4, 3) // 2 + 4
    )
    gf = fit_stretched_symmetric(s)
    assert gf.numerator_int_list() == [1, -3, 9, -8, 9, -3, 1]


def criterion_09_okounkov():
    """Log-concavity failure thresholds from the closed forms, validated
    against the fermionic engine, and both certificates.

    The n=5 cube threshold computes to 45010: the certificate polynomial
    changes sign between 45009 and 45010, in agreement with the direct
    big-integer scan."""
    assert okounkov_threshold(3, power=2) == 21
    assert okounkov_threshold(4, power=2) == 8
    assert okounkov_threshold(5, power=2) == 6
    assert okounkov_threshold(5, power=3) == 45010
    for n in (3, 4, 5):
        K, K2 = okounkov_closed_forms(n)
        for N in range(6):
            rects = ((N, 1),) * (n + 1) if N else ()
            rects2 = ((N, 2),) * (n + 1) if N else ()
            assert kostka_sum(scale_partition((n, 1), N), rects, generic_q=False) == K(N)
            assert (
                kostka_sum(scale_partition((n, n, 1, 1), N), rects2, generic_q=False)
                == K2(N)
            )
    assert okounkov_certificate(3)
    assert okounkov_certificate(5)


def criterion_10_gt_generating_function():
    """Hook-family generating functions against the q-Narayana numerator."""
    assert kostka_foulkes((3, 1), (1, 1, 1, 1)).polynomial == QPolynomial(
        {3: 1, 4: 1, 5: 1}
    )
    for n, d in ((2, 1), (3, 1), (2, 2), (3, 2)):
        assert gt_generating_function_check(n, d, 5), (n, d)


def criterion_11_internal_product():
    """alpha=(4,2), beta=(2,2,1,1): configuration census, agreement of the
    fermionic and character methods, the symmetry-center identity, and the
    stable large-N limit (nonzero coefficients 2,1,2,2,1,1, with a gap
    at the sixth degree above the minimum)."""
    a, b = (4, 2), (2, 2, 1, 1)
    for N in (7, 8, 9):
        total, contribs = internal_fermionic(a, b, N)
        if N >= 8:
            # at N=7 the charge-21 configuration does not yet fit
            assert sorted(c for _, c, _ in contribs) == [
                9, 9, 11, 13, 15, 17, 19, 21,
            ]
        assert internal_fermionic_value(a, b, N) == total
        ch = principal_specialization_character(a, b, N)
        assert total.shift(-total.min_degree()) == ch.shift(-ch.min_degree()), N
        assert symmetry_center_identity(a, b, N)
        center = Fraction(total.min_degree() + total.degree(), 2)
        sym, uni, c = is_symmetric_unimodal(total)
        assert sym and uni and c == center and center == Fraction(N * 6, 2)
    sl = stable_limit(a, b, 7)
    assert sl == QPolynomial(
        {9: 2, 10: 1, 11: 2, 12: 2, 13: 1, 15: 1}
    ), str(sl)
    assert [c for c in sl.coeff_list() if c] == [2, 1, 2, 2, 1, 1]


def criterion_12_unimodality():
    """Symmetry and unimodality of every small principal specialization,
    of the Gaussian binomials, and (as conjecture evidence) of the
    rectangular Narayana sequences."""
    for n in range(1, 7):
        for alpha in partitions_of(n):
            for beta in partitions_of(n):
                for N in range(2, 7):
                    p = principal_specialization_character(alpha, beta, N)
                    if p.is_zero():
                        continue
                    sym, uni, _ = is_symmetric_unimodal(p)
                    assert sym and uni, (alpha, beta, N)
    for n in range(15):
        for k in range(n + 1):
            sym, uni, _ = is_symmetric_unimodal(gauss_binomial(n, k))
            assert sym and uni, (n, k)
    for n in range(2, 9):
        for m in range(2, 9):
            if n * m > 16:
                continue
            vals = [sulanke_mn(n, m, k) for k in range((n - 1) * (m - 1) + 1)]
            assert vals == vals[::-1], (n, m)
            mid = (len(vals) + 1) // 2
            assert all(vals[i] <= vals[i + 1] for i in range(mid - 1)), (n, m)


_SATURATION_CORPUS = (
    ((2, 1), ((1, 1),) * 3),
    ((3, 1), ((1, 1),) * 4),
    ((2, 2), ((1, 2), (1, 1), (1, 1))),
    ((3, 2, 1), ((2, 1), (2, 1), (1, 1), (1, 1))),
    ((4, 2), ((2, 1), (2, 1), (1, 1), (1, 1))),
    ((2, 2, 1, 1), ((1, 2), (1, 2), (1, 1), (1, 1))),
    ((3, 3), ((2, 2), (1, 1), (1, 1))),
    ((4, 4, 3, 3, 2), parse_rects("2^3,2^2,2^2,1,1")),
)


def criterion_13_saturation_and_lr():
    """Minimal degree scales linearly under stretching; the q=1 value is a
    Littlewood-Richardson multiplicity; hook-content formula types."""
    for lam, rects in _SATURATION_CORPUS:
        a1, _ = min_degree_and_leading(lam, rects)
        for N in (2, 3):
            aN, _ = min_degree_and_leading(
                scale_partition(lam, N), scale_rects(rects, N)
            )
            assert aN == N * a1, (lam, rects, N)
    checked = 0
    for n in range(2, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if not dominates(lam, mu) or len(mu) > 4:
                    continue
                if checked >= 24:
                    break
                rects = unit_rows(mu)
                v = kostka_sum(lam, rects, generic_q=False)
                assert v == schur_product_coefficient(lam, rects), (lam, mu)
                checked += 1
    assert checked >= 20, checked
    for size in range(1, 5):
        for lam in partitions_of(size):
            for N in range(1, 5):
                poly = kostka_sum(
                    (N * size,) + lam, unit_rows((size,) * (N + 1))
                )
                gg = generalized_gaussian(N, lam)
                if poly.is_zero() or gg.is_zero():
                    assert poly.is_zero() == gg.is_zero(), (lam, N)
                    continue
                assert poly.shift(-poly.min_degree()) == gg.shift(
                    -gg.min_degree()
                ), (lam, N)


CRITERIA = (
    ("example-type-expansion", ("fast", "paper"), criterion_01_flagship_type),
    ("three-row-config-counts", ("fast", "paper"), criterion_02_config_counts),
    ("narayana-four-routes", ("fast", "paper"), criterion_03_narayana_cross),
    ("two-row-distribution", ("fast", "paper"), criterion_04_two_row_distribution),
    ("oracle-equivalence", ("paper",), criterion_05_oracle_equivalence),
    ("duality", ("paper",), criterion_06_duality),
    ("macmahon-hvector", ("fast", "paper"), criterion_07_hvector),
    ("stretched-numerators", ("paper",), criterion_08_stretched_numerators),
    ("okounkov-thresholds", ("fast", "paper"), criterion_09_okounkov),
    ("gt-generating-function", ("fast", "paper"), criterion_10_gt_generating_function),
    ("internal-product", ("fast", "paper"), criterion_11_internal_product),
    ("unimodality", ("paper",), criterion_12_unimodality),
    ("saturation-and-lr", ("paper",), criterion_13_saturation_and_lr),
)


def run(suite="all"):
    """Run the tagged criteria; returns a list of (name, passed, detail)."""
    results = []
    for name, tags, func in CRITERIA:
        if suite != "all" and suite not in tags:
            continue
        try:
            func()
            results.append((name, True, ""))
        except AssertionError as exc:
            results.append((name, False, str(exc)))
    return results
