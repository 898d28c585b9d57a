"""Parabolic Kostka and Kostka-Foulkes polynomials via the fermionic
formula, the duality theorem as an executable check, minimal degree and
leading coefficient, and the Littlewood-Richardson realization.
"""

import warnings
from dataclasses import dataclass

from .core_partitions import (
    check_sizes,
    conjugate,
    dominant_rearrangement,
    is_dominant,
    multiplicity,
    n_of_rectangles,
    scale_partition,
    scale_rects,
    unit_rows,
)
from .errors import SizeMismatch, ZeroKostka
from .qalgebra import QPolynomial, gauss_binomial
from .rigged_configurations import (
    charge,
    enumerate_admissible,
    kostka_sum,
    vacancy,
)
from .tableaux_oracles import count_lr_tableaux


@dataclass(frozen=True)
class KostkaResult:
    polynomial: QPolynomial
    contributions: tuple  # ((Configuration, charge, ((k, j, P, m), ...)), ...)


def _config_factors(cfg):
    factors = []
    for k in range(1, len(cfg.levels) + 1):
        lev = cfg.level(k)
        for j in sorted(set(lev)):
            m = multiplicity(lev, j)
            factors.append((k, j, vacancy(cfg, k, j), m))
    return tuple(factors)


def parabolic_kostka(lam, rects, counter=None):
    """K_{lambda,R}(q) with the per-configuration decomposition."""
    check_sizes(lam, rects)
    if not is_dominant(rects):
        warnings.warn(
            "rectangle sequence %r is not dominant; the fermionic formula "
            "is only asserted for dominant sequences" % (rects,),
            stacklevel=2,
        )
    total = QPolynomial.zero()
    contributions = []
    for cfg in enumerate_admissible(lam, rects, counter=counter):
        c = charge(cfg)
        factors = _config_factors(cfg)
        term = QPolynomial.monomial(c)
        for _, _, P, m in factors:
            term = term * gauss_binomial(P + m, m)
        contributions.append((cfg, c, factors))
        total = total + term
    return KostkaResult(total, tuple(contributions))


def parabolic_kostka_value(lam, rects, generic_q=True, counter=None):
    """K_{lambda,R}(q) (or its value at q=1) without the decomposition;
    scales to types where listing every configuration is hopeless."""
    return kostka_sum(lam, rects, generic_q=generic_q, counter=counter)


def kostka_foulkes(lam, mu, counter=None):
    """K_{lambda,mu}(q): the R = rows-of-mu specialization."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lambda| != |mu|")
    return parabolic_kostka(lam, unit_rows(mu), counter=counter)


def verify_duality(lam, rects, counter=None):
    """K_{lambda,R}(q) = q^{n(R)} K_{lambda',R'}(1/q), checked exactly."""
    check_sizes(lam, rects)
    lhs = kostka_sum(lam, rects, counter=counter)
    rects_d = dominant_rearrangement(tuple((h, w) for w, h in rects))
    rhs = kostka_sum(conjugate(lam), rects_d, counter=counter)
    nr = n_of_rectangles(rects)
    if lhs.is_zero() and rhs.is_zero():
        return True
    if lhs.is_zero() or rhs.is_zero():
        return False
    return lhs == rhs.reverse(nr)


def min_degree_and_leading(lam, rects, counter=None):
    """(a, b) with K_{lambda,R}(q) = b q^a + higher order terms."""
    p = kostka_sum(lam, rects, counter=counter)
    if p.is_zero():
        raise ZeroKostka("K is zero for lambda=%r, R=%r" % (lam, rects))
    a = p.min_degree()
    return a, p.coeff(a)


def lr_coefficient(lam, mu, nu, counter=None):
    """c_{lam,mu}^{nu} by direct LR skew tableau enumeration."""
    if sum(lam) + sum(mu) != sum(nu):
        raise SizeMismatch("|lam| + |mu| != |nu|")
    if len(lam) > len(nu) or any(
        (lam[i] if i < len(lam) else 0) > nu[i] for i in range(len(nu))
    ):
        return 0
    return count_lr_tableaux(nu, lam, mu, counter=counter)


def schur_product_coefficient(target, rects, counter=None):
    """Coefficient of s_target in the product of rectangular Schur functions.

    Iterated LR multiplication, pruning to shapes contained in target.  This
    is the disjoint-rectangle LR realization of the parabolic Kostka number
    at q = 1.
    """
    frontier = {(): 1}
    for w, h in rects:
        rect = (w,) * h
        new = {}
        for shape, cnt in frontier.items():
            for nu, c in _lr_products(shape, rect, target, counter):
                new[nu] = new.get(nu, 0) + cnt * c
        frontier = new
    return frontier.get(tuple(target), 0)


def _lr_products(shape, mu, limit, counter):
    """(nu, c_{shape,mu}^{nu}) for nu contained in `limit`."""
    total = sum(shape) + sum(mu)
    out = []
    for nu in _contained_partitions(limit, total):
        c = lr_coefficient(shape, mu, nu, counter=counter)
        if c:
            out.append((nu, c))
    return out


def _contained_partitions(limit, total):
    limit = tuple(limit)

    def rec(i, prev, rem):
        if rem == 0:
            yield ()
            return
        if i >= len(limit):
            return
        hi = min(prev, limit[i], rem)
        for v in range(hi, 0, -1):
            for rest in rec(i + 1, v, rem - v):
                yield (v,) + rest

    yield from rec(0, 10**9, total)


def saturation_check(lam, rects, n_values=(1, 2, 3), counter=None):
    """a(N lam, N R) = N a(lam, R) across the given stretches."""
    a1, _ = min_degree_and_leading(lam, rects, counter=counter)
    for N in n_values:
        aN, _ = min_degree_and_leading(
            scale_partition(lam, N), scale_rects(rects, N), counter=counter
        )
        if aN != N * a1:
            return False
    return True
