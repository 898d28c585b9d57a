"""Kronecker (internal) products of Schur functions.

Two independent evaluations of the principal specialization
s_alpha * s_beta(q, q^2, ..., q^{N-1}): the symmetric-group character sum
and the fermionic sum over admissible configurations of type
([alpha,beta]_N, (beta_1^N)) with N(k-1)-augmented binomial factors.
Also: the symmetry-center identity behind unimodality, the dual parabolic
Kostka form, the stable large-N limit, and Liskova polynomials.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .core_partitions import (
    conjugate,
    hooks,
    multiplicity,
    partitions_of,
    unit_rows,
)
from .errors import (
    CapExceeded,
    NonIntegral,
    SizeMismatch,
    NoStabilization,
    TooSmallN,
)
from .kostka_polynomials import kostka_foulkes
from .qalgebra import QPolynomial, gauss_binomial
from .rigged_configurations import (
    charge,
    enumerate_admissible,
    kostka_sum,
    vacancy,
)

CHARACTER_CAP = 10


@dataclass(frozen=True)
class CharacterTable:
    n: int
    chi: dict  # (lam, rho) -> integer
    class_sizes: dict  # rho -> n!/z_rho


def z_order(rho):
    """Centralizer order z_rho = prod_j j^{m_j} m_j!."""
    z = 1
    for j in set(rho):
        m = multiplicity(rho, j)
        z *= j**m * math.factorial(m)
    return z


@cache
def _mn_character(lam, rho):
    """chi^lam(rho) by border-strip (rim hook) removal on the first part
    of the cycle type."""
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    total = 0
    # beta-numbers lam_i + (l - i); removing a strip of size r means moving
    # one beta-number down by r, with sign (-1)^(beta-numbers jumped over)
    beta = [lam[i] + len(lam) - 1 - i for i in range(len(lam))]
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        new_beta = sorted([x for x in beta if x != b] + [nb], reverse=True)
        sign = -1 if (new_beta.index(nb) - i) % 2 else 1
        new_lam = tuple(
            x - (len(new_beta) - 1 - t) for t, x in enumerate(new_beta)
        )
        while new_lam and new_lam[-1] == 0:
            new_lam = new_lam[:-1]
        total += sign * _mn_character(new_lam, rest)
    return total


def character_table(n, cap=CHARACTER_CAP):
    """Full S_n character table by Murnaghan-Nakayama recursion."""
    if n > cap:
        raise CapExceeded("character table for n=%d exceeds cap %d" % (n, cap))
    parts = partitions_of(n)
    chi = {}
    sizes = {}
    fact = math.factorial(n)
    for rho in parts:
        sizes[rho] = fact // z_order(rho)
        for lam in parts:
            chi[(lam, rho)] = _mn_character(lam, rho)
    return CharacterTable(n, chi, sizes)


def kronecker_coefficients(alpha, beta, cap=CHARACTER_CAP):
    """g_{alpha,beta,gamma} = (1/n!) sum_w chi^a(w) chi^b(w) chi^c(w),
    for every gamma with a nonzero coefficient."""
    if sum(alpha) != sum(beta):
        raise SizeMismatch("|alpha| != |beta|")
    n = sum(alpha)
    table = character_table(n, cap=cap)
    out = {}
    for gamma in partitions_of(n):
        g = Fraction(0)
        for rho in partitions_of(n):
            g += (
                Fraction(1, z_order(rho))
                * table.chi[(tuple(alpha), rho)]
                * table.chi[(tuple(beta), rho)]
                * table.chi[(gamma, rho)]
            )
        if g.denominator != 1:
            raise NonIntegral("g_{%r,%r,%r} = %s" % (alpha, beta, gamma, g))
        if g < 0:
            raise NonIntegral("negative Kronecker coefficient %s" % g)
        if g:
            out[gamma] = int(g)
    return out


def principal_specialization_character(alpha, beta, N, cap=CHARACTER_CAP):
    """s_alpha * s_beta(q, ..., q^{N-1}) from the character sum: each
    k-cycle contributes (q^k - q^{kN})/(1 - q^k) = q^k [N-1]_{q^k}."""
    if sum(alpha) != sum(beta):
        raise SizeMismatch("|alpha| != |beta|")
    n = sum(alpha)
    table = character_table(n, cap=cap)
    acc = {}
    for rho in partitions_of(n):
        coef = (
            Fraction(1, z_order(rho))
            * table.chi[(tuple(alpha), rho)]
            * table.chi[(tuple(beta), rho)]
        )
        if not coef:
            continue
        term = QPolynomial.one()
        for part in rho:
            term = term * QPolynomial(
                {part * j: 1 for j in range(1, N)}
            )
        for e, c in term.coeffs.items():
            acc[e] = acc.get(e, Fraction(0)) + coef * c
    out = {}
    for e, c in acc.items():
        if c:
            if c.denominator != 1:
                raise NonIntegral("coefficient of q^%d is %s" % (e, c))
            out[e] = int(c)
    return QPolynomial(out)


def bracket_partition(alpha, beta, N):
    """[alpha,beta]_N = (alpha_1+b1, ..., alpha_r+b1, b1^{N-r-s},
    b1-beta_s, ..., b1-beta_2), a partition of size beta_1*N."""
    r, s = len(alpha), len(beta)
    if r + s >= N:
        raise TooSmallN("need N > l(alpha) + l(beta) = %d" % (r + s))
    b1 = beta[0]
    parts = [a + b1 for a in alpha]
    parts += [b1] * (N - r - s)
    parts += [b1 - beta[i] for i in range(s - 1, 0, -1)]
    out = tuple(p for p in parts if p)
    assert sum(out) == b1 * N
    return out


def _augment(alpha, beta, N):
    r = len(alpha)
    b1 = beta[0]

    def aug(k, j):
        return N * (k - 1) if j == b1 and 2 <= k <= r else 0

    return aug


def internal_fermionic(alpha, beta, N, counter=None):
    """(total, contributions) of the augmented fermionic formula over
    admissible configurations of type ([alpha,beta]_N, (beta_1^N)).

    Each configuration contributes
    q^{c} prod [P + m + N(k-1) d_{j,beta_1} theta(r-k) choose P]_q;
    contributions holds (cfg, charge, ((k, j, P, m, aug), ...)) tuples.
    """
    if sum(alpha) != sum(beta):
        raise SizeMismatch("|alpha| != |beta|")
    lam = bracket_partition(alpha, beta, N)
    rects = unit_rows((beta[0],) * N)
    aug = _augment(alpha, beta, N)
    r = len(alpha)
    b1 = beta[0]
    total = QPolynomial.zero()
    contributions = []
    for cfg in enumerate_admissible(lam, rects, counter=counter):
        c = charge(cfg)
        term = QPolynomial.monomial(c)
        factors = []
        for k in range(1, len(cfg.levels) + 1):
            lev = cfg.level(k)
            cols = sorted(set(lev) | ({b1} if 2 <= k <= r else set()))
            for j in cols:
                m = multiplicity(lev, j)
                a = aug(k, j)
                if m == 0 and a == 0:
                    continue
                P = vacancy(cfg, k, j)
                factors.append((k, j, P, m, a))
                term = term * gauss_binomial(P + m + a, P)
        contributions.append((cfg, c, tuple(factors)))
        total = total + term
    return total, tuple(contributions)


def internal_fermionic_value(alpha, beta, N, generic_q=True, counter=None):
    """The same sum via the merged column walk, without listing
    configurations."""
    if sum(alpha) != sum(beta):
        raise SizeMismatch("|alpha| != |beta|")
    lam = bracket_partition(alpha, beta, N)
    rects = unit_rows((beta[0],) * N)
    return kostka_sum(
        lam,
        rects,
        generic_q=generic_q,
        counter=counter,
        augment=_augment(alpha, beta, N),
    )


def symmetry_center_identity(alpha, beta, N, counter=None):
    """2c(nu) + sum P[m + aug] = N|alpha| for every admissible
    configuration; the common symmetry center behind unimodality."""
    _, contributions = internal_fermionic(alpha, beta, N, counter=counter)
    target = N * sum(alpha)
    for _, c, factors in contributions:
        s = 2 * c + sum(P * (m + a) for _, _, P, m, a in factors)
        if s != target:
            return False
    return True


def _q_power_ratio(a, b):
    """True if a/b is a single power of q."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.shift(-a.min_degree()) == b.shift(-b.min_degree())


def verify_dual_form(alpha, beta, N, r=None, k=None, counter=None):
    """K_{lambda_N, ((r^k))^N}(q) with lambda_N = (rN - beta'_k, ...,
    rN - beta'_1, alpha') agrees with the character specialization up to a
    power of q."""
    if sum(alpha) != sum(beta):
        raise SizeMismatch("|alpha| != |beta|")
    if r is None:
        r = alpha[0] if alpha else 1
    if k is None:
        k = beta[0] if beta else 1
    if alpha and alpha[0] > r:
        raise SizeMismatch("alpha_1 > r")
    if beta and beta[0] > k:
        raise SizeMismatch("beta_1 > k")
    if (alpha[0] if alpha else 0) + (beta[0] if beta else 0) > N * r:
        raise TooSmallN("need alpha_1 + beta_1 <= N r")
    bc = conjugate(beta) + (0,) * (k - len(conjugate(beta)))
    lam = tuple(r * N - bc[i] for i in range(k - 1, -1, -1)) + conjugate(alpha)
    lam = tuple(sorted((x for x in lam if x), reverse=True))
    rects = ((r, k),) * N
    lhs = kostka_sum(lam, rects, counter=counter)
    rhs = principal_specialization_character(alpha, beta, N)
    return _q_power_ratio(lhs, rhs)


def hook_polynomial(alpha):
    """H_alpha(q) = prod over cells (1 - q^{hook length})."""
    H = QPolynomial.one()
    for h in hooks(alpha):
        H = H * (QPolynomial.one() - QPolynomial.monomial(h))
    return H


def stable_limit(alpha, beta, depth, n_limit=40, counter=None):
    """First `depth` coefficients of H_alpha(q) * internal_fermionic once
    they stop changing as N grows.

    The specialization itself converges coefficient-wise to a power series;
    multiplying by the hook polynomial turns the limit into the polynomial
    the large-N regime stabilizes to (the q=t Kostka-Macdonald value).
    """
    H = hook_polynomial(alpha)
    prev = None
    N = len(alpha) + len(beta) + 1
    while N <= n_limit:
        total = internal_fermionic_value(alpha, beta, N, counter=counter)
        if total.is_zero():
            N += 1
            continue
        prod = total * H
        lo = prod.min_degree()
        cur = (lo, tuple(prod.coeff(lo + i) for i in range(depth)))
        if cur == prev:
            return QPolynomial.from_coeff_list(list(cur[1]), min_deg=cur[0])
        prev = cur
        N += 1
    raise NoStabilization(
        "first %d coefficients did not stabilize for N <= %d" % (depth, n_limit)
    )


def liskova(alpha, beta, cap=8, counter=None):
    """L^mu_{alpha,beta}(q) = sum_gamma g_{alpha,beta,gamma} K_{gamma,mu}(q);
    the expansion of s_alpha * s_beta over Hall-Littlewood P_mu."""
    n = sum(alpha)
    if n > cap:
        raise CapExceeded("|alpha| = %d exceeds cap %d" % (n, cap))
    g = kronecker_coefficients(alpha, beta)
    out = {}
    for mu in partitions_of(n):
        total = QPolynomial.zero()
        for gamma, mult in g.items():
            kf = kostka_foulkes(gamma, mu, counter=counter).polynomial
            total = total + kf * QPolynomial({0: mult})
        if not total.is_zero():
            if any(c < 0 for c in total.coeffs.values()):
                raise NonIntegral("negative Liskova coefficient for mu=%r" % (mu,))
            out[mu] = total
    return out
