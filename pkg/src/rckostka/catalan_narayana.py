"""Rectangular q-Catalan and q-Narayana numbers computed by independent
routes (product formula, maj-statistic on lattice words, bosonic alternating
sum, fermionic sum over configurations), plus the MacMahon polytope Ehrhart
polynomial with its h-vector identity, Schroeder polynomials, and the
MacMahon-Narayana lattice-path numbers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .core_partitions import unit_rows
from .errors import RangeError
from .kostka_polynomials import parabolic_kostka
from .qalgebra import QPolynomial, gauss_binomial, q_factorial
from .rigged_configurations import kostka_sum
from .tableaux_oracles import lattice_words


@dataclass(frozen=True)
class NarayanaTable:
    n: int
    m: int
    by_k: dict  # k -> QPolynomial N(n,m;k|q), 0 <= k <= (n-1)(m-1)

    def total(self):
        s = QPolynomial.zero()
        for p in self.by_k.values():
            s = s + p
        return s

    def values_at_one(self):
        top = (self.n - 1) * (self.m - 1)
        return tuple(self.by_k.get(k, QPolynomial.zero()).at_one() for k in range(top + 1))


def catalan_poly(n, m):
    """C(n,m|q) = (q;q)_{nm} / prod_{i<=n,j<=m} (1 - q^{i+j-1}),
    expanded exactly via [nm]! prod_{j<m} [j]!/[n+j]!."""
    num = q_factorial(n * m)
    den = QPolynomial.one()
    for j in range(m):
        num = num * q_factorial(j)
        den = den * q_factorial(n + j)
    return num.exact_div(den)


def catalan_kostka_identity(n, m):
    """q^{m*binom(n,2)} C(n,m|q) = K_{(n^m),(1^{nm})}(q)."""
    lhs = catalan_poly(n, m).shift(m * math.comb(n, 2))
    rhs = kostka_sum((n,) * m, unit_rows((1,) * (n * m)))
    return lhs == rhs


def narayana_maj(n, m, counter=None):
    """N(n,m;k|q) = sum of q^maj over lattice words with n copies of each
    of 1..m and exactly k descents."""
    by_k = {k: QPolynomial.zero() for k in range((n - 1) * (m - 1) + 1)}
    for _, maj, des in lattice_words((n,) * m, counter=counter):
        by_k[des] = by_k[des] + QPolynomial.monomial(maj)
    return NarayanaTable(n, m, by_k)


def _plane_partition_q(n, m, a):
    """q-count of plane partitions in an n x m box with parts <= a:
    prod_{b=0}^{n-1} [b]! [m+a+b]! / ([m+b]! [a+b]!)."""
    num = QPolynomial.one()
    den = QPolynomial.one()
    for b in range(n):
        num = num * q_factorial(b) * q_factorial(m + a + b)
        den = den * q_factorial(m + b) * q_factorial(a + b)
    return num.exact_div(den)


def narayana_bosonic(n, m, k):
    """Alternating-sum formula:
    N(n,m;k|q) = sum_{a=0}^{k} (-1)^{k-a} q^{binom(k-a,2)}
                 [nm+1 choose k-a]_q * (q-plane-partition product)."""
    if not 0 <= k <= (n - 1) * (m - 1):
        raise RangeError("k=%d out of range 0..%d" % (k, (n - 1) * (m - 1)))
    total = QPolynomial.zero()
    for a in range(k + 1):
        term = gauss_binomial(n * m + 1, k - a) * _plane_partition_q(n, m, a)
        term = term.shift(math.comb(k - a, 2))
        total = total + term if (k - a) % 2 == 0 else total - term
    return total


def narayana_fermionic(n, m, group_by="colength", counter=None):
    """Admissible configurations of type ((n^m),(1^{nm})) grouped by the
    first column of nu^(1).

    Returns {key: (per-configuration polynomials, group total)}.  With the
    default key (m-1)*n - l(nu^(1)) the group totals equal
    q^{m*binom(n,2)} N(n,m;k|q); group_by="length" keys by l(nu^(1)) - 1
    instead (the mirrored indexing, same multiset of groups).
    """
    if group_by not in ("colength", "length"):
        raise RangeError("unknown grouping %r" % (group_by,))
    res = parabolic_kostka((n,) * m, unit_rows((1,) * (n * m)), counter=counter)
    groups = {}
    for cfg, c, factors in res.contributions:
        first = cfg.level(1) if cfg.levels else ()
        if group_by == "colength":
            key = (m - 1) * n - len(first)
        else:
            key = max(len(first) - 1, 0)
        term = QPolynomial.monomial(c)
        for _, _, pv, mult in factors:
            term = term * gauss_binomial(pv + mult, mult)
        groups.setdefault(key, []).append(term)
    out = {}
    for key, terms in sorted(groups.items()):
        tot = QPolynomial.zero()
        for t in terms:
            tot = tot + t
        out[key] = (tuple(terms), tot)
    return out


def macmahon_ehrhart(n, m, k):
    """Number of plane partitions of shape (n^m) with parts <= k:
    prod_{i<=n,j<=m} (k+i+j-1)/(i+j-1)."""
    v = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            v *= Fraction(k + i + j - 1, i + j - 1)
    assert v.denominator == 1
    return v.numerator


def hvector_identity(n, m, window):
    """sum_k i(M_nm;k) z^k = (sum_j N(n,m;j) z^j) / (1-z)^{nm+1},
    checked coefficient-wise for k < window."""
    top = (n - 1) * (m - 1)
    numer = [sulanke_mn(n, m, j) for j in range(top + 1)]
    d = n * m
    for k in range(window):
        lhs = macmahon_ehrhart(n, m, k)
        rhs = sum(
            numer[j] * math.comb(k - j + d, d) for j in range(min(k, top) + 1)
        )
        if lhs != rhs:
            return False
    return True


def schroeder_poly(n, m):
    """S(n,m|t) = C(n,m|1+t), expanded by exact binomial substitution."""
    return catalan_poly(n, m).subs_one_plus_t()


def sulanke_mn(d, n, k):
    """MN(d,n,k) = sum_{j=0}^{k} (-1)^{k-j} binom(dn+1,k-j) * (number of
    plane partitions in a d x n box with parts <= j); counts paths to
    (n,...,n) below the main diagonal chain with k ascents."""
    if not 0 <= k <= (d - 1) * (n - 1):
        raise RangeError("k=%d out of range 0..%d" % (k, (d - 1) * (n - 1)))
    total = 0
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        total += sign * math.comb(d * n + 1, k - j) * macmahon_ehrhart(d, n, j)
    return total
