"""Admissible configurations of type (lambda, R).

A configuration is a sequence of partitions (nu^(1), nu^(2), ...) whose sizes
are forced by the type; it is admissible when all vacancy numbers

    P_j^(k) = Q_j(nu^(k-1)) - 2 Q_j(nu^(k)) + Q_j(nu^(k+1))
              + sum_a min(mu_a, j) [eta_a == k]

are nonnegative (nu^(0) is empty; the Kostka-Foulkes convention nu^(0) = mu
is recovered by passing mu's rows as height-1 rectangles, which turns the
source term into Q_j(mu)).

Enumeration walks the diagram column by column, choosing the j-th conjugate
column of every level simultaneously: once column j is fixed, P_j^(k) is
fully determined for every k, so negative vacancy prunes immediately.  The
same column walk, with states merged on (column profile, vacancy, remaining
cells), computes the full fermionic sum without listing configurations; that
is what makes the stretched families reachable.
"""

import math
from dataclasses import dataclass

from .caps import Counter
from .core_partitions import (
    check_sizes,
    column_sum,
    conjugate,
    multiplicity,
    n_stat,
    partition,
    unit_rows,
    dominant_rearrangement,
)
from .errors import InvalidMatrix, NegativeLevel, SizeMismatch
from .qalgebra import QPolynomial, gauss_binomial


def binom2(x):
    """x(x-1)/2 for any integer x (negative arguments contribute positively)."""
    return x * (x - 1) // 2


def level_sizes(lam, rects):
    """Mandated sizes |nu^(k)| for k = 1..max(len(lam), max height) - 1."""
    check_sizes(lam, rects)
    nlev = max(len(lam), max((h for _, h in rects), default=1)) - 1
    sizes = []
    for k in range(1, nlev + 1):
        s = sum(lam[k:]) - sum(w * max(h - k, 0) for w, h in rects)
        if s < 0:
            raise NegativeLevel("|nu^(%d)| = %d < 0: no configuration exists" % (k, s))
        sizes.append(s)
    while sizes and sizes[-1] == 0:
        sizes.pop()
    return tuple(sizes)


@dataclass(frozen=True)
class Configuration:
    levels: tuple
    type_lambda: tuple
    type_rects: tuple

    def level(self, k):
        """nu^(k), 1-based; empty outside the stored range."""
        if 1 <= k <= len(self.levels):
            return self.levels[k - 1]
        return ()

    def to_json(self):
        return {
            "levels": [list(p) for p in self.levels],
            "charge": charge(self),
            "vacancy": [
                [k, j, vacancy(self, k, j)]
                for k in range(1, len(self.levels) + 1)
                for j in range(1, (self.levels[k - 1][0] if self.levels[k - 1] else 0) + 1)
                if multiplicity(self.levels[k - 1], j) > 0
            ],
        }


def _source(rects, k, j):
    return sum(min(w, j) for w, h in rects if h == k)


def _chi(rects, k, j):
    """Number of rectangles containing cell (k, j)."""
    return sum(1 for w, h in rects if h >= k and w >= j)


def vacancy(cfg, k, j):
    return (
        column_sum(cfg.level(k - 1), j)
        - 2 * column_sum(cfg.level(k), j)
        + column_sum(cfg.level(k + 1), j)
        + _source(cfg.type_rects, k, j)
    )


def is_admissible(cfg):
    jmax = max(
        [p[0] for p in cfg.levels if p] + [w for w, _ in cfg.type_rects] + [1]
    )
    kmax = max(len(cfg.levels), max((h for _, h in cfg.type_rects), default=1))
    for k in range(1, kmax + 1):
        for j in range(1, jmax + 1):
            if vacancy(cfg, k, j) < 0:
                return False
    return True


def _alpha(cfg, k, j):
    """(nu^(k))'_j with zero padding."""
    p = cfg.level(k)
    return sum(1 for x in p if x >= j)


def charge(cfg):
    rects = cfg.type_rects
    jmax = max([p[0] for p in cfg.levels if p] + [w for w, _ in rects] + [0])
    kmax = max(len(cfg.levels) + 1, max((h for _, h in rects), default=1))
    total = 0
    for k in range(1, kmax + 1):
        for j in range(1, jmax + 1):
            total += binom2(_alpha(cfg, k - 1, j) - _alpha(cfg, k, j) + _chi(rects, k, j))
    return total


def cocharge(cfg):
    jmax = max([p[0] for p in cfg.levels if p] + [0])
    total = 0
    for k in range(1, len(cfg.levels) + 2):
        for j in range(1, jmax + 1):
            total += binom2(_alpha(cfg, k - 1, j) - _alpha(cfg, k, j))
    return total


# --- enumeration ---------------------------------------------------------


def enumerate_admissible(lam, rects, counter=None):
    """All admissible configurations of type (lam, rects), sorted by levels."""
    check_sizes(lam, rects)
    try:
        sizes = level_sizes(lam, rects)
    except NegativeLevel:
        return []
    if counter is None:
        counter = Counter()
    L = len(sizes)
    if L == 0:
        return [Configuration((), tuple(lam), tuple(rects))]
    maxmu = max((w for w, _ in rects), default=0)
    ds = _source_increments(rects, L, maxmu)

    out = []
    cols = [[] for _ in range(L)]

    def walk(j, prev, P, rem):
        counter.tick()
        if all(r == 0 for r in rem):
            levels = tuple(
                partition(conjugate(tuple(c))) if c else () for c in cols
            )
            out.append(levels)
            return
        choices = []

        def choose(k, acc):
            if k == L:
                # final vacancy check for level L uses alpha^(L+1) = 0
                pL = P[L - 1] + (acc[L - 2] if L >= 2 else 0) - 2 * acc[L - 1] + ds[L - 1][j]
                if pL >= 0:
                    choices.append(tuple(acc))
                return
            lo = 1 if rem[k] > 0 else 0
            hi = min(prev[k], rem[k])
            for a in range(lo, hi + 1):
                if k >= 1:
                    # vacancy of level k (1-based) determined once acc[k] chosen
                    pk = (
                        P[k - 1]
                        + (acc[k - 2] if k >= 2 else 0)
                        - 2 * acc[k - 1]
                        + a
                        + ds[k - 1][j]
                    )
                    if pk < 0:
                        continue
                acc.append(a)
                choose(k + 1, acc)
                acc.pop()

        choose(0, [])
        for a in choices:
            if all(x == 0 for x in a):
                continue
            newP = tuple(
                P[k]
                + (a[k - 1] if k >= 1 else 0)
                - 2 * a[k]
                + (a[k + 1] if k + 1 < L else 0)
                + ds[k][j]
                for k in range(L)
            )
            for k in range(L):
                if a[k]:
                    cols[k].append(a[k])
            walk(
                j + 1,
                a,
                newP,
                tuple(rem[k] - a[k] for k in range(L)),
            )
            for k in range(L):
                if a[k]:
                    cols[k].pop()

    walk(1, tuple(sizes), (0,) * L, tuple(sizes))
    out.sort()
    return [Configuration(levels, tuple(lam), tuple(rects)) for levels in out]


def _source_increments(rects, L, maxmu):
    """ds[k-1][j] = increment of the source term of level k at column j."""
    ds = []
    for k in range(1, L + 1):
        row = [0] * (maxmu + 2)
        for w, h in rects:
            if h == k:
                for j in range(1, w + 1):
                    row[j] += 1
        ds.append(row + [0])

    class _Pad:
        def __init__(self, row):
            self.row = row

        def __getitem__(self, j):
            return self.row[j] if j < len(self.row) else 0

    return [_Pad(r) for r in ds]


def kostka_sum(lam, rects, generic_q=True, counter=None, augment=None):
    """Fermionic sum over admissible configurations without listing them.

    Returns sum_nu q^{c(nu)} prod [P+m choose m]_q as a QPolynomial
    (generic_q=True) or its value at q=1 as an int.  States of the column
    walk that share (column profile, vacancy vector, remaining cells) are
    merged, which keeps the stretched families tractable.

    augment, if given, maps (k, j) to an extra top-index summand; the factor
    then reads [P+m+augment choose P]_q and columns run at least through
    every j with a nonzero augment.
    """
    check_sizes(lam, rects)
    if counter is None:
        counter = Counter()
    try:
        sizes = level_sizes(lam, rects)
    except NegativeLevel:
        return QPolynomial.zero() if generic_q else 0
    L = len(sizes)
    rects = tuple(rects)
    maxmu = max((w for w, _ in rects), default=0)
    kmax_charge = max(L + 1, max((h for _, h in rects), default=1))
    ds = _source_increments(rects, L, maxmu)

    if generic_q:
        one = QPolynomial.one()

        def mono(e):
            return QPolynomial.monomial(e)

        def qbin_m(top, bot):
            return gauss_binomial(top, bot)
    else:
        one = 1

        def mono(e):
            return 1

        def qbin_m(top, bot):
            return math.comb(top, bot) if 0 <= bot <= top else 0

    def aug(k, j):
        return augment(k, j) if augment is not None else 0

    min_j = 0
    if augment is not None:
        min_j = maxmu  # keep walking so augmented factors at j <= maxmu apply

    # charge contribution of a column with all alphas zero
    def bare_charge(j):
        return sum(binom2(_chi(rects, k, j)) for k in range(1, kmax_charge + 1))

    # tail[j] = charge of all columns > j once every level has ended
    tail = {maxmu: 0}
    for j in range(maxmu - 1, -1, -1):
        tail[j] = tail[j + 1] + bare_charge(j + 1)

    def col_charge(j, a):
        total = 0
        for k in range(1, kmax_charge + 1):
            up = a[k - 2] if 2 <= k <= L + 1 else 0
            lo = a[k - 1] if k <= L else 0
            total += binom2(up - lo + _chi(rects, k, j))
        return total

    if L == 0:
        return mono(tail.get(0, 0)) * one if generic_q else 1

    # frontier state: (alpha of last chosen column or None, P vector, rem vector)
    frontier = {(None, (0,) * L, tuple(sizes)): one}
    result = QPolynomial.zero() if generic_q else 0
    j = 0
    while frontier:
        j += 1
        newfront = {}
        for (alpha, P, rem), w in frontier.items():
            counter.tick()
            choices = []

            def choose(k, acc):
                if k == L:
                    pL = (
                        P[L - 1]
                        + (acc[L - 2] if L >= 2 else 0)
                        - 2 * acc[L - 1]
                        + ds[L - 1][j]
                    )
                    if pL >= 0:
                        choices.append(tuple(acc))
                    return
                lo = 1 if rem[k] > 0 else 0
                hi = rem[k] if alpha is None else min(alpha[k], rem[k])
                for a in range(lo, hi + 1):
                    if k >= 1:
                        pk = (
                            P[k - 1]
                            + (acc[k - 2] if k >= 2 else 0)
                            - 2 * acc[k - 1]
                            + a
                            + ds[k - 1][j]
                        )
                        if pk < 0:
                            continue
                    acc.append(a)
                    choose(k + 1, acc)
                    acc.pop()

            choose(0, [])
            for a in choices:
                newP = tuple(
                    P[k]
                    + (a[k - 1] if k >= 1 else 0)
                    - 2 * a[k]
                    + (a[k + 1] if k + 1 < L else 0)
                    + ds[k][j]
                    for k in range(L)
                )
                factor = one
                if alpha is not None:
                    for k in range(L):
                        m = alpha[k] - a[k]
                        extra = aug(k + 1, j - 1)
                        if m or extra:
                            factor = factor * qbin_m(P[k] + m + extra, P[k] if extra else m)
                            if not factor:
                                break
                if not factor:
                    continue
                w2 = w * factor * mono(col_charge(j, a))
                newrem = tuple(rem[k] - a[k] for k in range(L))
                if all(r == 0 for r in newrem) and j >= min_j:
                    fin = one
                    for k in range(L):
                        extra = aug(k + 1, j)
                        if a[k] or extra:
                            fin = fin * qbin_m(newP[k] + a[k] + extra, newP[k] if extra else a[k])
                    # any augmented factors at columns beyond j (all m = 0)
                    if augment is not None:
                        for jj in range(j + 1, maxmu + 1):
                            for k in range(L):
                                extra = aug(k + 1, jj)
                                if extra:
                                    pkk = _tail_vacancy(newP[k], ds[k], j, jj)
                                    fin = fin * qbin_m(pkk + extra, pkk)
                    result = result + w2 * fin * mono(tail.get(min(j, maxmu), 0))
                else:
                    key = (a, newP, newrem)
                    if key in newfront:
                        newfront[key] = newfront[key] + w2
                    else:
                        newfront[key] = w2
        frontier = newfront
    return result


def _tail_vacancy(p, ds_row, j_end, j):
    """Vacancy at column j > j_end when every level has ended at j_end."""
    for jj in range(j_end + 1, j + 1):
        p += ds_row[jj]
    return p


# --- matrix encoding -----------------------------------------------------


@dataclass(frozen=True)
class ConfigMatrix:
    entries: tuple  # tuple of row tuples
    type_lambda: tuple
    type_rects: tuple

    def entry(self, i, j):
        """1-based access with zero padding."""
        if 1 <= i <= len(self.entries) and 1 <= j <= len(self.entries[i - 1]):
            return self.entries[i - 1][j - 1]
        return 0


def _matrix_dims(lam, rects):
    nrows = max(len(lam), max((h for _, h in rects), default=1))
    ncols = max([lam[0] if lam else 1] + [w for w, _ in rects])
    return nrows, ncols


def to_matrix(cfg):
    lam, rects = cfg.type_lambda, cfg.type_rects
    nrows, ncols = _matrix_dims(lam, rects)
    ncols = max(ncols, max([p[0] for p in cfg.levels if p] + [1]))
    rows = []
    for i in range(1, nrows + 1):
        rows.append(
            tuple(
                _alpha(cfg, i - 1, j) - _alpha(cfg, i, j) + _chi(rects, i, j)
                for j in range(1, ncols + 1)
            )
        )
    return ConfigMatrix(tuple(rows), lam, rects)


def check_conditions(m):
    """Return the list of violated condition numbers among (1)-(4).

    (0) integrality is structural.  (1) column sums, (2) row sums,
    (3) partial-row monotonicity, (4) the rectangle inequality.
    """
    lam, rects = m.type_lambda, m.type_rects
    nrows = len(m.entries)
    ncols = max(len(r) for r in m.entries) if m.entries else 0
    bad = []
    for j in range(1, ncols + 1):
        want = sum(h for w, h in rects if w >= j)
        if sum(m.entry(i, j) for i in range(1, nrows + 1)) != want:
            bad.append(1)
            break
    for i in range(1, nrows + 1):
        want = lam[i - 1] if i <= len(lam) else 0
        if sum(m.entry(i, j) for j in range(1, ncols + 1)) != want:
            bad.append(2)
            break
    done = False
    for i in range(1, nrows + 1):
        for k in range(1, ncols + 1):
            if sum(m.entry(i, j) - m.entry(i + 1, j) for j in range(1, k + 1)) < 0:
                bad.append(3)
                done = True
                break
        if done:
            break
    done = False
    for j in range(1, ncols + 1):
        for k in range(1, nrows + 1):
            lhs = sum(min(h, k) for w, h in rects if w == j)
            rhs = sum(m.entry(i, j) - m.entry(i, j + 1) for i in range(1, k + 1))
            if lhs < rhs:
                bad.append(4)
                done = True
                break
        if done:
            break
    return bad


def from_matrix(m):
    """Reconstruct the configuration; InvalidMatrix if (1) or (2) fails."""
    bad = [c for c in check_conditions(m) if c in (1, 2)]
    if bad:
        raise InvalidMatrix("condition (%d) violated" % bad[0])
    lam, rects = m.type_lambda, m.type_rects
    nrows = len(m.entries)
    ncols = max(len(r) for r in m.entries) if m.entries else 0
    try:
        sizes = level_sizes(lam, rects)
    except NegativeLevel as e:
        raise InvalidMatrix(str(e))
    levels = []
    for k in range(1, len(sizes) + 1):
        alpha = []
        for j in range(1, ncols + 1):
            aj = sum(m.entry(i, j) for i in range(k + 1, nrows + 1)) - sum(
                max(h - k, 0) for w, h in rects if w >= j
            )
            if aj < 0:
                raise InvalidMatrix("negative column height at level %d" % k)
            alpha.append(aj)
        if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
            raise InvalidMatrix("column heights not monotone at level %d" % k)
        levels.append(partition(conjugate(tuple(x for x in alpha if x))))
    return Configuration(tuple(levels), lam, rects)


def matrix_charge(m):
    return sum(binom2(x) for row in m.entries for x in row)


def duality_map(m):
    """The involution iota: a matrix for the conjugate-transposed type."""
    lam, rects = m.type_lambda, m.type_rects
    lam_c = conjugate(lam)
    rects_d = dominant_rearrangement(tuple((h, w) for w, h in rects))
    nrows, ncols = _matrix_dims(lam_c, rects_d)

    def theta(x):
        return 1 if x >= 0 else 0

    rows = []
    for i in range(1, nrows + 1):
        row = []
        for j in range(1, ncols + 1):
            # The rectangle term is the chi of the dual type at (i, j); the
            # source's theta(mu_a - j) theta(eta_a - i) has row sums
            # inconsistent with lambda' unless R is transpose-symmetric.
            lj = lam[j - 1] if j <= len(lam) else 0
            val = -m.entry(j, i) + theta(lj - i) + sum(
                1 for w, h in rects if h >= j and w >= i
            )
            row.append(val)
        rows.append(tuple(row))
    return ConfigMatrix(tuple(rows), lam_c, rects_d)


# --- maximal configuration ----------------------------------------------


def maximal_configuration(lam, mu):
    """Delta(lambda, mu): level k is (lambda_{k+1}, lambda_{k+2}, ...)."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lambda| != |mu|")
    levels = []
    for k in range(1, len(lam)):
        levels.append(tuple(lam[k:]))
    while levels and not levels[-1]:
        levels.pop()
    return Configuration(tuple(levels), tuple(lam), unit_rows(mu))


def max_config_contribution(lam, mu):
    """K_q(Delta(lambda,mu)); coefficient-wise lower bound for K_{lambda,mu}(q)."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lambda| != |mu|")
    lc = conjugate(lam)
    mc = conjugate(mu)

    def col(c, j):
        return c[j - 1] if j <= len(c) else 0

    prod = QPolynomial.one()
    lam2 = lam[1] if len(lam) > 1 else 0
    for j in range(1, lam2 + 1):
        d = col(lc, j) - col(lc, j + 1)
        top = column_sum(mu, j) - column_sum(lam, j) + d
        prod = prod * gauss_binomial(top, d)
        if prod.is_zero():
            return prod
    c_delta = n_stat(lam) + n_stat(mu) - sum(
        col(mc, j) * (col(lc, j) - 1) for j in range(1, (mu[0] if mu else 0) + 1)
    )
    return prod.shift(c_delta)
