"""Stretched Kostka numbers K_{N*lambda, N*R}: evaluation along N, exact
rational generating-function fits, the log-concavity counterexample suite
with closed forms and thresholds, and the (n,1^d) generating-function
identity against the q-Narayana numerator.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .catalan_narayana import narayana_bosonic
from .core_partitions import scale_partition, scale_rects
from .errors import FitFailure, SizeMismatch, UnsupportedN
from .qalgebra import QPolynomial, RationalGF, fit_rational_gf
from .rigged_configurations import kostka_sum


@dataclass
class StretchSeries:
    lam: tuple
    rects: tuple
    values: tuple  # index N -> K_{N lam, N R} (int at q=1, QPolynomial otherwise)
    at_q: str  # "one" | "generic"
    fitted: object = field(default=None)


def stretched_values(lam, rects, n_max, at_q="one", counter=None):
    """K_{N lam, N R} for N = 0..n_max via the fermionic engine."""
    if sum(lam) != sum(w * h for w, h in rects):
        raise SizeMismatch("|lambda| != |R|")
    generic = at_q == "generic"
    vals = []
    for N in range(n_max + 1):
        v = kostka_sum(
            scale_partition(lam, N),
            scale_rects(rects, N),
            generic_q=generic,
            counter=counter,
        )
        vals.append(v if generic else v)
    if not generic:
        vals = [v if isinstance(v, int) else v.at_one() for v in vals]
    return StretchSeries(tuple(lam), tuple(rects), tuple(vals), at_q)


def family_parameters(lam, rects):
    """(k, d, n) if (lam, rects) is (n^k, 1^{kd}) with n+d columns of
    height k, else None."""
    if not rects:
        return None
    heights = {h for _, h in rects}
    widths = {w for w, _ in rects}
    if heights == {rects[0][1]} and widths == {1}:
        k = rects[0][1]
    else:
        return None
    if not lam or lam[0] == 1:
        return None
    n = lam[0]
    if lam[:1].count(n) == 0:
        return None
    i = 0
    while i < len(lam) and lam[i] == n:
        i += 1
    if i != k or any(x != 1 for x in lam[i:]):
        return None
    kd = len(lam) - k
    if kd % k:
        return None
    d = kd // k
    if len(rects) != n + d:
        return None
    return k, d, n


def denominator_power(k, d, n):
    """(1-t) exponent for the stretched (n^k,1^{kd}) family:
    k^2 (d(n-1)-1) + 2 + (k-1) [n=2][d=1]."""
    return k * k * (d * (n - 1) - 1) + 2 + (k - 1) * (n == 2) * (d == 1)


def numerator_degree(k, n):
    """deg_t P for the d=1 family: (k-1)(k(n-2)+2([n=2]-1))."""
    return (k - 1) * (k * (n - 2) + 2 * ((n == 2) - 1))


def fit_stretched(series, power=None):
    """Fit sum_N values[N] t^N = P(t)/(1-t)^power exactly; the power
    defaults to the family formula when (lam, rects) matches it."""
    if power is None:
        params = family_parameters(series.lam, series.rects)
        if params is None:
            raise UnsupportedN(
                "no default denominator power for lam=%r, R=%r; pass one"
                % (series.lam, series.rects)
            )
        power = denominator_power(*params)
    gf = fit_rational_gf(list(series.values), power)
    series.fitted = gf
    return gf


def fit_stretched_symmetric(series, power=None, degree=None):
    """Fit P(t)/(1-t)^power assuming P is symmetric of known degree.

    The symmetry ansatz halves the window a plain fit needs: coefficients
    through t^{ceil(degree/2)} come from iterated differences of the values,
    the rest by mirroring.  Every value supplied beyond that point is then
    checked against the re-expansion, so extra values make the fit
    overdetermined rather than assumed.
    """
    params = family_parameters(series.lam, series.rects)
    if power is None:
        if params is None:
            raise UnsupportedN(
                "no default denominator power for lam=%r, R=%r; pass one"
                % (series.lam, series.rects)
            )
        power = denominator_power(*params)
    if degree is None:
        if params is None or params[1] != 1:
            raise UnsupportedN("no default numerator degree; pass one")
        k, _, n = params
        degree = numerator_degree(k, n)
    half = degree // 2
    if len(series.values) < half + 3:
        raise FitFailure(
            "need at least %d values for degree %d plus a consistency margin"
            % (half + 3, degree)
        )
    diffs = list(series.values)
    for _ in range(power):
        diffs = [diffs[0]] + [
            diffs[i] - diffs[i - 1] for i in range(1, len(diffs))
        ]
    coeffs = [0] * (degree + 1)
    for j in range(half + 1):
        coeffs[j] = diffs[j]
        coeffs[degree - j] = diffs[j]
    gf = RationalGF(coeffs, [0] * power)
    check = gf.expand(len(series.values))
    if list(check) != list(series.values):
        raise FitFailure(
            "symmetric ansatz of degree %d over (1-t)^%d does not reproduce "
            "the computed values" % (degree, power)
        )
    series.fitted = gf
    return gf


# closed forms for the hook family lambda=(n,1), mu=(1^{n+1}) and its
# doubling 2 lambda_N = N(n,n,1,1), 2 mu_N = N((1,1)^{n+1})
_DOUBLED = {
    3: ((5, 1),),
    4: ((9, 1), (7, 1)),
    5: ((13, 1), (12, 1), (11, 6), (10, 1), (9, 1)),
}


def okounkov_closed_forms(n):
    """(K, K2) with K(N) = K_{N(n,1),N(1^{n+1})}(1) = binom(N+n-1,n-1) and
    K2(N) = K_{N(n,n,1,1),N((1,1)^{n+1})}(1) as a sum of binomials."""
    if n not in _DOUBLED:
        raise UnsupportedN("closed forms available for n in {3,4,5}, not %r" % (n,))
    terms = _DOUBLED[n]
    top = terms[0][0]

    def K(N):
        return math.comb(N + n - 1, n - 1)

    def K2(N):
        return sum(c * math.comb(N + s, top) for s, c in terms)

    return K, K2


def okounkov_threshold(n, power=2, window=50, scan_limit=60000):
    """Smallest N with K2(N) > K(N)**power, verified to hold on the next
    `window` values and to fail at N-1."""
    K, K2 = okounkov_closed_forms(n)
    if power not in (2, 3):
        raise UnsupportedN("power must be 2 or 3")
    last_fail = 0
    N = 1
    while N <= scan_limit:
        if K2(N) <= K(N) ** power:
            last_fail = N
        elif N > last_fail + window:
            break
        N += 1
    else:
        raise UnsupportedN("no stable threshold below %d" % scan_limit)
    threshold = last_fail + 1
    assert threshold == 1 or K2(threshold - 1) <= K(threshold - 1) ** power
    assert all(K2(m) > K(m) ** power for m in range(threshold, threshold + window))
    return threshold


_N5_COEFFS = (
    -78631416,
    -172503780,
    -174033932,
    -101206400,
    -35852065,
    -7638110,
    -899548,
    -44990,
    1,
)


def okounkov_certificate(n, n_checks=40):
    """Exact polynomial identities for the difference K2 - K^power.

    n=3: K2(N) - K(N)^2 = ((N^2-18N-43)/20) * binom(N+2,3).
    n=5: 5189184 (K2(N) - K(N)^3) = binom(N+4,5) * (N^8 - 44990 N^7 - ...).
    Checked by exact evaluation at N = 0..n_checks.
    """
    if n == 3:
        K, K2 = okounkov_closed_forms(3)
        for N in range(n_checks + 1):
            lhs = Fraction(K2(N) - K(N) ** 2)
            rhs = Fraction(N * N - 18 * N - 43, 20) * math.comb(N + 2, 3)
            if lhs != rhs:
                return False
        return True
    if n == 5:
        K, K2 = okounkov_closed_forms(5)
        for N in range(n_checks + 1):
            lhs = 5189184 * (K2(N) - K(N) ** 3)
            rhs = math.comb(N + 4, 5) * sum(
                c * N**i for i, c in enumerate(_N5_COEFFS)
            )
            if lhs != rhs:
                return False
        return True
    raise UnsupportedN("certificates exist for n in {3,5}, not %r" % (n,))


def gt_generating_function_check(n, d, n_max, with_q=True, counter=None):
    """sum_N K_{N(n,1^d),N(1^{n+d})}(q) t^N equals
    C_{d,n-1}(q^{binom(n,2)} t, q) / (q^{binom(n,2)} t; q)_{d(n-1)+1},
    compared as t-series through t^{n_max}."""
    b = math.comb(n, 2)
    m = n - 1
    top = (d - 1) * (m - 1) if d >= 1 and m >= 1 else 0
    series = [QPolynomial.zero() for _ in range(n_max + 1)]
    for k in range(min(top, n_max) + 1):
        series[k] = narayana_bosonic(d, m, k).shift(b * k)
    for i in range(d * m + 1):
        # multiply by 1/(1 - q^{b+i} t)
        for j in range(1, n_max + 1):
            series[j] = series[j] + series[j - 1].shift(b + i)
    lam = (n,) + (1,) * d
    for N in range(n_max + 1):
        got = kostka_sum(
            scale_partition(lam, N),
            tuple(((N, 1),) * (n + d)) if N else (),
            generic_q=True,
            counter=counter,
        )
        want = series[N]
        if not with_q:
            got, want = got.at_one(), want.at_one()
        if got != want:
            return False
    return True


def general_counterexample_scan(n, k, d, n_max, counter=None):
    """Empirical scan of K_{2N...}(1) vs K_{N...}(1)^3 for the
    (n^k, 1^{kd}) family.  Window evidence only, never a certificate."""
    if k == 1:
        raise UnsupportedN(
            "k=1 is the hook family; use okounkov_threshold/okounkov_certificate"
        )
    lam = (n,) * k + (1,) * (k * d)
    rects = ((1, k),) * (n + d)
    rows = []
    first = None
    for N in range(1, n_max + 1):
        base = kostka_sum(
            scale_partition(lam, N), scale_rects(rects, N),
            generic_q=False, counter=counter,
        )
        doubled = kostka_sum(
            scale_partition(lam, 2 * N), scale_rects(rects, 2 * N),
            generic_q=False, counter=counter,
        )
        holds = doubled > base**3
        if holds and first is None:
            first = N
        rows.append((N, base, doubled, holds))
    return {
        "n": n,
        "k": k,
        "d": d,
        "hypothesis_satisfied": n > 1 + Fraction(k * k + 2, k * k * d),
        "values": rows,
        "first_exceeds_cube": first,
        "certified": False,
        "note": "window evidence only; no claim beyond N <= %d" % n_max,
    }
