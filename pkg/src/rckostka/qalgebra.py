"""Exact sparse polynomial arithmetic in one variable (q or t), Gaussian
binomials, symmetry/unimodality predicates, and rational generating-function
fitting by exact finite differences.
"""

from fractions import Fraction
from functools import cache

from .errors import FitFailure, ZeroPolynomial


class QPolynomial:
    """Sparse polynomial with arbitrary-precision integer coefficients.

    Immutable value type.  Exponents are nonnegative integers; zero
    coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    if e < 0:
                        raise ValueError("negative exponent %d" % e)
                    d[int(e)] = c
        object.__setattr__(self, "coeffs", d)

    # -- constructors

    @staticmethod
    def zero():
        return QPolynomial()

    @staticmethod
    def one():
        return QPolynomial({0: 1})

    @staticmethod
    def monomial(e, c=1):
        return QPolynomial({e: c})

    @staticmethod
    def from_coeff_list(coeffs, min_deg=0):
        return QPolynomial({min_deg + i: c for i, c in enumerate(coeffs)})

    # -- predicates and accessors

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(self.coeffs)

    def min_degree(self):
        if not self.coeffs:
            raise ZeroPolynomial("min degree of the zero polynomial")
        return min(self.coeffs)

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    def coeff_list(self):
        """Dense coefficient list from min_degree to degree."""
        if not self.coeffs:
            return []
        lo, hi = self.min_degree(), self.degree()
        return [self.coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d.get(e, 0) + c
        return QPolynomial(d)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QPolynomial()
            return QPolynomial({e: c * other for e, c in self.coeffs.items()})
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return QPolynomial(d)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = QPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k (k must keep exponents nonnegative)."""
        return QPolynomial({e + k: c for e, c in self.coeffs.items()})

    def exact_div(self, other):
        """Exact polynomial division; raises ValueError on nonzero remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return QPolynomial()
        rem = dict(self.coeffs)
        out = {}
        dlead = other.degree()
        dlc = other.coeffs[dlead]
        while rem:
            e = max(rem)
            if e < dlead:
                raise ValueError("inexact polynomial division")
            c = rem[e]
            if c % dlc != 0:
                raise ValueError("inexact polynomial division")
            f = c // dlc
            out[e - dlead] = f
            for e2, c2 in other.coeffs.items():
                k = e - dlead + e2
                v = rem.get(k, 0) - f * c2
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return QPolynomial(out)

    def __call__(self, x):
        """Evaluate at an integer (or Fraction) point."""
        return sum(c * x**e for e, c in self.coeffs.items())

    def at_one(self):
        return sum(self.coeffs.values())

    def reverse(self, pivot):
        """q^pivot * p(1/q): exponent e maps to pivot - e.

        Raises ValueError if that would create negative exponents.
        """
        return QPolynomial({pivot - e: c for e, c in self.coeffs.items()})

    def subs_one_plus_t(self):
        """Substitute q := 1 + t and expand exactly."""
        out = QPolynomial()
        base = QPolynomial({0: 1, 1: 1})
        powers = {0: QPolynomial.one()}
        for e in sorted(self.coeffs):
            last = max(powers)
            while last < e:
                powers[last + 1] = powers[last] * base
                last += 1
            out = out + powers[e] * self.coeffs[e]
        return out

    def subs_q_power(self, k):
        """Substitute q := q^k."""
        return QPolynomial({e * k: c for e, c in self.coeffs.items()})

    # -- presentation

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                terms.append(str(c))
            else:
                var = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append("-" + var)
                else:
                    terms.append("%d*%s" % (c, var))
        s = " + ".join(terms)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return "QPolynomial(%s)" % str(self)

    def to_json(self):
        if not self.coeffs:
            return {"min_deg": 0, "coeffs": ["0"]}
        return {
            "min_deg": self.min_degree(),
            "coeffs": [str(c) for c in self.coeff_list()],
        }

    @staticmethod
    def from_json(obj):
        return QPolynomial.from_coeff_list(
            [int(c) for c in obj["coeffs"]], obj["min_deg"]
        )


@cache
def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPolynomial({e: 1 for e in range(n)})


@cache
def q_factorial(n):
    out = QPolynomial.one()
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@cache
def gauss_binomial(n, k):
    """The Gaussian binomial [n choose k]_q; zero if k < 0 or k > n."""
    if k < 0 or k > n:
        return QPolynomial.zero()
    k = min(k, n - k)
    num = QPolynomial.one()
    for i in range(n - k + 1, n + 1):
        num = num * q_int(i)
    return num.exact_div(q_factorial(k))


def generalized_gaussian(N, p):
    """s_p(1, q, ..., q^(N-1)) by the hook-content product.

    Zero polynomial when p has more than N rows.
    """
    from .core_partitions import conjugate, hooks, n_stat

    if len(p) > N:
        return QPolynomial.zero()
    pc = conjugate(p)
    num = QPolynomial.one()
    for i in range(len(p)):
        for j in range(p[i]):
            num = num * (1 - QPolynomial.monomial(N + j - i))
    den = QPolynomial.one()
    for h in hooks(p):
        den = den * (1 - QPolynomial.monomial(h))
    return num.exact_div(den).shift(n_stat(p))


def is_symmetric_unimodal(p):
    """(symmetric, unimodal, center) for a nonzero polynomial.

    Center is (min_deg + deg)/2 as a Fraction.
    """
    if p.is_zero():
        raise ZeroPolynomial("symmetry of the zero polynomial")
    cs = p.coeff_list()
    symmetric = cs == cs[::-1]
    rising = True
    unimodal = True
    for i in range(1, len(cs)):
        if cs[i] >= cs[i - 1]:
            if not rising and cs[i] > cs[i - 1]:
                unimodal = False
                break
        else:
            rising = False
    center = Fraction(p.min_degree() + p.degree(), 2)
    return symmetric, unimodal, center


class RationalGF:
    """numerator / prod_{s in denominator_exponents} (1 - q^s t).

    The numerator is a polynomial in t whose coefficients are integers
    (plain mode) or QPolynomials in q (fixed-q mode).  Stored as a list
    of coefficients from t^0.
    """

    def __init__(self, numerator_t_coeffs, denominator_exponents):
        self.numerator = list(numerator_t_coeffs)
        self.denominator_exponents = sorted(denominator_exponents)

    def expand(self, n_terms):
        """Re-expand the GF as a t-series with n_terms coefficients."""
        zero = 0
        series = [zero] * n_terms
        for i, c in enumerate(self.numerator):
            if i < n_terms:
                series[i] = series[i] + c
        # divide by each (1 - q^s t) factor: u_m = v_m + q^s u_{m-1}
        for s in self.denominator_exponents:
            for m in range(1, n_terms):
                prev = series[m - 1]
                if isinstance(prev, QPolynomial):
                    series[m] = series[m] + prev.shift(s)
                else:
                    if s != 0:
                        prev = QPolynomial({0: prev}).shift(s) if prev else 0
                    series[m] = series[m] + prev
        return series

    def numerator_int_list(self):
        out = []
        for c in self.numerator:
            if isinstance(c, QPolynomial):
                out.append(c.at_one())
            else:
                out.append(c)
        return out

    def to_json(self):
        num = []
        for c in self.numerator:
            if isinstance(c, QPolynomial):
                num.append(c.to_json())
            else:
                num.append(str(c))
        return {"numerator": num, "denominator_exponents": self.denominator_exponents}

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            terms.append("(%s)*t^%d" % (c, i))
        den = " ".join("(1-q^%d t)" % s if s else "(1-t)" for s in self.denominator_exponents)
        return "[%s] / %s" % (" + ".join(terms), den or "1")


def fit_rational_gf(values, denominator_power, numerator_degree=None):
    """Fit sum values[N] t^N = P(t)/(1-t)^denominator_power with integer P.

    Multiplies the series by (1-t)^power via iterated finite differences and
    requires every coefficient beyond the numerator degree (inferred as the
    last nonzero position if not supplied) to vanish on the window.
    """
    series = list(values)
    if len(series) < denominator_power + 1:
        raise FitFailure("window too short for denominator power %d" % denominator_power)
    for _ in range(denominator_power):
        series = [series[0]] + [series[i] - series[i - 1] for i in range(1, len(series))]
    last_nonzero = -1
    for i, c in enumerate(series):
        if c != 0:
            last_nonzero = i
    if numerator_degree is None:
        numerator_degree = last_nonzero
        if numerator_degree > len(values) - denominator_power - 1:
            raise FitFailure(
                "numerator support reaches the end of the window; "
                "either the denominator power is wrong or more values are needed"
            )
    if last_nonzero > numerator_degree:
        raise FitFailure(
            "nonzero coefficient at t^%d beyond claimed numerator degree %d"
            % (last_nonzero, numerator_degree)
        )
    return RationalGF(series[: max(numerator_degree + 1, 1)], [0] * denominator_power)


def fit_rational_gf_q(values, denominator_exponents, numerator_degree=None):
    """Fixed-q analogue: multiply the QPolynomial series by prod (1 - q^s t)."""
    series = [v if isinstance(v, QPolynomial) else QPolynomial({0: v}) for v in values]
    S = list(denominator_exponents)
    if len(series) < len(S) + 1:
        raise FitFailure("window too short for %d denominator factors" % len(S))
    for s in S:
        series = [series[0]] + [
            series[i] - series[i - 1].shift(s) for i in range(1, len(series))
        ]
    last_nonzero = -1
    for i, c in enumerate(series):
        if not c.is_zero():
            last_nonzero = i
    if numerator_degree is None:
        numerator_degree = last_nonzero
        if numerator_degree > len(values) - len(S) - 1:
            raise FitFailure(
                "numerator support reaches the end of the window; "
                "wrong denominator exponents or window too short"
            )
    if last_nonzero > numerator_degree:
        raise FitFailure(
            "nonzero coefficient at t^%d beyond claimed numerator degree %d"
            % (last_nonzero, numerator_degree)
        )
    return RationalGF(series[: max(numerator_degree + 1, 1)], S)
