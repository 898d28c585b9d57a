"""Gelfand-Tsetlin pattern counting.

A GT pattern with top row lambda (padded to n = len(mu)) and weight mu is a
triangular array x_{ij}, 1 <= i <= j <= n, with interlacing rows
x_{i,j+1} >= x_{ij} >= x_{i+1,j+1} >= 0 and row sums equal to the partial
sums of mu.  The count equals the Kostka number K_{lambda,mu}(1).

Counting is a dynamic program over rows: the frontier maps each possible
row to the number of ways it can be reached from below.
"""

from .caps import Counter
from .errors import SizeMismatch


def _extensions(row, total, caps, counter):
    """All rows y of length len(row)+1, sum `total`, interlacing with `row`:
    y_i >= row_i >= y_{i+1}, with y_i <= caps[i] (containment in lambda)."""
    j = len(row)
    out = []
    y = [0] * (j + 1)

    def rec(i, rem):
        counter.tick()
        if i == j:
            # last entry: bounded by row[j-1] above... below: y_{j+1} <= row_j
            lo, hi = 0, row[j - 1] if j else caps[0]
            if lo <= rem <= min(hi, caps[j] if j < len(caps) else rem):
                y[i] = rem
                out.append(tuple(y))
            return
        lo = row[i]
        hi = caps[i] if i < len(caps) else rem
        if i > 0:
            hi = min(hi, row[i - 1])
        for v in range(lo, min(hi, rem) + 1):
            # feasibility: remaining entries can still reach rem - v
            y[i] = v
            rec(i + 1, rem - v)

    if j == 0:
        if 0 <= total <= caps[0]:
            out.append((total,))
        return out
    rec(0, total)
    return out


def count_gt_points(lam, mu, counter=None):
    """Number of integer GT patterns with top row lam and weight mu."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lambda| != |mu|")
    if counter is None:
        counter = Counter()
    n = len(mu)
    if len(lam) > n:
        return 0
    lam_p = tuple(lam) + (0,) * (n - len(lam))
    if n == 0:
        return 1
    frontier = {}
    for y in _extensions((), mu[0], lam_p, counter):
        frontier[y] = 1
    for j in range(1, n):
        total = sum(mu[: j + 1])
        new = {}
        for row, cnt in frontier.items():
            for y in _extensions(row, total, lam_p, counter):
                new[y] = new.get(y, 0) + cnt
        frontier = new
    return frontier.get(lam_p, 0)


def stretched_gt_series(lam, mu, n_max, counter=None):
    """K_{N lam, N mu}(1) for N = 0..n_max."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lambda| != |mu|")
    out = []
    for N in range(n_max + 1):
        out.append(
            count_gt_points(
                tuple(N * x for x in lam), tuple(N * x for x in mu), counter=counter
            )
        )
    return out
