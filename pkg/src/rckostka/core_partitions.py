"""Partitions and rectangle sequences.

Partitions are plain tuples of weakly decreasing positive integers (trailing
zeros stripped).  A rectangle sequence is a tuple of (width, height) pairs.
"""

import math
from functools import cache

from .errors import NotAPartition, SizeMismatch


def partition(parts):
    """Normalize an iterable of nonnegative ints into a partition tuple."""
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise NotAPartition("negative part in %r" % (parts,))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise NotAPartition("parts not weakly decreasing: %r" % (parts,))
    return p


def size(p):
    return sum(p)


def length(p):
    return len(p)


def conjugate(p):
    """Conjugate partition: column heights of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def column_sum(p, j):
    """Q_j(p) = number of cells in the first j columns = sum_i min(p_i, j)."""
    return sum(min(x, j) for x in p)


def multiplicity(p, j):
    """m_j(p) = number of parts equal to j."""
    return sum(1 for x in p if x == j)


def n_stat(p):
    """n(p) = sum over columns of binom(column height, 2) = sum (i-1) p_i."""
    return sum(i * x for i, x in enumerate(p))


def hooks(p):
    pc = conjugate(p)
    return [p[i] - j + pc[j] - i - 1 for i in range(len(p)) for j in range(p[i])]


def syt_count(p):
    """Number of standard Young tableaux of shape p (hook length formula)."""
    num = math.factorial(sum(p))
    den = 1
    for h in hooks(p):
        den *= h
    assert num % den == 0
    return num // den


def dominates(p, q):
    """True iff p dominates q: partial sums of p are >= those of q.

    Only meaningful for |p| = |q|; defined for any pair.
    """
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def interleave(p, q):
    """p v q = partition from the interleaved sequence (p1,q1,p2,q2,...)."""
    out = []
    for i in range(max(len(p), len(q))):
        if i < len(p):
            out.append(p[i])
        if i < len(q):
            out.append(q[i])
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise NotAPartition("interleaving of %r and %r is not monotone" % (p, q))
    return partition(out)


@cache
def partitions_of(n, max_part=None, max_length=None):
    """All partitions of n, largest-part-first lexicographic descending."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


# --- rectangle sequences -------------------------------------------------


def rect_seq(pairs):
    rs = tuple((int(w), int(h)) for w, h in pairs)
    if any(w <= 0 or h <= 0 for w, h in rs):
        raise NotAPartition("rectangle dimensions must be positive: %r" % (pairs,))
    return rs


def rect_size(rects):
    return sum(w * h for w, h in rects)


def n_of_rectangles(rects):
    """n(R) = sum over pairs a<b of min(w_a,w_b)*min(h_a,h_b)."""
    total = 0
    for a in range(len(rects)):
        for b in range(a + 1, len(rects)):
            total += min(rects[a][0], rects[b][0]) * min(rects[a][1], rects[b][1])
    return total


def dominant_rearrangement(rects):
    """Stable sort: widths weakly decreasing, ties by heights weakly decreasing."""
    return tuple(sorted(rects, key=lambda r: (-r[0], -r[1])))


def is_dominant(rects):
    return rects == dominant_rearrangement(rects)


def unit_rows(mu):
    """The rows of mu as height-1 rectangles (Kostka-Foulkes specialization)."""
    return tuple((x, 1) for x in mu)


def rects_to_partition(rects):
    """Concatenate rectangle rows into a partition if possible (for mu-like R)."""
    rows = []
    for w, h in rects:
        rows.extend([w] * h)
    return partition(sorted(rows, reverse=True))


def check_sizes(lam, rects):
    if sum(lam) != rect_size(rects):
        raise SizeMismatch(
            "|lambda| = %d but |R| = %d" % (sum(lam), rect_size(rects))
        )


# --- text syntax ---------------------------------------------------------


def parse_partition(text):
    """Parse "4,4,3,3,2" into a partition tuple; empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return partition(int(tok) for tok in text.split(","))


def parse_rects(text):
    """Parse "2^3,2^2,1,1" into ((2,3),(2,2),(1,1),(1,1)); "^1" may be omitted."""
    text = text.strip()
    if not text:
        return ()
    pairs = []
    for tok in text.split(","):
        if "^" in tok:
            w, h = tok.split("^")
        else:
            w, h = tok, "1"
        pairs.append((int(w), int(h)))
    return rect_seq(pairs)


def format_partition(p):
    return ",".join(str(x) for x in p) if p else "-"


def format_rects(rects):
    if not rects:
        return "-"
    return ",".join("%d^%d" % (w, h) if h != 1 else str(w) for w, h in rects)


def scale_partition(p, N):
    return tuple(N * x for x in p)


def scale_rects(rects, N):
    """N*R multiplies every rectangle width by N (heights unchanged)."""
    return tuple((N * w, h) for w, h in rects)
