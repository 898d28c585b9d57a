"""Brute-force ground truth: semistandard tableaux, the charge statistic,
lattice words with maj/des, multidimensional lattice paths with asc, and
Littlewood-Richardson skew tableaux.

Everything here is deliberately naive and independent of the fermionic
engine; agreement between the two is the master self-test of the library.
"""

from dataclasses import dataclass

from .caps import Counter
from .core_partitions import conjugate, partition
from .errors import (
    ContentNotPartition,
    ShapeNotContained,
    SizeMismatch,
)


@dataclass(frozen=True)
class Tableau:
    rows: tuple  # tuple of tuples of entries

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def content(self):
        mx = max((x for r in self.rows for x in r), default=0)
        out = [0] * mx
        for r in self.rows:
            for x in r:
                out[x - 1] += 1
        return tuple(out)

    def reading_word(self):
        """Rows left to right, bottom row first."""
        w = []
        for r in reversed(self.rows):
            w.extend(r)
        return tuple(w)


def enumerate_ssyt(shape, content, counter=None):
    """All semistandard tableaux of given shape and content, as a list.

    Entries i+1 appear content[i] times.  Built by adding the horizontal
    strip of each value in turn.
    """
    shape = tuple(shape)
    if sum(shape) != sum(content):
        raise SizeMismatch("|shape| != |content|")
    if counter is None:
        counter = Counter()

    results = []
    nrows = len(shape)
    fills = [[] for _ in range(nrows)]

    def strips(value, count, row):
        """Place `count` copies of `value` as a horizontal strip.

        Rows are processed bottom-up, so len(fills[row-1]) is still the
        length before this value was placed; the strip condition is
        new length of row <= old length of the row above.
        """
        counter.tick()
        if row < 0:
            if count == 0:
                place(value + 1)
            return
        cur = len(fills[row])
        below = len(fills[row + 1]) if row + 1 < nrows else 0
        lo = max(0, below - cur)
        hi = min(shape[row] - cur, count)
        if row > 0:
            hi = min(hi, len(fills[row - 1]) - cur)
        for k in range(lo, hi + 1):
            fills[row].extend([value] * k)
            strips(value, count - k, row - 1)
            del fills[row][cur:]

    def place(value):
        if value > len(content):
            if all(len(fills[r]) == shape[r] for r in range(nrows)):
                results.append(Tableau(tuple(tuple(r) for r in fills)))
            return
        strips(value, content[value - 1], nrows - 1)

    place(1)
    return results


def word_charge(word):
    """Charge of a word with partition content.

    Standard subwords are extracted by scanning right to left cyclically for
    1, then 2, and so on; within a subword ind(1)=0 and ind(i+1)=ind(i)+1
    exactly when i+1 sits to the right of i.
    """
    w = list(word)
    total = 0
    while w:
        mx = max(w)
        used = [False] * len(w)
        pos = len(w)  # scan starts just left of this index
        chosen = []
        for v in range(1, mx + 1):
            found = None
            order = list(range(pos - 1, -1, -1)) + list(range(len(w) - 1, pos - 1, -1))
            for i in order:
                if not used[i] and w[i] == v:
                    found = i
                    break
            if found is None:
                raise ContentNotPartition("content of %r is not a partition" % (word,))
            used[found] = True
            chosen.append(found)
            pos = found
        ind = 0
        for v in range(1, mx):
            if chosen[v] > chosen[v - 1]:
                ind += 1
            total += ind
        w = [w[i] for i in range(len(w)) if not used[i]]
    return total


def charge_statistic(t):
    content = t.content()
    if any(content[i] < content[i + 1] for i in range(len(content) - 1)):
        raise ContentNotPartition("tableau content %r is not a partition" % (content,))
    return word_charge(t.reading_word())


def is_lattice(word):
    counts = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts.get(a - 1, 0) < counts[a]:
            return False
    return True


def lattice_words(weight, counter=None):
    """All lattice words of the given weight, with (word, maj, des)."""
    if counter is None:
        counter = Counter()
    n = len(weight)
    out = []
    word = []
    remaining = list(weight)
    counts = [0] * (n + 1)

    def rec():
        counter.tick()
        if not any(remaining):
            w = tuple(word)
            maj = sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])
            des = sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])
            out.append((w, maj, des))
            return
        for a in range(1, n + 1):
            if remaining[a - 1] and (a == 1 or counts[a - 1] > counts[a]):
                remaining[a - 1] -= 1
                counts[a] += 1
                word.append(a)
                rec()
                word.pop()
                counts[a] -= 1
                remaining[a - 1] += 1

    rec()
    return out


def lattice_paths_asc(d, n, counter=None):
    """Counts of lattice paths 0 -> (n,...,n) inside x_1 <= ... <= x_d,
    keyed by asc = number of ascents X_k X_l with k < l."""
    if counter is None:
        counter = Counter()
    out = {}
    pos = [0] * d

    def rec(last, asc):
        counter.tick()
        if all(x == n for x in pos):
            out[asc] = out.get(asc, 0) + 1
            return
        for k in range(d):
            if pos[k] < n and (k == d - 1 or pos[k] < pos[k + 1]):
                pos[k] += 1
                rec(k, asc + (1 if last is not None and last < k else 0))
                pos[k] -= 1

    rec(None, 0)
    return out


def enumerate_skew_lr(outer, inner, content, counter=None):
    """LR skew tableaux of shape outer/inner with the given content.

    Semistandard filling whose reverse reading word (right to left, top row
    first) is a lattice word.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer) or any(
        inner[i] > outer[i] for i in range(len(outer))
    ):
        raise ShapeNotContained("%r not contained in %r" % (inner, outer))
    if counter is None:
        counter = Counter()
    nrows = len(outer)
    rows = [[0] * (outer[r] - inner[r]) for r in range(nrows)]
    count = [0]
    lcounts = [0] * (len(content) + 2)

    def entry(r, c):
        """Value at absolute column c of row r; None outside the skew shape."""
        if r < 0 or r >= nrows or c < inner[r] or c >= outer[r]:
            return None
        return rows[r][c - inner[r]]

    # fill in reverse reading order (row 0 right to left, then row 1, ...)
    # so the lattice condition on the reverse reading word can be checked
    # as each cell is placed.
    cells = []
    for r in range(nrows):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))

    remaining = list(content)

    def fill(i):
        counter.tick()
        if i == len(cells):
            if not any(remaining):
                count[0] += 1
            return
        r, c = cells[i]
        lo, hi = 1, len(content)
        right = entry(r, c + 1)
        if right is not None:
            hi = min(hi, right)  # rows weakly increase left to right
        above = entry(r - 1, c)
        if above is not None:
            lo = max(lo, above + 1)  # columns strictly increase downward
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and lcounts[v - 1] <= lcounts[v]:
                continue  # lattice condition would break
            rows[r][c - inner[r]] = v
            remaining[v - 1] -= 1
            lcounts[v] += 1
            fill(i + 1)
            lcounts[v] -= 1
            remaining[v - 1] += 1
            rows[r][c - inner[r]] = 0

    fill(0)
    return count[0]


def count_lr_tableaux(outer, inner, content, counter=None):
    return enumerate_skew_lr(outer, inner, content, counter=counter)
