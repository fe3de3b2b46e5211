"""Brute-force reference implementations used as ground truth.

Everything here favors obviousness over speed (quadratic or worse) and
deliberately shares no code with the in-place construction, so the two
routes to each structure stay independent.  Used by the test suite and by
the CLI verify mode; not intended for large inputs.
"""

from collections import Counter
from collections.abc import Sequence

from .alphabet import SENTINEL


def suffix_array_naive(t: Sequence[int]) -> list[int]:
    """Suffix start positions sorted by lexicographic suffix order.

    Comparison sort over materialized suffixes; the unique end marker
    guarantees strict order.
    """
    tt = tuple(t)
    return sorted(range(len(tt)), key=lambda i: tt[i:])


def bwt_from_sa(t: Sequence[int], sa: Sequence[int]) -> list[int]:
    """Definitional BWT: the symbol preceding each sorted suffix, with the
    end marker standing in for the full text's row."""
    return [t[i - 1] if i > 0 else SENTINEL for i in sa]


def isa_from_sa(sa: Sequence[int]) -> list[int]:
    """Inverse permutation: isa[sa[i]] = i."""
    isa = [0] * len(sa)
    for i, start in enumerate(sa):
        isa[start] = i
    return isa


def la_from_isa_nsv(isa: Sequence[int]) -> list[int]:
    """Lyndon array from rank values by next-smaller-value scans.

    For each i the answer is the distance to the first j > i with
    isa[j] < isa[i], or to the end of the array.  Non-overwriting
    counterpart of the in-place conversion.
    """
    n = len(isa)
    la = [0] * n
    for i in range(n):
        j = i + 1
        while j < n and isa[j] >= isa[i]:
            j += 1
        la[i] = j - i
    return la


def is_lyndon(w: Sequence[int]) -> bool:
    """True iff w is strictly smaller than all of its proper nonempty
    suffixes (direct definition, O(|w|^2))."""
    if len(w) == 0:
        raise ValueError("empty string has no Lyndon status")
    wt = tuple(w)
    return all(wt < wt[k:] for k in range(1, len(wt)))


def la_duval(t: Sequence[int]) -> list[int]:
    """Lyndon array by the period-extension scan, run once per position.

    For each i the classic two-pointer loop finds the longest prefix of
    t[i:] of the form w^m v (w Lyndon, v a proper prefix of w); the longest
    Lyndon word starting at i is w itself, of length j - k on exit.
    """
    n = len(t)
    la = [0] * n
    for i in range(n):
        k, j = i, i + 1
        while j < n and t[k] <= t[j]:
            k = i if t[k] < t[j] else k + 1
            j += 1
        la[i] = j - k
    return la


def invert_bwt(b: Sequence[int]) -> list[int]:
    """Recover the text whose BWT is b, by last-to-first column walking.

    Row i of the (conceptual) sorted-suffix list maps to the row of the
    suffix one position to the left via lf.  Starting from row 0 (the end
    marker's suffix) the walk emits the text right to left.

    Raises ValueError for inputs that are not a BWT image: zero or several
    end markers, or a last-to-first walk that revisits a row instead of
    covering all of them.
    """
    n = len(b)
    markers = sum(1 for x in b if x == SENTINEL)
    if markers != 1:
        raise ValueError(f"not a BWT image: {markers} end markers, expected 1")

    counts = Counter(b)
    smaller = {}
    total = 0
    for sym in sorted(counts):
        smaller[sym] = total
        total += counts[sym]
    seen: Counter = Counter()
    lf = [0] * n
    for i, sym in enumerate(b):
        lf[i] = smaller[sym] + seen[sym]
        seen[sym] += 1

    out = [SENTINEL] * n
    row = 0
    for k in range(n - 2, -1, -1):
        sym = b[row]
        if sym == SENTINEL:
            # reached the full text's row early: the walk cycles short
            raise ValueError("not a BWT image: last-to-first walk is not a full cycle")
        out[k] = sym
        row = lf[row]
    if b[row] != SENTINEL:
        raise ValueError("not a BWT image: last-to-first walk is not a full cycle")
    return out
