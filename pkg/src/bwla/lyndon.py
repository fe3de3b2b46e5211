"""Suffix ranks maintained alongside the in-place BWT, then rewritten in
place as the Lyndon array.

bwt_isa_inplace drives the same four insertion steps as the plain in-place
BWT and adds a fifth per iteration: once the suffix starting at s is
inserted with local rank r, every entry >= r in ranks[s+1:] moves up by
one and ranks[s] becomes r.  The update condition is on the rank value
(>= r), not on the position s; conditioning on the position would corrupt
the stored ranks (see test_update_rule_uses_rank_not_position).  When the
loop finishes, ranks[k] is the lexicographic rank of the suffix starting
at k, i.e. the inverse suffix array.

An equivalent bookkeeping stores s + rank instead and decrements entries
<= s + r each iteration; both conventions agree at s = 0 (checked in the
test suite).  The local convention is used because the update rule states
it directly and the two base windows come out as [1, 0] and [0].

isa_to_la_inplace then overwrites each ranks[i] with the distance to the
next smaller value on its right (buffer length if none): the length of the
longest Lyndon word starting at i.  Positions are rewritten strictly left
to right, and the scan for position i reads only indexes above i, which
still hold rank values, so one array serves both roles.
"""

from collections.abc import Callable, MutableSequence, Sequence

from .alphabet import validate_text
from .inplace_bwt import IterationState, compute_rank, find_sentinel, insert_and_shift

IsaTraceHook = Callable[[IterationState, Sequence[int], Sequence[int]], None]


def update_isa(ranks: MutableSequence[int], s: int, r_local: int) -> None:
    """Step 5: insert rank r_local at s; existing ranks >= r_local shift up.

    One linear scan of ranks[s+1:], constant scratch.
    """
    for i in range(s + 1, len(ranks)):
        if ranks[i] >= r_local:
            ranks[i] += 1
    ranks[s] = r_local


def bwt_isa_inplace(
    buffer: MutableSequence[int],
    ranks: MutableSequence[int],
    trace: IsaTraceHook | None = None,
) -> None:
    """Overwrite buffer with its BWT and ranks with the inverse suffix array.

    ranks is caller-provided, same length as buffer; its prior contents are
    ignored.  The trace hook observes (state, buffer, ranks) after every
    iteration; both views are only valid during the callback.
    """
    validate_text(buffer)
    n = len(buffer)
    if len(ranks) != n:
        raise ValueError(f"rank buffer length {len(ranks)} != text length {n}")
    ranks[n - 1] = 0
    for s in range(n - 2, -1, -1):
        p = find_sentinel(buffer, s)
        r_local = compute_rank(buffer, s, p)
        r_abs = s + r_local
        insert_and_shift(buffer, s, p, r_abs)
        update_isa(ranks, s, r_local)
        if trace is not None:
            trace(IterationState(s, p, r_local, r_abs), buffer, ranks)


def isa_to_la_inplace(ranks: MutableSequence[int]) -> None:
    """Overwrite inverse-suffix-array values with Lyndon-array values.

    For i = 0, 1, ... the scan walks right until it finds a rank smaller
    than ranks[i] (or falls off the end) and stores the distance.  Only
    indexes above i are read, so the overwrite never clobbers a value a
    later position still needs.
    """
    n = len(ranks)
    for i in range(n):
        v = ranks[i]
        j = i + 1
        while j < n and ranks[j] >= v:
            j += 1
        ranks[i] = j - i


def bwt_lyndon_inplace(
    buffer: MutableSequence[int],
    ranks: MutableSequence[int],
    trace: IsaTraceHook | None = None,
) -> None:
    """Overwrite buffer with its BWT and ranks with its Lyndon array.

    Beyond the two caller buffers the whole construction uses a constant
    number of scratch words.
    """
    bwt_isa_inplace(buffer, ranks, trace)
    isa_to_la_inplace(ranks)
