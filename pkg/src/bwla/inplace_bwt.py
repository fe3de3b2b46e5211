"""In-place Burrows-Wheeler transform: quadratic time, constant extra space.

The buffer is rewritten right to left.  For s = n-2 down to 0, the window
buffer[s+1:] already holds the BWT of the suffix starting at s+1, and the
end marker's position inside it equals that suffix's rank among the
suffixes present.  Inserting the next suffix takes four steps:

1. find the position p of the end marker in buffer[s+1:]
2. compute the local rank r of the new suffix among the suffixes starting
   at s..n-1: symbols smaller than c = buffer[s] in the window, plus
   occurrences of c at or before p
3. store c at p, replacing the end marker
4. move the block buffer[s+1 : s+r+1] one slot left and write the end
   marker at s + r

Afterwards buffer[s:] holds the BWT of the suffix starting at s.  Scratch
state is a fixed handful of locals, independent of input size.
"""

from collections.abc import Callable, MutableSequence, Sequence
from dataclasses import dataclass

from .alphabet import SENTINEL, validate_text


class CorruptStateError(RuntimeError):
    """The construction-state invariant broke: no end marker in the window."""


@dataclass(frozen=True)
class IterationState:
    """Per-iteration observation passed to trace hooks.

    r_local is the rank of the inserted suffix counted inside the window
    (0 .. n-1-s); r_abs = s + r_local is the buffer index where the end
    marker lands.
    """

    s: int
    p: int
    r_local: int
    r_abs: int


TraceHook = Callable[[IterationState, Sequence[int]], None]


def find_sentinel(buffer: Sequence[int], s: int) -> int:
    """Step 1: locate the end marker in buffer[s+1:].  Read-only."""
    try:
        return buffer.index(SENTINEL, s + 1)
    except ValueError:
        raise CorruptStateError(
            f"no end marker in buffer[{s + 1}:]; construction state corrupt"
        ) from None


def compute_rank(buffer: Sequence[int], s: int, p: int) -> int:
    """Step 2: local rank of the suffix starting at s, in one window pass.

    Counting <= c up to p and < c after it equals the two-count definition
    (symbols smaller than c anywhere in the window, plus occurrences of c
    at or before p): the end marker's slot itself always contributes
    exactly one, whichever of the two counts it lands in.  One comparison
    per window symbol.
    """
    c = buffer[s]
    r = 0
    for i in range(s + 1, p + 1):
        if buffer[i] <= c:
            r += 1
    for i in range(p + 1, len(buffer)):
        if buffer[i] < c:
            r += 1
    return r


def insert_and_shift(buffer: MutableSequence[int], s: int, p: int, r_abs: int) -> None:
    """Steps 3-4: store buffer[s] at p, move block buffer[s+1 : r_abs+1]
    one slot left, and write the end marker at r_abs.

    The del/insert pair runs as two C-level moves; list and array buffers
    keep their capacity across the pair, so steady state allocates nothing.
    """
    buffer[p] = buffer[s]
    del buffer[s]
    buffer.insert(r_abs, SENTINEL)


def bwt_inplace(buffer: MutableSequence[int], trace: TraceHook | None = None) -> None:
    """Overwrite a valid text (single trailing end marker) with its BWT.

    A trace hook, when given, observes (state, buffer) after each iteration
    s = n-2, ..., 0; the buffer view is only valid during the callback and
    must not be mutated.
    """
    validate_text(buffer)
    n = len(buffer)
    if n == 1:
        return
    for s in range(n - 2, -1, -1):
        p = find_sentinel(buffer, s)
        r_local = compute_rank(buffer, s, p)
        r_abs = s + r_local
        insert_and_shift(buffer, s, p, r_abs)
        if trace is not None:
            trace(IterationState(s, p, r_local, r_abs), buffer)
