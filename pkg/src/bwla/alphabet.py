"""Symbol domain, end-marker convention, and validated text construction.

A text is a mutable sequence of unsigned integer symbols whose last element
is the end marker 0, which compares smaller than every other symbol.  The
end marker is an ordinary storable symbol so that the in-place construction
can move it around inside the buffer.

Any mutable integer sequence works as a buffer: ``list`` scans fastest in
pure Python, ``array('q')`` keeps storage at one machine word per symbol.
"""

from collections.abc import Iterable, MutableSequence, Sequence

SENTINEL = 0

# largest encodable symbol: one signed 64-bit machine word (array('q') slot)
MAX_SYMBOL = 2**63 - 1

BYTE_MODES = ("shift", "strict")
MODES = ("shift", "strict", "words")


class EncodingError(ValueError):
    """Raw input or symbols that cannot be mapped under the given mode."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


def encode_bytes(raw: bytes, mode: str = "shift") -> list[int]:
    """Map a byte string to a text ending in the end marker.

    ``shift`` maps byte b to symbol b+1, so any byte string is accepted.
    ``strict`` maps byte b to symbol b and rejects zero bytes, keeping
    symbol values byte-identical to the input.
    """
    if mode == "shift":
        return [b + 1 for b in raw] + [SENTINEL]
    if mode == "strict":
        zero = raw.find(0)
        if zero >= 0:
            raise EncodingError(
                f"strict mode cannot encode zero byte at offset {zero}", offset=zero
            )
        return list(raw) + [SENTINEL]
    raise ValueError(f"unknown byte mode: {mode!r}")


def encode_words(raw: Iterable[int]) -> list[int]:
    """Build a text from integer symbols >= 1, appending the end marker.

    Symbol values pass through unchanged, so alphabets far beyond byte
    range are usable.
    """
    text = []
    for offset, value in enumerate(raw):
        if not SENTINEL < value <= MAX_SYMBOL:
            raise EncodingError(
                f"symbol {value} at offset {offset} outside [1, 2**63 - 1]"
                " (0 is reserved for the end marker)",
                offset=offset,
            )
        text.append(value)
    text.append(SENTINEL)
    return text


def decode_text(t: Sequence[int], mode: str):
    """Invert the encoding: return ``bytes`` for byte modes, ``list[int]``
    for words mode.  The trailing end marker is dropped."""
    validate_text(t)
    payload = t[: len(t) - 1]
    if mode == "shift":
        return bytes(_decode_byte(x, offset, 256, shift=1) for offset, x in enumerate(payload))
    if mode == "strict":
        return bytes(_decode_byte(x, offset, 255, shift=0) for offset, x in enumerate(payload))
    if mode == "words":
        return list(payload)
    raise ValueError(f"unknown mode: {mode!r}")


def _decode_byte(symbol: int, offset: int, top: int, shift: int) -> int:
    if not 1 <= symbol <= top:
        raise EncodingError(
            f"symbol {symbol} at offset {offset} outside [1, {top}]", offset=offset
        )
    return symbol - shift


def validate_text(t: Sequence[int]) -> None:
    """Check the construction-time invariants: nonempty, a single end
    marker, sitting at the last position, no negative symbols."""
    n = len(t)
    if n == 0:
        raise ValueError("text must contain at least the end marker")
    if t[n - 1] != SENTINEL:
        raise ValueError("text must end with the end marker 0")
    for i in range(n - 1):
        if t[i] == SENTINEL:
            raise ValueError(f"end marker occurs before the last position, at {i}")
        if t[i] < 0:
            raise ValueError(f"negative symbol at {i}")


def new_buffer(text: Sequence[int], kind: str = "list") -> MutableSequence[int]:
    """Copy a text into a fresh mutable buffer: 'list' or 'array' ('q')."""
    if kind == "list":
        return list(text)
    if kind == "array":
        from array import array

        return array("q", text)
    raise ValueError(f"unknown buffer kind: {kind!r}")
