"""In-place BWT and Lyndon array construction in constant extra space."""

from .alphabet import (
    MAX_SYMBOL,
    SENTINEL,
    EncodingError,
    decode_text,
    encode_bytes,
    encode_words,
    new_buffer,
    validate_text,
)
from .inplace_bwt import (
    CorruptStateError,
    IterationState,
    bwt_inplace,
    compute_rank,
    find_sentinel,
    insert_and_shift,
)
from .lyndon import (
    bwt_isa_inplace,
    bwt_lyndon_inplace,
    isa_to_la_inplace,
    update_isa,
)
from .oracles import (
    bwt_from_sa,
    invert_bwt,
    is_lyndon,
    isa_from_sa,
    la_duval,
    la_from_isa_nsv,
    suffix_array_naive,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_SYMBOL",
    "SENTINEL",
    "EncodingError",
    "CorruptStateError",
    "IterationState",
    "decode_text",
    "encode_bytes",
    "encode_words",
    "new_buffer",
    "validate_text",
    "bwt_inplace",
    "compute_rank",
    "find_sentinel",
    "insert_and_shift",
    "bwt_isa_inplace",
    "bwt_lyndon_inplace",
    "isa_to_la_inplace",
    "update_isa",
    "bwt_from_sa",
    "invert_bwt",
    "is_lyndon",
    "isa_from_sa",
    "la_duval",
    "la_from_isa_nsv",
    "suffix_array_naive",
    "__version__",
]
