import random
from array import array

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bwla.alphabet import SENTINEL, encode_bytes
from bwla.lyndon import bwt_isa_inplace, bwt_lyndon_inplace, isa_to_la_inplace, update_isa
from bwla.oracles import (
    bwt_from_sa,
    is_lyndon,
    isa_from_sa,
    la_duval,
    la_from_isa_nsv,
    suffix_array_naive,
)

from corpus import all_texts, random_byte_text, random_wide_text

texts_strategy = st.binary(max_size=64).map(lambda raw: encode_bytes(raw, "shift"))


def isa_oracle(t):
    return isa_from_sa(suffix_array_naive(t))


# update_isa -----------------------------------------------------------------


def test_update_isa_final_insertion():
    # ranks for the suffixes of "ANANA$" -> ranks for all of "BANANA$"
    ranks = [99, 3, 5, 2, 4, 1, 0]
    update_isa(ranks, 0, 4)
    assert ranks == [4, 3, 6, 2, 5, 1, 0]


def test_update_isa_mid_run():
    ranks = [99, 99, 4, 2, 3, 1, 0]  # ranks for the suffixes of "NANA$"
    update_isa(ranks, 1, 3)
    assert ranks[1:] == [3, 5, 2, 4, 1, 0]


def test_update_isa_new_minimum_shifts_everything():
    ranks = [99, 0, 1]
    update_isa(ranks, 0, 0)
    assert ranks == [0, 1, 2]


def test_update_rule_uses_rank_not_position():
    # conditioning the increment on the position instead of the stored rank
    # corrupts the permutation on the final insertion
    ranks = [99, 3, 5, 2, 4, 1, 0]
    wrong = list(ranks)
    for i in range(1, len(wrong)):
        if wrong[i] >= 0:  # "entry >= s" with s = 0: everything shifts
            wrong[i] += 1
    wrong[0] = 4
    update_isa(ranks, 0, 4)
    assert ranks == [4, 3, 6, 2, 5, 1, 0]
    assert wrong != ranks
    assert sorted(wrong) != list(range(7))


# bwt_isa_inplace ------------------------------------------------------------


def test_isa_banana():
    buf = encode_bytes(b"BANANA", "shift")
    ranks = [0] * len(buf)
    bwt_isa_inplace(buf, ranks)
    assert buf == [66, 79, 79, 67, 0, 66, 66]  # ANNB$AA
    assert ranks == [4, 3, 6, 2, 5, 1, 0]


def test_isa_sentinel_only():
    buf, ranks = [0], [99]
    bwt_isa_inplace(buf, ranks)
    assert buf == [0] and ranks == [0]


def test_isa_two_symbols_base_case():
    buf, ranks = [9, 0], [99, 99]
    bwt_isa_inplace(buf, ranks)
    assert buf == [9, 0] and ranks == [1, 0]


def test_isa_abaab():
    buf = encode_bytes(b"abaab", "strict")
    ranks = [0] * len(buf)
    bwt_isa_inplace(buf, ranks)
    assert ranks == [3, 5, 1, 2, 4, 0]


def test_isa_rejects_length_mismatch():
    with pytest.raises(ValueError):
        bwt_isa_inplace([5, 0], [0])


@settings(deadline=None)
@given(texts_strategy)
def test_isa_matches_oracle_random(t):
    buf, ranks = list(t), [0] * len(t)
    bwt_isa_inplace(buf, ranks)
    assert ranks == isa_oracle(t)
    assert buf == bwt_from_sa(t, suffix_array_naive(t))


def test_isa_lemma_invariant_via_trace():
    # after each iteration ranks[s:] is the rank table of the original suffix
    rng = random.Random(46)
    for _ in range(15):
        n = rng.randrange(1, 33)
        t = random_byte_text(rng, n) if rng.random() < 0.5 else random_wide_text(rng, n)

        def hook(state, buf, ranks):
            assert list(ranks[state.s :]) == isa_oracle(t[state.s :]), (t, state)

        bwt_isa_inplace(list(t), [0] * n, hook)


# isa_to_la_inplace ----------------------------------------------------------


def test_isa_to_la_banana():
    ranks = [4, 3, 6, 2, 5, 1, 0]
    isa_to_la_inplace(ranks)
    assert ranks == [1, 2, 1, 2, 1, 1, 1]


def test_isa_to_la_singleton():
    ranks = [0]
    isa_to_la_inplace(ranks)
    assert ranks == [1]


def test_isa_to_la_abaab():
    ranks = [3, 5, 1, 2, 4, 0]
    isa_to_la_inplace(ranks)
    assert ranks == [2, 1, 3, 2, 1, 1]


@given(st.permutations(range(12)))
def test_isa_to_la_matches_two_array_oracle(perm):
    ranks = list(perm)
    isa_to_la_inplace(ranks)
    assert ranks == la_from_isa_nsv(perm)


class RecordingList(list):
    """List that logs reads and writes of single indexes."""

    def __init__(self, data):
        super().__init__(data)
        self.log = []

    def __getitem__(self, index):
        self.log.append(("r", index))
        return list.__getitem__(self, index)

    def __setitem__(self, index, value):
        self.log.append(("w", index))
        list.__setitem__(self, index, value)


def test_isa_to_la_never_reads_left_of_cursor():
    # each position's scan may read its own slot and slots to the right,
    # never an already-overwritten slot
    rng = random.Random(47)
    for _ in range(25):
        n = rng.randrange(1, 40)
        perm = list(range(n))
        rng.shuffle(perm)
        ranks = RecordingList(perm)
        isa_to_la_inplace(ranks)
        reads_since_write = []
        for kind, index in ranks.log:
            if kind == "r":
                reads_since_write.append(index)
            else:
                assert all(r >= index for r in reads_since_write), ranks.log
                reads_since_write = []


# bwt_lyndon_inplace ---------------------------------------------------------


def test_lyndon_banana():
    buf = encode_bytes(b"BANANA", "shift")
    ranks = [0] * len(buf)
    bwt_lyndon_inplace(buf, ranks)
    assert buf == [66, 79, 79, 67, 0, 66, 66]
    assert ranks == [1, 2, 1, 2, 1, 1, 1]


def test_lyndon_sentinel_only():
    buf, ranks = [0], [0]
    bwt_lyndon_inplace(buf, ranks)
    assert buf == [0] and ranks == [1]


def test_lyndon_abaab():
    buf = encode_bytes(b"abaab", "strict")
    ranks = [0] * len(buf)
    bwt_lyndon_inplace(buf, ranks)
    assert ranks == [2, 1, 3, 2, 1, 1]


def test_ranks_form_permutation_before_conversion():
    rng = random.Random(48)
    for _ in range(20):
        n = rng.randrange(1, 50)
        t = random_byte_text(rng, n)
        final = {}

        def hook(state, buf, ranks):
            if state.s == 0:
                final["ranks"] = list(ranks)

        buf, ranks = list(t), [0] * n
        bwt_lyndon_inplace(buf, ranks, hook)
        pre_conversion = final["ranks"] if n > 1 else [0]
        assert sorted(pre_conversion) == list(range(n))


@settings(deadline=None)
@given(texts_strategy)
def test_lyndon_last_entry_always_one(t):
    buf, ranks = list(t), [0] * len(t)
    bwt_lyndon_inplace(buf, ranks)
    assert ranks[-1] == 1
    assert all(1 <= ranks[i] <= len(t) - i for i in range(len(t)))


@settings(deadline=None, max_examples=50)
@given(texts_strategy)
def test_lyndon_factors_are_lyndon_words(t):
    buf, ranks = list(t), [0] * len(t)
    bwt_lyndon_inplace(buf, ranks)
    n = len(t)
    for i, length in enumerate(ranks):
        assert is_lyndon(t[i : i + length])
        if i + length <= n - 1:
            assert not is_lyndon(t[i : i + length + 1])


def test_lyndon_works_on_word_arrays():
    t = encode_bytes(b"BANANA", "shift")
    buf_a, ranks_a = array("q", t), array("q", [0] * len(t))
    bwt_lyndon_inplace(buf_a, ranks_a)
    buf_l, ranks_l = list(t), [0] * len(t)
    bwt_lyndon_inplace(buf_l, ranks_l)
    assert list(buf_a) == buf_l and list(ranks_a) == ranks_l


# equivalence of the two rank-bookkeeping conventions -------------------------


def absolute_convention_reference(buffer, ranks):
    """Same construction, tracking s + rank per entry and decrementing
    entries <= s + r each iteration (requires n >= 2); both conventions
    meet at the final inverse suffix array."""
    n = len(buffer)
    ranks[n - 2] = n - 1
    ranks[n - 1] = n - 2
    for s in range(n - 3, -1, -1):
        c = buffer[s]
        r = s
        i = s + 1
        while buffer[i] != SENTINEL:
            if buffer[i] <= c:
                r += 1
            i += 1
        p = i
        while i < n:
            if buffer[i] < c:
                r += 1
            i += 1
        buffer[p] = c
        for i in range(s, r):
            buffer[i] = buffer[i + 1]
        buffer[r] = SENTINEL
        for i in range(s + 1, n):
            if ranks[i] <= r:
                ranks[i] -= 1
        ranks[s] = r
    for i in range(n):
        j = i + 1
        while j < n and ranks[j] >= ranks[i]:
            j += 1
        ranks[i] = j - i


def test_convention_equivalence_exhaustive():
    for t in all_texts((1, 2), 7):
        if len(t) < 2:
            continue
        buf_local, ranks_local = list(t), [0] * len(t)
        bwt_lyndon_inplace(buf_local, ranks_local)
        buf_abs, ranks_abs = list(t), [0] * len(t)
        absolute_convention_reference(buf_abs, ranks_abs)
        assert buf_abs == buf_local, t
        assert ranks_abs == ranks_local, t


def test_convention_equivalence_random():
    rng = random.Random(49)
    for _ in range(40):
        t = random_byte_text(rng, rng.randrange(2, 48))
        buf_local, ranks_local = list(t), [0] * len(t)
        bwt_lyndon_inplace(buf_local, ranks_local)
        buf_abs, ranks_abs = list(t), [0] * len(t)
        absolute_convention_reference(buf_abs, ranks_abs)
        assert buf_abs == buf_local and ranks_abs == ranks_local


# full-pipeline equivalence ---------------------------------------------------


def test_pipeline_matches_oracles_exhaustive_small():
    for t in all_texts((1, 2, 3), 5):
        buf, ranks = list(t), [0] * len(t)
        bwt_lyndon_inplace(buf, ranks)
        sa = suffix_array_naive(t)
        assert buf == bwt_from_sa(t, sa), t
        assert ranks == la_from_isa_nsv(isa_from_sa(sa)) == la_duval(t), t


@settings(deadline=None, max_examples=50)
@given(st.lists(st.integers(min_value=1, max_value=2**31), max_size=40))
def test_pipeline_matches_oracles_wide(payload):
    t = payload + [SENTINEL]
    buf, ranks = list(t), [0] * len(t)
    bwt_lyndon_inplace(buf, ranks)
    sa = suffix_array_naive(t)
    assert buf == bwt_from_sa(t, sa)
    assert ranks == la_from_isa_nsv(isa_from_sa(sa)) == la_duval(t)
