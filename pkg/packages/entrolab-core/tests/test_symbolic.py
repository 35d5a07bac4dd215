"""Pruebas de SFT: conteo, entropia, mezcla, codificacion kappa y pegado de mapas."""

import itertools
import math
from fractions import Fraction

import pytest

from entrolab_core.errors import FormatError, NotAdmissibleError, PrefixTooShortError
from entrolab_core.structures import Provenance
from entrolab_core.symbolic import (
    SFT,
    IdentityPrefixMap,
    Mixing,
    ShiftConjugate,
    check_mixing,
    count_itineraries,
    count_words,
    essential_states,
    format_word,
    glue_maps,
    is_in_language,
    kappa_decode,
    kappa_encode,
    kappa_trace,
    language_words,
    mixing_gap,
    parse_word,
    phi_modulus,
    row_sum_bracket,
    sft_entropy,
)

LOG2_PHI = math.log2((1 + math.sqrt(5)) / 2)


@pytest.fixture
def golden():
    return SFT.from_successors(2, {0: [0, 1], 1: [0]})


@pytest.fixture
def period_three_center():
    # SFT de la particion de Markov del centro de periodo 3
    return SFT.from_successors(4, {0: [0, 1], 1: [2], 2: [1, 2], 3: [0]})


def test_json_round_trip(golden):
    data = golden.to_json()
    assert data == {"alphabet": 2, "allowed": [[1, 1], [1, 0]]}
    assert SFT.from_json(data) == golden


@pytest.mark.parametrize("data", [
    {"alphabet": 2, "allowed": [[1, 1]]},
    {"alphabet": 2, "allowed": [[1, 2], [1, 0]]},
    {"allowed": [[1]]},
])
def test_malformed_sft(data):
    with pytest.raises(FormatError):
        SFT.from_json(data)


def test_word_counts_are_fibonacci(golden):
    assert [count_words(golden, n) for n in range(1, 8)] == [2, 3, 5, 8, 13, 21, 34]
    assert len(language_words(golden, 6)) == 21


def test_transient_states_are_not_in_language(period_three_center):
    assert essential_states(period_three_center) == (0, 1, 2)
    assert not is_in_language(period_three_center, (3, 0))
    assert is_in_language(period_three_center, (0, 1, 2, 2, 1))


def test_row_sum_bracket_contains_power(golden):
    lo, hi = row_sum_bracket(golden, 5)
    assert (lo, hi) == (8, 13)
    assert lo <= ((1 + math.sqrt(5)) / 2) ** 5 <= hi


def test_golden_mean_entropy(golden):
    eps = Fraction(1, 10**9)
    bound = sft_entropy(golden, eps)
    assert bound.provenance is Provenance.SFT and bound.certified
    assert bound.width <= eps
    assert bound.lo <= Fraction(LOG2_PHI) + Fraction(1, 10**15)
    assert Fraction(LOG2_PHI) - Fraction(1, 10**15) <= bound.hi


def test_full_shift_and_cycles():
    full = sft_entropy(SFT.full_shift(2))
    assert (full.lo, full.hi) == (1, 1)
    cycle = sft_entropy(SFT.from_successors(2, {0: [1], 1: [0]}))
    assert (cycle.lo, cycle.hi) == (0, 0)


def test_transient_states_do_not_change_entropy(golden, period_three_center):
    a = sft_entropy(golden, Fraction(1, 2**20))
    b = sft_entropy(period_three_center, Fraction(1, 2**20))
    assert abs(a.midpoint - b.midpoint) <= Fraction(1, 2**19)


def test_mixing(golden):
    assert check_mixing(golden) is Mixing.MIXING
    assert mixing_gap(golden) == 2
    swap = SFT.from_successors(2, {0: [1], 1: [0]})
    assert check_mixing(swap) is Mixing.NOT_MIXING
    with pytest.raises(NotAdmissibleError):
        mixing_gap(swap)


def test_words_parse_and_format():
    assert parse_word("0110", 2) == (0, 1, 1, 0)
    assert parse_word("3.11.0", 12) == (3, 11, 0)
    assert format_word((3, 11, 0), 12) == "3.11.0"
    with pytest.raises(FormatError):
        parse_word("012", 2)


def test_kappa_encode_known_word(golden):
    assert kappa_encode(golden, (0, 1, 0, 0, 1, 0)) == (0, 1, 0, 1)
    trace = kappa_trace(golden, (0, 1, 0, 0, 1, 0))
    assert trace.output_length == 4


def test_kappa_is_injective_on_words_of_fixed_length(golden):
    for n in range(1, 9):
        codes = {kappa_encode(golden, w) for w in language_words(golden, n)}
        assert len(codes) == count_words(golden, n)


def test_kappa_is_monotone_for_prefixes(golden):
    for w in language_words(golden, 7):
        full = kappa_encode(golden, w)
        for k in range(len(w)):
            part = kappa_encode(golden, w[:k])
            assert full[:len(part)] == part


def test_kappa_decode_inverts(golden):
    for w in language_words(golden, 7):
        code = kappa_encode(golden, w)
        back = kappa_decode(golden, code)
        assert w[:len(back)] == back
        assert kappa_encode(golden, back) == code


def test_phi_modulus_bounds_decoded_length(golden):
    for m in range(1, 7):
        limit = phi_modulus(golden, m)
        for bits in itertools.product((0, 1), repeat=m):
            assert len(kappa_decode(golden, bits)) <= limit
        for w in language_words(golden, limit):
            assert len(kappa_encode(golden, w)) >= m


def test_kappa_rejects_inadmissible(golden):
    with pytest.raises(NotAdmissibleError):
        kappa_encode(golden, (1, 1))
    with pytest.raises(NotAdmissibleError):
        kappa_encode(SFT.full_shift(3), (0, 1))
    with pytest.raises(NotAdmissibleError):
        kappa_encode(SFT.from_successors(2, {0: [1], 1: [0]}), (0, 1))


def test_shift_conjugate_is_prefix_consistent(golden):
    shift = ShiftConjugate(golden)
    for w in language_words(golden, 8):
        out = shift(kappa_encode(golden, w))
        assert kappa_encode(golden, w[1:])[:len(out)] == out


def test_shift_conjugate_is_onto_prefixes(golden):
    shift = ShiftConjugate(golden)
    m = 4
    seen = {shift(bits)[:m] for bits in itertools.product((0, 1), repeat=m + 2)}
    assert set(itertools.product((0, 1), repeat=m)) <= seen


def test_glue_routes_by_leading_zeros(golden):
    components = [IdentityPrefixMap(), ShiftConjugate(golden)]
    assert glue_maps(components, (1, 0, 1, 1)) == (1, 0, 1, 1)
    assert glue_maps(components, (0, 0, 1, 1)) == (0, 0, 1, 1)
    assert glue_maps(components, (0, 0, 0)) == (0, 0, 0)
    assert glue_maps(components, (1, 0, 1), length=2) == (1, 0)
    with pytest.raises(FormatError):
        glue_maps(components, (0, 2))


def test_glue_reports_missing_input(golden):
    components = [IdentityPrefixMap(), ShiftConjugate(golden)]
    with pytest.raises(PrefixTooShortError) as info:
        glue_maps(components, (0, 1), length=5)
    assert info.value.needed >= 3


def test_glued_itineraries_follow_the_language(golden):
    components = [IdentityPrefixMap(), ShiftConjugate(golden)]
    n = 6
    inputs = itertools.product((0, 1), repeat=n + 5)
    count = count_itineraries(lambda w: glue_maps(components, w), inputs, n, 3)
    assert count_words(golden, n) <= count <= count_words(golden, n) + 6


@pytest.mark.parametrize("word, expected", [
    ((0,), (0,)),
    ((0, 1), (0, 1)),
    # tras un 1 la letra 0 es forzada y no se escribe
    ((0, 1, 0), (0, 1)),
])
def test_kappa_encode_hand_traces(golden, word, expected):
    assert kappa_encode(golden, word) == expected


def test_kappa_encode_inverts_decode_on_all_binary_words(golden):
    for n in range(1, 9):
        for bits in itertools.product((0, 1), repeat=n):
            assert kappa_encode(golden, kappa_decode(golden, bits)) == bits


def test_glued_map_is_onto_prefixes(golden):
    components = [IdentityPrefixMap(), ShiftConjugate(golden)]
    for m in range(1, 9):
        seen = set()
        for w in itertools.product((0, 1), repeat=m + 2):
            try:
                seen.add(glue_maps(components, w, length=m))
            except PrefixTooShortError:
                continue
        assert seen == set(itertools.product((0, 1), repeat=m))
        assert glue_maps(components, (0,) * m, length=m) == (0,) * m
