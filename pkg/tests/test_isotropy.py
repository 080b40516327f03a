"""Analyzer for elementary abelian 2-group actions."""

import random

import pytest

from z2cb.gf2core import GenMatrix, min_distance, parse_matrix
from z2cb.isotropy import (
    NotEffectiveError,
    Representation,
    analyze,
    find_low_weight_involution,
    find_weight4_pair,
)

REMARK = parse_matrix(
    "11110000000\n11001111111\n00001111000\n00001100110\n00001010101\n"
)


def test_representation_flag_must_match_rank():
    assert Representation.from_matrix(REMARK).effective
    dep = GenMatrix(3, (0b011, 0b011))
    assert not Representation.from_matrix(dep).effective
    with pytest.raises(ValueError):
        Representation(dep, True)
    with pytest.raises(ValueError):
        Representation(REMARK, False)


def test_analyze_requires_effective():
    rep = Representation.from_matrix(GenMatrix(2, (0b11, 0b11)))
    with pytest.raises(NotEffectiveError) as e:
        analyze(rep)
    assert e.value.code == "NOT_EFFECTIVE"


def test_analyze_remark_action():
    a = analyze(Representation.from_matrix(REMARK))
    assert a.min_codim == 4
    assert a.min_codim == min_distance(REMARK)
    assert a.distinct_characters == 9
    assert sum(c for _, c in a.character_multiplicities) == 11  # no zero columns
    assert a.character_multiplicities[0][1] >= a.character_multiplicities[-1][1]
    assert not a.minimal_form
    assert a.as_dict()["witness"] == a.witness.to01()


def test_analyze_minimal_form():
    # three distinct independent characters, one repeated: block shape
    m = parse_matrix("1100\n0010\n0001\n")
    a = analyze(Representation.from_matrix(m))
    assert a.min_codim == 1
    assert a.distinct_characters == 3
    assert a.minimal_form
    assert dict(a.character_multiplicities) == {"100": 2, "010": 1, "001": 1}


def test_analyze_not_minimal_when_extra_characters():
    m = parse_matrix("110\n011\n")
    a = analyze(Representation.from_matrix(m))
    assert a.distinct_characters == 3
    assert not a.minimal_form  # 3 characters against r = 2


def test_invariants_stable_under_row_operations():
    rng = random.Random(11)
    base = analyze(Representation.from_matrix(REMARK))
    rows = list(REMARK.rows)
    for _ in range(50):
        i, j = rng.randrange(5), rng.randrange(5)
        if i != j:
            rows[i] ^= rows[j]
        rng.shuffle(rows)
        a = analyze(Representation.from_matrix(GenMatrix(11, tuple(rows))))
        assert a.min_codim == base.min_codim
        assert a.distinct_characters == base.distinct_characters
        assert a.minimal_form == base.minimal_form
        assert sorted(c for _, c in a.character_multiplicities) == sorted(
            c for _, c in base.character_multiplicities
        )


def test_find_low_weight_involution_thresholds():
    rep = Representation.from_matrix(REMARK)
    assert find_low_weight_involution(rep, 3) is None
    w = find_low_weight_involution(rep, 4)
    assert w is not None and w.bits.bit_count() == 4
    # threshold n always returns the minimum-distance witness
    w2 = find_low_weight_involution(rep, 11)
    assert w2 == w


def test_find_low_weight_involution_presentation_independent():
    rows = REMARK.rows
    a = find_low_weight_involution(Representation.from_matrix(REMARK), 11)
    b = find_low_weight_involution(
        Representation.from_matrix(GenMatrix(11, rows[::-1])), 11
    )
    assert a == b


def test_find_weight4_pair_on_remark():
    pair = find_weight4_pair(Representation.from_matrix(REMARK))
    assert pair is not None
    x, y = pair
    assert x.bits != y.bits
    assert x.bits.bit_count() == 4 and y.bits.bit_count() == 4
    assert (x.bits ^ y.bits).bit_count() < 8


def test_find_weight4_pair_absent():
    # a lone weight-4 word has no partner
    pair = find_weight4_pair(Representation.from_matrix(parse_matrix("1111\n")))
    assert pair is None
    # two weight-4 words with disjoint supports xor to weight 8
    far = parse_matrix("11110000\n00001111\n")
    assert find_weight4_pair(Representation.from_matrix(far)) is None
