"""Word and generator-matrix primitives."""

import pytest

from z2cb import gf2core
from z2cb.gf2core import (
    EmptyCodeError,
    GenMatrix,
    Gf2Word,
    NotInjectiveError,
    add,
    format_matrix,
    iter_codewords,
    min_distance,
    parse_matrix,
    puncture,
    rank,
    shorten,
    systematic_form,
    weight,
    weight_distribution,
)

HAMMING7 = parse_matrix("1101000\n0110100\n1110010\n1010001\n")


def test_word_text_roundtrip():
    w = Gf2Word.from01("10110")
    assert w.bits == 0b01101  # leftmost char is coordinate 0
    assert w.to01() == "10110"
    assert w.support() == (0, 2, 3)


def test_word_rejects_bad_text():
    with pytest.raises(ValueError):
        Gf2Word.from01("10x1")
    with pytest.raises(ValueError):
        Gf2Word.from01("")


def test_word_rejects_stray_bits():
    with pytest.raises(ValueError):
        Gf2Word(3, 0b1000)
    with pytest.raises(ValueError):
        Gf2Word(0, 0)
    with pytest.raises(ValueError):
        Gf2Word(gf2core.MAX_LENGTH + 1, 0)


def test_add_is_xor_and_weight_counts():
    a = Gf2Word.from01("1100")
    b = Gf2Word.from01("0110")
    assert add(a, b).to01() == "1010"
    assert weight(add(a, b)) == 2
    with pytest.raises(ValueError):
        add(a, Gf2Word.from01("11000"))


def test_matrix_validation():
    with pytest.raises(ValueError):
        GenMatrix(2, (0b100,))
    with pytest.raises(ValueError):
        GenMatrix(0, ())
    m = GenMatrix(3, (0b101, 0b010))
    assert (m.n, m.k) == (3, 2)
    assert [w.to01() for w in m.row_words()] == ["101", "010"]


def test_rank_counts_independent_rows():
    assert rank(GenMatrix(3, (0b001, 0b010, 0b011))) == 2
    assert rank(GenMatrix(3, ())) == 0
    assert rank(HAMMING7) == 4


def test_iter_codewords_visits_each_once():
    words = list(iter_codewords(HAMMING7))
    assert len(words) == 16
    assert words[0] == 0
    assert len(set(words)) == 16


def test_min_distance_hamming():
    assert min_distance(HAMMING7) == 3


def test_min_distance_requires_injective():
    with pytest.raises(NotInjectiveError):
        min_distance(GenMatrix(3, (0b011, 0b011)))
    with pytest.raises(EmptyCodeError):
        min_distance(GenMatrix(3, ()))


def test_weight_distribution_hamming():
    s = weight_distribution(HAMMING7)
    assert (s.n, s.k, s.min_distance) == (7, 4, 3)
    assert s.weight_distribution == (1, 0, 0, 7, 7, 0, 0, 1)
    assert sum(s.weight_distribution) == 1 << 4
    assert s.as_dict()["weight_distribution"][3] == 7


def test_min_weight_word_ignores_row_order():
    rows = HAMMING7.rows
    a = gf2core._min_weight_word(HAMMING7)
    b = gf2core._min_weight_word(GenMatrix(7, rows[::-1]))
    assert a == b
    assert a[0] == 3
    assert a[1] in set(iter_codewords(HAMMING7))


def test_shorten_drops_support_coordinate():
    sub = shorten(HAMMING7, 0)
    assert (sub.n, sub.k) == (6, 3)
    # every shortened word lifts (insert 0 at coord 0 = shift up) into the original
    original = set(iter_codewords(HAMMING7))
    for w in iter_codewords(sub):
        lift = w << 1
        assert lift in original
        assert lift.bit_count() == w.bit_count()
    assert min_distance(sub) >= min_distance(HAMMING7)


def test_shorten_keeps_dimension_off_support():
    m = GenMatrix(3, (0b110,))  # no row touches coordinate 0
    sub = shorten(m, 0)
    assert (sub.n, sub.k) == (2, 1)
    assert sub.rows == (0b11,)


def test_shorten_validates_arguments():
    with pytest.raises(ValueError):
        shorten(HAMMING7, 7)
    with pytest.raises(ValueError):
        shorten(GenMatrix(1, (1,)), 0)
    with pytest.raises(EmptyCodeError):
        shorten(GenMatrix(3, ()), 0)


def test_puncture_drops_length_and_rereduces():
    p = puncture(HAMMING7, 0)
    assert p.n == 6
    assert p.k == 4  # distance 3 > 1, so no two codewords collide
    assert min_distance(p) >= min_distance(HAMMING7) - 1
    # a weight-1 word at the coordinate collapses onto zero and is re-reduced away
    assert puncture(GenMatrix(2, (0b10,)), 1).rows == ()
    assert puncture(GenMatrix(2, (0b11,)), 1).rows == (1,)


def test_systematic_form_preserves_weights():
    sys_m, perm = systematic_form(HAMMING7)
    assert sorted(perm) == list(range(7))
    for i, r in enumerate(sys_m.rows):
        assert r & ((1 << sys_m.k) - 1) == 1 << i  # identity block
    assert (
        weight_distribution(sys_m).weight_distribution
        == weight_distribution(HAMMING7).weight_distribution
    )


def test_parse_matrix_comments_and_errors():
    m = parse_matrix("# header\n101 # trailing\n\n010\n")
    assert m.rows == (0b101, 0b010)
    with pytest.raises(ValueError):
        parse_matrix("101\n01\n")
    with pytest.raises(ValueError):
        parse_matrix("# nothing\n\n")
    with pytest.raises(ValueError):
        parse_matrix("10a\n")


def test_format_parse_roundtrip():
    text = format_matrix(HAMMING7)
    assert parse_matrix(text) == HAMMING7
    assert text.endswith("\n")
