import random

import pytest

from braidgeo.braids import (
    BraidWord,
    ParseError,
    closure_components,
    conjugate_by,
    format_normal_form,
    left_normal_form,
    parse_word,
    torus_braid,
    words_equal,
)
from conftest import random_rewrite, random_word


def test_parse_and_str_round_trip():
    word = parse_word("1 2 -1 3 -3", 4)
    assert word.letters == (1, 2, -1, 3, -3)
    assert parse_word(str(word), 4) == word


def test_parse_rejects_out_of_range_generators():
    with pytest.raises(ParseError):
        parse_word("1 3", 3)
    with pytest.raises(ParseError):
        parse_word("0", 3)


def test_free_reduction():
    word = BraidWord(3, (1, 2, -2, -1, 1))
    assert word.free_reduced().letters == (1,)


def test_braid_relations_hold():
    assert words_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3))
    assert words_equal(parse_word("1 3", 4), parse_word("3 1", 4))
    assert not words_equal(parse_word("1 2", 3), parse_word("2 1", 3))


def test_normal_form_separates_word_from_extended_word():
    rng = random.Random(7)
    for _ in range(50):
        word = random_word(rng, 4, 8)
        longer = BraidWord(4, word.letters + (rng.randint(1, 3),))
        assert not words_equal(word, longer)


def test_normal_form_sound_under_random_rewrites():
    rng = random.Random(11)
    for _ in range(200):
        strands = rng.randint(3, 5)
        word = random_word(rng, strands, rng.randint(0, 8))
        other = random_rewrite(rng, word, rng.randint(1, 5))
        assert other.exponent_sum() == word.exponent_sum()
        assert left_normal_form(other) == left_normal_form(word)
        assert words_equal(word, other)


def test_full_twist_is_central():
    # Delta^2 generates the center of B_n
    for n in (3, 4, 5):
        delta2 = torus_braid(n, n)
        for i in range(1, n):
            gen = BraidWord(n, (i,))
            assert words_equal(delta2.concat(gen), gen.concat(delta2))


def test_conjugation_preserves_normal_form_class():
    rng = random.Random(3)
    for _ in range(25):
        word = random_word(rng, 4, 6)
        c = random_word(rng, 4, 4)
        conj = conjugate_by(c, word)
        assert conj.exponent_sum() == word.exponent_sum()
        assert words_equal(
            conj, c.concat(word).concat(c.inverse())
        )


def test_rotation_is_conjugation():
    word = parse_word("1 2 2 3 -1", 4)
    for k in range(1, 5):
        rotated = word.rotated(k)
        c = BraidWord(4, word.letters[-k:])
        assert words_equal(rotated, conjugate_by(c, word))


def test_normal_form_of_trivial_words():
    assert format_normal_form(left_normal_form(BraidWord(3, ()))) == "D^0"
    assert left_normal_form(parse_word("1 -1", 3)).is_trivial()


def test_torus_braid_closure_components():
    assert closure_components(torus_braid(2, 3)) == 1
    assert closure_components(torus_braid(2, 8)) == 2
    assert closure_components(torus_braid(3, 6)) == 3
    assert closure_components(BraidWord(3, (1, 1, 1))) == 2  # split unknot
