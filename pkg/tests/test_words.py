"""Tests for free group words: reduction, cyclic words, involutions, substitution"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from words import (
    XY, ZY, Word, cyclic_reduce, free_reduce_codes, invert, least_rotation,
    parse_word, reduce_word, reverse, substitute_z_to_xy, swap,
)
from utils.errors import AlphabetMismatchError, WordParseError


letters = st.sampled_from([1, -1, 2, -2])


@st.composite
def words(draw, max_size=24):
    """Freely reduced words over {z, y}"""
    return reduce_word(draw(st.lists(letters, max_size=max_size)), ZY)


@st.composite
def positive_words(draw, max_size=24):
    return Word(tuple(draw(st.lists(st.sampled_from([1, 2]), max_size=max_size))), ZY)


def test_reduce_examples():
    """Free reduction cancels inverse pairs"""
    print("\n[TEST] reduce examples...")

    assert str(reduce_word("x X")) == "1"
    assert reduce_word("x X").is_identity()
    assert str(reduce_word("z y Y z")) == "zz"
    assert str(reduce_word("zyyzyyzy")) == "zyyzyyzy"

    print("  [PASS] reduce examples")


def test_cyclic_reduce_examples():
    print("\n[TEST] cyclic_reduce examples...")

    assert str(cyclic_reduce(parse_word("Yzy"))) == "z"
    assert cyclic_reduce(parse_word("zy")) == cyclic_reduce(parse_word("yz"))
    assert cyclic_reduce(parse_word("zyyzyyzy")) == cyclic_reduce(parse_word("yzyyzyyz"))
    assert str(cyclic_reduce(parse_word("yx"))) == "xy"
    assert str(cyclic_reduce(parse_word("xyxY"))) == "xyxY"

    print("  [PASS] cyclic_reduce examples")


def test_involutions_examples():
    print("\n[TEST] invert / reverse / swap examples...")

    assert str(invert(parse_word("zy"))) == "YZ"

    w3 = parse_word("zyyzyyzy")
    mirrored = swap(reverse(w3))
    assert str(mirrored) == "zyzzyzzy"
    assert cyclic_reduce(mirrored) == cyclic_reduce(parse_word("zzyzzyzy"))
    assert swap(swap(w3)) == w3

    print("  [PASS] involution examples")


def test_substitution_examples():
    print("\n[TEST] z -> xy substitution...")

    assert str(substitute_z_to_xy(parse_word("z"))) == "xy"
    assert substitute_z_to_xy(parse_word("z" * 5)) == parse_word("xy", XY) ** 5
    assert str(substitute_z_to_xy(parse_word("zyyyyzyyyyyy"))) == "x" + "y" * 5 + "x" + "y" * 7
    assert substitute_z_to_xy(parse_word("Z")) == parse_word("YX")

    with pytest.raises(AlphabetMismatchError):
        substitute_z_to_xy(parse_word("xy"))

    print("  [PASS] substitution examples")


def test_parse_errors():
    print("\n[TEST] parse errors...")

    with pytest.raises(WordParseError):
        parse_word("z!")
    with pytest.raises(AlphabetMismatchError):
        parse_word("xz")
    with pytest.raises(AlphabetMismatchError):
        parse_word("zy") * parse_word("xy")
    with pytest.raises(WordParseError):
        reduce_word([1, 3])

    print("  [PASS] parse errors")


def test_word_helpers():
    print("\n[TEST] Word helpers...")

    w = parse_word("zyyzyyzy")
    assert len(w) == 8
    assert w.counts() == (3, 5)
    assert w.is_positive()
    assert not parse_word("zY").is_positive()
    assert w.verbose_string() == "z y^2 z y^2 z y"
    assert parse_word("zyY").verbose_string() == "z"
    assert parse_word("zy") ** 3 == parse_word("zyzyzy")
    assert parse_word("zy") ** -1 == invert(parse_word("zy"))
    assert parse_word("zy") ** 0 == Word((), ZY)
    assert str(Word()) == "1"
    assert parse_word("1").is_identity()
    assert [l.code for l in parse_word("zY").letters] == [1, -2]

    print("  [PASS] Word helpers")


def test_least_rotation():
    print("\n[TEST] least rotation...")

    assert least_rotation((2, 1)) == 1
    assert least_rotation((1, 2, 1, -2)) == 0
    assert least_rotation((2, 2, 1, 1)) == 2
    assert least_rotation(()) == 0

    print("  [PASS] least rotation")


@given(words())
def test_reduce_idempotent(w):
    assert reduce_word(w.codes, ZY) == w


@given(words())
def test_round_trip(w):
    assert parse_word(str(w), ZY) == w


@given(words())
def test_times_inverse_is_identity(w):
    assert (w * invert(w)).is_identity()


@given(words())
def test_involutions(w):
    assert invert(invert(w)) == w
    assert reverse(reverse(w)) == w
    assert swap(swap(w)) == w


@given(words())
def test_involutions_commute(w):
    assert invert(reverse(w)) == reverse(invert(w))
    assert invert(swap(w)) == swap(invert(w))
    assert reverse(swap(w)) == swap(reverse(w))


@given(words())
def test_rotations_share_canonical_form(w):
    base = cyclic_reduce(w)
    codes = base.canonical.codes
    for i in range(len(codes)):
        assert cyclic_reduce(Word(codes[i:] + codes[:i], ZY)) == base


@given(words(), st.sampled_from([1, -1, 2, -2]))
def test_conjugates_share_canonical_form(w, letter):
    conjugate = reduce_word((-letter,) + w.codes + (letter,), ZY)
    assert cyclic_reduce(conjugate) == cyclic_reduce(w)


@given(positive_words())
def test_positive_substitution_is_reduced(w):
    image = substitute_z_to_xy(w)
    assert free_reduce_codes(image.codes) == image.codes
    assert len(image) == len(w) + w.counts()[0]


@settings(max_examples=50)
@given(words())
def test_cyclic_word_is_cyclically_reduced(w):
    codes = cyclic_reduce(w).canonical.codes
    if len(codes) >= 2:
        assert codes[0] != -codes[-1]
