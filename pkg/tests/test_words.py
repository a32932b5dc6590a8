import random

import pytest
from hypothesis import given, settings, strategies as st

from opgs.text import parse_star_word, parse_word
from opgs.words import (DAGGER, ONE, Alphabet, Bracket, StarWord, Word, bracket, bracket_free_words,
                        breadth, deg_g, deg_p, deg_x, find_occurrences, format_word, grade, is_subword,
                        p_breadth, random_word, substitute, words_in_box, words_of_grade)

AB = Alphabet.coerce("a,b,c")


def w(s):
    return parse_word(s, AB)


def test_concat():
    assert w("a") * w("b") == w("a b")
    assert ONE * w("[a]") == w("[a]")
    assert w("[a]") * ONE == w("[a]")
    assert w("[a]") * w("b [c]") == w("[a] b [c]")


def test_bracket():
    assert bracket(w("a")) == w("[a]")
    assert bracket(ONE) == Word((DAGGER,))
    assert bracket(w("[a]")) == w("[[a]]")


def test_degrees():
    assert deg_p(w("a b")) == 0
    assert deg_p(w("[a [b]]")) == 2
    assert deg_p(w("a [1] b")) == 0
    assert deg_x(w("a b")) == 2
    assert deg_x(w("[a] [a]")) == 2
    assert deg_x(w("a [1]")) == 2


def test_p_breadth():
    assert p_breadth(w("[a] b [c]")) == 2
    assert p_breadth(w("a b")) == 0
    assert p_breadth(w("[[a]]")) == 1
    assert breadth(w("[a] b [c]")) == 3


def test_deg_g():
    assert deg_g(w("a b")) == 0
    assert deg_g(w("[a] b")) == 1
    assert deg_g(w("[a b]")) == 2
    assert deg_g(w("[a b]")) - deg_g(w("[a] b")) == deg_x(w("b"))
    # mirrored variant counts letters to the right
    assert deg_g(w("[a] b"), right=True) == 2 + 1


def test_grade_counts_unit_brackets():
    assert grade(w("a [1] b")) == (2, 1)
    assert grade(w("[[a] b]")) == (2, 2)


def test_substitute():
    assert substitute(parse_star_word("@ b", AB), w("a")) == w("a b")
    assert substitute(parse_star_word("[@]", AB), w("a b")) == w("[a b]")
    assert substitute(parse_star_word("a [@]", AB), ONE) == w("a [1]")


def test_find_occurrences():
    assert find_occurrences(w("[a [b c]]"), w("b c")) == [parse_star_word("[a [@]]", AB)]
    assert set(find_occurrences(w("a a"), w("a"))) == {parse_star_word("@ a", AB), parse_star_word("a @", AB)}
    assert find_occurrences(w("a b"), w("c")) == []


def test_star_word_needs_one_star():
    with pytest.raises(ValueError):
        StarWord(w("a b"))
    with pytest.raises(ValueError):
        StarWord(Word(("@", "@")))


def test_box_counts():
    # independent counts from a generating-function recursion over grades
    assert len(words_in_box("a,b", 3, 2)) == 262
    assert len(words_in_box("a,b", 3, 2, unital=True)) == 828
    assert len(words_in_box("z", 3, 2)) == 40
    assert len(words_in_box("z", 3, 2, unital=True)) == 136
    assert len(set(words_in_box("a,b", 3, 2, unital=True))) == 828


def test_words_of_grade_partition_box():
    box = words_in_box("a,b", 2, 2)
    cells = sum(len(words_of_grade("a,b", i, j)) for i in range(3) for j in range(3))
    assert cells == len(box)


def test_bracket_free_words():
    assert len(bracket_free_words("a,b", 3, 1)) == 2 + 4 + 8


def test_format():
    assert format_word(ONE) == "1"
    assert format_word(w("[a b] c")) == "[a b] c"
    assert format_word(Word((DAGGER,))) == "[1]"


words_st = st.integers(0, 10 ** 9).map(lambda s: random_word(random.Random(s), "a,b,c", 4, 3))
unital_words_st = st.integers(0, 10 ** 9).map(lambda s: random_word(random.Random(s), "a,b,c", 4, 3, unital=True))


@given(unital_words_st)
def test_round_trip(u):
    assert parse_word(format_word(u), AB) == u


@given(words_st, words_st)
def test_degree_additivity(u, v):
    assert deg_p(u * v) == deg_p(u) + deg_p(v)
    assert deg_x(u * v) == deg_x(u) + deg_x(v)
    assert deg_p(bracket(u)) == deg_p(u) + 1


@given(words_st, words_st)
def test_deg_g_identity(u, v):
    assert deg_g(bracket(u * v)) - deg_g(bracket(u) * v) == deg_x(v)


@settings(max_examples=50)
@given(unital_words_st, words_st)
def test_occurrences_reconstruct(u, v):
    target = u * bracket(v) * v
    occ = find_occurrences(target, v)
    assert occ
    for q in occ:
        assert substitute(q, v) == target
    assert is_subword(v, target)


def test_bracket_type():
    b = Bracket(w("a"))
    assert b.inner == w("a")
