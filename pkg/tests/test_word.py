import pytest
from hypothesis import given, strategies as st

from torusgroups.word import (
    IDENTITY,
    Word,
    WordError,
    commutator,
    format_word,
    parse_relation,
    parse_relations,
    parse_word,
    substitute,
)

GENS = ("a", "b", "c")
letters = st.lists(st.tuples(st.sampled_from(GENS), st.sampled_from((1, -1))), max_size=14)
words = letters.map(Word)


def test_free_reduction_on_parse():
    assert parse_word("a b^-1 b c") == parse_word("a c")
    assert parse_word("a a^-1") == IDENTITY
    assert parse_word("1") == IDENTITY
    assert format_word(IDENTITY) == "1"


def test_bad_tokens():
    with pytest.raises(WordError):
        parse_word("a^2")
    with pytest.raises(WordError):
        parse_word("9a")
    with pytest.raises(WordError):
        Word([("a", 2)])


def test_commutator_convention():
    x, y = Word.gen("x"), Word.gen("y")
    assert commutator(x, y) == parse_word("x y x^-1 y^-1")


def test_relation_chain():
    rels = parse_relations("a = b = c")
    assert rels == [parse_word("a b^-1"), parse_word("b c^-1")]
    with pytest.raises(WordError):
        parse_relation("a = b = c")


def test_substitute_unmapped():
    with pytest.raises(WordError):
        substitute(parse_word("a z"), {"a": Word.gen("b")})


@given(words)
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w)) == w


@given(words, words)
def test_inverse_of_product(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u * u.inverse() == IDENTITY


@given(words, words, words)
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words, words)
def test_substitution_is_homomorphism(u, v):
    img = {"a": parse_word("b c"), "b": parse_word("a^-1"), "c": IDENTITY}
    assert substitute(u * v, img) == substitute(u, img) * substitute(v, img)


@given(words)
def test_cyclic_reduction_is_conjugate(w):
    c = w.cyclically_reduced()
    assert len(c) <= len(w)
    # w = p c p^-1 for the stripped prefix p
    k = (len(w) - len(c)) // 2
    p = Word(w.letters[:k])
    assert p * c * p.inverse() == w


@given(words, st.integers(min_value=-3, max_value=3))
def test_power(w, n):
    expect = IDENTITY
    base = w if n >= 0 else w.inverse()
    for _ in range(abs(n)):
        expect = expect * base
    assert w ** n == expect
