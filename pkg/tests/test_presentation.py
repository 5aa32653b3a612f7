import pytest
from hypothesis import given, strategies as st

from torusgroups.notation import expand, relators
from torusgroups.presentation import (
    Presentation,
    PresentationError,
    canonical_relator,
    double_cover,
    double_cover_raw,
    eliminate_generator,
    format_presentation,
    introduce_generator,
    matches_relators,
    normalize,
    parse_presentation,
    quotient_add_relators,
    rename_generators,
    schreier_rewrite,
)
from torusgroups.word import Word, WordError, parse_word

words = st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from((1, -1))), min_size=1,
                 max_size=10).map(Word)


def test_notation():
    assert expand("(a d)^3") == parse_word("a d a d a d")
    assert expand("[x, y]") == parse_word("x y x^-1 y^-1")
    assert expand("(b g)^-1 g (b g)") == parse_word("g^-1 b^-1 g b g")
    assert relators("a = b = c") == [parse_word("a b^-1"), parse_word("b c^-1")]
    assert relators("[(a d)^-1 d (a d), b]")[0] == expand("(a d)^-1 d (a d) b (a d)^-1 d^-1 (a d) b^-1")
    with pytest.raises(WordError):
        expand("(a b")


@given(words)
def test_canonical_relator_invariance(w):
    c = w.cyclically_reduced()
    keys = {canonical_relator(r) for r in c.rotations()} if c else {()}
    keys |= {canonical_relator(w.inverse())}
    assert keys == {canonical_relator(w)}


def test_normalize_drops_duplicates():
    p = Presentation.from_strings("a b", ["a b a^-1 b^-1", "b a^-1 b^-1 a", "a a^-1", "b a b^-1 a^-1"])
    assert len(normalize(p).relators) == 1


def test_unknown_generator():
    with pytest.raises(PresentationError):
        Presentation.from_strings("a", ["a b"])


def test_schreier_rewrite():
    r = parse_word("a d a d a d a^-1 d^-1 a^-1 d^-1 a^-1 d^-1")
    assert schreier_rewrite(r, "d", 0, lambda x: x + "b") == parse_word("a ab a ab^-1 a^-1 ab^-1")
    with pytest.raises(PresentationError):
        schreier_rewrite(parse_word("a d"), "d", 0, lambda x: x + "b")


def test_double_cover_pairs():
    p = Presentation.from_strings("a b d", ["a d b d^-1"])
    raw = double_cover_raw(p, "d")
    assert raw.generators == ("a", "ab", "b", "bb")
    assert [str(r) for r in raw.relators] == ["a bb", "ab b"]


def test_double_cover_of_cyclic():
    # <d | d^2> has trivial index-2 kernel
    p = Presentation(("d",), ())
    q = double_cover(p, "d")
    assert q.generators == () and q.relators == ()


def test_tietze_roundtrip():
    p = Presentation.from_strings("a b", ["a b a = b a b"])
    q = introduce_generator(p, "c", parse_word("a b"))
    r = eliminate_generator(q, "c", parse_word("a b"))
    assert matches_relators(r, p.relators) == ([], [])
    with pytest.raises(PresentationError):
        eliminate_generator(p, "a", parse_word("a b"))


def test_quotient_and_rename():
    p = Presentation.from_strings("a b", ["a b a = b a b"])
    q = quotient_add_relators(p, ["a = b"])
    assert len(q.relators) == 2
    r = rename_generators(q, {"a": "x"})
    assert r.generators == ("x", "b")


def test_file_roundtrip_bytes():
    text = "# sample\ngens: a ab\n(a ab)^3 = (ab a)^3  # comment\n\na ab a = ab a ab\n"
    f = parse_presentation(text)
    assert format_presentation(f) == text
    assert len(f.presentation.relators) == 2
    again = parse_presentation(format_presentation(f.presentation)).presentation
    assert again.relators == f.presentation.relators


def test_file_errors():
    with pytest.raises(PresentationError):
        parse_presentation("a b\n")
    with pytest.raises(PresentationError):
        parse_presentation("gens: a\n(a\n")
    with pytest.raises(PresentationError):
        parse_presentation("# only comments\n")
