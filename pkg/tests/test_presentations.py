import pytest
from hypothesis import given, strategies as st

from dgw.presentations import Presentation, PresentationError, is_left_letter_form, parse_presentation
from dgw.thompson import pr


def test_parse_p23(p23):
    assert p23.alphabet == ("a", "b")
    assert p23.relations == (((0,), (1, 0, 1)), ((1,), (0, 1, 0)))
    assert str(p23) == "<a,b | a=bab, b=aba>"


def test_parse_p2():
    p = parse_presentation("<x | x=xx>")
    assert p == pr(2)


def test_exponent_shorthand(p23):
    assert p23.word("a^3b") == (0, 0, 0, 1)
    assert parse_presentation("<x | x=x^9>") == pr(9)


@pytest.mark.parametrize("text", [
    "<a | a=>", "<a | =a>", "a | a=aa>", "<a | a=aa", "<a | a=b>", "<a,a | a=aa>",
    "<a | a=aa=a>", "<ab | ab=a>", "<a | a=aa> junk",
])
def test_parse_errors(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_error_reports_position():
    with pytest.raises(PresentationError, match="position"):
        parse_presentation("<a | a=>")


def test_left_letter_form(p23):
    assert is_left_letter_form(p23)
    assert not is_left_letter_form(parse_presentation("<a,b | ab=ba>"))
    assert is_left_letter_form(pr(9))
    assert not is_left_letter_form(parse_presentation("<a,b | a=bb, a=ba>"))


def test_side_orientation(p23):
    assert p23.side(0, 1) == ((0,), (1, 0, 1))
    assert p23.side(0, -1) == ((1, 0, 1), (0,))


words = st.lists(st.integers(0, 2), min_size=1, max_size=5).map(tuple)


@given(st.lists(st.tuples(words, words), min_size=1, max_size=4))
def test_print_parse_roundtrip(rels):
    p = Presentation(("a", "b", "c"), tuple(rels))
    once = parse_presentation(str(p))
    assert once == p
    assert parse_presentation(str(once)) == once
