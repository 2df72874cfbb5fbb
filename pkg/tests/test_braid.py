import pytest
from hypothesis import given, strategies as st

from homflychar.braid import (
    BraidParseError,
    BraidWord,
    closure_components,
    parse_tuple_text,
    parse_tuples,
    parse_word_text,
    render_tuples,
    stabilize,
    torus_word,
    writhe,
)


def test_parse_tuples_examples():
    w = parse_tuples(3, [(-1, -1), (-1, -1)])
    assert w.signed() == [-1, -2, -1, -2]
    assert writhe(w) == -4
    w72 = parse_tuples(4, [(-1, 1, 0), (-1, -1, 1), (0, -1, -3)])
    assert w72 == parse_tuple_text(4, "(-1,1,0,-1,-1,1,0,-1,-3)")
    assert w72.signed() == [-1, 2, -1, -2, 3, -2, -3, -3, -3]
    assert parse_tuples(5, [(1, 1, 1, 1)]).signed() == [1, 2, 3, 4]


def test_writhe_examples():
    assert writhe(parse_tuple_text(3, "(1,-1,1,-1)")) == 0
    assert writhe(BraidWord.from_signed(2, [1, 1, 1])) == 3
    assert writhe(parse_tuple_text(3, "(1,3,1,3)")) == 8


def test_components_examples():
    assert closure_components(BraidWord.from_signed(2, [1, 1])) == 2
    assert closure_components(BraidWord.from_signed(2, [1, 1, 1])) == 1
    assert closure_components(parse_tuple_text(3, "{2,1,1,1}")) == 2


def test_stabilize_examples():
    assert stabilize(BraidWord(1, ()), 1) == BraidWord.from_signed(2, [1])
    assert stabilize(BraidWord.from_signed(2, [1, 1, 1]), 1) == parse_tuple_text(3, "(3,1)")
    w = BraidWord(1, ())
    for _ in range(4):
        w = stabilize(w, 1)
    assert w == parse_tuple_text(5, "(1,1,1,1)")


def test_grouped_and_flat_tuple_text_agree():
    assert parse_tuple_text(5, "(-2,-1,0,0|1,-1,-1,1)") == parse_tuple_text(5, "(-2,-1,0,0,1,-1,-1,1)")


@pytest.mark.parametrize("text", ["(1,2,3)", "(1,x)", "(1,2|3)"])
def test_bad_tuple_text(text):
    with pytest.raises(BraidParseError):
        parse_tuple_text(3, text)


def test_bad_words():
    with pytest.raises(BraidParseError):
        parse_word_text(3, "1 3")
    with pytest.raises(BraidParseError):
        parse_word_text(3, "0")


def test_torus_word():
    assert torus_word(3, 2).signed() == [1, 2, 1, 2]
    assert torus_word(3, -1).signed() == [-1, -2]


words = st.integers(2, 5).flatmap(
    lambda m: st.lists(st.integers(1, m - 1).flatmap(lambda k: st.sampled_from([k, -k])), max_size=12).map(
        lambda ls: BraidWord.from_signed(m, ls)
    )
)


@given(words)
def test_tuple_rendering_round_trip(w):
    assert parse_tuple_text(w.strands, render_tuples(w)) == w


@given(words)
def test_inverse_and_mirror(w):
    assert writhe(w.inverse()) == -writhe(w) == writhe(w.mirror())
    assert closure_components(w.inverse()) == closure_components(w)
    assert (w * w.inverse()).strands == w.strands


@given(words, st.sampled_from([1, -1]))
def test_stabilization_keeps_components(w, s):
    v = stabilize(w, s)
    assert closure_components(v) == closure_components(w)
    assert writhe(v) == writhe(w) + s
