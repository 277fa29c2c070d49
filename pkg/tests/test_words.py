import pytest
from hypothesis import given, strategies as st

from sl2tqft.ring import q
from sl2tqft.surface import SurfaceSpec, evaluate_tqft
from sl2tqft.words import (
    BordismWord,
    WordStructureError,
    WordSyntaxError,
    evaluate_word,
    parse_word,
    word_to_spec,
)

CORPUS = [
    "Dt . D",
    "Dt . L . D",
    "Dt . L^2 . D",
    "Dt . JP . D",
    "Dt . JM . D",
    "Dt . MI . D",
    "Dt . MI^2 . D",
    "Dt . JP . JP . D",
    "Dt . JP^2 . D",
    "Dt . JP . MI . L^2 . D",
    "Dt . MI . JM . L . D",
    "Dt . L . JP . L . D",
    "Dt . JM^3 . D",
    "Dt . JP . JM . MI . D",
    "Dt . L^3 . D",
    "Dt . MI . L . MI . D",
    "Dt . JP^2 . JM^2 . D",
    "Dt . L . JP . JM . MI . L . D",
    "Dt . MI^3 . JP . D",
    "Dt . L^2 . JP^2 . MI . D",
]


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    w = parse_word(text)
    assert str(w) == text
    assert parse_word(str(w)) == w


def test_alternative_separators_and_case():
    a = parse_word("Dt ∘ jp ∘ L^2 ∘ D")
    b = parse_word("dt JP l ^ 2 d")
    c = parse_word("Dt.JP.L^2.D")
    assert a == b == c
    assert str(a) == "Dt . JP . L^2 . D"


@pytest.mark.parametrize("text, pos", [
    ("Dt . XX . D", 5),
    ("Dt . . D", 5),
    ("Dt . L^0 . D", 7),
    ("Dt . L . ", 9),
    ("Dt , L . D", 3),
])
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


@pytest.mark.parametrize("text", ["L . D", "Dt . L", "D . Dt", "Dt . D . L . D", "Dt^2 . D"])
def test_structure_errors(text):
    with pytest.raises(WordStructureError):
        parse_word(text)


def test_word_to_spec():
    assert word_to_spec(parse_word("Dt . JP . MI . L^2 . D")) == SurfaceSpec(2, 1, 0, 1)
    assert word_to_spec(parse_word("Dt . D")) == SurfaceSpec(0)


def test_evaluate_word():
    assert evaluate_word(parse_word("Dt . L . D")) == q**4 + 4 * q**3 - q**2 - 4 * q
    assert evaluate_word(parse_word("Dt . D")) == 1
    assert evaluate_word(parse_word("Dt . MI . D")) == 0


@pytest.mark.parametrize("text", CORPUS)
def test_word_order_does_not_matter(text):
    w = parse_word(text)
    assert evaluate_word(w) == evaluate_tqft(word_to_spec(w))


gens = st.sampled_from(["L", "JP", "JM", "MI"])


@given(st.lists(st.tuples(gens, st.integers(1, 3)), max_size=4))
def test_generated_words_round_trip(factors):
    w = BordismWord((("Dt", 1), *factors, ("D", 1)))
    assert parse_word(str(w)) == w
