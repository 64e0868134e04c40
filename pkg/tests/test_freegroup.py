import pytest
from hypothesis import given, settings, strategies as st

from welded.freegroup import (
    MalformedInput,
    RankMismatch,
    Word,
    commutator,
    conjugate,
    delete_generator,
    exponent_sum,
    invert,
    lcs_equal,
    magnus,
    multiply,
    power,
    series_of_word,
    word_from_series,
)

from conftest import ranked_words


def w(text, n=3):
    return Word.parse(text, n)


# hand-computed values


def test_free_reduction():
    assert Word([1, 2, -2, -1, 3], 3) == w("x3")
    assert str(Word([1, -1], 2)) == ""
    assert w("x1^2 x2^-1").letters == (1, 1, -2)


def test_conjugation_convention():
    # x^g = g^-1 x g
    assert conjugate(w("x1"), w("x2")) == w("x2^-1 x1 x2")
    assert conjugate(w("x1"), w("x2^-2")) == w("x2 x2 x1 x2^-1 x2^-1")


def test_commutator_convention():
    assert commutator(w("x1"), w("x2")) == w("x1^-1 x2^-1 x1 x2")


def test_magnus_commutator():
    s = magnus(commutator(w("x1"), w("x2")), 2)
    assert s.coeffs == {(): 1, (1, 2): 1, (2, 1): -1}


def test_magnus_inverse_letter():
    assert magnus(w("x1^-1"), 3).coeffs == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}


def test_magnus_power():
    assert magnus(w("x2^3"), 2).coeffs == {(): 1, (2,): 3, (2, 2): 3}


def test_exponent_sum_and_delete():
    g = w("x1 x2 x1^-1 x1^-1 x3")
    assert exponent_sum(g, 1) == -1
    assert delete_generator(g, 1) == w("x2 x3")


def test_lcs_equal_levels():
    c = commutator(w("x1"), w("x2"))
    assert lcs_equal(c, Word.identity(3), 2)
    assert not lcs_equal(c, Word.identity(3), 3)
    assert lcs_equal(w("x1 x2"), w("x2 x1"), 2)
    assert lcs_equal(w("x1"), w("x2"), 1)


def test_parse_errors():
    with pytest.raises(MalformedInput):
        Word.parse("y1", 2)
    with pytest.raises(MalformedInput):
        Word([3], 2)
    with pytest.raises(RankMismatch):
        multiply(Word([1], 1), Word([1], 2))
    with pytest.raises(MalformedInput):
        magnus(w("x1"), 0)


def test_normal_form_of_commutator():
    c = commutator(w("x1"), w("x2"))
    nf = word_from_series(magnus(c, 2).coeffs, 3, 2)
    assert lcs_equal(nf, c, 3)


# properties


@given(ranked_words(count=3))
def test_group_axioms(data):
    n, (a, b, c) = data
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, invert(a)) == Word.identity(n)
    assert invert(invert(a)) == a


@given(ranked_words(count=2, max_len=6), st.integers(1, 4))
def test_magnus_is_multiplicative(data, D):
    n, (a, b) = data
    assert magnus(a * b, D) == magnus(a, D) * magnus(b, D)


@given(ranked_words(max_len=5), st.integers(-3, 3))
def test_power(data, k):
    n, (a,) = data
    expected = Word.identity(n)
    for _ in range(abs(k)):
        expected = expected * (a if k > 0 else ~a)
    assert power(a, k) == expected


@settings(max_examples=60)
@given(ranked_words(max_len=10), st.integers(1, 4))
def test_normal_form_round_trip(data, D):
    n, (a,) = data
    coeffs = series_of_word(a.letters, D)
    nf = word_from_series(coeffs, n, D)
    assert series_of_word(nf.letters, D) == coeffs


@settings(max_examples=60)
@given(ranked_words(max_len=10))
def test_multilinear_normal_form_round_trip(data):
    n, (a,) = data
    coeffs = series_of_word(a.letters, n, True)
    nf = word_from_series(coeffs, n, n, True)
    assert series_of_word(nf.letters, n, True) == coeffs


@given(ranked_words(count=2, max_len=5))
def test_commutators_vanish_in_abelianization(data):
    n, (a, b) = data
    assert lcs_equal(commutator(a, b), Word.identity(n), 2)
