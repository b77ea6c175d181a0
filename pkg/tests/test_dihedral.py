from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin import dihedral as dh
from artin.dihedral import A, B, DihedralError, DihedralWord, words_equal
from oracles import all_words, brute_conjugate_to_generator_power, oracle_key

letters = st.sampled_from((A, B, -A, -B))
labels = st.integers(min_value=3, max_value=7)


@st.composite
def words(draw, max_len=10):
    m = draw(labels)
    return DihedralWord(m, tuple(draw(st.lists(letters, max_size=max_len))))


def W(m, text):
    return DihedralWord.parse(m, text)


# -- parsing ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a b^-1", (A, -B)),
        ("aB", (A, -B)),
        ("ab⁻¹", (A, -B)),
        ("a^3 b", (A, A, A, B)),
        ("b^-2", (-B, -B)),
        ("", ()),
        ("1", ()),
    ],
)
def test_parse_letters(text, expected):
    assert dh.parse_letters(text) == expected


@pytest.mark.parametrize("bad", ["a c", "a^", "a^x", "ab^-1^2", "x"])
def test_parse_letters_rejects(bad):
    with pytest.raises(DihedralError):
        dh.parse_letters(bad)


def test_word_rendering_round_trips():
    w = W(4, "a b^-1 a^-1 b")
    assert str(w) == "a b^-1 a^-1 b"
    assert w.compact() == "aBAb"
    assert DihedralWord.parse(4, w.compact()) == w
    assert DihedralWord.parse(4, str(w)) == w


def test_label_must_be_at_least_two():
    with pytest.raises(DihedralError):
        DihedralWord(1, ())


# -- simples and normal forms -------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_simples_count_and_shape(m):
    s = dh.simples(m)
    assert len(s) == 2 * m
    assert len(set(s)) == 2 * m
    assert s[-1] == dh.alternating(A, m)


def test_braid_relation_holds():
    assert words_equal(W(3, "aba"), W(3, "bab"))
    assert words_equal(W(4, "abab"), W(4, "baba"))
    assert not words_equal(W(4, "aba"), W(4, "bab"))


def test_nf_examples():
    assert str(dh.garside_nf(W(3, "abab"))) == "D^1 . b"
    assert str(dh.garside_nf(W(3, ""))) == "D^0"
    nf = dh.garside_nf(W(3, "A"))
    assert nf.delta_power == -1
    assert words_equal(nf.to_word(), W(3, "A"))


@settings(max_examples=300, deadline=None)
@given(words())
def test_nf_is_left_greedy_and_represents_word(w):
    nf = dh.garside_nf(w)
    assert nf.is_left_greedy()
    assert dh.garside_nf(nf.to_word()) == nf
    assert nf.canonical_length == len(nf.factors)


@settings(max_examples=200, deadline=None)
@given(words(), words())
def test_words_equal_is_a_congruence(u, v):
    v = DihedralWord(u.m, v.letters)
    assert words_equal(u * u.inverse(), DihedralWord(u.m))
    assert words_equal(u * v, dh.canonical_word(u) * dh.canonical_word(v))


@settings(max_examples=200, deadline=None)
@given(words())
def test_delta_conjugation_swaps_generators_for_odd_m(w):
    d = DihedralWord.delta(w.m)
    conj = d * w * d.inverse()
    if w.m % 2:
        swapped = DihedralWord(w.m, tuple((B if abs(x) == A else A) * (1 if x > 0 else -1) for x in w.letters))
        assert words_equal(conj, swapped)
    else:
        assert words_equal(conj, w)


def test_nf_batch_matches_single_calls():
    rng = random.Random(0)
    for m in (3, 4, 6):
        ws = [tuple(rng.choice((A, B, -A, -B)) for _ in range(rng.randint(0, 12))) for _ in range(200)]
        batch = dh.nf_many(m, ws)
        for w, nf in zip(ws, batch):
            assert nf == dh.garside_nf(DihedralWord(m, w))


def test_canonical_word_depends_only_on_the_element():
    m = 3
    spelling: dict = {}
    for w in all_words(4):
        c = dh.canonical_word(DihedralWord(m, w))
        assert words_equal(c, DihedralWord(m, w))
        key = oracle_key(m, w)
        assert spelling.setdefault(key, c) == c


def test_mixed_labels_rejected():
    with pytest.raises(DihedralError):
        words_equal(W(3, "a"), W(4, "a"))


# -- centre -------------------------------------------------------------------


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_centre_generator(m):
    z = dh.centre_generator(m)
    assert dh.is_central(z)
    assert len(z) == (m if m % 2 == 0 else 2 * m)
    if m % 2:
        assert not dh.is_central(DihedralWord.delta(m))


def test_central_examples():
    assert dh.is_central(W(3, "ababab"))
    assert not dh.is_central(W(3, "ab"))
    assert dh.is_central(W(4, "abab"))


@settings(max_examples=200, deadline=None)
@given(words())
def test_central_elements_commute_with_generators(w):
    if dh.is_central(w):
        for g in (W(w.m, "a"), W(w.m, "b")):
            assert words_equal(w * g, g * w)


def test_centre_rejects_small_label():
    with pytest.raises(DihedralError):
        dh.is_central(W(2, "a"))


# -- central quotient -----------------------------------------------------------


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8])
def test_letter_images_satisfy_relation(m):
    a = dh.central_quotient_image(W(m, "a"))
    b = dh.central_quotient_image(W(m, "b"))
    lhs = rhs = dh.FreeProductNF(m)
    for i in range(m):
        lhs = lhs * (a if i % 2 == 0 else b)
        rhs = rhs * (b if i % 2 == 0 else a)
    assert lhs == rhs


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_quotient_kernel_is_centre(m):
    assert dh.central_quotient_image(dh.centre_generator(m)).is_trivial
    for w in all_words(4):
        dw = DihedralWord(m, w)
        assert dh.central_quotient_image(dw).is_trivial == (dh.is_central(dw))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_lift_is_a_section(m):
    rng = random.Random(m)
    for _ in range(50):
        w = DihedralWord(m, tuple(rng.choice((A, B, -A, -B)) for _ in range(rng.randint(0, 8))))
        q = dh.central_quotient_image(w)
        assert dh.central_quotient_image(dh.lift(q)) == q


def test_factor_orders():
    assert (dh.factor_order(5, "x"), dh.factor_order(5, "y")) == (2, 5)
    assert (dh.factor_order(6, "x"), dh.factor_order(6, "y")) == (0, 3)


@settings(max_examples=200, deadline=None)
@given(words())
def test_cyclic_reduction_is_conjugation(w):
    q = dh.central_quotient_image(w)
    c, s = dh.cyclic_reduction(q)
    assert c * s * c.inverse() == q
    syl = s.syllables
    assert len(syl) < 2 or syl[0][0] != syl[-1][0]


def test_central_power_examples():
    assert dh.has_central_power(W(3, "ab")) == 3
    assert dh.has_central_power(W(3, "aB")) is None
    assert dh.has_central_power(W(3, "ababab")) == 1
    with pytest.raises(DihedralError):
        dh.has_central_power(W(3, "aA"))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_central_power_order_is_least(m):
    for w in all_words(3):
        dw = DihedralWord(m, w)
        if dh.is_trivial(dw):
            continue
        n = dh.central_power_order(dw)
        powers = [dh.is_central(dw ** k) for k in range(1, 2 * m + 1)]
        if n is None:
            assert not any(powers)
        else:
            assert powers[n - 1] and not any(powers[: n - 1])


# -- shapes ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "m, text, form",
    [
        (3, "ababab", "dihedral"),
        (3, "ab", "Z"),
        (3, "a b^-1", "Z2"),
        (4, "abab", "dihedral"),
        (4, "ab", "Z"),
        (3, "a", "Z2"),
    ],
)
def test_dihedral_shape(m, text, form):
    assert dh.dihedral_centraliser_shape(W(m, text)).form == form


def test_shape_rejects_trivial():
    with pytest.raises(DihedralError):
        dh.dihedral_centraliser_shape(W(3, "abBA"))


# -- conjugacy to generator powers ----------------------------------------------


def test_conjugacy_examples():
    wit = dh.is_conjugate_to_generator_power(W(3, "b a b^-1"))
    assert (wit.generator, wit.power, str(wit.conjugator)) == ("a", 1, "b")
    wit = dh.is_conjugate_to_generator_power(W(3, "aa"))
    assert (wit.generator, wit.power, str(wit.conjugator)) == ("a", 2, "")
    assert dh.is_conjugate_to_generator_power(W(3, "ab")) is None


@pytest.mark.parametrize("m", [3, 4])
def test_conjugacy_agrees_with_bounded_search(m):
    def equal(u, v):
        return oracle_key(m, u) == oracle_key(m, v)

    for w in all_words(3):
        dw = DihedralWord(m, w)
        if dh.is_trivial(dw):
            continue
        wit = dh.is_conjugate_to_generator_power(dw)
        if wit is not None:
            assert words_equal(wit.conjugate(), dw)
            assert wit.power != 0
        # a bounded search can only confirm positives
        found = brute_conjugate_to_generator_power(m, w, 2, 3, equal)
        if found is not None:
            assert wit is not None


def test_conjugacy_rejects_trivial():
    with pytest.raises(DihedralError):
        dh.is_conjugate_to_generator_power(W(3, ""))
