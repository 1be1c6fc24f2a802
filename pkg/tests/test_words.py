import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from itint.words import (
    KIndex, Letter, LinComb, Word, WordParseError, as_lincomb, concat,
    enumerate_convergent, format_word, is_convergent, mzv_word, parse_lincomb,
    parse_word, partial, substitute_ez_zero, tau, tau_infinity, word_to_kindex,
)

Z, O, I = Letter.Z, Letter.ZERO, Letter.ONE


def W(text):
    return Word(parse_word(text))


def LC(text):
    return parse_lincomb(text)


letters = st.sampled_from(list(Letter))
words = st.lists(letters, max_size=8).map(Word)
short_words = st.lists(letters, max_size=4).map(Word)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
lincombs = st.lists(st.tuples(short_words, coeffs), max_size=4).map(LinComb)


@st.composite
def convergent_words(draw, max_size=7):
    mid = draw(st.lists(letters, max_size=max_size - 2))
    if not mid and draw(st.booleans()):
        return draw(st.sampled_from([Word(), Word([Z])]))
    return Word([draw(st.sampled_from([I, Z]))] + mid + [draw(st.sampled_from([O, Z]))])


# ---------------------------------------------------------------- basics

def test_letter_order():
    assert O < I < Z
    assert len(Letter) == 3


@pytest.mark.parametrize("text, expected", [
    ("", True), ("z", True), ("1", False), ("0", False),
    ("1,0", True), ("1,z,0", True), ("0,1", False),
])
def test_is_convergent(text, expected):
    assert is_convergent(W(text)) is expected


def test_lincomb_canonical_form():
    x = LinComb([(W("1,0"), 2), (W("z"), Fraction(1, 2)), (W("1,0"), -2)])
    assert x == LinComb({W("z"): Fraction(1, 2)})
    assert len(x) == 1
    assert LinComb([(W("z,0"), Fraction(4, 6))]).coeff(W("z,0")) == Fraction(2, 3)
    assert list(LC("[z] + [1,0] + [1,z]")) == [W("1,0"), W("1,z"), W("z")]


def test_lincomb_rejects_float_coefficients():
    with pytest.raises(TypeError):
        LinComb({W("z"): 0.5})


def test_concat_examples():
    e0, e1, ez = (LinComb.letter(a) for a in (O, I, Z))
    assert concat(e1 - ez, e0 - ez) == LC("[1,0] - [1,z] - [z,0] + [z,z]")
    w = W("z,1,0")
    assert concat(LinComb.one(), w) == LinComb.word(w)
    assert (e1 - ez) * (e0 - ez) * e0 == LC("[1,0,0] - [1,z,0] - [z,0,0] + [z,z,0]")


def test_tau_examples():
    assert tau(W("z")) == LC("[z]")
    assert tau(W("1,0")) == LC("[z,z] - [z,0] - [1,z] + [1,0]")
    assert tau(tau(W("z,1,0"))) == LinComb.word(W("z,1,0"))


def test_tau_infinity_examples():
    assert tau_infinity(W("1,0")) == LC("[1,0]")
    assert tau_infinity(W("1,z,0")) == 0
    assert tau_infinity(W("1,0,0")) == LC("-[1,1,0]")


def test_partial_examples():
    assert partial(Z, O, W("z,0")) == -LinComb.word(W("z"))
    assert partial(Z, I, W("z,0")) == 0
    assert partial(Z, O, W("z")) == -LinComb.one()
    assert partial(Z, I, W("z")) == LinComb.one()
    assert partial(Z, O, Word()) == 0


def _partial_bruteforce(x, y, w):
    # literal transcription of the delta-sum, one term per deleted position
    a = [O] + list(w) + [I]
    out = LinComb()
    for i in range(1, len(w) + 1):
        right = {a[i], a[i + 1]} == {x, y}
        left = {a[i - 1], a[i]} == {x, y}
        out = out + LinComb({Word(a[1:i] + a[i + 1:-1]): int(right) - int(left)})
    return out


@pytest.mark.parametrize("w", [w for n in range(5) for w in enumerate_convergent(n)])
def test_partial_matches_bruteforce(w):
    for x, y in itertools.product(Letter, repeat=2):
        assert partial(x, y, w) == _partial_bruteforce(x, y, w)


def test_partial_rejects_non_convergent():
    with pytest.raises(ValueError):
        partial(Z, O, W("0,z"))
    with pytest.raises(ValueError):
        partial(Z, O, LC("[z] + [z,1]"))


def test_substitute_examples():
    assert substitute_ez_zero(LC("[1,0] - [1,z]")) == LC("[1,0]")
    assert substitute_ez_zero(W("z")) == 0
    e0, e1, ez = (LinComb.letter(a) for a in (O, I, Z))
    for k in range(2, 7):
        for r in range(1, k + 1):
            g = (e1 - ez) * (e0 - ez) ** (r - 1) * e0 ** (k - r)
            assert substitute_ez_zero(g) == e1 * e0 ** (k - 1)


def test_enumerate_small():
    assert enumerate_convergent(0) == [Word()]
    assert enumerate_convergent(1) == [W("z")]
    assert enumerate_convergent(2) == [W("1,0"), W("1,z"), W("z,0"), W("z,z")]


@pytest.mark.parametrize("n", range(2, 10))
def test_enumerate_counts_against_filter(n):
    brute = sorted(Word(p) for p in itertools.product(Letter, repeat=n) if is_convergent(p))
    got = enumerate_convergent(n)
    assert got == brute
    assert len(got) == 4 * 3 ** (n - 2)


def test_enumerate_guard():
    with pytest.raises(ValueError, match="refusing"):
        enumerate_convergent(13)


@pytest.mark.parametrize("idx, text", [((2,), "1,0"), ((1, 2), "1,1,0"), ((3,), "1,0,0"),
                                       ((2, 1, 3), "1,0,1,1,0,0")])
def test_mzv_word(idx, text):
    assert mzv_word(idx) == W(text)
    assert is_convergent(mzv_word(idx))
    assert word_to_kindex(W(text)) == KIndex(idx)


@pytest.mark.parametrize("bad", [(1,), (2, 1), (), (0, 2)])
def test_inadmissible_index(bad):
    with pytest.raises(ValueError):
        mzv_word(bad)


# --------------------------------------------------------------- parsing

def test_parse_word():
    assert parse_word("z,1,0") == Word([Z, I, O])
    assert parse_word("1 0") == Word([I, O])
    assert parse_word(" z , 0 ") == Word([Z, O])
    assert parse_word("") == Word()
    assert format_word(parse_word("z  1,0")) == "z,1,0"


def test_parse_word_errors():
    with pytest.raises(WordParseError) as exc:
        parse_word("x,0")
    assert exc.value.position == 1
    with pytest.raises(WordParseError) as exc:
        parse_word("1,,0")
    assert exc.value.position == 2


def test_parse_lincomb():
    x = parse_lincomb("3/2*[z,1,0] - [1,z,0]")
    assert x == LinComb({W("z,1,0"): Fraction(3, 2), W("1,z,0"): -1})
    assert parse_lincomb("0") == LinComb()
    assert parse_lincomb("-[z] + 2*[]") == LinComb({W("z"): -1, Word(): 2})
    assert parse_lincomb(str(x)) == x
    for bad in ["[x]", "3/0*[z]", "[z] [0]", "", "2*"]:
        with pytest.raises(WordParseError):
            parse_lincomb(bad)


@given(lincombs)
def test_lincomb_text_roundtrip(x):
    assert parse_lincomb(str(x)) == x


@given(words)
def test_word_text_roundtrip(w):
    assert parse_word(format_word(w)) == w


# ------------------------------------------------------------ properties

@settings(max_examples=300)
@given(words)
def test_tau_involution(w):
    assert tau(tau(w)) == LinComb.word(w)


@given(lincombs, lincombs)
def test_tau_anti_multiplicative(x, y):
    assert tau(concat(x, y)) == concat(tau(y), tau(x))
    assert tau_infinity(concat(x, y)) == concat(tau_infinity(y), tau_infinity(x))


@given(lincombs, lincombs, lincombs)
def test_concat_associative_bilinear(x, y, u):
    assert concat(concat(x, y), u) == concat(x, concat(y, u))
    assert concat(x + y, u) == concat(x, u) + concat(y, u)


@given(convergent_words())
def test_tau_preserves_convergence(w):
    assert all(is_convergent(v) for v in tau(w))


@given(convergent_words(), convergent_words())
def test_concat_preserves_convergence(u, v):
    assert is_convergent(u + v)


@given(convergent_words(), st.sampled_from(list(Letter)), st.sampled_from(list(Letter)))
def test_partial_well_defined_and_symmetric(w, x, y):
    d = partial(x, y, w)
    assert all(is_convergent(v) for v in d)
    assert d == partial(y, x, w)


@given(st.lists(st.tuples(convergent_words(5), coeffs), max_size=4), coeffs)
def test_operators_linear(terms, c):
    x = LinComb(terms)
    y = LinComb(terms[::-1][:2])
    for op in (tau, tau_infinity, substitute_ez_zero, lambda v: partial(Z, O, v),
               lambda v: partial(Z, I, v)):
        assert op(x * c + y) == op(x) * c + op(y)


@given(st.lists(letters, max_size=6).map(Word))
def test_tau_infinity_is_limit_of_tau(w):
    assert tau_infinity(w) == substitute_ez_zero(tau(w))


def test_as_lincomb():
    assert as_lincomb(3) == LinComb({Word(): 3})
    assert as_lincomb(W("z")) == LinComb.word(W("z"))
    with pytest.raises(TypeError):
        as_lincomb(1.5)
