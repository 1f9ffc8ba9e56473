import pytest
from hypothesis import given, strategies as st

from palprim.errors import (
    CancellationAtSeam,
    NotCyclicallyReduced,
    NotReduced,
    ParseError,
    RankError,
)
from palprim.words import (
    ExponentPair,
    Letter,
    Word,
    concat_group,
    concat_wc,
    cyclic_reduce,
    empty,
    exponent_sums,
    format_word,
    invert,
    is_cyclically_reduced,
    is_palindrome,
    is_rotation_of,
    parse_word,
    reduce,
    reverse,
    rotations,
)

P = parse_word


def reduce_by_passes(raw):
    """Cancel one adjacent inverse pair per pass until nothing changes."""
    seq = list(raw)
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] == -seq[i + 1]:
                del seq[i : i + 2]
                changed = True
                break
    return tuple(seq)


def peel_conjugator(letters):
    a = []
    seq = list(letters)
    while len(seq) >= 2 and seq[0] == -seq[-1]:
        a.append(seq[0])
        seq = seq[1:-1]
    return tuple(a), tuple(seq)


raw_letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=40)
words = raw_letters.map(reduce)
raw3 = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=30)


# --- reduce ---------------------------------------------------------------------

def test_reduce_examples():
    assert reduce([1, -1]) == empty()
    assert reduce([1, 2, -2, 1]) == P("xx")
    raw = [1, -2, 2, 2, -2, -1]
    assert reduce_by_passes(raw) == ()
    assert reduce(raw) == empty()


def test_reduce_accepts_letter_objects():
    assert reduce([Letter(1, 1), Letter(2, -1)]) == P("xY")


def test_reduce_rejects_out_of_rank():
    with pytest.raises(RankError):
        reduce([3])
    with pytest.raises(RankError):
        reduce([0])


@given(raw_letters)
def test_reduce_matches_pass_oracle(raw):
    r = reduce(raw)
    assert r.letters == reduce_by_passes(raw)
    assert len(r) <= len(raw) and (len(raw) - len(r)) % 2 == 0
    assert reduce(r.letters) == r


@given(raw3)
def test_reduce_rank3(raw):
    assert reduce(raw, rank=3).letters == reduce_by_passes(raw)


def test_word_constructor_validates():
    with pytest.raises(NotReduced):
        Word([1, -1])
    with pytest.raises(RankError):
        Word([3], rank=2)
    with pytest.raises(RankError):
        Word([], rank=27)
    with pytest.raises(AttributeError):
        P("x").rank = 3


# --- products --------------------------------------------------------------------

def test_concat_group_examples():
    assert concat_group(P("xy"), P("Yx")) == P("xx")
    assert concat_group(P("xyx"), P("xyx")) == P("xyxxyx")
    w = P("xyXYY")
    assert concat_group(w, invert(w)) == empty()
    assert P("xy") * P("Yx") == P("xx")


def test_concat_group_rank_mismatch():
    with pytest.raises(RankError):
        concat_group(P("x"), parse_word("a", rank=3))


@given(raw_letters, raw_letters)
def test_concat_group_is_reduced_juxtaposition(a, b):
    u, v = reduce(a), reduce(b)
    assert concat_group(u, v) == reduce(u.letters + v.letters)


def test_concat_wc_examples():
    assert concat_wc(P("x"), P("y")) == P("xy")
    assert concat_wc(empty(), P("xY")) == P("xY")
    with pytest.raises(CancellationAtSeam):
        concat_wc(P("xy"), P("Yx"))
    with pytest.raises(CancellationAtSeam):
        concat_wc(P("xy"), empty(), P("Y"))


@given(words, words)
def test_concat_wc_length(u, v):
    try:
        j = concat_wc(u, v)
    except CancellationAtSeam:
        assert u and v and u[-1] == -v[0]
    else:
        assert len(j) == len(u) + len(v)


# --- inversion, reversal, palindromes ---------------------------------------

def test_invert_examples():
    assert invert(P("xY")) == P("yX")
    assert invert(empty()) == empty()
    assert ~P("xy") == P("YX")


def test_reverse_examples():
    assert reverse(P("xYxx")) == P("xxYx")
    assert reverse(P("yxyxy")) == P("yxyxy")
    u, v = P("xY"), P("xx")
    assert reverse(concat_wc(u, v)) == concat_wc(reverse(v), reverse(u))


@given(words)
def test_reverse_and_invert_involutions(w):
    assert invert(invert(w)) == w
    assert reverse(reverse(w)) == w
    assert reverse(invert(w)) == invert(reverse(w))
    # reversal keeps words reduced
    Word(reverse(w).letters)


def test_is_palindrome_examples():
    assert is_palindrome(P("yxyxy"))
    assert not is_palindrome(P("xy"))
    assert is_palindrome(empty())


def test_exponent_sums_examples():
    assert exponent_sums(P("xyyxy")) == ExponentPair(2, 3)
    assert exponent_sums(P("Xyx")) == (0, 1)
    assert exponent_sums(parse_word("abCa", rank=3)) == (2, 1, -1)


def test_exponent_pair_queries():
    assert ExponentPair(2, 3).coprime()
    assert not ExponentPair(2, 4).coprime()
    assert ExponentPair(2, 3).parity() == 1
    assert ExponentPair(-1, 3).parity() == 0


# --- cyclic reduction and rotations -------------------------------------------

def test_cyclic_reduce_examples():
    assert cyclic_reduce(P("xyX")) == (P("x"), P("y"))
    assert cyclic_reduce(P("yxyxy")) == (empty(), P("yxyxy"))
    w = P("xyxYX")
    assert peel_conjugator(w.letters) == ((1, 2), (1,))
    assert cyclic_reduce(w) == (P("xy"), P("x"))


@given(words)
def test_cyclic_reduce_round_trip(w):
    a, core = cyclic_reduce(w)
    assert concat_wc(a, core, invert(a)) == w
    assert is_cyclically_reduced(core)
    assert (a.letters, core.letters) == peel_conjugator(w.letters)


def test_rotations_examples():
    assert rotations(P("xy")) == [P("xy"), P("yx")]
    rots = rotations(P("xyyxy"))
    assert len(rots) == 5 and rots[:2] == [P("xyyxy"), P("yyxyx")]
    assert rotations(P("x")) == [P("x")]
    assert rotations(P("xyxy")) == [P("xyxy"), P("yxyx"), P("xyxy"), P("yxyx")]
    with pytest.raises(NotCyclicallyReduced):
        rotations(P("xyX"))


def test_is_rotation_of():
    assert is_rotation_of(P("yXYx"), P("xyXY"))
    assert not is_rotation_of(P("xyxY"), P("xyXY"))


# --- text format -------------------------------------------------------------------

def test_format_and_parse():
    assert format_word(empty()) == "1"
    assert P("1") == empty()
    assert P("x^-1 y^3") == P("Xyyy")
    assert P("x^2 y^-2 x^0") == P("xxYY")
    assert P("xyX") == Word([1, 2, -1])
    assert P("x y X") == P("xyX")
    # parsing reduces
    assert P("xXy") == P("y")


def test_parse_rank3_and_errors():
    w = parse_word("abC", rank=3)
    assert w.letters == (1, 2, -3)
    assert str(w) == "abC"
    with pytest.raises(ParseError):
        P("xz")
    with pytest.raises(ParseError):
        P("x^")
    with pytest.raises(ParseError):
        parse_word("x", rank=3)


@given(words)
def test_format_parse_round_trip(w):
    assert P(str(w)) == w
