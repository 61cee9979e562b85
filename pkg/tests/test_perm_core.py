from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from msv_complexity.perm_core import (
    Permutation,
    adjacent_transposition,
    coxeter_length,
    dots,
    from_one_line,
    identity,
    inverse,
    longest_element,
    multiply,
    noninversions,
    parse_permutation,
    rank_fn,
)

perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda w: Permutation(tuple(w))
)


def P(s):
    return parse_permutation(s)


class TestConstruction:
    def test_from_one_line(self):
        w = from_one_line([3, 4, 1, 2])
        assert w.n == 4 and w.word == (3, 4, 1, 2)
        assert from_one_line([1]).word == (1,)

    @pytest.mark.parametrize("word", [[2, 2, 1], [0, 1], [1, 3], []])
    def test_rejects(self, word):
        with pytest.raises(ValueError):
            from_one_line(word)

    def test_parse_syntaxes(self):
        assert P("3412") == P("3,4,1,2") == P("[3, 4, 1, 2]") == P("3 4 1 2")
        w = P("10,9,8,7,6,5,4,3,1,2")
        assert w.n == 10 and w.one_line() == "10,9,8,7,6,5,4,3,1,2"

    @pytest.mark.parametrize("text", ["", "12a", "1,,x", "1234567891"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            P(text)


def test_longest_element():
    assert longest_element(4).word == (4, 3, 2, 1)
    assert longest_element(1).word == (1,)
    assert longest_element(5) == P("54321")


def test_adjacent_transposition():
    assert adjacent_transposition(5, 4) == P("12354")
    assert adjacent_transposition(2, 1) == P("21")
    assert adjacent_transposition(4, 2) == P("1324")
    with pytest.raises(ValueError):
        adjacent_transposition(4, 4)
    with pytest.raises(ValueError):
        adjacent_transposition(4, 0)


def test_multiply():
    assert multiply(longest_element(5), adjacent_transposition(5, 4)) == P("54312")
    assert multiply(longest_element(4), adjacent_transposition(4, 3)) == P("4312")
    u = P("34512")
    assert u * identity(5) == u
    with pytest.raises(ValueError):
        multiply(P("21"), P("123"))


@pytest.mark.parametrize("n", range(2, 13))
def test_w0_times_last_transposition(n):
    w = multiply(longest_element(n), adjacent_transposition(n, n - 1))
    assert w.word == tuple(range(n, 2, -1)) + (1, 2)


def test_inverse():
    assert inverse(P("3412")) == P("3412")
    assert inverse(identity(4)) == identity(4)
    w = P("34512")
    assert inverse(w) == P("45123")
    assert all(w(inverse(w)(i)) == i for i in range(1, 6))


def test_noninversions():
    assert noninversions(P("54312")) == {(4, 5)}
    assert noninversions(identity(3)) == {(1, 2), (1, 3), (2, 3)}
    assert noninversions(P("34512")) == {(1, 2), (1, 3), (2, 3), (4, 5)}


def test_coxeter_length():
    assert coxeter_length(longest_element(4)) == 6
    assert coxeter_length(identity(4)) == 0
    assert coxeter_length(P("3412")) == 4


def test_rank_fn():
    w = P("3412")
    assert rank_fn(w, 2, 3) == 2
    assert rank_fn(w, 4, 1) == 0
    assert rank_fn(w, 1, 4) == 4
    with pytest.raises(ValueError):
        rank_fn(w, 0, 1)
    with pytest.raises(ValueError):
        rank_fn(w, 1, 5)


def test_rank_fn_matches_matrix_rank():
    np = pytest.importorskip("numpy")
    for word in permutations(range(1, 6)):
        w = Permutation(word)
        m = np.zeros((5, 5))
        for j, x in enumerate(word):
            m[x - 1, j] = 1
        for a in range(1, 6):
            for b in range(1, 6):
                assert rank_fn(w, a, b) == np.linalg.matrix_rank(m[a - 1:, :b])


def test_dots():
    assert set(dots(P("34512"))) == {(3, 1), (4, 2), (5, 3), (1, 4), (2, 5)}
    assert set(dots(identity(2))) == {(1, 1), (2, 2)}
    assert set(dots(P("3412"))) == {(3, 1), (4, 2), (1, 3), (2, 4)}


@pytest.mark.parametrize("n", range(1, 8))
def test_length_plus_noninversions_exhaustive(n):
    total = n * (n - 1) // 2
    for word in permutations(range(1, n + 1)):
        w = Permutation(word)
        assert coxeter_length(w) + len(noninversions(w)) == total


@given(perms)
def test_inverse_is_involution(w):
    assert inverse(inverse(w)) == w
    assert multiply(w, inverse(w)) == identity(w.n)


@given(perms)
def test_rank_fn_monotone(w):
    n = w.n
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            r = rank_fn(w, a, b)
            if a < n:
                assert rank_fn(w, a + 1, b) <= r
            if b < n:
                assert rank_fn(w, a, b + 1) >= r


@given(perms)
def test_dots_one_per_row_and_column(w):
    d = dots(w)
    assert sorted(r for r, _ in d) == list(range(1, w.n + 1))
    assert sorted(c for _, c in d) == list(range(1, w.n + 1))
