import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    all_words,
    direct_privileged,
    naive_autocorrelation,
    naive_borders,
    naive_occurrences,
)
from privwords.words import (
    Word,
    autocorrelation,
    border_lengths,
    correlation_polynomial,
    count_occurrences,
    failure_function,
    is_privileged,
    privileged_witness,
)

words_q2 = st.text(alphabet="ab", min_size=1, max_size=16)
words_q3 = st.text(alphabet="abc", min_size=1, max_size=12)


class TestWord:
    def test_round_trip(self):
        w = Word.parse("abcab", q=3)
        assert w.symbols == (0, 1, 2, 0, 1)
        assert str(w) == "abcab"

    def test_default_alphabet_is_smallest_fit(self):
        assert Word.parse("aaa").q == 2
        assert Word.parse("aca").q == 3

    @pytest.mark.parametrize("text,q", [("abc", 2), ("aXa", 3), ("ab1", 5)])
    def test_rejects_bad_symbols(self, text, q):
        with pytest.raises(ValueError):
            Word.parse(text, q)

    def test_rejects_out_of_range_symbols(self):
        with pytest.raises(ValueError):
            Word((0, 2), q=2)

    def test_empty_word_is_representable(self):
        assert len(Word.parse("")) == 0


class TestBorders:
    @pytest.mark.parametrize(
        "w,expected",
        [("aaab", []), ("aaaa", [1, 2, 3]), ("aabaa", [1, 2]), ("a", []), ("abab", [2])],
    )
    def test_examples(self, w, expected):
        assert border_lengths(w) == expected

    def test_failure_function(self):
        assert failure_function([0, 0, 1, 0, 0]) == [0, 0, 1, 0, 1, 2]

    def test_empty_word(self):
        with pytest.raises(ValueError):
            border_lengths("")

    @pytest.mark.parametrize("q,nmax", [(2, 10), (3, 7)])
    def test_matches_naive_comparison(self, q, nmax):
        for n in range(1, nmax + 1):
            for w in all_words(n, q):
                assert border_lengths(Word.parse(w, q)) == naive_borders(w), w


class TestOccurrences:
    @pytest.mark.parametrize("u,w,expected", [("aa", "aaaa", 3), ("ab", "ab", 1), ("aa", "aabaa", 2), ("b", "aaa", 0)])
    def test_examples(self, u, w, expected):
        assert count_occurrences(u, w) == expected

    def test_empty_pattern(self):
        with pytest.raises(ValueError):
            count_occurrences("", "ab")

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            count_occurrences(Word.parse("a", 2), Word.parse("ab", 3))

    @given(words_q2, words_q2)
    def test_against_naive(self, u, w):
        assert count_occurrences(u, w) == naive_occurrences(u, w)


class TestPrivileged:
    @pytest.mark.parametrize(
        "w,expected",
        [("a", True), ("ab", False), ("aabaa", True), ("aa", True), ("aab", False), ("abba", True), ("aaab", False)],
    )
    def test_examples(self, w, expected):
        assert is_privileged(w) is expected

    def test_empty_word(self):
        with pytest.raises(ValueError):
            is_privileged("")

    def test_witness_chain(self):
        chain = privileged_witness("aabaa")
        assert [str(u) for u in chain] == ["aabaa", "aa", "a"]
        assert privileged_witness("ab") is None
        assert [str(u) for u in privileged_witness("b")] == ["b"]

    @given(words_q3)
    def test_witness_chain_is_valid(self, w):
        chain = privileged_witness(w)
        assert (chain is not None) == is_privileged(w)
        if chain:
            assert len(chain[-1]) == 1
            for parent, child in zip(chain, chain[1:]):
                s, c = str(parent), str(child)
                assert s.startswith(c) and s.endswith(c)
                assert naive_occurrences(c, s) == 2
                assert is_privileged(child)

    @given(words_q3, st.permutations([0, 1, 2]))
    def test_permutation_invariance(self, w, sigma):
        word = Word.parse(w, 3)
        assert is_privileged(word) == is_privileged(word.permute(sigma))

    def test_long_unary_word_no_recursion_limit(self):
        assert is_privileged("a" * 5000)

    @given(words_q2)
    @settings(max_examples=300)
    def test_against_direct_recursion(self, w):
        assert is_privileged(w) == direct_privileged(w)


class TestAutocorrelation:
    @pytest.mark.parametrize("P,expected", [("aaa", "111"), ("aaab", "1000"), ("aba", "101"), ("aabaa", "10011")])
    def test_examples(self, P, expected):
        assert str(autocorrelation(P)) == expected

    @given(words_q3)
    def test_against_naive_shift_comparison(self, P):
        Q = autocorrelation(P)
        assert str(Q) == naive_autocorrelation(P)
        assert Q.bits[0] == 1

    @given(words_q3)
    def test_shift_bits_are_borders(self, P):
        Q = autocorrelation(P)
        p = len(P)
        assert {p - t for t in range(1, p) if Q.bits[t]} == set(border_lengths(P))


class TestCorrelationPolynomial:
    @pytest.mark.parametrize("P,text", [("aaab", "z^3"), ("aaa", "z^2 + z + 1"), ("aba", "z^2 + 1")])
    def test_construction(self, P, text):
        assert str(correlation_polynomial(autocorrelation(P))) == text

    def test_evaluation(self):
        assert correlation_polynomial("aaab").exact(2) == 8
        assert correlation_polynomial("aaa").exact(2) == 7
        assert correlation_polynomial("aaab").derivative_exact(2) == 12
        assert correlation_polynomial("aaab")(2.0) == 8.0
        assert correlation_polynomial("aaab").derivative(2.0) == 12.0
        assert correlation_polynomial("aba")(1.5) == pytest.approx(3.25)

    def test_leading_coefficient(self):
        f = correlation_polynomial("abaab")
        assert f.coefficients[0] == 1 and f.degree == 4

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_value_bounds(self, q):
        for p in range(1, 7 if q < 4 else 5):
            for P in all_words(p, q):
                fq = correlation_polynomial(Word.parse(P, q)).exact(q)
                assert q ** (p - 1) <= fq <= (q**p - 1) // (q - 1)

    def test_derivative_matches_finite_difference(self):
        f = correlation_polynomial("aabaabaa")
        h = 1e-6
        for z in (1.7, 1.9, 2.5):
            fd = (f(z + h) - f(z - h)) / (2 * h)
            assert f.derivative(z) == pytest.approx(fd, rel=1e-6)
