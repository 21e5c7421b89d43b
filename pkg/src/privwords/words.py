"""Borders, occurrences, privileged words and correlation polynomials.

Words are sequences of symbol indices ``0 .. q-1`` and print as strings over
``'a', 'b', 'c', ...``.  Most functions accept either a :class:`Word` or a
plain string, which is parsed with the smallest alphabet that fits (at least
binary).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]
    q: int = 2

    def __post_init__(self):
        if self.q < 2 or self.q > len(ALPHABET):
            raise ValueError(f"alphabet size must be in [2, {len(ALPHABET)}], got {self.q}")
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside alphabet of size {self.q}")

    @classmethod
    def parse(cls, text: str, q: int | None = None) -> "Word":
        """Parse ``'aabaa'``-style text; ``q`` defaults to the smallest alphabet that fits."""
        symbols = []
        for ch in text:
            idx = ALPHABET.find(ch)
            if idx < 0:
                raise ValueError(f"invalid symbol {ch!r} in word {text!r}")
            symbols.append(idx)
        if q is None:
            q = max([2] + [s + 1 for s in symbols])
        elif symbols and max(symbols) >= q:
            raise ValueError(f"word {text!r} uses letters beyond an alphabet of size {q}")
        return cls(tuple(symbols), q)

    def __str__(self) -> str:
        return "".join(ALPHABET[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.q)
        return self.symbols[item]

    def to_bytes(self) -> bytes:
        return bytes(self.symbols)

    def permute(self, sigma: Sequence[int]) -> "Word":
        """Apply the alphabet permutation ``a -> sigma[a]``."""
        return Word(tuple(sigma[s] for s in self.symbols), self.q)


WordLike = Union[Word, str]


def as_word(w: WordLike, q: int | None = None) -> Word:
    if isinstance(w, Word):
        if q is not None and q != w.q:
            return Word(w.symbols, q)
        return w
    return Word.parse(w, q)


def failure_function(symbols: Sequence[int]) -> list[int]:
    """``fail[i]`` is the length of the longest proper border of ``symbols[:i]``.

    >>> failure_function([0, 0, 1, 0, 0])
    [0, 0, 1, 0, 1, 2]
    """
    n = len(symbols)
    fail = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        a = symbols[i]
        while k and symbols[k] != a:
            k = fail[k]
        if symbols[k] == a:
            k += 1
        fail[i + 1] = k
    return fail


def border_lengths(w: WordLike) -> list[int]:
    """Lengths of the proper borders of ``w``, ascending."""
    w = as_word(w)
    if not len(w):
        raise ValueError("the empty word has no borders")
    fail = failure_function(w.symbols)
    out = []
    b = fail[len(w)]
    while b:
        out.append(b)
        b = fail[b]
    return out[::-1]


def count_occurrences(pattern: WordLike, text: WordLike) -> int:
    """Number of (possibly overlapping) positions where ``pattern`` occurs in ``text``."""
    if isinstance(pattern, Word) and isinstance(text, Word) and pattern.q != text.q:
        raise ValueError(f"alphabet sizes differ: {pattern.q} vs {text.q}")
    pat = as_word(pattern).to_bytes()
    txt = as_word(text).to_bytes()
    if not pat:
        raise ValueError("empty pattern")
    count = 0
    k = txt.find(pat)
    while k >= 0:
        count += 1
        k = txt.find(pat, k + 1)
    return count


# Witness codes stored per prefix length: NOT_PRIVILEGED, 0 for a single
# letter, otherwise the length of a privileged border occurring exactly twice.
NOT_PRIVILEGED = -1


def extend_prefix(buf, i: int, fail: list[int], witness: list[int]) -> None:
    """Fill ``fail[i]`` and ``witness[i]`` for the length-``i`` prefix of ``buf``.

    Entries for all shorter prefixes must already be filled in.  Borders are
    tried longest first; a border qualifies when its own witness is set and
    its next occurrence after position 0 is the suffix position.
    """
    if i == 1:
        fail[1] = 0
        witness[1] = 0
        return
    a = buf[i - 1]
    k = fail[i - 1]
    while k and buf[k] != a:
        k = fail[k]
    if buf[k] == a:
        k += 1
    fail[i] = k
    witness[i] = NOT_PRIVILEGED
    if not k:
        return
    word = bytes(buf[:i])
    b = k
    while b:
        if witness[b] != NOT_PRIVILEGED and word.find(word[:b], 1) == i - b:
            witness[i] = b
            return
        b = fail[b]


@lru_cache(maxsize=1 << 16)
def _witness_table(content: bytes) -> tuple[int, ...]:
    n = len(content)
    fail = [0] * (n + 1)
    witness = [NOT_PRIVILEGED] * (n + 1)
    for i in range(1, n + 1):
        extend_prefix(content, i, fail, witness)
    return tuple(witness)


def is_privileged(w: WordLike) -> bool:
    """True if ``w`` is a single letter or has a privileged border occurring exactly twice."""
    w = as_word(w)
    if not len(w):
        raise ValueError("privileged status is not defined for the empty word")
    return _witness_table(w.to_bytes())[-1] != NOT_PRIVILEGED


def privileged_witness(w: WordLike) -> list[Word] | None:
    """Chain ``[w, b1, b2, ..., letter]`` of nested privileged borders, or None.

    Each element after the first is a privileged border of its predecessor that
    occurs there exactly twice.
    """
    w = as_word(w)
    if not len(w):
        raise ValueError("privileged status is not defined for the empty word")
    table = _witness_table(w.to_bytes())
    n = len(w)
    if table[n] == NOT_PRIVILEGED:
        return None
    chain = [w]
    while table[n] > 0:
        n = table[n]
        chain.append(w[:n])
    return chain


@dataclass(frozen=True)
class AutocorrelationVector:
    """Self-overlap bits of a pattern, indexed by shift ``t = 0 .. p-1``."""

    bits: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def autocorrelation(P: WordLike) -> AutocorrelationVector:
    """Bit ``t`` is set iff the length ``p - t`` suffix of ``P`` equals its prefix."""
    P = as_word(P)
    p = len(P)
    if not p:
        raise ValueError("autocorrelation of the empty word is undefined")
    bits = [0] * p
    bits[0] = 1
    for b in border_lengths(P):
        bits[p - b] = 1
    return AutocorrelationVector(tuple(bits))


@dataclass(frozen=True)
class CorrelationPolynomial:
    """Integer polynomial with coefficients listed from ``z**(p-1)`` down to ``z**0``."""

    coefficients: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: float) -> float:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * z + c
        return acc

    def exact(self, z: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * z + c
        return acc

    def derivative(self, z: float) -> float:
        # Horner on value and derivative together.
        val = 0.0
        der = 0.0
        for c in self.coefficients:
            der = der * z + val
            val = val * z + c
        return der

    def derivative_exact(self, z: int) -> int:
        val = 0
        der = 0
        for c in self.coefficients:
            der = der * z + val
            val = val * z + c
        return der

    def __str__(self) -> str:
        terms = []
        for t, c in enumerate(self.coefficients):
            if not c:
                continue
            e = self.degree - t
            mono = "1" if e == 0 else "z" if e == 1 else f"z^{e}"
            if c != 1:
                mono = f"{c}" if e == 0 else f"{c}*{mono}"
            terms.append(mono)
        return " + ".join(terms) if terms else "0"


def correlation_polynomial(Q: AutocorrelationVector | WordLike) -> CorrelationPolynomial:
    """``f(z) = sum of z**(p-1-t)`` over the matched shifts ``t``.

    Accepts an autocorrelation vector or, for convenience, the pattern itself.
    """
    if not isinstance(Q, AutocorrelationVector):
        Q = autocorrelation(Q)
    return CorrelationPolynomial(tuple(Q.bits))
