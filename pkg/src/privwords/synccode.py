"""Exact sizes of maximal prefix-synchronized codes.

``G_P(N)`` counts words of length ``N + p`` that contain ``P`` at position 0
and position ``N`` and nowhere in between.  :func:`exact_gp` runs a dynamic
program over the pattern automaton with Python integers; :func:`brute_force_gp`
checks every completion directly with numpy and serves as its oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .enumeration import DEFAULT_BUDGET, check_budget
from .words import Word, WordLike, as_word, failure_function


@dataclass(frozen=True)
class PatternAutomaton:
    """KMP automaton; state ``s`` = longest suffix read so far that is a prefix of P."""

    pattern: Word
    delta: tuple[tuple[int, ...], ...]
    fail: tuple[int, ...]

    @property
    def accepting(self) -> int:
        return len(self.pattern)

    def run(self, symbols, state: int = 0) -> int:
        for a in symbols:
            state = self.delta[state][a]
        return state


def build_automaton(P: WordLike, q: int | None = None) -> PatternAutomaton:
    P = as_word(P, q)
    p = len(P)
    if not p:
        raise ValueError("pattern must be non-empty")
    fail = failure_function(P.symbols)
    delta: list[tuple[int, ...]] = []
    for s in range(p + 1):
        row = []
        for a in range(P.q):
            if s < p and P[s] == a:
                row.append(s + 1)
            elif s == 0:
                row.append(0)
            else:
                row.append(delta[fail[s]][a])
        delta.append(tuple(row))
    return PatternAutomaton(P, tuple(delta), tuple(fail))


@dataclass(frozen=True)
class GpRecord:
    P: Word
    N: int
    count: int
    method: str

    @property
    def q(self) -> int:
        return self.P.q


def gp_sequence(P: WordLike, N_max: int, q: int | None = None) -> list[int]:
    """``[G_P(1), ..., G_P(N_max)]`` from one pass of the automaton DP."""
    aut = build_automaton(P, q)
    p = aut.accepting
    moves = [sorted(Counter(row).items()) for row in aut.delta]
    counts = [0] * (p + 1)
    counts[p] = 1
    out = []
    for _ in range(N_max):
        nxt = [0] * (p + 1)
        for s, c in enumerate(counts):
            if c:
                for t, mult in moves[s]:
                    nxt[t] += c * mult
        out.append(nxt[p])
        # Reaching P before the final step would be a forbidden middle occurrence.
        nxt[p] = 0
        counts = nxt
    return out


def exact_gp(P: WordLike, N: int, q: int | None = None) -> GpRecord:
    if N < 1:
        raise ValueError(f"G_P(N) needs N >= 1, got {N}")
    P = as_word(P, q)
    return GpRecord(P, N, gp_sequence(P, N)[-1], "automaton_dp")


_CHUNK = 1 << 17


def _codeword_masks(P: Word, N: int, budget: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (rows, keep) per chunk; rows are full words P+u in lexicographic order."""
    q, p = P.q, len(P)
    total = check_budget(q, N, budget, "completions")
    pat = np.array(P.symbols, dtype=np.uint8)
    powers = q ** np.arange(N - 1, -1, -1, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        codes = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        rows = np.empty((codes.size, p + N), dtype=np.uint8)
        rows[:, :p] = pat
        rows[:, p:] = (codes[:, None] // powers) % q
        # hits[:, k-1] is True when P occurs at start k, for k = 1 .. N.
        hits = rows[:, 1 : N + 1] == pat[0]
        for j in range(1, p):
            hits &= rows[:, 1 + j : N + 1 + j] == pat[j]
        keep = hits[:, N - 1] & ~hits[:, : N - 1].any(axis=1)
        yield rows, keep


def brute_force_gp(
    P: WordLike, N: int, q: int | None = None, *, budget: int = DEFAULT_BUDGET
) -> GpRecord:
    if N < 1:
        raise ValueError(f"G_P(N) needs N >= 1, got {N}")
    P = as_word(P, q)
    count = sum(int(keep.sum()) for _, keep in _codeword_masks(P, N, budget))
    return GpRecord(P, N, count, "brute_force")


def list_codewords(
    P: WordLike, N: int, q: int | None = None, *, budget: int = DEFAULT_BUDGET
) -> Iterator[Word]:
    """The length ``N + p`` words counted by ``G_P(N)``, lexicographically."""
    if N < 1:
        raise ValueError(f"G_P(N) needs N >= 1, got {N}")
    P = as_word(P, q)
    for rows, keep in _codeword_masks(P, N, budget):
        for row in rows[keep]:
            yield Word(tuple(row.tolist()), P.q)
