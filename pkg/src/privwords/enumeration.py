"""Exhaustive counting and listing of privileged words.

The search walks the tree of prefixes depth-first.  Every node extends the
failure function and the privileged witness of its parent by one symbol, so a
leaf costs no more than an internal node.  Work is split into shards by the
first few symbols; shards return plain integers, which are summed.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import BudgetExceeded
from .words import NOT_PRIVILEGED, Word, extend_prefix

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**30
METHOD = "exhaustive"


@dataclass(frozen=True)
class CountRecord:
    n: int
    q: int
    count: int
    method: str = METHOD
    wall_time: float = 0.0


def check_budget(q: int, length: int, budget: int, what: str = "words") -> int:
    total = q**length
    if total > budget:
        raise BudgetExceeded(total, budget, what)
    return total


def _validate(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"word length must be >= 1, got {n}")
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")


def _walk(n: int, q: int, prefix: tuple[int, ...], emit_words: bool):
    """Depth-first search below ``prefix``; yields leaves or returns a count."""
    buf = bytearray(n)
    fail = [0] * (n + 1)
    witness = [NOT_PRIVILEGED] * (n + 1)
    for i, a in enumerate(prefix, start=1):
        buf[i - 1] = a
        extend_prefix(buf, i, fail, witness)
    start = len(prefix)
    if start == n:
        hit = witness[n] != NOT_PRIVILEGED
        if emit_words:
            return [bytes(buf)] if hit else []
        return int(hit)

    found = []
    count = 0

    def descend(depth: int) -> None:
        nonlocal count
        i = depth + 1
        for a in range(q):
            buf[depth] = a
            extend_prefix(buf, i, fail, witness)
            if i == n:
                if witness[n] != NOT_PRIVILEGED:
                    count += 1
                    if emit_words:
                        found.append(bytes(buf))
            else:
                descend(i)

    descend(start)
    return found if emit_words else count


def _count_shard(n: int, q: int, prefixes: list[tuple[int, ...]]) -> int:
    return sum(_walk(n, q, pre, False) for pre in prefixes)


def shard_prefixes(n: int, q: int, shards: int) -> list[list[tuple[int, ...]]]:
    """Split the length-``k`` prefixes round-robin over ``shards``, with ``q**k >= shards``."""
    if shards < 1:
        raise ValueError("shards must be >= 1")
    k = 0
    while q**k < shards:
        k += 1
    k = min(k, n)
    prefixes = list(itertools.product(range(q), repeat=k))
    return [prefixes[s::shards] for s in range(shards)]


def count_privileged(
    n: int,
    q: int = 2,
    shards: int = 1,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    cache: "CountCache | None" = None,
) -> CountRecord:
    """Exact number B(n, q) of privileged words of length ``n``.

    ``shards`` fixes how the search space is cut; ``workers`` caps the number
    of processes (default: ``min(shards, cpu_count)``).  The result does not
    depend on either.
    """
    _validate(n, q)
    if cache is not None:
        hit = cache.load(n, q)
        if hit is not None:
            return hit
    check_budget(q, n, budget)
    parts = shard_prefixes(n, q, shards)
    if workers is None:
        workers = min(shards, os.cpu_count() or 1)
    t0 = time.perf_counter()
    if workers <= 1 or shards == 1:
        total = sum(_count_shard(n, q, part) for part in parts)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_count_shard, [n] * shards, [q] * shards, parts))
    record = CountRecord(n, q, total, METHOD, time.perf_counter() - t0)
    if cache is not None:
        cache.store(record)
    return record


def list_privileged(n: int, q: int = 2, *, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """Privileged words of length ``n`` in lexicographic order."""
    _validate(n, q)
    check_budget(q, n, budget)
    for first in range(q):
        for raw in _walk(n, q, (first,), True):
            yield Word(tuple(raw), q)


class CacheConflict(ValueError):
    pass


class CountCache:
    """Plain-text store of :class:`CountRecord` lines keyed by ``(n, q)``.

    Each line holds ``n q count method wall_time`` separated by tabs; lines
    starting with ``#`` are comments.  Entries are immutable: storing a
    different count under an existing key raises :class:`CacheConflict`.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def _read(self) -> dict[tuple[int, int], CountRecord]:
        records: dict[tuple[int, int], CountRecord] = {}
        if not self.path.exists():
            return records
        for lineno, line in enumerate(self.path.read_text().splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                n, q, count, method, wall = line.split("\t")
                rec = CountRecord(int(n), int(q), int(count), method, float(wall))
                if method != METHOD:
                    raise ValueError(f"unknown method tag {method!r}")
                if rec.count < 0 or rec.count > rec.q**rec.n:
                    raise ValueError("count out of range")
            except ValueError as exc:
                log.warning("ignoring corrupt cache entry %s:%d (%s)", self.path, lineno, exc)
                continue
            records[(rec.n, rec.q)] = rec
        return records

    def load(self, n: int, q: int) -> CountRecord | None:
        return self._read().get((n, q))

    def store(self, record: CountRecord) -> None:
        old = self._read().get((record.n, record.q))
        if old is not None:
            if old.count != record.count:
                raise CacheConflict(
                    f"cache already holds B({record.n}, {record.q}) = {old.count}, "
                    f"refusing to overwrite with {record.count}"
                )
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(
                f"{record.n}\t{record.q}\t{record.count}\t{record.method}\t{record.wall_time:.6f}\n"
            )
