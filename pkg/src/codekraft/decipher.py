"""Unique-decipherability decisions with collision certificates.

A code is uniquely decipherable (UD) when no two distinct sequences of
code words concatenate to the same word.  :func:`is_ud` decides this with
the Sardinas-Patterson dangling-suffix iteration and, on failure, emits a
concrete collision pair so every "not UD" claim is independently
checkable.  :func:`is_ud_bruteforce` is a bounded exhaustive oracle used
to cross-check the production procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Code, Factorization, Word
from .errors import ResourceLimitError

DEFAULT_MAX_STATES = 1_000_000

IndexTuple = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class UdVerdict:
    """Outcome of a decipherability test.

    ``witness`` is present exactly when ``is_ud`` is false: two distinct
    factorizations, both over the tested code, with equal concatenations.
    """

    is_ud: bool
    witness: Optional[tuple[Factorization, Factorization]] = None

    def __post_init__(self):
        if self.is_ud and self.witness is not None:
            raise ValueError("a UD verdict carries no witness")
        if not self.is_ud and self.witness is None:
            raise ValueError("a non-UD verdict needs a witness")


def _witness_key(pair: tuple[Factorization, Factorization]):
    left, right = pair
    word = left.concatenation
    return (len(word), word.indices, left.sort_key, right.sort_key)


def _ordered_pair(left: Factorization, right: Factorization):
    if right.sort_key < left.sort_key:
        left, right = right, left
    return (left, right)


def is_ud(code: Code, max_states: int = DEFAULT_MAX_STATES) -> UdVerdict:
    """Decide unique decipherability via Sardinas-Patterson.

    Dangling suffixes are iterated to saturation with one parent pointer
    kept per suffix; every suffix that is itself a code word closes a
    collision, and the reported witness has minimal total concatenation
    length among those reachable through the recorded parents (ties broken
    by shortlex on the concatenated word).

    ``max_states`` bounds the dangling-suffix universe.  The universe is
    finite for finite codes, so the bound only guards implementation bugs.
    """
    words = [w.indices for w in code.words]
    if len(words) <= 1:
        return UdVerdict(True)
    word_set = set(words)
    # suffix -> ("init", short, long) | ("A", previous, word) | ("B", previous, word)
    parents: dict[IndexTuple, tuple] = {}
    level: list[IndexTuple] = []
    terminals: list[IndexTuple] = []
    for short in words:
        for long in words:
            if len(short) < len(long) and long[: len(short)] == short:
                s = long[len(short) :]
                if s not in parents:
                    parents[s] = ("init", short, long)
                    level.append(s)
                    if s in word_set:
                        terminals.append(s)
    while level:
        if len(parents) > max_states:
            raise ResourceLimitError(
                f"dangling-suffix iteration exceeded {max_states} states",
                limit=max_states,
                count=len(parents),
            )
        next_level: list[IndexTuple] = []
        for s in sorted(level, key=lambda t: (len(t), t)):
            for c in words:
                if len(c) < len(s) and s[: len(c)] == c:
                    w = s[len(c) :]
                    kind = "A"
                elif len(s) < len(c) and c[: len(s)] == s:
                    w = c[len(s) :]
                    kind = "B"
                else:
                    continue
                if w not in parents:
                    parents[w] = (kind, s, c)
                    next_level.append(w)
                    if w in word_set:
                        terminals.append(w)
        level = next_level
    if not terminals:
        return UdVerdict(True)
    candidates = [_reconstruct(code, parents, t) for t in terminals]
    return UdVerdict(False, min(candidates, key=_witness_key))


def _reconstruct(code: Code, parents: dict, terminal: IndexTuple):
    """Replay parent pointers into a concrete collision pair.

    A dangling suffix ``s`` stands for two word sequences where one side
    trails the other by exactly ``s``; the terminal suffix is itself a code
    word, so appending it to the trailing side equalizes the
    concatenations.
    """
    chain = []
    cur = terminal
    while True:
        record = parents[cur]
        chain.append(record)
        if record[0] == "init":
            break
        cur = record[1]
    chain.reverse()
    _, short, long = chain[0]
    behind = [short]
    ahead = [long]
    for kind, _previous, c in chain[1:]:
        behind.append(c)
        if kind == "B":
            behind, ahead = ahead, behind
    behind.append(terminal)
    alphabet = code.alphabet
    left = Factorization(tuple(Word(alphabet, t) for t in behind))
    right = Factorization(tuple(Word(alphabet, t) for t in ahead))
    assert left.concatenation == right.concatenation and left != right
    return _ordered_pair(left, right)


def is_ud_bruteforce(code: Code, max_total_len: int) -> UdVerdict:
    """Exhaustive bounded oracle for unique decipherability.

    Examines every word of length at most ``max_total_len`` for two
    distinct factorizations into code words (equivalently, two distinct
    word sequences with equal concatenation inside the bound).  The
    verdict is conclusive for "not UD"; for "UD" it is conclusive only
    relative to the bound.

    Words are swept breadth-first in shortlex order.  Prefixes whose
    trailing symbols and trailing factorization counts coincide evolve
    identically, so they are merged; counts are capped at 2, which is
    exact for detecting ambiguity.  This covers the full bounded word
    space without materializing it.
    """
    if max_total_len < 1:
        raise ValueError(f"max_total_len must be positive, got {max_total_len}")
    if len(code) == 0:
        return UdVerdict(True)
    r = code.alphabet.size
    maxlen = code.max_len()
    word_set = {w.indices for w in code.words}
    # state: (last maxlen-1 symbols, counts of factorizations ending at the
    # last maxlen boundary positions, capped at 2); value: smallest prefix
    start = ((), (0,) * (maxlen - 1) + (1,))
    frontier: dict[tuple, IndexTuple] = {start: ()}
    for _depth in range(1, max_total_len + 1):
        next_frontier: dict[tuple, IndexTuple] = {}
        collisions: list[IndexTuple] = []
        for (window, counts), prefix in sorted(frontier.items(), key=lambda kv: kv[1]):
            for s in range(r):
                appended = window + (s,)
                total = 0
                for length in range(1, len(appended) + 1):
                    if counts[maxlen - length] and appended[-length:] in word_set:
                        total += counts[maxlen - length]
                new_count = min(total, 2)
                word = prefix + (s,)
                if new_count >= 2:
                    collisions.append(word)
                    continue
                new_counts = counts[1:] + (new_count,)
                if not any(new_counts):
                    continue
                new_window = appended[-(maxlen - 1) :] if maxlen > 1 else ()
                next_frontier.setdefault((new_window, new_counts), word)
        if collisions:
            return UdVerdict(False, _bruteforce_witness(code, min(collisions), word_set))
        if not next_frontier:
            break
        frontier = next_frontier
    return UdVerdict(True)


def _iter_splits(t: IndexTuple, word_set: set[IndexTuple], lengths: list[int]) -> Iterator[tuple[IndexTuple, ...]]:
    if not t:
        yield ()
        return
    for length in lengths:
        if length > len(t):
            break
        head = t[:length]
        if head in word_set:
            for rest in _iter_splits(t[length:], word_set, lengths):
                yield (head,) + rest


def _bruteforce_witness(code: Code, word: IndexTuple, word_set: set[IndexTuple]):
    lengths = sorted({len(t) for t in word_set})
    splits = _iter_splits(word, word_set, lengths)
    first = next(splits)
    second = next(splits)
    alphabet = code.alphabet
    left = Factorization(tuple(Word(alphabet, t) for t in first))
    right = Factorization(tuple(Word(alphabet, t) for t in second))
    return _ordered_pair(left, right)
