"""Word factorization over a code, the refinement order, and irredundant
refinements.

A code D is finer than C (written C <= D) when every word of C is a
concatenation of D-words.  D is an irredundant refinement of C when no
proper subset of D is still finer than C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Code, Factorization, Word
from .errors import EmptyCodeError, MixedAlphabetsError, ResourceLimitError

DEFAULT_MAX_FACTORIZATIONS = 10_000
DEFAULT_MAX_CANDIDATES = 1_000_000

IndexTuple = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class RefinementVerdict:
    """Outcome of a refinement test.

    When the relation holds, ``witnesses`` maps every coarse word (in
    shortlex order) to one factorization over the fine code; otherwise
    ``failing_word`` is a coarse word with no factorization.
    """

    holds: bool
    witnesses: Optional[tuple[tuple[Word, Factorization], ...]] = None
    failing_word: Optional[Word] = None

    def __post_init__(self):
        if self.holds and self.witnesses is None:
            raise ValueError("a holding verdict needs witnesses")
        if not self.holds and self.witnesses is not None:
            raise ValueError("a failing verdict carries no witnesses")

    def witness_for(self, word: Word) -> Factorization:
        for w, factorization in self.witnesses or ():
            if w == word:
                return factorization
        raise KeyError(word)


def _require_same_alphabet(a, b):
    if a.alphabet != b.alphabet:
        raise MixedAlphabetsError("values are over different alphabets")


def _grouped(code: Code) -> tuple[list[int], set[IndexTuple]]:
    tuples = {w.indices for w in code.words}
    return sorted({len(t) for t in tuples}), tuples


def factorizations(word: Word, code: Code, max_count: int = DEFAULT_MAX_FACTORIZATIONS) -> tuple[Factorization, ...]:
    """All distinct factorizations of ``word`` into code words.

    Returned in shortlex order of their factor-length compositions (fewer
    factors first, then lexicographic on the length tuple); empty when the
    word is not a concatenation of code words.  Counts are computed by
    dynamic programming over prefix boundaries before anything is
    materialized; more than ``max_count`` factorizations raises
    :class:`ResourceLimitError` rather than truncating.
    """
    _require_same_alphabet(word, code)
    lengths, tuples = _grouped(code)
    idx = word.indices
    n = len(idx)
    preds: list[list[int]] = [[] for _ in range(n + 1)]
    counts = [0] * (n + 1)
    counts[0] = 1
    for i in range(1, n + 1):
        total = 0
        for length in lengths:
            if length > i:
                break
            j = i - length
            if counts[j] and idx[j:i] in tuples:
                preds[i].append(j)
                total += counts[j]
        counts[i] = total
    if counts[n] == 0:
        return ()
    if counts[n] > max_count:
        raise ResourceLimitError(
            f"word has {counts[n]} factorizations, more than the cap of {max_count}",
            limit=max_count,
            count=counts[n],
        )
    alphabet = word.alphabet
    results: list[Factorization] = []

    def walk(i: int, acc: list[IndexTuple]):
        if i == 0:
            results.append(Factorization(tuple(Word(alphabet, t) for t in reversed(acc))))
            return
        for j in preds[i]:
            acc.append(idx[j:i])
            walk(j, acc)
            acc.pop()

    walk(n, [])
    results.sort(key=lambda f: (len(f.factors), f.composition))
    return tuple(results)


def first_factorization(word: Word, code: Code) -> Optional[Factorization]:
    """The canonically first factorization of ``word`` over ``code``.

    First means shortlex-minimal factor-length composition: fewest factors,
    then lexicographically smallest lengths.  Returns None when the word
    has no factorization.  Computed directly, without enumerating.
    """
    _require_same_alphabet(word, code)
    lengths, tuples = _grouped(code)
    idx = word.indices
    n = len(idx)
    infinity = n + 1
    dist = [infinity] * (n + 1)
    dist[n] = 0
    for i in range(n - 1, -1, -1):
        best = infinity
        for length in lengths:
            if i + length > n:
                break
            if dist[i + length] < best and idx[i : i + length] in tuples:
                best = dist[i + length]
        if best < infinity:
            dist[i] = best + 1
    if dist[0] >= infinity:
        return None
    parts: list[IndexTuple] = []
    i = 0
    while i < n:
        for length in lengths:
            j = i + length
            if j <= n and dist[j] == dist[i] - 1 and idx[i:j] in tuples:
                parts.append(idx[i:j])
                i = j
                break
    alphabet = word.alphabet
    return Factorization(tuple(Word(alphabet, t) for t in parts))


def is_refinement(coarse: Code, fine: Code) -> RefinementVerdict:
    """Decide whether ``fine`` refines ``coarse`` (coarse <= fine).

    Holds iff every coarse word factors over the fine code; one witness per
    word is retained, the first in canonical order.
    """
    _require_same_alphabet(coarse, fine)
    witnesses = []
    for word in coarse.words:
        factorization = first_factorization(word, fine)
        if factorization is None:
            return RefinementVerdict(False, failing_word=word)
        witnesses.append((word, factorization))
    return RefinementVerdict(True, tuple(witnesses))


def is_irredundant_refinement(coarse: Code, fine: Code) -> bool:
    """True iff ``fine`` refines ``coarse`` and no proper subset does.

    Removing words one at a time is equivalent to the proper-subset
    definition because adding words never destroys factorizability.
    """
    if not is_refinement(coarse, fine).holds:
        return False
    for word in fine.words:
        if is_refinement(coarse, fine.without(word)).holds:
            return False
    return True


def cover_exponent_bound(coarse: Code, fine: Code) -> int:
    """The exponent bound m = maxlen(coarse) // minlen(fine).

    For a refining pair, every coarse word is a concatenation of between 1
    and m fine words, so coarse is disjoint from the n-fold concatenations
    of fine for every n > m.
    """
    if len(coarse) == 0 or len(fine) == 0:
        raise EmptyCodeError("cover exponent needs nonempty codes")
    _require_same_alphabet(coarse, fine)
    return coarse.max_len() // fine.min_len()


def _composition_block_sets(word: Word, max_candidates: int) -> list[frozenset[IndexTuple]]:
    """Distinct block sets over all 2^(len-1) compositions of ``word``."""
    idx = word.indices
    n = len(idx)
    total = 1 << (n - 1)
    if total > max_candidates:
        raise ResourceLimitError(
            f"word of length {n} has {total} compositions, more than the cap of {max_candidates}",
            limit=max_candidates,
            count=total,
        )
    out: set[frozenset[IndexTuple]] = set()
    for mask in range(2 ** (n - 1)):
        blocks = []
        start = 0
        for pos in range(1, n):
            if (mask >> (pos - 1)) & 1:
                blocks.append(idx[start:pos])
                start = pos
        blocks.append(idx[start:n])
        out.add(frozenset(blocks))
    return sorted(out, key=lambda s: sorted(s))


def irredundant_refinements(coarse: Code, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> tuple[Code, ...]:
    """All irredundant refinements of ``coarse``, canonically ordered.

    Every irredundant refinement is the union of the blocks of one
    composition per coarse word, so the block-set unions over all
    composition tuples cover every candidate.  Partial unions are deduped
    and dominated ones dropped word by word: a union properly containing
    another can only complete to a redundant refinement, while any
    candidate it would have produced is still produced through the smaller
    union.  The survivors are minimality-filtered and returned.

    Exceeding ``max_candidates`` live partial unions raises
    :class:`ResourceLimitError` (cap and count reported), never truncates.
    """
    alphabet = coarse.alphabet
    states: list[frozenset[IndexTuple]] = [frozenset()]
    for word in coarse.words:
        block_sets = _composition_block_sets(word, max_candidates)
        merged: set[frozenset[IndexTuple]] = set()
        for state in states:
            for blocks in block_sets:
                merged.add(state | blocks)
                if len(merged) > max_candidates:
                    raise ResourceLimitError(
                        f"more than {max_candidates} candidate refinements while processing"
                        f" word {word.text!r}",
                        limit=max_candidates,
                        count=len(merged),
                    )
        states = _minimal_antichain(merged)
    candidates = [Code(alphabet, (Word(alphabet, t) for t in state)) for state in states]
    kept = [d for d in candidates if is_irredundant_refinement(coarse, d)]
    return tuple(sorted(kept, key=lambda c: c.sort_key))


def _minimal_antichain(sets: set[frozenset]) -> list[frozenset]:
    ordered = sorted(sets, key=len)
    kept: list[frozenset] = []
    for candidate in ordered:
        if not any(small <= candidate for small in kept):
            kept.append(candidate)
    return kept
