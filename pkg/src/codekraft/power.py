"""Code powers, ordered word tuples, and descending power chains.

The k-th power of a code is the set of concatenations of k code words.
Power chains track C, C^2, C^4, ... together with their exact Kraft
values; each member refines its successor, and whether all Kraft values
coincide is computed, not assumed (they coincide exactly when K(C) = 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import Code, Factorization, Word
from .errors import EmptyCodeError, ResourceLimitError
from .kraft import kraft_sum
from .refine import is_refinement

DEFAULT_MAX_POWER_WORDS = 100_000

IndexTuple = tuple[int, ...]


def _concat_sets(a: set[IndexTuple], b: set[IndexTuple]) -> set[IndexTuple]:
    return {s + t for s in a for t in b}


def _power_tuples(base: set[IndexTuple], k: int) -> set[IndexTuple]:
    # binary exponentiation; the concatenation-set product is associative
    result: set[IndexTuple] | None = None
    while k:
        if k & 1:
            result = base if result is None else _concat_sets(result, base)
        k >>= 1
        if k:
            base = _concat_sets(base, base)
    assert result is not None
    return result


def _check_power_cap(code: Code, k: int, max_words: int):
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if len(code) ** k > max_words:
        raise ResourceLimitError(
            f"|code|^k = {len(code) ** k} exceeds the cap of {max_words}",
            limit=max_words,
            count=len(code) ** k,
        )


def code_power(code: Code, k: int, max_words: int = DEFAULT_MAX_POWER_WORDS) -> Code:
    """The code of all concatenations of k code words, deduplicated.

    For a UD code the cardinality is exactly ``len(code) ** k``; any
    shortfall comes from colliding concatenations.
    """
    _check_power_cap(code, k, max_words)
    if k == 1:
        return code
    if len(code) == 0:
        return code
    tuples = _power_tuples({w.indices for w in code.words}, k)
    alphabet = code.alphabet
    return Code(alphabet, (Word(alphabet, t) for t in tuples))


def word_tuples(code: Code, k: int, max_tuples: int = DEFAULT_MAX_POWER_WORDS) -> Iterator[Factorization]:
    """All ordered k-tuples of code words, as a stream of factorizations.

    Yields ``len(code) ** k`` tuples in lexicographic order of factor
    indices; concatenating and deduplicating them yields exactly
    ``code_power(code, k)``.
    """
    _check_power_cap(code, k, max_tuples)

    def generate():
        for combo in itertools.product(code.words, repeat=k):
            yield Factorization(combo)

    return generate()


@dataclass(frozen=True, slots=True)
class PowerChain:
    """The chain C, C^2, C^4, ..., C^(2^n) with exact Kraft values.

    ``descending`` records that every member strictly refines its
    successor (the chain descends in the refinement order);
    ``equal_kraft`` records whether all Kraft values coincide exactly.
    """

    base: Code
    members: tuple[Code, ...]
    kraft_values: tuple[Fraction, ...]
    descending: bool
    equal_kraft: bool


def power_chain(code: Code, n: int, max_words: int = DEFAULT_MAX_POWER_WORDS) -> PowerChain:
    """Build the chain [C, C^2, ..., C^(2^n)] by repeated squaring."""
    if len(code) == 0:
        raise EmptyCodeError("power chains need a nonempty base code")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    members = [code]
    for _ in range(n):
        members.append(code_power(members[-1], 2, max_words))
    kraft_values = tuple(kraft_sum(m) for m in members)
    descending = all(
        previous != following and is_refinement(following, previous).holds
        for previous, following in zip(members, members[1:])
    )
    equal_kraft = len(set(kraft_values)) == 1
    return PowerChain(code, tuple(members), kraft_values, descending, equal_kraft)
