"""Shared test helpers: exhaustive corpora, independent oracles, generators."""

from __future__ import annotations

import itertools
import random

from codekraft import Alphabet, Code, Word, concat, is_ud

BINARY = Alphabet("01")


def bcode(*texts: str) -> Code:
    """Binary code from word texts."""
    return Code(BINARY, [BINARY.word(t) for t in texts])


def code_over(alphabet: Alphabet, *texts: str) -> Code:
    return Code(alphabet, [alphabet.word(t) for t in texts])


def binary_words_up_to(max_len: int) -> list[Word]:
    """All binary words of length 1..max_len in shortlex order."""
    out = []
    for n in range(1, max_len + 1):
        for bits in itertools.product((0, 1), repeat=n):
            out.append(Word(BINARY, bits))
    return out


def binary_codes(max_words: int, max_len: int):
    """Every binary code with at most max_words words, each of length <= max_len."""
    words = binary_words_up_to(max_len)
    for size in range(max_words + 1):
        for combo in itertools.combinations(words, size):
            yield Code(BINARY, combo)


def splitter(word: Word, code: Code):
    """Independent recursive splitter oracle.

    Returns every factorization of ``word`` into code words as a tuple of
    Words, sorted by (factor count, factor-length composition).
    """
    tuples = {w.indices for w in code.words}
    lengths = sorted({len(t) for t in tuples})
    idx = word.indices

    def walk(t):
        if not t:
            yield ()
            return
        for length in lengths:
            if length > len(t):
                break
            head = t[:length]
            if head in tuples:
                for rest in walk(t[length:]):
                    yield (head,) + rest

    results = [tuple(Word(word.alphabet, t) for t in seq) for seq in walk(idx)]
    results.sort(key=lambda seq: (len(seq), tuple(len(w) for w in seq)))
    return results


def brute_force_bound(code: Code) -> int:
    """The oracle bound used for corpus agreement: 3 * maxlen * |code|."""
    if len(code) == 0:
        return 1
    return 3 * code.max_len() * len(code)


def random_ud_pairs(count: int, seed: int = 20260809):
    """Generated refinement pairs: a random UD fine code D over an alphabet
    of size 2-3, and a coarse code C of 2-4 random concatenations of 1-4
    D-words, deduplicated and filtered to be UD itself."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        size = rng.choice((2, 3))
        alphabet = Alphabet("012"[:size])
        target = rng.randint(2, 4)
        words = set()
        for _ in range(12):
            length = rng.randint(1, 3)
            words.add(Word(alphabet, tuple(rng.randrange(size) for _ in range(length))))
            if len(words) == target:
                break
        fine = Code(alphabet, words)
        if len(fine) < 2 or not is_ud(fine).is_ud:
            continue
        coarse_words = []
        for _ in range(rng.randint(2, 4)):
            k = rng.randint(1, 4)
            coarse_words.append(concat([rng.choice(fine.words) for _ in range(k)]))
        coarse = Code(alphabet, coarse_words)
        if not is_ud(coarse).is_ud:
            continue
        pairs.append((coarse, fine))
    return pairs


def random_prefix_codes(count: int, seed: int = 7):
    """Random prefix codes (no word a prefix of another) over alphabets of
    size 2-3."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        size = rng.choice((2, 3))
        alphabet = Alphabet("012"[:size])
        words: list[Word] = []
        for _ in range(rng.randint(1, 6)):
            length = rng.randint(1, 4)
            candidate = Word(alphabet, tuple(rng.randrange(size) for _ in range(length)))
            clash = any(
                w.indices[: len(candidate)] == candidate.indices
                or candidate.indices[: len(w)] == w.indices
                for w in words
            )
            if not clash:
                words.append(candidate)
        if words:
            out.append(Code(alphabet, words))
    return out
