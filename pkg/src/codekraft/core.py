"""Immutable value types: alphabets, words, codes, factorizations.

All values are immutable after construction and safe to share across
threads.  The canonical order used everywhere (code iteration, enumeration
output, witness reporting) is shortlex: first by length, then
lexicographically by symbol index.

Kraft values are exact rationals; ``KraftValue`` is the stdlib
:class:`fractions.Fraction`, which keeps numerator/denominator in lowest
terms with arbitrary-precision integers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import EmptyCodeError, EmptyWordError, MixedAlphabetsError, UnknownSymbolError

KraftValue = Fraction


@dataclass(frozen=True, slots=True)
class Alphabet:
    """An ordered sequence of distinct single-character symbols.

    Symbols are single characters in text form; words store symbol
    *indices*, so alphabets of any practical size work (there is no fixed
    limit; anything beyond base 36 simply needs more exotic characters).
    """

    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate alphabet symbol in {self.symbols!r}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        i = self.symbols.find(symbol)
        if i < 0:
            raise UnknownSymbolError(symbol)
        return i

    def word(self, text: str) -> "Word":
        """Convenience alias for :func:`parse_word`."""
        return parse_word(text, self)

    def __repr__(self) -> str:
        return f"Alphabet({self.symbols!r})"


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class Word:
    """A nonempty sequence of symbol indices over one alphabet."""

    alphabet: Alphabet
    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise EmptyWordError("the null string is not a word")
        r = self.alphabet.size
        for i in self.indices:
            if not 0 <= i < r:
                raise ValueError(f"symbol index {i} out of range for alphabet of size {r}")

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Shortlex key: (length, indices)."""
        return (len(self.indices), self.indices)

    @property
    def text(self) -> str:
        syms = self.alphabet.symbols
        return "".join(syms[i] for i in self.indices)

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise MixedAlphabetsError("cannot order words over different alphabets")
        return self.sort_key < other.sort_key

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise MixedAlphabetsError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.indices + other.indices)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse ``text`` into a :class:`Word` over ``alphabet``.

    Raises :class:`EmptyWordError` on empty input and
    :class:`UnknownSymbolError` on a character outside the alphabet.
    """
    if text == "":
        raise EmptyWordError("cannot parse the empty string as a word")
    return Word(alphabet, tuple(alphabet.index(ch) for ch in text))


def concat(words: Sequence[Word]) -> Word:
    """Concatenate a nonempty sequence of words into a single word."""
    if not words:
        raise EmptyWordError("cannot concatenate an empty sequence of words")
    alphabet = words[0].alphabet
    out: list[int] = []
    for w in words:
        if w.alphabet != alphabet:
            raise MixedAlphabetsError("cannot concatenate words over different alphabets")
        out.extend(w.indices)
    return Word(alphabet, tuple(out))


class Code:
    """A finite set of nonempty words over one alphabet.

    Duplicates collapse; iteration is in shortlex order.  The empty code is
    permitted (Kraft sum 0, vacuously uniquely decipherable, refined by
    every code).
    """

    __slots__ = ("alphabet", "words", "_word_set", "_hash")

    alphabet: Alphabet
    words: tuple[Word, ...]

    def __init__(self, alphabet: Alphabet, words: Iterable[Word] = ()):
        seen: set[Word] = set()
        for w in words:
            if not isinstance(w, Word):
                raise TypeError(f"expected Word, got {type(w).__name__}")
            if w.alphabet != alphabet:
                raise MixedAlphabetsError(
                    f"word {w.text!r} is over alphabet {w.alphabet.symbols!r}, "
                    f"not {alphabet.symbols!r}"
                )
            seen.add(w)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "words", tuple(sorted(seen, key=lambda w: w.sort_key)))
        object.__setattr__(self, "_word_set", frozenset(seen))
        object.__setattr__(self, "_hash", hash((alphabet, self.words)))

    def __setattr__(self, name, value):
        raise AttributeError("Code is immutable")

    @property
    def cardinality(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._word_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.alphabet == other.alphabet and self.words == other.words

    def __hash__(self) -> int:
        return self._hash

    @property
    def sort_key(self):
        """Canonical key for ordering codes: the tuple of word keys."""
        return tuple(w.sort_key for w in self.words)

    def max_len(self) -> int:
        if not self.words:
            raise EmptyCodeError("empty code has no maximum word length")
        return len(self.words[-1])

    def min_len(self) -> int:
        if not self.words:
            raise EmptyCodeError("empty code has no minimum word length")
        return len(self.words[0])

    def without(self, word: Word) -> "Code":
        """The code with one word removed."""
        return Code(self.alphabet, (w for w in self.words if w != word))

    def __str__(self) -> str:
        return "{" + ", ".join(w.text for w in self.words) + "}"

    def __repr__(self) -> str:
        return f"Code({self.alphabet.symbols!r}, {self})"


def make_code(words: Iterable[Word], alphabet: Alphabet) -> Code:
    """Build a :class:`Code` from words; duplicates collapse, order is shortlex."""
    return Code(alphabet, words)


@dataclass(frozen=True, slots=True)
class Factorization:
    """A nonempty sequence of words together with their concatenation.

    Producers guarantee that every factor belongs to the code the
    factorization was computed against.
    """

    factors: tuple[Word, ...]

    def __post_init__(self):
        if not self.factors:
            raise EmptyWordError("a factorization needs at least one factor")
        alphabet = self.factors[0].alphabet
        for w in self.factors:
            if w.alphabet != alphabet:
                raise MixedAlphabetsError("factorization mixes alphabets")

    @property
    def concatenation(self) -> Word:
        return concat(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def sort_key(self):
        return tuple(w.sort_key for w in self.factors)

    @property
    def composition(self) -> tuple[int, ...]:
        """The factor lengths, left to right."""
        return tuple(len(w) for w in self.factors)

    def __str__(self) -> str:
        return "·".join(w.text for w in self.factors)

    def __repr__(self) -> str:
        return f"Factorization({self})"
