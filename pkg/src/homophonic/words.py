"""Free-group words over glyph alphabets.

Generators are whole grapheme clusters ("a", "ss-zet", "soft g", Hangul jamo),
words are freely reduced sequences of signed generators, and every operation
here is a pure function on immutable values.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

INVERSE_MARK = "⁻¹"  # superscript minus one
ASCII_INVERSE_MARK = "^-1"
LETTER_SEPARATOR = "·"  # middle dot
EMPTY_WORD_DISPLAY = "1"


class AlphabetError(ValueError):
    """Malformed alphabet definition (duplicate or non-atomic glyphs)."""


class UnknownGlyphError(ValueError):
    """A glyph that is not a generator of the alphabet in use."""

    def __init__(self, glyph: str, position: int | None = None):
        self.glyph = glyph
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown glyph {glyph!r}{where}")


class AlphabetMismatchError(ValueError):
    """Letters from two different alphabets mixed in one word."""


class SelfReferenceError(ValueError):
    """Substitution whose replacement still contains the replaced generator."""


@dataclass(frozen=True)
class Generator:
    """One alphabet symbol; ``id`` is its 0-based position in the alphabet."""

    id: int
    glyph: str
    language: str


class SignedLetter(NamedTuple):
    gen: Generator
    sign: int  # +1 or -1

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.gen, -self.sign)


def split_graphemes(text: str) -> list[str]:
    """Split text into grapheme clusters after composing to NFC.

    Combining marks attach to the preceding base character, so decomposed and
    precomposed spellings of the same letter tokenize identically.
    """
    clusters: list[str] = []
    for ch in unicodedata.normalize("NFC", text):
        if clusters and unicodedata.combining(ch):
            clusters[-1] += ch
        else:
            clusters.append(ch)
    return clusters


class Alphabet:
    """Ordered collection of unique glyphs acting as free-group generators."""

    def __init__(self, language: str, glyphs: Iterable[str]):
        self.language = language
        gens: list[Generator] = []
        seen: set[str] = set()
        for glyph in glyphs:
            glyph = unicodedata.normalize("NFC", glyph)
            if len(split_graphemes(glyph)) != 1:
                raise AlphabetError(f"glyph {glyph!r} is not a single grapheme cluster")
            if glyph in seen:
                raise AlphabetError(f"duplicate glyph {glyph!r}")
            seen.add(glyph)
            gens.append(Generator(len(gens), glyph, language))
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_glyph = {g.glyph: g for g in self.generators}

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __contains__(self, glyph: str) -> bool:
        return unicodedata.normalize("NFC", glyph) in self._by_glyph

    def __getitem__(self, gen_id: int) -> Generator:
        return self.generators[gen_id]

    def __repr__(self) -> str:
        return f"Alphabet({self.language!r}, {len(self)} generators)"

    def generator(self, glyph: str, position: int | None = None) -> Generator:
        g = self._by_glyph.get(unicodedata.normalize("NFC", glyph))
        if g is None:
            raise UnknownGlyphError(glyph, position)
        return g

    def word(self, text: str) -> "Word":
        """Tokenize plain text (no inverse marks) into a word, one generator
        per grapheme cluster."""
        letters = []
        for i, cluster in enumerate(split_graphemes(text)):
            letters.append(SignedLetter(self.generator(cluster, i), 1))
        return free_reduce(letters)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the group identity."""

    letters: tuple[SignedLetter, ...] = ()

    def __post_init__(self):
        for i, sl in enumerate(self.letters):
            if sl.sign not in (1, -1):
                raise ValueError(f"bad sign {sl.sign} at position {i}")
            if i and self.letters[i - 1] == sl.inverse():
                raise ValueError(f"word is not freely reduced at position {i}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __repr__(self) -> str:
        return f"Word({display(self)})"


EMPTY_WORD = Word()


def letter_word(gen: Generator, sign: int = 1) -> Word:
    return Word((SignedLetter(gen, sign),))


def _check_single_language(letters: Iterable[SignedLetter]) -> None:
    language = None
    for sl in letters:
        if language is None:
            language = sl.gen.language
        elif sl.gen.language != language:
            raise AlphabetMismatchError(
                f"mixed alphabets: {language!r} and {sl.gen.language!r}"
            )


def free_reduce(raw: Iterable[SignedLetter]) -> Word:
    """Cancel adjacent inverse pairs until none remain.

    The result is the unique freely reduced word equal to the input in the
    free group.
    """
    seq = list(raw)
    _check_single_language(seq)
    stack: list[SignedLetter] = []
    for sl in seq:
        if sl.sign not in (1, -1):
            raise ValueError(f"bad sign {sl.sign}")
        if stack and stack[-1] == sl.inverse():
            stack.pop()
        else:
            stack.append(sl)
    return Word(tuple(stack))


def invert(w: Word) -> Word:
    return Word(tuple(sl.inverse() for sl in reversed(w.letters)))


def concat(u: Word, v: Word) -> Word:
    return free_reduce(u.letters + v.letters)


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as conjugator * core * conjugator^-1.

    The core is cyclically reduced: its first and last letters are not
    mutually inverse.  The core is empty only when ``w`` is empty.
    """
    ls = w.letters
    i, j = 0, len(ls)
    while j - i >= 2 and ls[i] == ls[j - 1].inverse():
        i += 1
        j -= 1
    return Word(ls[i:j]), Word(ls[:i])


def occurrences(w: Word, g: Generator) -> int:
    """How many letters of ``w`` reference ``g``, ignoring sign."""
    return sum(1 for sl in w.letters if sl.gen == g)


def substitute(w: Word, g: Generator, replacement: Word) -> Word:
    """Replace every signed occurrence of ``g`` by ``replacement`` and reduce."""
    if occurrences(replacement, g):
        raise SelfReferenceError(f"replacement for {g.glyph!r} contains itself")
    inverse_replacement = invert(replacement)
    out: list[SignedLetter] = []
    for sl in w.letters:
        if sl.gen == g:
            out.extend(replacement.letters if sl.sign > 0 else inverse_replacement.letters)
        else:
            out.append(sl)
    return free_reduce(out)


def display(w: Word, ascii_inverse: bool = False) -> str:
    """Render a word: glyphs joined by a middle dot, empty word as "1"."""
    if not w.letters:
        return EMPTY_WORD_DISPLAY
    mark = ASCII_INVERSE_MARK if ascii_inverse else INVERSE_MARK
    return LETTER_SEPARATOR.join(
        sl.gen.glyph + (mark if sl.sign < 0 else "") for sl in w.letters
    )


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse whitespace-separated tokens like ``w a a g e e^-1 g^-1``.

    Each token is a glyph with an optional inverse suffix, either the
    superscript form or the ASCII fallback ``^-1``.
    """
    letters = []
    for i, token in enumerate(text.split()):
        sign, body = 1, token
        for mark in (INVERSE_MARK, ASCII_INVERSE_MARK):
            if token.endswith(mark) and len(token) > len(mark):
                sign, body = -1, token[: -len(mark)]
                break
        letters.append(SignedLetter(alphabet.generator(body, i), sign))
    return free_reduce(letters)
