"""Words in the free group of rank two

A word is a tuple of non-zero integer codes: 1 and 2 are the generators G1 and
G2, negation is inversion. The alphabet only decides how a word is printed
(lowercase = positive letter, uppercase = inverse, identity = "1").
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from enums import Generator, Sign, get_generator_name
from utils.errors import AlphabetMismatchError, WordParseError

logger = logging.getLogger(__name__)

Codes = Tuple[int, ...]

# Total order on signed letters used for canonical rotations: G1+ < G1- < G2+ < G2-
LETTER_ORDER = {1: 0, -1: 1, 2: 2, -2: 3}

IDENTITY_TEXT = "1"


@dataclass(frozen=True)
class Alphabet:
    """Display names of the two generators"""
    name: str
    g1: str
    g2: str

    def letter(self, code: int) -> str:
        char = self.g1 if abs(code) == Generator.G1 else self.g2
        return char if code > 0 else char.upper()

    def code(self, char: str) -> Optional[int]:
        """Code of a single character, or None if it is not in the alphabet"""
        return {
            self.g1: 1,
            self.g1.upper(): -1,
            self.g2: 2,
            self.g2.upper(): -2,
        }.get(char)


ZY = Alphabet("zy", "z", "y")
XY = Alphabet("xy", "x", "y")
ALPHABETS = (ZY, XY)


@dataclass(frozen=True)
class Letter:
    """A generator with an exponent of +1 or -1"""
    generator: Generator
    sign: Sign

    @property
    def code(self) -> int:
        return int(self.sign) * int(self.generator)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        if code not in LETTER_ORDER:
            raise WordParseError(f"Invalid letter code: {code}")
        return cls(Generator(abs(code)), Sign.Positive if code > 0 else Sign.Negative)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; build through reduce_word or parse_word"""
    codes: Codes = ()
    alphabet: Alphabet = ZY

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "Word") -> "Word":
        _check_same_alphabet(self, other)
        return reduce_word(self.codes + other.codes, self.alphabet)

    def __pow__(self, exponent: int) -> "Word":
        if exponent < 0:
            return invert(self) ** (-exponent)
        return reduce_word(self.codes * exponent, self.alphabet)

    def is_identity(self) -> bool:
        return not self.codes

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.codes)

    def counts(self) -> Tuple[int, int]:
        """Number of G1 letters and of G2 letters, signs ignored"""
        g1 = sum(1 for c in self.codes if abs(c) == Generator.G1)
        return g1, len(self.codes) - g1

    def syllables(self) -> List[Tuple[int, int]]:
        """Maximal powers of one generator as (generator, exponent) pairs"""
        result: List[Tuple[int, int]] = []
        for c in self.codes:
            g, e = abs(c), (1 if c > 0 else -1)
            if result and result[-1][0] == g:
                result[-1] = (g, result[-1][1] + e)
            else:
                result.append((g, e))
        return result

    def verbose_string(self, separator: str = " ") -> str:
        """Syllable rendering, e.g. "z y^2 z y^-1" """
        if not self.codes:
            return IDENTITY_TEXT
        parts = []
        for g, e in self.syllables():
            name = self.alphabet.letter(g)
            parts.append(name if e == 1 else f"{name}^{e}")
        return separator.join(parts)


@dataclass(frozen=True)
class CyclicWord:
    """Conjugacy class representative: cyclically reduced, least rotation"""
    canonical: Word

    def __len__(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return str(self.canonical)


def _check_same_alphabet(a: Word, b: Word) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"Cannot combine words over {a.alphabet.name} and {b.alphabet.name}"
        )


# Tuple-level helpers (hot path of the Whitehead oracle)

def free_reduce_codes(codes: Iterable[int]) -> Codes:
    """Cancel adjacent inverse pairs until none remain"""
    stack: List[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def cyclic_reduce_codes(codes: Iterable[int]) -> Codes:
    """Free reduction followed by stripping inverse first/last pairs"""
    reduced = free_reduce_codes(codes)
    start, end = 0, len(reduced)
    while end - start >= 2 and reduced[start] == -reduced[end - 1]:
        start += 1
        end -= 1
    return reduced[start:end]


def least_rotation(codes: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation under LETTER_ORDER

    Duval-style scan over the doubled key sequence, linear time.
    """
    n = len(codes)
    if n == 0:
        return 0
    keys = [LETTER_ORDER[c] for c in codes]
    keys = keys + keys
    i, ans = 0, 0
    while i < n:
        ans = i
        j, k = i + 1, i
        while j < 2 * n and keys[k] <= keys[j]:
            if keys[k] < keys[j]:
                k = i
            else:
                k += 1
            j += 1
        while i <= k:
            i += j - k
    return ans


def canonical_codes(codes: Iterable[int]) -> Codes:
    """Canonical cyclic form of a raw code sequence"""
    reduced = cyclic_reduce_codes(codes)
    start = least_rotation(reduced)
    return reduced[start:] + reduced[:start]


# Parsing and printing

def _infer_alphabet(text: str) -> Alphabet:
    lowered = set(text.lower())
    if "x" in lowered and "z" in lowered:
        raise AlphabetMismatchError(f"Word {text!r} mixes the letters x and z")
    return XY if "x" in lowered else ZY


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Parse word text; whitespace is ignored, "1" is the identity

    Args:
        text: Letters of the alphabet, uppercase for inverses
        alphabet: Alphabet to parse against (inferred from the letters if None)

    Raises:
        WordParseError: On a character outside the alphabet
        AlphabetMismatchError: If the text mixes x and z
    """
    stripped = "".join(text.split())
    if stripped in ("", IDENTITY_TEXT):
        return Word((), alphabet or ZY)

    if alphabet is None:
        alphabet = _infer_alphabet(stripped)

    codes = []
    for position, char in enumerate(stripped):
        code = alphabet.code(char)
        if code is None:
            raise WordParseError(
                f"Unexpected character {char!r} at position {position} "
                f"(alphabet {alphabet.g1}/{alphabet.g2})"
            )
        codes.append(code)

    return reduce_word(codes, alphabet)


def format_word(word: Word) -> str:
    """Inverse of parse_word on reduced words"""
    if not word.codes:
        return IDENTITY_TEXT
    return "".join(word.alphabet.letter(c) for c in word.codes)


# Word operations

def reduce_word(raw: Union[str, Iterable[Union[int, Letter]]],
                alphabet: Optional[Alphabet] = None) -> Word:
    """Freely reduce a raw letter sequence

    Args:
        raw: Word text, integer codes, or Letter objects
        alphabet: Alphabet tag of the result (ZY if None and not inferable)

    Returns:
        The unique freely reduced word equal to raw
    """
    if isinstance(raw, str):
        return parse_word(raw, alphabet)

    codes = []
    for item in raw:
        code = item.code if isinstance(item, Letter) else int(item)
        if code not in LETTER_ORDER:
            raise WordParseError(
                f"Invalid letter code {code} ({get_generator_name(code)})"
            )
        codes.append(code)

    return Word(free_reduce_codes(codes), alphabet or ZY)


def cyclic_reduce(word: Word) -> CyclicWord:
    """Cyclically reduce and rotate to the canonical representative"""
    return CyclicWord(Word(canonical_codes(word.codes), word.alphabet))


def invert(word: Word) -> Word:
    """Group inverse: reverse the order and flip every sign"""
    return Word(tuple(-c for c in reversed(word.codes)), word.alphabet)


def reverse(word: Word) -> Word:
    """Reverse the letter order, keeping signs"""
    return Word(tuple(reversed(word.codes)), word.alphabet)


def swap(word: Word) -> Word:
    """Exchange the roles of the two generators"""
    return Word(
        tuple((3 - abs(c)) if c > 0 else -(3 - abs(c)) for c in word.codes),
        word.alphabet,
    )


def substitute_z_to_xy(word: Word) -> Word:
    """Replace z by xy in a word over {z, y}, giving a word over {x, y}

    The map is induced by the automorphism z -> xy, y -> y, so it preserves
    primitivity.

    Raises:
        AlphabetMismatchError: If the word is not over {z, y}
    """
    if word.alphabet != ZY:
        raise AlphabetMismatchError(
            f"z -> xy substitution expects a word over zy, got {word.alphabet.name}"
        )

    images = {1: (1, 2), -1: (-2, -1), 2: (2,), -2: (-2,)}
    expanded: List[int] = []
    for c in word.codes:
        expanded.extend(images[c])
    return Word(free_reduce_codes(expanded), XY)
