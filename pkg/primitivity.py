"""Primitivity of elements of the rank-two free group

Three deciders live here:

- ``is_primitive`` / ``whitehead_reduce``: greedy cyclic-length descent under
  the explicit rank-2 Whitehead automorphisms. A word is primitive iff the
  descent ends at cyclic length 1.
- ``positive_primitive_check``: closed form for positive words, primitive iff
  the letter counts are coprime and the word is a rotation of w(m, n).
- ``detect_obstruction``: sound-only pattern test (xy with xy^-1, or
  xy^n x with y^(n+2)) under the four orientation choices.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Tuple

from enums import ObstructionKind, Verdict
from words import (
    ZY, Codes, CyclicWord, Word, canonical_codes, cyclic_reduce, cyclic_reduce_codes,
    free_reduce_codes, swap,
)
from utils.errors import ValidationError, validate_positive_pair

logger = logging.getLogger(__name__)

# Orientation re-assignments in scan order: (sign of G1, sign of G2)
SIGN_ASSIGNMENTS: Tuple[Tuple[int, int], ...] = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def _inverse_codes(codes: Codes) -> Codes:
    return tuple(-c for c in reversed(codes))


@dataclass(frozen=True)
class WhiteheadAutomorphism:
    """Automorphism given by the images of G1 and G2

    kind 1 permutes and inverts generators, kind 2 multiplies the other
    generator by the multiplier letter on either side.
    """
    kind: int
    image_g1: Codes
    image_g2: Codes
    multiplier: Optional[int] = None

    def image(self, code: int) -> Codes:
        base = self.image_g1 if abs(code) == 1 else self.image_g2
        return base if code > 0 else _inverse_codes(base)

    def apply_codes(self, codes: Codes) -> Codes:
        """Image of a code tuple, cyclically reduced (not rotated)"""
        images = {c: self.image(c) for c in (1, -1, 2, -2)}
        return cyclic_reduce_codes(itertools.chain.from_iterable(images[c] for c in codes))

    def __call__(self, word: Word) -> Word:
        images = {c: self.image(c) for c in (1, -1, 2, -2)}
        expanded = itertools.chain.from_iterable(images[c] for c in word.codes)
        return Word(free_reduce_codes(expanded), word.alphabet)

    def describe(self, alphabet=ZY) -> str:
        g1 = "".join(alphabet.letter(c) for c in self.image_g1)
        g2 = "".join(alphabet.letter(c) for c in self.image_g2)
        return f"{alphabet.g1}->{g1}, {alphabet.g2}->{g2}"

    def is_identity(self) -> bool:
        return self.image_g1 == (1,) and self.image_g2 == (2,)


def _build_automorphisms() -> Tuple[WhiteheadAutomorphism, ...]:
    result: List[WhiteheadAutomorphism] = []

    # Kind 1: permutations of the basis composed with inversions
    for first, second in itertools.permutations((1, 2)):
        for s1, s2 in itertools.product((1, -1), repeat=2):
            result.append(WhiteheadAutomorphism(1, (s1 * first,), (s2 * second,)))

    # Kind 2: the multiplier a is fixed, the other generator b goes to
    # one of b, ba, a^-1 b, a^-1 b a (identity choice skipped)
    for a in (1, -1, 2, -2):
        b = 3 - abs(a)
        for image_b in ((b, a), (-a, b), (-a, b, a)):
            fixed = (abs(a),)
            if abs(a) == 1:
                result.append(WhiteheadAutomorphism(2, fixed, image_b, multiplier=a))
            else:
                result.append(WhiteheadAutomorphism(2, image_b, fixed, multiplier=a))

    return tuple(result)


_AUTOMORPHISMS = _build_automorphisms()
# Kind 1 never changes cyclic length, so only kind 2 can reduce
_REDUCERS = tuple(a for a in _AUTOMORPHISMS if a.kind == 2)


def whitehead_automorphisms() -> Tuple[WhiteheadAutomorphism, ...]:
    """The rank-2 Whitehead set in the fixed order used by the descent"""
    return _AUTOMORPHISMS


@dataclass(frozen=True)
class WhiteheadStep:
    automorphism: str
    word: CyclicWord
    length: int


@dataclass(frozen=True)
class WhiteheadTrace:
    """Record of one greedy descent"""
    start: CyclicWord
    steps: Tuple[WhiteheadStep, ...]
    verdict: Verdict

    @property
    def final_length(self) -> int:
        return self.steps[-1].length if self.steps else len(self.start)

    def to_lines(self) -> List[str]:
        lines = [f"start  {self.start}  (length {len(self.start)})"]
        for i, step in enumerate(self.steps, 1):
            lines.append(f"step {i}  {step.automorphism}  =>  {step.word}  (length {step.length})")
        lines.append(f"verdict  {self.verdict.value}")
        return lines

    def to_record(self) -> Dict[str, Any]:
        return {
            "start": str(self.start),
            "steps": [
                {"automorphism": s.automorphism, "word": str(s.word), "length": s.length}
                for s in self.steps
            ],
            "verdict": self.verdict.value,
        }


def _descend(codes: Codes) -> Iterator[Tuple[WhiteheadAutomorphism, Codes]]:
    """Yield (automorphism, cyclically reduced image) for each strict reduction"""
    current = codes
    while len(current) > 1:
        for aut in _REDUCERS:
            image = aut.apply_codes(current)
            if len(image) < len(current):
                current = image
                yield aut, current
                break
        else:
            return


def whitehead_reduce(word: Word) -> WhiteheadTrace:
    """Run the greedy descent and keep every step

    Args:
        word: Any word; the identity is reported NotPrimitive

    Returns:
        WhiteheadTrace whose cyclic lengths strictly decrease
    """
    start = cyclic_reduce(word)
    steps = []
    for aut, codes in _descend(start.canonical.codes):
        cyclic = cyclic_reduce(Word(codes, word.alphabet))
        logger.debug("Whitehead step %s -> %s (length %d)",
                     aut.describe(word.alphabet), cyclic, len(codes))
        steps.append(WhiteheadStep(aut.describe(word.alphabet), cyclic, len(codes)))

    final = steps[-1].length if steps else len(start)
    verdict = Verdict.Primitive if final == 1 else Verdict.NotPrimitive
    return WhiteheadTrace(start, tuple(steps), verdict)


@lru_cache(maxsize=65536)
def _is_primitive_codes(canonical: Codes) -> bool:
    final = canonical
    for _, final in _descend(canonical):
        pass
    return len(final) == 1


def is_primitive(word: Word) -> bool:
    """True iff the word is a member of some basis of the free group"""
    return _is_primitive_codes(canonical_codes(word.codes))


def abelianization(word: Word) -> Tuple[int, int]:
    """Signed exponent sums of G1 and G2"""
    a = sum(1 if c > 0 else -1 for c in word.codes if abs(c) == 1)
    b = sum(1 if c > 0 else -1 for c in word.codes if abs(c) == 2)
    return a, b


def is_primitive_power(word: Word) -> bool:
    """True iff the cyclic word is u^k for a primitive u and some k >= 1"""
    codes = canonical_codes(word.codes)
    n = len(codes)
    for period in range(1, n + 1):
        if n % period == 0 and codes == codes[:period] * (n // period):
            if _is_primitive_codes(canonical_codes(codes[:period])):
                return True
    return False


def canonical_primitive(m: int, n: int) -> Word:
    """The positive word w(m, n): m letters z and n letters y

    Position k (0-based) holds z iff 1 + k*m is congruent to one of
    1, ..., m modulo m + n.

    Raises:
        ValidationError: Unless 1 <= m <= n
    """
    validate_positive_pair(m, n)
    total = m + n
    codes = []
    for k in range(total):
        residue = (1 + k * m) % total
        codes.append(1 if 1 <= residue <= m else 2)
    return Word(tuple(codes), ZY)


def positive_primitive_check(word: Word) -> bool:
    """Closed-form primitivity for positive words

    Generator roles are swapped first when G1 outnumbers G2. A word over
    a single generator is primitive iff it has length 1.

    Raises:
        ValidationError: If the word has an inverse letter
    """
    if not word.is_positive():
        raise ValidationError(f"positive_primitive_check needs a positive word, got {word}")

    m, n = word.counts()
    if m > n:
        word = swap(word)
        m, n = n, m
    if m == 0:
        return n == 1
    if math.gcd(m, n) != 1:
        return False
    return canonical_codes(word.codes) == canonical_codes(canonical_primitive(m, n).codes)


@dataclass(frozen=True)
class Obstruction:
    """A pattern pair ruling out a (positive power of a) primitive"""
    kind: ObstructionKind
    witnesses: Tuple[int, int]
    sign_assignment: Tuple[int, int]
    word: CyclicWord
    gap: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == ObstructionKind.GapPair:
            return f"GapPair({self.gap})"
        return self.kind.value

    def to_record(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "gap": self.gap,
            "witnesses": list(self.witnesses),
            "sign_assignment": list(self.sign_assignment),
            "word": str(self.word),
        }


def _mixed_sign_pair(codes: Codes) -> Optional[Tuple[int, int]]:
    n = len(codes)
    plus = minus = None
    for i in range(n):
        pair = (codes[i], codes[(i + 1) % n])
        if pair == (1, 2) and plus is None:
            plus = i
        elif pair == (1, -2) and minus is None:
            minus = i
    if plus is not None and minus is not None:
        return plus, minus
    return None


def _gap_pair(codes: Codes) -> Optional[Tuple[int, int, int]]:
    """Minimal n with x y^n x and y^(n+2) both present, as (n, pos, pos)"""
    size = len(codes)
    anchors = [i for i, c in enumerate(codes) if c != 2]
    if not anchors:
        return None

    bounded: List[Tuple[int, int]] = []   # (run length, position of left x)
    runs: List[Tuple[int, int]] = []      # (run length, position of first y)
    for i in anchors:
        k = 0
        while codes[(i + 1 + k) % size] == 2:
            k += 1
        runs.append((k, (i + 1) % size))
        right = (i + 1 + k) % size
        if codes[i] == 1 and codes[right] == 1 and k + 1 < size:
            bounded.append((k, i))

    if not bounded:
        return None
    gap, left = min(bounded)
    longest, start = max(runs)
    if longest >= gap + 2:
        return gap, left, start
    return None


def detect_obstruction(word: Word) -> Optional[Obstruction]:
    """First obstruction over the four orientation choices, or None

    Each assignment is checked for a MixedSignPair before a GapPair.
    Only soundness holds: a hit means the word is not primitive.
    """
    cyclic = cyclic_reduce(word)
    base = cyclic.canonical.codes
    if len(base) < 2:
        return None

    for signs in SIGN_ASSIGNMENTS:
        codes = tuple(c * signs[abs(c) - 1] for c in base)

        mixed = _mixed_sign_pair(codes)
        if mixed is not None:
            return Obstruction(ObstructionKind.MixedSignPair, mixed, signs, cyclic)

        gap = _gap_pair(codes)
        if gap is not None:
            n, left, start = gap
            return Obstruction(ObstructionKind.GapPair, (left, start), signs, cyclic, gap=n)

    return None
