"""(p,q)-sequences of words and the Four Primitives rule

For coprime (p, q) the sequence w_0..w_p has w_j of length p with z exactly at
the positions 1, 1+q, ..., 1+(j-1)q taken mod p (representatives 1..p). Its
primitive members are w_j with j in {1, q', p-q', p-1}.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from primitivity import is_primitive
from utils.config import get_config
from utils.errors import VerificationError, validate_index, validate_lens_bounds
from words import ZY, Word, cyclic_reduce, parse_word, reverse, swap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LensParams:
    """Coprime pair (p, q) with normalized q and its inverse parameter"""
    p: int
    q: int
    q_norm: int
    q_prime: int

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def make_params(p: int, q: int) -> LensParams:
    """Validate (p, q) and derive q_norm = min(q, p-q) and q' in [1, p/2]

    Raises:
        ValidationError: Naming the violated bound
    """
    validate_lens_bounds(p, q)
    q_norm = min(q, p - q)
    inverse = pow(q_norm, -1, p)
    q_prime = min(inverse, p - inverse)
    return LensParams(p, q, q_norm, q_prime)


def word_j(params: LensParams, j: int) -> Word:
    """The j-th word of the sequence, built with the raw q"""
    validate_index(j, params.p)
    p, q = params.p, params.q
    z_positions = {(k * q) % p + 1 for k in range(j)}
    return Word(tuple(1 if i in z_positions else 2 for i in range(1, p + 1)), ZY)


def four_primitive_indices(params: LensParams) -> FrozenSet[int]:
    p, qp = params.p, params.q_prime
    return frozenset({1, qp, p - qp, p - 1})


def oracle_primitive_indices(words: List[Word]) -> FrozenSet[int]:
    """Indices whose word the Whitehead oracle calls primitive"""
    return frozenset(j for j, w in enumerate(words) if is_primitive(w))


@dataclass(frozen=True)
class PqSequence:
    params: LensParams
    words: Tuple[Word, ...]
    primitive_indices: FrozenSet[int]
    verified: bool = False

    def is_primitive_index(self, j: int) -> bool:
        return j in self.primitive_indices

    def to_text(self) -> str:
        """Table of index, word and primitive flag"""
        p = self.params.p
        jw, ww = len(str(p)), max(p, 3)
        lines = [
            f"# ({p},{self.params.q})-sequence  q_norm={self.params.q_norm}  "
            f"q'={self.params.q_prime}  verified={'yes' if self.verified else 'no'}",
            f"{'j':<{jw}}  {'w_j':<{ww}}  primitive",
        ]
        for j, w in enumerate(self.words):
            flag = "yes" if j in self.primitive_indices else "no"
            lines.append(f"{j:>{jw}}  {str(w):<{ww}}  {flag}")
        return "\n".join(lines) + "\n"

    def to_record(self) -> Dict[str, Any]:
        return {
            "p": self.params.p,
            "q": self.params.q,
            "q_norm": self.params.q_norm,
            "q_prime": self.params.q_prime,
            "words": [str(w) for w in self.words],
            "primitive_indices": sorted(self.primitive_indices),
            "verified": self.verified,
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "PqSequence":
        params = make_params(record["p"], record["q"])
        words = tuple(parse_word(text, ZY) for text in record["words"])
        return cls(params, words, frozenset(record["primitive_indices"]),
                   bool(record.get("verified", False)))


def make_sequence(params: LensParams, verify_threshold: Optional[int] = None) -> PqSequence:
    """Generate w_0..w_p and their primitive indices

    Args:
        params: Lens parameters
        verify_threshold: Oracle-check every word when p is at most this
            (``verification.threshold`` from config if None)

    Raises:
        VerificationError: If the oracle disagrees with the index formula
    """
    if verify_threshold is None:
        verify_threshold = get_config().get("verification.threshold", 64)

    words = tuple(word_j(params, j) for j in range(params.p + 1))
    expected = four_primitive_indices(params)

    verified = params.p <= verify_threshold
    if verified:
        found = oracle_primitive_indices(list(words))
        if found != expected:
            logger.warning("Oracle indices %s differ from formula %s for %s",
                           sorted(found), sorted(expected), params)
            raise VerificationError(
                f"Primitive indices for {params}: oracle {sorted(found)}, "
                f"formula {sorted(expected)}"
            )

    logger.debug("Built %s-sequence (verified=%s)", params, verified)
    return PqSequence(params, words, expected, verified)


def check_symmetry(seq: PqSequence) -> bool:
    """w_(p-j) is a rotation of the reversed swap of w_j, for every j"""
    p = seq.params.p
    return all(
        cyclic_reduce(seq.words[p - j]) == cyclic_reduce(reverse(swap(seq.words[j])))
        for j in range(p + 1)
    )


def orbit(params: LensParams) -> List[LensParams]:
    """Parameters of lens spaces homeomorphic to L(p, q): q, p-q, q', p-q'"""
    p = params.p
    qs = {params.q_norm, p - params.q_norm, params.q_prime, p - params.q_prime}
    return [make_params(p, q) for q in sorted(qs)]
