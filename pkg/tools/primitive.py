"""Tools: primitive, canonical

Primitivity verdicts for single words and the closed-form word w(m, n)
"""

from typing import Any, Dict

from enums import Verdict
from primitivity import (
    abelianization, canonical_primitive, detect_obstruction, positive_primitive_check,
    whitehead_reduce,
)
from utils.config import Config
from utils.errors import safe_tool_call
from words import parse_word


@safe_tool_call
def cmd_primitive(config: Config, word: str, trace: bool = False, **kwargs) -> Dict[str, Any]:
    """Decide primitivity of a word

    Parameters:
        word: Word text ("zyyzyyzy", "xyXY", "1")
        trace: Include the Whitehead descent

    Returns:
        Dictionary with data/text and exit_code 0 (primitive) or 1 (not)
    """
    parsed = parse_word(word)
    result = whitehead_reduce(parsed)
    obstruction = detect_obstruction(parsed)

    data: Dict[str, Any] = {
        "word": str(parsed),
        "verdict": result.verdict.value,
        "abelianization": list(abelianization(parsed)),
        "obstruction": obstruction.to_record() if obstruction else None,
    }
    if parsed.is_positive() and not parsed.is_identity():
        data["closed_form"] = positive_primitive_check(parsed)
    if trace:
        data["trace"] = result.to_record()

    lines = [result.verdict.value]
    if trace:
        lines = result.to_lines()
    primitive = result.verdict == Verdict.Primitive
    return {"data": data, "text": "\n".join(lines) + "\n", "exit_code": 0 if primitive else 1}


@safe_tool_call
def cmd_canonical(config: Config, m: int, n: int, **kwargs) -> Dict[str, Any]:
    """The word w(m, n) with m letters z and n letters y"""
    word = canonical_primitive(m, n)
    data = {"m": m, "n": n, "word": str(word), "syllables": word.verbose_string()}
    return {
        "data": data,
        "text": f"w({m},{n}) = {word}  ({word.verbose_string()})\n",
        "exit_code": 0,
    }
