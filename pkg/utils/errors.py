"""Error handling for the lens space toolkit

Custom exception classes for specific error conditions. Each carries the
process exit code the command line reports for it.
"""

import functools
import math


class LensError(Exception):
    """Base exception for all toolkit errors"""
    exit_code = 1


class WordParseError(LensError):
    """Word text contains a character outside the alphabet"""
    exit_code = 2


class AlphabetMismatchError(LensError):
    """Words over different alphabets combined in one operation"""
    exit_code = 2


class ValidationError(LensError):
    """Parameter outside its documented range"""
    exit_code = 2


class NegativeTailError(LensError):
    """Replacement produced a negative tail exponent"""
    exit_code = 1


class ContractibleInputError(LensError):
    """No non-connectivity witness exists for these parameters"""
    exit_code = 3


class VerificationError(LensError):
    """Closed-form result disagrees with the Whitehead oracle"""
    exit_code = 1


# Decorator for safe tool calls

def safe_tool_call(func):
    """Decorator for command functions: toolkit errors pass through, anything
    else is wrapped in LensError

    Usage:
        @safe_tool_call
        def cmd_example(config, **kwargs):
            ...
    """
    @functools.wraps(func)
    def wrapper(config, **kwargs):
        try:
            return func(config, **kwargs)

        except LensError:
            raise

        except RecursionError as e:
            raise LensError(f"Word too long for this operation: {e}")

        except Exception as e:
            raise LensError(f"Unexpected error: {e}")

    return wrapper


def validate_lens_bounds(p, q):
    """Validate lens space parameters

    Args:
        p: Order of the fundamental group
        q: Gluing parameter

    Raises:
        ValidationError: If a bound is violated
    """
    if not isinstance(p, int) or not isinstance(q, int):
        raise ValidationError(f"p and q must be integers, got {p!r}, {q!r}")

    if p < 2:
        raise ValidationError(f"p must be at least 2, got {p}")

    if not 0 < q < p:
        raise ValidationError(f"q must satisfy 0 < q < p, got q={q}, p={p}")

    if math.gcd(p, q) != 1:
        raise ValidationError(f"gcd(p,q) must be 1, got gcd({p},{q})={math.gcd(p, q)}")


def validate_index(j, p):
    """Validate a sequence index 0 <= j <= p

    Raises:
        ValidationError: If j is out of range
    """
    if not isinstance(j, int) or not 0 <= j <= p:
        raise ValidationError(f"index j must satisfy 0 <= j <= {p}, got {j!r}")


def validate_positive_pair(m, n):
    """Validate exponent counts 1 <= m <= n

    Raises:
        ValidationError: If the pair is out of range
    """
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValidationError(f"m and n must be integers, got {m!r}, {n!r}")

    if m <= 0 or n <= 0:
        raise ValidationError(f"m and n must be positive, got m={m}, n={n}")

    if m > n:
        raise ValidationError(f"m must not exceed n, got m={m}, n={n}")
