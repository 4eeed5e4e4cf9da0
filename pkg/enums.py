"""Enum definitions for the lens space toolkit

Generators and signs are integer-coded (a signed letter is ``sign * generator``);
classification enums carry the stable strings used in structured output.
"""

from enum import Enum, IntEnum


class Generator(IntEnum):
    """Generator identifiers of the rank-two free group"""
    G1 = 1
    G2 = 2


class Sign(IntEnum):
    """Letter exponent"""
    Positive = 1
    Negative = -1


class Verdict(str, Enum):
    """Primitivity verdict of a Whitehead descent"""
    Primitive = "Primitive"
    NotPrimitive = "NotPrimitive"


class ObstructionKind(str, Enum):
    """Pattern pairs that rule out (a positive power of) a primitive"""
    MixedSignPair = "MixedSignPair"
    GapPair = "GapPair"


class Side(str, Enum):
    """Slot replaced by a replacement step"""
    L = "L"
    R = "R"


class Connectivity(str, Enum):
    Connected = "connected"
    InfinitelyManyTreeComponents = "infinitely-many-tree-components"


class ComponentShape(str, Enum):
    Tree = "tree"
    TwoDimensional = "two-dimensional"


class EdgeType(str, Enum):
    """Edges by their common dual disks: none, unique, two forming a pair"""
    T0 = "type-0"
    T1 = "type-1"
    T2 = "type-2"


class SimplexType(str, Enum):
    """2-simplices: one pair with a unique common dual, or all three"""
    S1 = "type-1"
    S3 = "type-3"


class Incidence(str, Enum):
    """How many 2-simplices contain an edge of a given type"""
    NoSimplex = "none"
    Unique = "unique"
    ExactlyTwo = "exactly-two"
    UniqueOrNone = "unique-or-none"


class CommonDualRule(str, Enum):
    AllPairsTwo = "all-pairs-two"
    AllPairsUnique = "all-pairs-unique"
    NotAllPairs = "not-all-pairs"


class TripleRule(str, Enum):
    NoTriples = "no-triples"
    P3UniqueTriple = "p3-unique-triple"
    P5ByCommonDual = "p5-by-common-dual"
    P7ByCommonDual = "p7-by-common-dual"


class CaseId(str, Enum):
    """Shape classes of the primitive disk complex"""
    TreeType2 = "tree-type2"
    TreeType1 = "tree-type1"
    TreeMixed = "tree-mixed"
    TwoDimP3 = "two-dim-p3"
    TwoDimP5 = "two-dim-p5"
    TwoDimP7Plus = "two-dim-p7-plus"
    NonContractible = "non-contractible"


class OutputFormat(str, Enum):
    Text = "text"
    Structured = "structured"
    Dot = "dot"


# Helper functions to get enum names
def get_generator_name(generator: int) -> str:
    """Get human-readable name for a generator code"""
    try:
        return Generator(abs(generator)).name
    except ValueError:
        return f"Unknown({generator})"


def get_case_name(case_id: str) -> str:
    """Get the enum member name for a case id string"""
    try:
        return CaseId(case_id).name
    except ValueError:
        return f"Unknown({case_id})"
