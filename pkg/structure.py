"""Shape of the primitive disk complex P(V) of a lens space L(p, q)

Everything here is a decision table keyed on (q_norm, p) predicates:
contractibility (p = +-1 mod q_norm), dimension (q_norm = 2 or p = 2q_norm + 1),
the shape clause, the common-dual rule and the triple rule.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from enums import (
    CaseId, CommonDualRule, ComponentShape, Connectivity, EdgeType, Incidence,
    SimplexType, TripleRule, get_case_name,
)
from pqseq import LensParams, make_params, make_sequence, orbit
from utils.errors import ValidationError, validate_index
from words import Word, substitute_z_to_xy

logger = logging.getLogger(__name__)

EVERY_EDGE = "every-edge"
INFINITELY_MANY = "infinitely-many-at-each-vertex"


@dataclass(frozen=True)
class EdgeRule:
    edge_type: EdgeType
    at_each_vertex: str
    simplices: Incidence

    def to_record(self) -> Dict[str, str]:
        return {
            "type": self.edge_type.value,
            "at_each_vertex": self.at_each_vertex,
            "simplices": self.simplices.value,
        }


@dataclass(frozen=True)
class CaseRow:
    dimension: int
    shape: ComponentShape
    edges: Tuple[EdgeRule, ...]
    simplices: Tuple[SimplexType, ...]
    clause: str
    notes: Tuple[str, ...] = ()


_CASES: Dict[CaseId, CaseRow] = {
    CaseId.TreeType2: CaseRow(
        1, ComponentShape.Tree,
        (EdgeRule(EdgeType.T2, EVERY_EDGE, Incidence.NoSimplex),),
        (),
        "p = 2: a tree with infinite valency; every edge is of type-2",
    ),
    CaseId.TreeType1: CaseRow(
        1, ComponentShape.Tree,
        (EdgeRule(EdgeType.T1, EVERY_EDGE, Incidence.NoSimplex),),
        (),
        "q = 1, p >= 4: a tree with infinite valency; every edge is of type-1",
    ),
    CaseId.TreeMixed: CaseRow(
        1, ComponentShape.Tree,
        (EdgeRule(EdgeType.T0, INFINITELY_MANY, Incidence.NoSimplex),
         EdgeRule(EdgeType.T1, INFINITELY_MANY, Incidence.NoSimplex)),
        (),
        "q != 1, q != 2, p != 2q + 1: a tree with infinite valency; "
        "every edge is of type-0 or type-1, infinitely many of each meet in each vertex",
    ),
    CaseId.TwoDimP3: CaseRow(
        2, ComponentShape.TwoDimensional,
        (EdgeRule(EdgeType.T1, EVERY_EDGE, Incidence.Unique),),
        (SimplexType.S3,),
        "p = 3: 2-dimensional; every edge is of type-1, every 2-simplex is of type-3, "
        "every edge lies in a unique 2-simplex",
    ),
    CaseId.TwoDimP5: CaseRow(
        2, ComponentShape.TwoDimensional,
        (EdgeRule(EdgeType.T0, INFINITELY_MANY, Incidence.ExactlyTwo),
         EdgeRule(EdgeType.T1, INFINITELY_MANY, Incidence.Unique)),
        (SimplexType.S1,),
        "p = 5: 2-dimensional; every 2-simplex is of type-1, type-0 edges lie in "
        "exactly two 2-simplices, type-1 edges in a unique one",
    ),
    CaseId.TwoDimP7Plus: CaseRow(
        2, ComponentShape.TwoDimensional,
        (EdgeRule(EdgeType.T0, INFINITELY_MANY, Incidence.Unique),
         EdgeRule(EdgeType.T1, INFINITELY_MANY, Incidence.UniqueOrNone)),
        (SimplexType.S1,),
        "p >= 7: 2-dimensional; every 2-simplex is of type-1, type-0 edges lie in "
        "a unique 2-simplex, type-1 edges in a unique one or in none",
        (
            "individual type-1 edges are not decided between a unique 2-simplex and none",
            "disk sequences come in two kinds, with primitive disks E_1, E_q, E_(p-q), "
            "E_(p-1) or E_1, E_2, E_(p-2), E_(p-1); which dual pair gives which is not modeled",
        ),
    ),
    CaseId.NonContractible: CaseRow(
        1, ComponentShape.Tree,
        (EdgeRule(EdgeType.T0, INFINITELY_MANY, Incidence.NoSimplex),
         EdgeRule(EdgeType.T1, INFINITELY_MANY, Incidence.NoSimplex)),
        (),
        "p != +-1 mod q: infinitely many connected components, all trees isomorphic "
        "to each other; infinitely many type-0 and type-1 edges meet in each vertex",
    ),
}

_COMMON_DUAL_TEXT = {
    CommonDualRule.AllPairsTwo: "every primitive pair has exactly two disjoint common dual disks",
    CommonDualRule.AllPairsUnique: "every primitive pair has a unique common dual disk",
    CommonDualRule.NotAllPairs: "some primitive pairs have no common dual disk",
}

_TRIPLE_TEXT = {
    TripleRule.NoTriples: "there is no primitive triple",
    TripleRule.P3UniqueTriple: (
        "each primitive pair lies in a unique primitive triple; the common dual disks "
        "of its three pairs form a primitive triple of W"
    ),
    TripleRule.P5ByCommonDual: (
        "a pair with a common dual disk lies in a unique primitive triple, a pair without "
        "one in exactly two; exactly one pair of each triple has a common dual disk"
    ),
    TripleRule.P7ByCommonDual: (
        "a pair with a common dual disk lies in a unique primitive triple or in none, a pair "
        "without one in a unique triple; exactly one pair of each triple has a common dual disk"
    ),
}


def classify(params: LensParams) -> bool:
    """True iff P(V) is contractible, i.e. p = +-1 mod q_norm

    q_norm <= 3 is always contractible (every coprime residue is 0 or +-1).
    """
    q = params.q_norm
    if q <= 3:
        return True
    r = params.p % q
    return r in (1, q - 1)


def is_two_dimensional(params: LensParams) -> bool:
    return params.q_norm == 2 or params.p == 2 * params.q_norm + 1


def _case_of(params: LensParams) -> CaseId:
    p = params.p
    if not classify(params):
        return CaseId.NonContractible
    if p == 2:
        return CaseId.TreeType2
    if is_two_dimensional(params):
        if p == 3:
            return CaseId.TwoDimP3
        if p == 5:
            return CaseId.TwoDimP5
        return CaseId.TwoDimP7Plus
    if params.q_norm == 1:
        return CaseId.TreeType1
    return CaseId.TreeMixed


def _common_dual_rule(params: LensParams) -> CommonDualRule:
    if params.q_norm != 1:
        return CommonDualRule.NotAllPairs
    return CommonDualRule.AllPairsTwo if params.p == 2 else CommonDualRule.AllPairsUnique


def _triple_rule(params: LensParams) -> TripleRule:
    if not is_two_dimensional(params):
        return TripleRule.NoTriples
    if params.p == 3:
        return TripleRule.P3UniqueTriple
    if params.p == 5:
        return TripleRule.P5ByCommonDual
    return TripleRule.P7ByCommonDual


@dataclass(frozen=True)
class StructureReport:
    params: LensParams
    contractible: bool
    dimension: int
    connectivity: Connectivity
    component_shape: ComponentShape
    edge_rules: Tuple[EdgeRule, ...]
    simplex_types: Tuple[SimplexType, ...]
    common_dual_rule: CommonDualRule
    triple_rule: TripleRule
    case_id: CaseId
    clause: str
    notes: Tuple[str, ...]

    @property
    def edge_types(self) -> Tuple[EdgeType, ...]:
        return tuple(rule.edge_type for rule in self.edge_rules)

    @property
    def edge_simplex_incidence(self) -> Dict[EdgeType, Incidence]:
        return {rule.edge_type: rule.simplices for rule in self.edge_rules}

    def to_record(self) -> Dict[str, Any]:
        return {
            "p": self.params.p,
            "q": self.params.q,
            "q_norm": self.params.q_norm,
            "q_prime": self.params.q_prime,
            **report_signature(self),
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "StructureReport":
        return cls(
            params=make_params(record["p"], record["q"]),
            contractible=bool(record["contractible"]),
            dimension=record["dimension"],
            connectivity=Connectivity(record["connectivity"]),
            component_shape=ComponentShape(record["component_shape"]),
            edge_rules=tuple(
                EdgeRule(EdgeType(e["type"]), e["at_each_vertex"], Incidence(e["simplices"]))
                for e in record["edge_types"]
            ),
            simplex_types=tuple(SimplexType(s) for s in record["simplex_types"]),
            common_dual_rule=CommonDualRule(record["common_dual_rule"]),
            triple_rule=TripleRule(record["triple_rule"]),
            case_id=CaseId(record["case_id"]),
            clause=record["clause"],
            notes=tuple(record["notes"]),
        )

    def to_text(self) -> str:
        p = self.params
        lines = [
            f"# L({p.p},{p.q})  q_norm={p.q_norm}  q'={p.q_prime}",
            f"case          {self.case_id.value} ({get_case_name(self.case_id.value)})",
            f"contractible  {'yes' if self.contractible else 'no'}",
            f"dimension     {self.dimension}",
            f"connectivity  {self.connectivity.value}",
            f"components    {self.component_shape.value}",
            f"clause        {self.clause}",
        ]
        for rule in self.edge_rules:
            lines.append(
                f"edge {rule.edge_type.value}  {rule.at_each_vertex}  simplices: {rule.simplices.value}"
            )
        simplices = ", ".join(s.value for s in self.simplex_types) or "none"
        lines.append(f"2-simplices   {simplices}")
        lines.append(f"common duals  {self.common_dual_rule.value}: {_COMMON_DUAL_TEXT[self.common_dual_rule]}")
        lines.append(f"triples       {self.triple_rule.value}: {_TRIPLE_TEXT[self.triple_rule]}")
        for note in self.notes:
            lines.append(f"note          {note}")
        return "\n".join(lines) + "\n"


def report(params: LensParams) -> StructureReport:
    """The single matching shape clause for L(p, q)"""
    case = _case_of(params)
    row = _CASES[case]
    contractible = case != CaseId.NonContractible
    connectivity = (Connectivity.Connected if contractible
                    else Connectivity.InfinitelyManyTreeComponents)
    logger.debug("L%s classified as %s", params, case.value)
    return StructureReport(
        params=params,
        contractible=contractible,
        dimension=row.dimension,
        connectivity=connectivity,
        component_shape=row.shape,
        edge_rules=row.edges,
        simplex_types=row.simplices,
        common_dual_rule=_common_dual_rule(params),
        triple_rule=_triple_rule(params),
        case_id=case,
        clause=row.clause,
        notes=row.notes,
    )


def report_signature(rep: StructureReport) -> Dict[str, Any]:
    """Classification fields without the parameters, equal across homeomorphic spaces"""
    return {
        "contractible": rep.contractible,
        "dimension": rep.dimension,
        "connectivity": rep.connectivity.value,
        "component_shape": rep.component_shape.value,
        "case_id": rep.case_id.value,
        "clause": rep.clause,
        "edge_types": [rule.to_record() for rule in rep.edge_rules],
        "simplex_types": [s.value for s in rep.simplex_types],
        "common_dual_rule": rep.common_dual_rule.value,
        "common_dual": _COMMON_DUAL_TEXT[rep.common_dual_rule],
        "triple_rule": rep.triple_rule.value,
        "triples": _TRIPLE_TEXT[rep.triple_rule],
        "notes": list(rep.notes),
    }


@dataclass(frozen=True)
class DiskSequenceModel:
    """Boundary words of the disks E_0..E_p and their modeled intersections

    Intersection numbers come from the formula |E_i n E_j| = |j - i| - 1,
    they are not computed from curves.
    """
    params: LensParams
    boundary_words: Tuple[Word, ...]
    primitive_indices: FrozenSet[int]
    semiprimitive_indices: FrozenSet[int]

    def intersection(self, i: int, j: int) -> int:
        validate_index(i, self.params.p)
        validate_index(j, self.params.p)
        if i == j:
            raise ValidationError(f"intersection needs distinct disks, got i = j = {i}")
        return abs(j - i) - 1

    def intersection_table(self) -> List[List[Optional[int]]]:
        size = self.params.p + 1
        return [
            [None if i == j else abs(j - i) - 1 for j in range(size)]
            for i in range(size)
        ]

    def to_record(self) -> Dict[str, Any]:
        return {
            "p": self.params.p,
            "q": self.params.q,
            "boundary_words": [str(w) for w in self.boundary_words],
            "primitive_indices": sorted(self.primitive_indices),
            "semiprimitive_indices": sorted(self.semiprimitive_indices),
            "intersections": "modeled: |E_i n E_j| = j - i - 1 for i < j",
        }

    def to_text(self) -> str:
        p = self.params.p
        width = len(str(p))
        lines = [f"# disk sequence E_0..E_{p}  (intersections modeled: j - i - 1)"]
        for j, w in enumerate(self.boundary_words):
            kind = ("primitive" if j in self.primitive_indices
                    else "semiprimitive" if j in self.semiprimitive_indices else "")
            lines.append(f"E_{j:<{width}}  {w.verbose_string('')}  {kind}".rstrip())
        return "\n".join(lines) + "\n"


def disk_sequence_model(params: LensParams, verify_threshold: Optional[int] = None) -> DiskSequenceModel:
    seq = make_sequence(params, verify_threshold)
    return DiskSequenceModel(
        params,
        tuple(substitute_z_to_xy(w) for w in seq.words),
        seq.primitive_indices,
        frozenset({0, params.p}),
    )


def homeomorphism_invariance_check(p: int) -> bool:
    """classify and report agree on every q' in the orbit of every q"""
    for q in range(1, p):
        try:
            params = make_params(p, q)
        except ValidationError:
            continue
        expected = (classify(params), report_signature(report(params)))
        for other in orbit(params):
            got = (classify(other), report_signature(report(other)))
            if got != expected:
                logger.warning("L%s and L%s classify differently", params, other)
                return False
    return True
