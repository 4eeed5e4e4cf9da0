"""L/R-replacement on power forms and the non-connectivity witness strip

A power form (q; m, n) stands for the positive word (xy^q)^m x y^n. Replacing
in an ordered pair (D_first, D_second) produces (q; m1+m2+1, n1+n2-q); an
R-replacement keeps D_first, an L-replacement keeps D_second. Starting from
D_-1 = x (label 0/1) and D_0 = (q; m-1, q+r) (label 1/0) and following the
continued fraction of s/(t+1), the strip ends at a primitive vertex that the
non-primitive D_0 and D_1 separate from D_-1.
"""

import logging
import math
from dataclasses import dataclass, replace as dc_replace
from typing import Any, Dict, List, Tuple

import networkx as nx

from enums import Side
from pqseq import LensParams, make_params
from primitivity import is_primitive
from utils.errors import (
    ContractibleInputError, NegativeTailError, ValidationError, VerificationError,
)
from words import XY, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerForm:
    """Descriptor of (xy^q)^m x y^n"""
    q: int
    m: int
    n: int

    def __post_init__(self):
        if self.q < 1 or self.m < 0 or self.n < 0:
            raise ValidationError(f"Invalid power form q={self.q}, m={self.m}, n={self.n}")

    def expand(self) -> Word:
        block = (1,) + (2,) * self.q
        return Word(block * self.m + (1,) + (2,) * self.n, XY)

    def __len__(self) -> int:
        return self.m * (self.q + 1) + 1 + self.n

    def __str__(self) -> str:
        block = "xy" if self.q == 1 else f"xy^{self.q}"
        tail = "" if self.n == 0 else ("y" if self.n == 1 else f"y^{self.n}")
        if self.m == 0:
            head = ""
        elif self.m == 1:
            head = block
        else:
            head = f"({block})^{self.m}"
        return f"{head}x{tail}"

    def to_record(self) -> Dict[str, int]:
        return {"q": self.q, "m": self.m, "n": self.n}


def expand(form: PowerForm) -> Word:
    return form.expand()


@dataclass(frozen=True)
class FareyLabel:
    """Non-negative rational a/b in lowest terms, 1/0 allowed"""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or (self.a == 0 and self.b == 0):
            raise ValidationError(f"Invalid Farey label {self.a}/{self.b}")
        if math.gcd(self.a, self.b) != 1:
            raise ValidationError(f"Farey label {self.a}/{self.b} is not in lowest terms")

    def mediant(self, other: "FareyLabel") -> "FareyLabel":
        return FareyLabel(self.a + other.a, self.b + other.b)

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"

    @classmethod
    def parse(cls, text: str) -> "FareyLabel":
        a, _, b = text.partition("/")
        return cls(int(a), int(b))


def mediant(left: FareyLabel, right: FareyLabel) -> FareyLabel:
    return left.mediant(right)


def replace(pair: Tuple[PowerForm, PowerForm], side: Side) -> Tuple[PowerForm, Tuple[PowerForm, PowerForm]]:
    """One replacement step on an ordered pair

    Returns:
        (new form, new ordered pair): R gives (first, new), L gives (new, second)

    Raises:
        NegativeTailError: If n1 + n2 < q
    """
    first, second = pair
    if first.q != second.q:
        raise ValidationError(f"Replacement needs equal block exponents, got {first.q} and {second.q}")

    tail = first.n + second.n - first.q
    if tail < 0:
        raise NegativeTailError(
            f"Replacement of {first} and {second} gives tail {tail} < 0"
        )

    new = PowerForm(first.q, first.m + second.m + 1, tail)
    if Side(side) == Side.R:
        return new, (first, new)
    return new, (new, second)


def continued_fraction(s: int, t_plus_1: int) -> List[int]:
    """Expansion [p_0; p_1, ..., p_k] of s/(t+1), last quotient >= 2 when k >= 1

    Raises:
        ValidationError: If the pair is not coprime or s < t+1
    """
    if s < 1 or t_plus_1 < 1:
        raise ValidationError(f"s and t+1 must be positive, got {s}, {t_plus_1}")
    if math.gcd(s, t_plus_1) != 1:
        raise ValidationError(f"s and t+1 must be coprime, got gcd({s},{t_plus_1})={math.gcd(s, t_plus_1)}")
    if s < t_plus_1:
        raise ValidationError(f"s must be at least t+1, got {s}/{t_plus_1}")

    quotients = []
    a, b = s, t_plus_1
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    return quotients


def claim_tail(label: FareyLabel, r: int, q: int) -> int:
    """Tail exponent a*r - (b-1)*q predicted for a vertex labelled a/b"""
    return label.a * r - (label.b - 1) * q


@dataclass(frozen=True)
class WitnessParameters:
    m: int
    r: int
    s: int
    t: int


def witness_parameters(params: LensParams) -> WitnessParameters:
    """p = m*q + r with the minimal t >= 0 such that s*r - t*q = q + 1

    Uses q = q_norm.

    Raises:
        ContractibleInputError: Unless 2 <= r <= q - 2
    """
    q = params.q_norm
    m, r = divmod(params.p, q)
    if not 2 <= r <= q - 2:
        raise ContractibleInputError("P(V) is contractible; no witness exists")

    t = (-(q + 1) * pow(q, -1, r)) % r
    s = (q + 1 + t * q) // r
    return WitnessParameters(m, r, s, t)


@dataclass(frozen=True)
class StripVertex:
    id: int
    label: FareyLabel
    form: PowerForm
    primitive: bool


@dataclass(frozen=True)
class StripGraph:
    """Vertices in creation order (D_-1 first), disjointness edges, triangles"""
    params: LensParams
    witness: WitnessParameters
    quotients: Tuple[int, ...]
    vertices: Tuple[StripVertex, ...]
    edges: Tuple[Tuple[int, int], ...]
    triangles: Tuple[Tuple[int, int, int], ...]

    def vertex(self, vertex_id: int) -> StripVertex:
        for v in self.vertices:
            if v.id == vertex_id:
                return v
        raise KeyError(vertex_id)

    @property
    def final(self) -> StripVertex:
        return self.vertices[-1]

    def with_edge(self, a: int, b: int) -> "StripGraph":
        return dc_replace(self, edges=self.edges + ((a, b),))

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for v in self.vertices:
            graph.add_node(v.id, label=str(v.label), form=str(v.form), primitive=v.primitive)
        graph.add_edges_from(self.edges)
        return graph

    def to_dot(self) -> str:
        lines = [f"graph strip_L{self.params.p}_{self.params.q} {{"]
        for v in self.vertices:
            shape = "doublecircle" if v.primitive else "circle"
            lines.append(f'  "D{v.id}" [label="D{v.id}\\n{v.label}\\n{v.form}", shape={shape}];')
        for a, b in self.edges:
            lines.append(f'  "D{a}" -- "D{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        w = self.witness
        lines = [
            f"# witness strip for L({self.params.p},{self.params.q})  q_norm={self.params.q_norm}",
            f"m={w.m}  r={w.r}  s={w.s}  t={w.t}  continued fraction {list(self.quotients)}",
        ]
        for v in self.vertices:
            flag = "primitive" if v.primitive else "non-primitive"
            lines.append(f"D{v.id:<3} {str(v.label):>7}  {v.form}  {flag}")
        lines.append("edges " + " ".join(f"D{a}-D{b}" for a, b in self.edges))
        return "\n".join(lines) + "\n"

    def to_record(self) -> Dict[str, Any]:
        return {
            "params": {"p": self.params.p, "q": self.params.q, "q_norm": self.params.q_norm},
            "m": self.witness.m,
            "r": self.witness.r,
            "s": self.witness.s,
            "t": self.witness.t,
            "continued_fraction": list(self.quotients),
            "vertices": [
                {
                    "id": v.id,
                    "label": str(v.label),
                    "form": v.form.to_record(),
                    "word": str(v.form),
                    "primitive": v.primitive,
                }
                for v in self.vertices
            ],
            "edges": [list(e) for e in self.edges],
            "triangles": [list(t) for t in self.triangles],
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "StripGraph":
        params = make_params(record["params"]["p"], record["params"]["q"])
        vertices = tuple(
            StripVertex(
                v["id"],
                FareyLabel.parse(v["label"]),
                PowerForm(v["form"]["q"], v["form"]["m"], v["form"]["n"]),
                bool(v["primitive"]),
            )
            for v in record["vertices"]
        )
        return cls(
            params,
            WitnessParameters(record["m"], record["r"], record["s"], record["t"]),
            tuple(record["continued_fraction"]),
            vertices,
            tuple(tuple(e) for e in record["edges"]),
            tuple(tuple(t) for t in record["triangles"]),
        )


def witness(params: LensParams, check_endpoints: bool = True) -> StripGraph:
    """Build the replacement strip for a non-contractible lens space

    Args:
        params: Lens parameters with 2 <= p mod q_norm <= q_norm - 2
        check_endpoints: Raise if the final vertex is not primitive or
            D_0 / D_1 are primitive

    Raises:
        ContractibleInputError: If no witness exists
        VerificationError: If an endpoint verdict is wrong
    """
    wp = witness_parameters(params)
    q = params.q_norm
    quotients = tuple(continued_fraction(wp.s, wp.t + 1))

    forms: Dict[int, PowerForm] = {-1: PowerForm(q, 0, 0), 0: PowerForm(q, wp.m - 1, q + wp.r)}
    labels: Dict[int, FareyLabel] = {-1: FareyLabel(0, 1), 0: FareyLabel(1, 0)}
    edges: List[Tuple[int, int]] = [(0, -1)]
    triangles: List[Tuple[int, int, int]] = []

    pair = (0, -1)
    next_id = 1
    for block, count in enumerate(quotients):
        side = Side.R if block % 2 == 0 else Side.L
        for _ in range(count):
            first, second = pair
            new_form, _ = replace((forms[first], forms[second]), side)
            new = next_id
            next_id += 1
            forms[new] = new_form
            labels[new] = labels[first].mediant(labels[second])
            edges.extend([(first, new), (second, new)])
            triangles.append((first, second, new))
            pair = (first, new) if side == Side.R else (new, second)
            logger.debug("%s-replacement D%d, D%d -> D%d = %s (%s)",
                         side.value, first, second, new, new_form, labels[new])

    vertices = tuple(
        StripVertex(i, labels[i], forms[i], is_primitive(forms[i].expand()))
        for i in sorted(forms)
    )
    strip = StripGraph(params, wp, quotients, vertices, tuple(edges), tuple(triangles))

    if check_endpoints:
        _check_endpoints(strip)
    return strip


def _check_endpoints(strip: StripGraph) -> None:
    final = strip.final
    q = strip.params.q_norm
    problems = []
    if final.form.n != q + 1:
        problems.append(f"final tail {final.form.n} != {q + 1}")
    if not final.primitive:
        problems.append(f"final vertex D{final.id} not primitive")
    for vid in (0, 1):
        if strip.vertex(vid).primitive:
            problems.append(f"D{vid} is primitive")
    if problems:
        logger.warning("Witness for %s failed: %s", strip.params, "; ".join(problems))
        raise VerificationError(f"Witness for {strip.params}: " + "; ".join(problems))


def separation_check(strip: StripGraph) -> bool:
    """True iff removing non-primitive vertices separates D_-1 from the final vertex"""
    graph = strip.to_graph()
    source, target = strip.vertex(-1), strip.final
    if not (source.primitive and target.primitive):
        return False
    graph.remove_nodes_from([v.id for v in strip.vertices if not v.primitive])
    return not nx.has_path(graph, source.id, target.id)
