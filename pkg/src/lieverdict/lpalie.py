"""B-vectors, commutator membership of vertex sums, and the Lie verdicts for
Leavitt path algebras of graphs with finitely many vertices.

Only graphs with a finite vertex set can be represented, so ``L_K(E)`` is
always unital here with identity ``sum(v for v in E^0)``.  For graphs with
infinitely many vertices a simple ``L_K(E)`` always has a simple commutator
Lie algebra and zero center; that branch needs no computation and is not
reachable from this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import FieldError, FieldSpec, in_span
from .graphcore import Graph, VertexClass, classify_vertex, lpa_is_simple
from .verdicts import Kind, Verdict

__all__ = [
    "BVector",
    "integer_b_matrix",
    "b_vectors",
    "vertex_combo_in_commutator",
    "lpa_lie_simple",
    "lpa_center",
]

COMMUTATOR_THEOREM = (
    "sum k_i v_i in [L_K(E), L_K(E)] iff (k_i) in Span_K{B_i}"
)
LIE_THEOREM = (
    "for nontrivial simple L_K(E) with finite E^0: [L_K(E), L_K(E)] simple "
    "iff (1,...,1) not in Span_K{B_i}"
)
CENTER_THEOREM = "simple L_K(E) with finite E^0 has center K*1"


@dataclass(frozen=True)
class BVector:
    owner: int
    entries: tuple


def integer_b_matrix(g: Graph) -> list[list[int]]:
    """Rows (a_ij)_j - e_i over the integers; zero rows at non-regular vertices."""
    n = len(g.vertices)
    rows = []
    for i, v in enumerate(g.vertices):
        row = [0] * n
        if classify_vertex(g, v) is VertexClass.REGULAR:
            for e in g.in_edges(v):
                row[g.index(e.src)] += 1
            row[i] -= 1
        rows.append(row)
    return rows


def b_vectors(g: Graph, f: FieldSpec) -> list[BVector]:
    return [BVector(i, f.vector(row)) for i, row in enumerate(integer_b_matrix(g))]


def vertex_combo_in_commutator(g: Graph, f: FieldSpec, coeffs) -> tuple[bool, tuple | None]:
    """Is ``sum coeffs[i] * v_i`` a sum of commutators in L_K(E)?

    The certificate ``c`` satisfies ``sum c_i B_i == coeffs``.
    """
    if len(coeffs) != len(g.vertices):
        raise FieldError(f"expected {len(g.vertices)} coefficients, got {len(coeffs)}")
    basis = [b.entries for b in b_vectors(g, f)]
    return in_span(f, f.vector(coeffs), basis)


def _is_trivial(g: Graph) -> bool:
    return len(g.vertices) == 1 and not g.edges and not g.infinite_bundles


def lpa_lie_simple(g: Graph, f: FieldSpec) -> Verdict:
    simple = lpa_is_simple(g)
    if not simple.is_simple:
        return Verdict(
            Kind.INAPPLICABLE,
            reason=f"L_K(E) is not simple: {simple.reason}",
            witness=simple.witness,
            theorems=simple.theorems,
        )
    if _is_trivial(g):
        return Verdict(
            Kind.TRIVIAL,
            reason="L_K(E) is K itself; its commutator Lie algebra is zero",
            theorems=simple.theorems,
        )
    ok, cert = vertex_combo_in_commutator(g, f, [1] * len(g.vertices))
    theorems = simple.theorems + (COMMUTATOR_THEOREM, LIE_THEOREM)
    if ok:
        return Verdict(
            Kind.NOT_SIMPLE,
            reason="identity lies in the commutator subspace",
            certificate=cert,
            theorems=theorems,
        )
    return Verdict(Kind.SIMPLE, theorems=theorems)


def lpa_center(g: Graph, f: FieldSpec) -> Verdict:
    simple = lpa_is_simple(g)
    if not simple.is_simple:
        return Verdict(
            Kind.INAPPLICABLE,
            reason=f"L_K(E) is not simple: {simple.reason}",
            witness=simple.witness,
            theorems=simple.theorems,
        )
    # E^0 is finite for every representable graph, so the zero-center branch
    # (infinite E^0) never fires.
    return Verdict(Kind.SCALARS, reason="center is K*1, dimension 1", theorems=simple.theorems + (CENTER_THEOREM,))
