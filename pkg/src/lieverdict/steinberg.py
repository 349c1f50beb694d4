"""Convolution algebras A_K(G) of finite groupoids.

With the discrete topology every function on the arrows is locally constant
and compactly supported, so A_K(G) is the space of arrow-indexed vectors
with basis the arrow indicators ``1_a`` and product

    (f * g)(c) = sum over c = a b of f(a) g(b).

In particular ``1_a * 1_b = 1_{ab}`` when ``s(a) == r(b)`` and 0 otherwise,
and ``1_{G^(0)}`` (the sum of the unit indicators) is the identity.
"""

from __future__ import annotations

from itertools import product

from .exactfield import FieldError, FieldSpec, Matrix, Subspace, in_span, nullspace
from .groupoidcore import FiniteGroupoid, is_effective, is_invariant, is_minimal
from .verdicts import InvariantBreach, Kind, Verdict

__all__ = [
    "SteinbergAlgebra",
    "AlgebraElement",
    "convolve",
    "is_class_function",
    "center_basis",
    "class_function_subspace",
    "commutant_subspace",
    "commutator_subspace",
    "double_commutator_subspace",
    "identity_in_commutator_subspace",
    "matrix_trace_membership",
    "center_verdict",
    "lie_simplicity_verdict",
]

SIMPLICITY_THEOREM = "A_K(G) simple iff G is effective and minimal"
CENTER_THEOREM = "center of A_K(G) is the class functions"
UNITAL_CENTER_THEOREM = "unital simple A_K(G) has center K*1"
LIE_THEOREM = (
    "for nontrivial simple unital A_K(G): [A_K(G), A_K(G)] simple "
    "iff 1 not in [A_K(G), A_K(G)]"
)
TRIVIAL_LEMMA = "A_K(G) is a division ring iff G is a singleton"


class SteinbergAlgebra:
    """A_K(G) for a validated finite groupoid ``g`` over field ``field``."""

    def __init__(self, groupoid: FiniteGroupoid, field: FieldSpec):
        self.groupoid = groupoid
        self.field = field
        self.names = groupoid.arrow_names
        self.dim = len(self.names)
        # product of basis elements i, j as a basis index, or None
        self.table: list[list[int | None]] = [[None] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(self.names):
            for j, b in enumerate(self.names):
                c = groupoid.compose(a, b)
                if c is not None:
                    self.table[i][j] = groupoid.index(c)

    def __repr__(self):
        return f"SteinbergAlgebra({self.groupoid!r}, {self.field})"

    # -- elements -----------------------------------------------------------

    def element(self, coeffs) -> "AlgebraElement":
        """From a full coefficient vector or a ``{arrow: coeff}`` mapping."""
        F = self.field
        if isinstance(coeffs, dict):
            vec = [F.zero] * self.dim
            for name, c in coeffs.items():
                vec[self.groupoid.index(name)] = F(c)
            return AlgebraElement(self, tuple(vec))
        coeffs = tuple(F(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise FieldError("coefficient vector has the wrong length")
        return AlgebraElement(self, coeffs)

    def indicator(self, arrows) -> "AlgebraElement":
        arrows = set(arrows)
        return self.element({a: 1 for a in arrows})

    def basis_element(self, name: str) -> "AlgebraElement":
        return self.indicator([name])

    def one(self) -> "AlgebraElement":
        return self.indicator(self.groupoid.units)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def multiply_vectors(self, x, y) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                k = row[j]
                if k is not None:
                    out[k] = F.add(out[k], F.mul(xi, yj))
        return tuple(out)

    def bracket_vectors(self, x, y) -> tuple:
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(self.multiply_vectors(x, y), self.multiply_vectors(y, x)))

    def structure_constants(self) -> list[list[tuple]]:
        """c[i][j] = product of basis elements i and j, as a coordinate vector."""
        F = self.field
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                v = [F.zero] * self.dim
                k = self.table[i][j]
                if k is not None:
                    v[k] = F.one
                row.append(tuple(v))
            out.append(row)
        return out


class AlgebraElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: SteinbergAlgebra, coeffs: tuple):
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        a, b = self.algebra, other.algebra
        if a is not b and (a.groupoid is not b.groupoid or a.field != b.field):
            raise FieldError("elements belong to different algebras")

    def __mul__(self, other):
        return convolve(self, other)

    def __add__(self, other):
        self._check(other)
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.sub(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        F = self.algebra.field
        c = F(c)
        return AlgebraElement(self.algebra, tuple(F.mul(c, x) for x in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.groupoid is other.algebra.groupoid and self.algebra.field == other.algebra.field \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, arrow: str):
        return self.coeffs[self.algebra.groupoid.index(arrow)]

    def support(self) -> frozenset[str]:
        return frozenset(n for n, c in zip(self.algebra.names, self.coeffs) if c != 0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json(self) -> dict:
        F = self.algebra.field
        return {n: F.format_scalar(c) for n, c in zip(self.algebra.names, self.coeffs) if c != 0}

    def __repr__(self):
        return f"AlgebraElement({self.to_json()})"


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    f._check(g)
    return AlgebraElement(f.algebra, f.algebra.multiply_vectors(f.coeffs, g.coeffs))


def is_class_function(f: AlgebraElement):
    """Check the two class-function conditions.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is
    ``("isotropy", a)`` when f is nonzero on an arrow with s(a) != r(a), or
    ``("conjugation", a, b)`` when f(a) != f(b a b^-1).
    """
    G = f.algebra.groupoid
    for a in G.arrows:
        if f(a.name) != 0 and a.src != a.rng:
            return False, ("isotropy", a.name)
    for a in G.arrows:
        if a.src != a.rng:
            continue
        for b in G.arrows:
            if b.src != a.src:
                continue
            conj = G.compose(G.compose(b.name, a.name), G.inverse(b.name))
            if f(a.name) != f(conj):
                return False, ("conjugation", a.name, b.name)
    return True, None


def class_function_subspace(A: SteinbergAlgebra) -> Subspace:
    """Span of the indicators of conjugacy classes of isotropy arrows."""
    G = A.groupoid
    seen: set[str] = set()
    vectors = []
    for a in G.isotropy():
        if a in seen:
            continue
        cls = {G.compose(G.compose(b.name, a), G.inverse(b.name)) for b in G.arrows if b.src == G.src(a)}
        seen |= cls
        vectors.append(A.indicator(cls).coeffs)
    return Subspace(A.field, A.dim, vectors)


def commutant_subspace(A: SteinbergAlgebra) -> Subspace:
    """Solutions x of x*1_a == 1_a*x for every arrow a, as a linear system."""
    F = A.field
    rows = []
    n = A.dim
    for a in range(n):
        # coefficient of basis k in x*1_a - 1_a*x, as a linear form in x
        block = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            k = A.table[i][a]
            if k is not None:
                block[k][i] = F.add(block[k][i], F.one)
            k = A.table[a][i]
            if k is not None:
                block[k][i] = F.sub(block[k][i], F.one)
        rows.extend(block)
    return Subspace(F, n, nullspace(F, rows, n))


def center_basis(A: SteinbergAlgebra) -> Subspace:
    """The center, computed as class functions and as the commutant.

    Raises :class:`InvariantBreach` if the two computations differ.
    """
    by_class = class_function_subspace(A)
    by_commutant = commutant_subspace(A)
    if by_class != by_commutant:
        raise InvariantBreach(
            f"class-function center (dim {by_class.dim}) differs from commutant (dim {by_commutant.dim})"
        )
    return by_class


def commutator_subspace(A: SteinbergAlgebra) -> Subspace:
    # Bilinearity: commutators of basis pairs span all commutators.
    gens = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if A.table[i][j] == A.table[j][i]:
                continue
            gens.append(A.bracket_vectors(A.field.unit_vector(A.dim, i), A.field.unit_vector(A.dim, j)))
    return Subspace(A.field, A.dim, gens)


def double_commutator_subspace(A: SteinbergAlgebra, inner: Subspace | None = None) -> Subspace:
    inner = inner if inner is not None else commutator_subspace(A)
    b = inner.basis
    gens = [A.bracket_vectors(b[i], b[j]) for i in range(len(b)) for j in range(i + 1, len(b))]
    return Subspace(A.field, A.dim, gens)


def identity_in_commutator_subspace(A: SteinbergAlgebra) -> bool:
    return commutator_subspace(A).contains(A.one().coeffs)


def _matrix_unit_commutator_span(field: FieldSpec, d: int) -> list[tuple]:
    def unit(i, j):
        return Matrix.from_rows(field, [[1 if (r, c) == (i, j) else 0 for c in range(d)] for r in range(d)], d)

    units = [unit(i, j) for i, j in product(range(d), repeat=2)]
    gens = []
    for x in units:
        for y in units:
            gens.append((x @ y - y @ x).entries)
    return gens


def matrix_trace_membership(m: Matrix) -> bool:
    """Is ``m`` a sum of commutators in M_d(K)?  Over a field: iff trace is 0.

    For d <= 3 the answer is re-derived from the span of commutators of matrix
    units and the two routes must agree.
    """
    if not m.is_square:
        raise FieldError("matrix_trace_membership needs a square matrix")
    answer = m.trace() == 0
    if m.rows <= 3:
        spanned, _ = in_span(m.field, m.entries, _matrix_unit_commutator_span(m.field, m.rows)) if m.rows else (True, None)
        if spanned != answer:
            raise InvariantBreach(f"trace test ({answer}) disagrees with commutator span ({spanned})")
    return answer


def _preconditions(g: FiniteGroupoid):
    eff, arrow = is_effective(g)
    if not eff:
        return Verdict(
            Kind.INAPPLICABLE,
            reason="A_K(G) is not simple: groupoid is not effective",
            witness=arrow,
            theorems=(SIMPLICITY_THEOREM,),
        )
    mini, orbit = is_minimal(g)
    if not mini:
        return Verdict(
            Kind.INAPPLICABLE,
            reason="A_K(G) is not simple: groupoid is not minimal",
            witness=sorted(orbit, key=g.units.index),
            theorems=(SIMPLICITY_THEOREM,),
        )
    return None


def center_verdict(g: FiniteGroupoid, f: FieldSpec) -> Verdict:
    """Center of a simple A_K(G).

    A finite unit space is compact, so A_K(G) is unital and only the K*1
    branch applies; the zero-center branch for non-compact unit spaces cannot
    occur for finite groupoids.
    """
    blocked = _preconditions(g)
    if blocked is not None:
        return blocked
    A = SteinbergAlgebra(g, f)
    center = center_basis(A)
    if center.dim != 1 or not center.contains(A.one().coeffs):
        raise InvariantBreach(f"simple unital A_K(G) has center of dimension {center.dim}")
    return Verdict(
        Kind.SCALARS,
        reason="center is K*1, dimension 1",
        certificate=A.one().coeffs,
        theorems=(SIMPLICITY_THEOREM, CENTER_THEOREM, UNITAL_CENTER_THEOREM),
    )


def lie_simplicity_verdict(g: FiniteGroupoid, f: FieldSpec) -> Verdict:
    blocked = _preconditions(g)
    if blocked is not None:
        return blocked
    theorems = (SIMPLICITY_THEOREM, UNITAL_CENTER_THEOREM)
    if len(g.arrows) == 1:
        return Verdict(
            Kind.TRIVIAL,
            reason="groupoid is a singleton: A_K(G) is K and [A, A] is zero",
            theorems=theorems + (TRIVIAL_LEMMA,),
        )
    A = SteinbergAlgebra(g, f)
    comm = commutator_subspace(A)
    one = A.one().coeffs
    theorems += (LIE_THEOREM,)
    coords = comm.coordinates(one)
    if coords is not None:
        return Verdict(
            Kind.NOT_SIMPLE,
            reason="identity lies in the commutator subspace",
            certificate=coords,
            theorems=theorems,
        )
    return Verdict(Kind.SIMPLE, theorems=theorems)
