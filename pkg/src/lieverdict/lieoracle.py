"""An independent Lie-simplicity oracle over prime fields.

A Lie algebra is stored by structure constants.  Its ideals are exactly the
subspaces invariant under every ``ad(x_k)``, i.e. the submodules of the
adjoint representation, so simplicity reduces to irreducibility of that
module plus ``[L, L] != 0``.  Irreducibility is decided with Norton's test
(the core of the MeatAxe); small cases can also be settled by closing every
one-dimensional subspace to an ideal.

This oracle is only used to cross-check the commutator criterion on small
instances, so it refuses the rationals, where the subspace search is not
finite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from sympy import GF as SympyGF
from sympy import Poly, symbols
from sympy.polys.matrices import DomainMatrix

from .exactfield import FieldError, FieldSpec, Subspace, nullspace
from .groupoidcore import FiniteGroupoid, is_effective, is_minimal
from .steinberg import SteinbergAlgebra, commutator_subspace, lie_simplicity_verdict
from .verdicts import InvariantBreach, Kind

__all__ = [
    "LieAlgebra",
    "LieAlgebraError",
    "LieIdealWitness",
    "OracleInconclusive",
    "lie_from_algebra",
    "ideal_closure",
    "is_simple_finite_field",
    "norton_irreducible",
    "exhaustive_proper_ideal",
    "cross_check_groupoid",
    "CrossCheckReport",
]

DEFAULT_SEED = 20240611
EXHAUSTIVE_LIMIT = 10**6

HERSTEIN_NOTE = (
    "Herstein: for a simple ring S with center Z, either char S = 2 and "
    "dim_Z S = 4, or every proper Lie ideal of [S, S] lies in Z; with Z = K*1 "
    "the commutator Lie algebra is simple exactly when 1 is not a sum of commutators"
)


class LieAlgebraError(ValueError):
    pass


class OracleInconclusive(RuntimeError):
    pass


class LieAlgebra:
    """Structure constants ``c[i][j]`` (the bracket of basis vectors i and j).

    Antisymmetry and the Jacobi identity are checked on construction.
    """

    def __init__(self, field: FieldSpec, brackets, validate: bool = True):
        self.field = field
        self.dim = len(brackets)
        self.brackets = tuple(tuple(tuple(field(x) for x in v) for v in row) for row in brackets)
        if any(len(row) != self.dim or any(len(v) != self.dim for v in row) for row in self.brackets):
            raise LieAlgebraError("structure constants must form an n x n x n tensor")
        if validate:
            self.validate()

    def bracket(self, x, y) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = F.mul(xi, yj)
                for k, ck in enumerate(self.brackets[i][j]):
                    if ck != 0:
                        out[k] = F.add(out[k], F.mul(c, ck))
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        return self.field.unit_vector(self.dim, i)

    def validate(self) -> None:
        F = self.field
        n = self.dim
        c = self.brackets
        for i in range(n):
            if any(x != 0 for x in c[i][i]):
                raise LieAlgebraError(f"[x{i}, x{i}] != 0")
            for j in range(i + 1, n):
                if any(F.add(a, b) != 0 for a, b in zip(c[i][j], c[j][i])):
                    raise LieAlgebraError(f"antisymmetry fails on ({i}, {j})")
        basis = [self.basis_vector(i) for i in range(n)]
        for i, j, k in product(range(n), repeat=3):
            if not (i < j < k):
                continue
            a = self.bracket(basis[i], c[j][k])
            b = self.bracket(basis[j], c[k][i])
            d = self.bracket(basis[k], c[i][j])
            if any(F.add(F.add(x, y), z) != 0 for x, y, z in zip(a, b, d)):
                raise LieAlgebraError(f"Jacobi identity fails on ({i}, {j}, {k})")

    def ad_matrices(self) -> list[list[list]]:
        """ad(x_k) as a matrix acting on column vectors: column j is [x_k, x_j]."""
        n = self.dim
        return [[[self.brackets[k][j][i] for j in range(n)] for i in range(n)] for k in range(n)]

    def is_abelian(self) -> bool:
        return all(x == 0 for row in self.brackets for v in row for x in v)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field})"


@dataclass(frozen=True)
class LieIdealWitness:
    basis: tuple[tuple, ...]
    trace: tuple[tuple[int, int], ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)


def lie_from_algebra(algebra, field: FieldSpec | None = None) -> LieAlgebra:
    """The Lie algebra [A, A] with bracket xy - yx.

    ``algebra`` is a :class:`SteinbergAlgebra` or an associative
    structure-constant tensor (then ``field`` is required).
    """
    if isinstance(algebra, SteinbergAlgebra):
        A = algebra
        F = A.field
        comm = commutator_subspace(A)
        basis = comm.basis
        bracket_vec = A.bracket_vectors
    else:
        if field is None:
            raise LieAlgebraError("field is required for a raw structure-constant tensor")
        F = field
        const = algebra
        n = len(const)

        def mult(x, y):
            out = [F.zero] * n
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                for j, yj in enumerate(y):
                    if yj == 0:
                        continue
                    c = F.mul(xi, yj)
                    for k, ck in enumerate(const[i][j]):
                        if ck != 0:
                            out[k] = F.add(out[k], F.mul(c, F(ck)))
            return tuple(out)

        def bracket_vec(x, y):
            return tuple(F.sub(a, b) for a, b in zip(mult(x, y), mult(y, x)))

        units = [F.unit_vector(n, i) for i in range(n)]
        comm = Subspace(F, n, [bracket_vec(units[i], units[j]) for i in range(n) for j in range(i + 1, n)])
        basis = comm.basis
    brackets = []
    for x in basis:
        row = []
        for y in basis:
            coords = comm.coordinates(bracket_vec(x, y))
            if coords is None:
                raise LieAlgebraError("commutator subspace is not closed under the bracket")
            row.append(coords)
        brackets.append(row)
    return LieAlgebra(F, brackets)


def ideal_closure(L: LieAlgebra, v) -> LieIdealWitness:
    """Smallest ideal containing ``v``, with the bracket steps that built it."""
    F = L.field
    v = F.vector(v)
    if len(v) != L.dim:
        raise FieldError("vector length does not match the Lie algebra")
    if all(x == 0 for x in v):
        raise LieAlgebraError("ideal closure of the zero vector")
    span = Subspace(F, L.dim, [v])
    gens = [v]
    trace = []
    basis = [L.basis_vector(i) for i in range(L.dim)]
    pos = 0
    while pos < len(gens):
        w = gens[pos]
        for k, x in enumerate(basis):
            u = L.bracket(x, w)
            if not span.contains(u):
                span = span.extended([u])
                gens.append(u)
                trace.append((k, pos))
        pos += 1
    return LieIdealWitness(span.basis, tuple(trace))


# -- Norton irreducibility test ---------------------------------------------------

def _matmul(p, a, b):
    n, m, r = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * r for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(r):
                    if bk[j]:
                        oi[j] = (oi[j] + x * bk[j]) % p
    return out


def _matadd(p, a, b, c=1):
    return [[(x + c * y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _spin(F: FieldSpec, gens, v) -> Subspace:
    """Smallest subspace containing v and invariant under the column action of gens."""
    p = F.characteristic
    span = Subspace(F, len(v), [v])
    queue = [tuple(v)]
    while queue:
        w = queue.pop()
        for g in gens:
            u = tuple(sum(g[i][j] * w[j] for j in range(len(w))) % p for i in range(len(w)))
            if not span.contains(u):
                span = span.extended([u])
                queue.append(u)
    return span


def _charpoly_factors(p: int, theta) -> list[tuple[list[int], int]]:
    """Irreducible factors of the characteristic polynomial, lowest degree first."""
    K = SympyGF(p)
    n = len(theta)
    dm = DomainMatrix([[K(x) for x in row] for row in theta], (n, n), K)
    coeffs = [int(c) % p for c in dm.charpoly()]
    x = symbols("x")
    _, factors = Poly(coeffs, x, modulus=p).factor_list()
    out = [([int(c) % p for c in f.all_coeffs()], f.degree()) for f, _ in factors]
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def _poly_of_matrix(p: int, coeffs: list[int], theta):
    n = len(theta)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    acc = [[0] * n for _ in range(n)]
    for c in coeffs:  # Horner, highest degree first
        acc = _matadd(p, _matmul(p, acc, theta), ident, c)
    return acc


def _random_algebra_element(p: int, gens, rng: random.Random):
    n = len(gens[0])
    theta = [[0] * n for _ in range(n)]
    words = [g for g in gens]
    for _ in range(len(gens)):
        a, b = rng.choice(gens), rng.choice(gens)
        words.append(_matmul(p, a, b))
    for w in words:
        c = rng.randrange(p)
        if c:
            theta = _matadd(p, theta, w, c)
    return theta


def norton_irreducible(F: FieldSpec, gens, seed: int = DEFAULT_SEED, attempts: int = 200):
    """Decide whether F^n is irreducible under the matrices ``gens``.

    Returns ``(True, None)`` or ``(False, basis_of_proper_submodule)``.  Raises
    :class:`OracleInconclusive` if no random element with a good factor is
    found within ``attempts`` draws.
    """
    p = F.characteristic
    n = len(gens[0])
    if n == 1:
        return True, None
    gens_t = [_transpose(g) for g in gens]
    rng = random.Random(seed)
    for _ in range(attempts):
        theta = _random_algebra_element(p, gens, rng)
        for coeffs, deg in _charpoly_factors(p, theta):
            ftheta = _poly_of_matrix(p, coeffs, theta)
            kernel = nullspace(F, ftheta, n)
            sub = _spin(F, gens, kernel[0])
            if sub.dim < n:
                return False, sub.basis
            if len(kernel) != deg:
                continue
            kernel_t = nullspace(F, _transpose(ftheta), n)
            dual = _spin(F, gens_t, kernel_t[0])
            if dual.dim < n:
                # the annihilator of a proper invariant subspace of the dual
                return False, Subspace(F, n, nullspace(F, dual.basis, n)).basis
            return True, None
    raise OracleInconclusive(f"no good random element in {attempts} attempts")


def _projective_points(F: FieldSpec, n: int):
    p = F.characteristic
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def exhaustive_proper_ideal(L: LieAlgebra) -> LieIdealWitness | None:
    """Close every one-dimensional subspace; return a proper ideal if any."""
    if not L.field.is_finite:
        raise FieldError("exhaustive ideal search needs a finite field")
    for v in _projective_points(L.field, L.dim):
        w = ideal_closure(L, v)
        if w.dim < L.dim:
            return w
    return None


def is_simple_finite_field(L: LieAlgebra, seed: int = DEFAULT_SEED, method: str = "auto"):
    """``(True, None)`` or ``(False, witness)``; ``method`` is auto, norton or exhaustive.

    For an abelian algebra the witness is None (the failure is [L, L] = 0).
    """
    F = L.field
    if not F.is_finite:
        raise FieldError("the simplicity oracle only works over prime fields")
    if L.dim == 0:
        raise LieAlgebraError("simplicity of the zero Lie algebra is undefined")
    if L.is_abelian():
        return False, None
    cheap = F.characteristic ** L.dim <= EXHAUSTIVE_LIMIT
    if method == "exhaustive":
        w = exhaustive_proper_ideal(L)
        return (True, None) if w is None else (False, w)
    try:
        irreducible, sub = norton_irreducible(F, L.ad_matrices(), seed=seed)
    except OracleInconclusive:
        if method == "norton" or not cheap:
            raise
        w = exhaustive_proper_ideal(L)
        return (True, None) if w is None else (False, w)
    if irreducible:
        return True, None
    # any nonzero vector of an invariant subspace generates a proper ideal
    return False, ideal_closure(L, sub[0])


# -- theorem vs oracle --------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckReport:
    groupoid: str
    prime: int
    theorem: Kind
    oracle: Kind
    agree: bool
    witness: tuple = ()
    dimension: int = 0

    def to_json(self) -> dict:
        F = FieldSpec(self.prime)
        return {
            "groupoid": self.groupoid,
            "field": str(F),
            "lie_dimension": self.dimension,
            "theorem": self.theorem.value,
            "oracle": self.oracle.value,
            "agree": self.agree,
            "witness": [[F.format_scalar(x) for x in v] for v in self.witness],
            "note": HERSTEIN_NOTE,
        }


def cross_check_groupoid(g: FiniteGroupoid, p: int, seed: int = DEFAULT_SEED, name: str = "") -> CrossCheckReport:
    """Compare the commutator criterion with the oracle on A_{F_p}(g).

    Raises :class:`InvariantBreach` if they disagree.
    """
    if not (is_effective(g)[0] and is_minimal(g)[0]):
        raise ValueError("cross-check needs an effective and minimal groupoid")
    F = FieldSpec(p)
    theorem = lie_simplicity_verdict(g, F)
    L = lie_from_algebra(SteinbergAlgebra(g, F))
    if L.dim == 0:
        oracle_kind, witness = Kind.TRIVIAL, ()
    else:
        simple, w = is_simple_finite_field(L, seed=seed)
        oracle_kind = Kind.SIMPLE if simple else Kind.NOT_SIMPLE
        witness = w.basis if w is not None else ()
    agree = theorem.kind is oracle_kind
    report = CrossCheckReport(name or repr(g), p, theorem.kind, oracle_kind, agree, witness, L.dim)
    if not agree:
        raise InvariantBreach(f"theorem says {theorem.kind.value}, oracle says {oracle_kind.value}: {report}")
    return report
