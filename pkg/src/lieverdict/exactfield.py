"""Exact fields and dense linear algebra over them.

Two kinds of field are supported: the rationals (elements are
:class:`fractions.Fraction`) and prime fields F_p (elements are ints in
``range(p)``).  Nothing here ever touches floating point.

Field elements are plain Python values; all arithmetic goes through the
owning :class:`FieldSpec` so that residues stay reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import isprime

__all__ = [
    "FieldError",
    "FieldSpec",
    "Matrix",
    "Subspace",
    "Q",
    "GF",
    "rref",
    "rank",
    "in_span",
    "nullspace",
]

PRIME_LIMIT = 2**31


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (characteristic 0) or F_p."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or not isprime(p):
            raise FieldError(f"characteristic must be 0 or a prime, got {p}")
        if p >= PRIME_LIMIT:
            raise FieldError(f"prime fields are limited to p < 2^31, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"Fp:(\d+)", text)
        if m is None:
            raise FieldError(f"unrecognised field {text!r}; expected 'Q' or 'Fp:<p>'")
        p = int(m.group(1))
        if p < 2:
            raise FieldError(f"Fp:<p> needs a prime p >= 2, got {p}")
        return cls(p)

    @property
    def kind(self) -> str:
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def size(self) -> int | None:
        return self.characteristic or None

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def __repr__(self):
        return f"FieldSpec({str(self)!r})"

    # -- elements ---------------------------------------------------------

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into this field."""
        p = self.characteristic
        if isinstance(x, str):
            return self.parse_scalar(x)
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % p, x.denominator % p)
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def elements(self):
        if not self.is_finite:
            raise FieldError("cannot enumerate the rationals")
        return range(self.characteristic)

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / a if p == 0 else pow(a, -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format_scalar(self, a) -> str:
        if self.characteristic == 0:
            return str(a)
        return f"{a} mod {self.characteristic}"

    def parse_scalar(self, text: str):
        text = text.strip()
        m = re.fullmatch(r"(-?\d+)\s+mod\s+(\d+)", text)
        if m:
            if int(m.group(2)) != self.characteristic:
                raise FieldError(f"scalar {text!r} does not belong to {self}")
            return int(m.group(1)) % self.characteristic
        return self(Fraction(text))

    # -- vectors ----------------------------------------------------------

    def vector(self, values: Iterable) -> tuple:
        return tuple(self(x) for x in values)

    def zeros(self, n: int) -> tuple:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> tuple:
        v = [self.zero] * n
        v[i] = self.one
        return tuple(v)

    def combine(self, coeffs: Sequence, vectors: Sequence[Sequence]) -> tuple:
        """Return sum(c * v) over matching pairs; vectors must share a length."""
        if len(coeffs) != len(vectors):
            raise FieldError("coefficient count does not match vector count")
        if not vectors:
            raise FieldError("cannot combine an empty family without a length")
        n = len(vectors[0])
        out = [self.zero] * n
        for c, v in zip(coeffs, vectors):
            if c == 0:
                continue
            for k in range(n):
                if v[k] != 0:
                    out[k] = self.add(out[k], self.mul(c, v[k]))
        return tuple(out)


Q = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise FieldError("entry count does not equal rows * cols")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise FieldError("ragged rows")
        return cls(field, len(rows), cols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(self.field, [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise FieldError("shape mismatch")
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise FieldError("shape mismatch")
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, tuple(F.mul(c, a) for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise FieldError("shape mismatch")
        F = self.field
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = F.zero
                for k in range(self.cols):
                    if r[k] != 0:
                        acc = F.add(acc, F.mul(r[k], other[k, j]))
                out.append(acc)
        return Matrix(F, self.rows, other.cols, tuple(out))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self):
        if not self.is_square:
            raise FieldError("trace of a non-square matrix")
        F = self.field
        t = F.zero
        for i in range(self.rows):
            t = F.add(t, self[i, i])
        return t

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)


# -- row reduction ----------------------------------------------------------

def _rref_rows(F: FieldSpec, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; first nonzero pivot, left to right."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        inv = F.inv(piv[c])
        if inv != 1:
            piv[:] = [F.mul(inv, x) for x in piv]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            row_i = rows[i]
            for k in range(c, ncols):
                if piv[k] != 0:
                    row_i[k] = F.sub(row_i[k], F.mul(f, piv[k]))
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    rows, pivots = _rref_rows(m.field, m.to_rows(), m.cols)
    return Matrix.from_rows(m.field, rows, m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def in_span(field: FieldSpec, v: Sequence, basis: Sequence[Sequence]) -> tuple[bool, tuple | None]:
    """Decide whether ``v`` is a linear combination of ``basis``.

    Returns ``(True, coeffs)`` with ``sum(coeffs[j] * basis[j]) == v`` exactly,
    or ``(False, None)``.  Free variables of the system are set to zero, so the
    certificate is deterministic.
    """
    n = len(v)
    if any(len(b) != n for b in basis):
        raise FieldError("dimension mismatch between vector and basis")
    k = len(basis)
    v = [field(x) for x in v]
    # columns are basis vectors, last column is v
    rows = [[field(basis[j][i]) for j in range(k)] + [v[i]] for i in range(n)]
    rows, pivots = _rref_rows(field, rows, k + 1)
    if pivots and pivots[-1] == k:
        return False, None
    coeffs = [field.zero] * k
    for r, c in enumerate(pivots):
        coeffs[c] = rows[r][k]
    return True, tuple(coeffs)


def nullspace(field: FieldSpec, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    work, pivots = _rref_rows(field, [[field(x) for x in r] for r in rows], ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [field.zero] * ncols
        x[free] = field.one
        for r, c in enumerate(pivots):
            x[c] = field.neg(work[r][free])
        basis.append(tuple(x))
    return basis


class Subspace:
    """A subspace of F^n stored by its reduced echelon basis.

    Two subspaces are equal exactly when their echelon bases are equal, which
    makes comparisons between independently computed spans bit-exact.
    """

    def __init__(self, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        rows = [[field(x) for x in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise FieldError("vector length does not match ambient dimension")
        rows, pivots = _rref_rows(field, rows, ambient_dim)
        self.basis: tuple[tuple, ...] = tuple(tuple(r) for r in rows[:len(pivots)])
        self.pivots: tuple[int, ...] = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coordinates of ``v`` against the echelon basis, or None if outside."""
        F = self.field
        if len(v) != self.ambient_dim:
            raise FieldError("dimension mismatch")
        rest = [F(x) for x in v]
        coords = []
        for b, c in zip(self.basis, self.pivots):
            a = rest[c]
            coords.append(a)
            if a != 0:
                for k in range(c, self.ambient_dim):
                    if b[k] != 0:
                        rest[k] = F.sub(rest[k], F.mul(a, b[k]))
        if any(x != 0 for x in rest):
            return None
        return tuple(coords)

    def extended(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace(self.field, self.ambient_dim, list(self.basis) + [list(v) for v in vectors])

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field, self.ambient_dim, self.basis) == (other.field, other.ambient_dim, other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"
