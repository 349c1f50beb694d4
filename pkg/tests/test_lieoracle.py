from __future__ import annotations

import random

import pytest

from lieverdict.exactfield import FieldError, GF, Q
from lieverdict.fixtures import groupoid_corpus
from lieverdict.groupoidcore import pair_groupoid
from lieverdict.lieoracle import (
    LieAlgebra,
    LieAlgebraError,
    OracleInconclusive,
    cross_check_groupoid,
    exhaustive_proper_ideal,
    ideal_closure,
    is_simple_finite_field,
    lie_from_algebra,
)
from lieverdict.steinberg import SteinbergAlgebra
from lieverdict.verdicts import InvariantBreach, Kind
from oracles import jacobi_holds, lie_is_ideal

CORPUS = groupoid_corpus()


def sl2(F):
    return lie_from_algebra(SteinbergAlgebra(pair_groupoid(2), F))


def full_lie(F, g):
    """All of A_K(g) under the commutator bracket (gl_n for a pair groupoid)."""
    A = SteinbergAlgebra(g, F)
    units = [F.unit_vector(A.dim, i) for i in range(A.dim)]
    return LieAlgebra(F, [[A.bracket_vectors(x, y) for y in units] for x in units])


def direct_sum(L, M):
    F = L.field
    n, m = L.dim, M.dim
    c = [[[F.zero] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k, x in enumerate(L.brackets[i][j]):
                c[i][j][k] = x
    for i in range(m):
        for j in range(m):
            for k, x in enumerate(M.brackets[i][j]):
                c[n + i][n + j][n + k] = x
    return LieAlgebra(F, c)


def abelian(F, n):
    return LieAlgebra(F, [[[F.zero] * n for _ in range(n)] for _ in range(n)])


def heisenberg(F):
    z = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    z[0][1] = [0, 0, 1]
    z[1][0] = [0, 0, -1]
    return LieAlgebra(F, z)


def two_dim_nonabelian(F):
    c = [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]
    return LieAlgebra(F, c)


def witt(p):
    """W(1;1): basis e_i for -1 <= i <= p-2 with [e_i, e_j] = (j - i) e_{i+j}; simple for p >= 5."""
    idx = list(range(-1, p - 1))
    n = len(idx)
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            if i + j in idx:
                c[a][b][idx.index(i + j)] = j - i
    return LieAlgebra(GF(p), c)


def small_algebras():
    out = []
    for p in (2, 3, 5, 7):
        F = GF(p)
        out += [
            (f"sl2/F{p}", sl2(F)),
            (f"heis/F{p}", heisenberg(F)),
            (f"b2/F{p}", two_dim_nonabelian(F)),
            (f"gl2/F{p}", full_lie(F, pair_groupoid(2))),
            (f"sl2+F/F{p}", direct_sum(sl2(F), abelian(F, 1))),
        ]
    for p in (2, 3):
        F = GF(p)
        out.append((f"sl2+sl2/F{p}", direct_sum(sl2(F), sl2(F))))
        out.append((f"[A,A](S3)/F{p}", lie_from_algebra(SteinbergAlgebra(CORPUS["S3_on_3"], F))))
    out.append(("witt/F5", witt(5)))
    return [(n, L) for n, L in out if L.dim <= 6]


def test_validation_accepts_fixtures():
    for name, L in small_algebras():
        assert jacobi_holds(L.field, L.brackets), name


def test_simplicity_examples():
    for p in (3, 5, 7):
        assert is_simple_finite_field(sl2(GF(p)))[0]
    ok, w = is_simple_finite_field(sl2(GF(2)))
    assert not ok and 0 < len(w.basis) < 3
    assert is_simple_finite_field(abelian(GF(3), 2)) == (False, None)
    assert not is_simple_finite_field(heisenberg(GF(5)))[0]
    with pytest.raises(FieldError):
        is_simple_finite_field(sl2(Q))


def test_ideal_closure_is_an_ideal():
    rng = random.Random(5)
    for name, L in small_algebras():
        F = L.field
        for _ in range(10):
            v = [rng.randrange(F.characteristic) for _ in range(L.dim)]
            if not any(v):
                continue
            w = ideal_closure(L, v)
            assert lie_is_ideal(L, w.basis), name
    with pytest.raises(LieAlgebraError):
        ideal_closure(sl2(GF(3)), (0, 0, 0))


@pytest.mark.parametrize("name, L", small_algebras(), ids=[n for n, _ in small_algebras()])
def test_norton_matches_exhaustive(name, L):
    truth = exhaustive_proper_ideal(L)
    if L.is_abelian():
        assert is_simple_finite_field(L) == (False, None)
        return
    if truth is not None:
        assert lie_is_ideal(L, truth.basis) and 0 < len(truth.basis) < L.dim
    for seed in range(5):
        try:
            ok, w = is_simple_finite_field(L, seed=seed, method="norton")
        except OracleInconclusive:
            continue
        assert ok == (truth is None), (name, seed)
        if not ok:
            assert lie_is_ideal(L, w.basis) and 0 < len(w.basis) < L.dim
    assert is_simple_finite_field(L, method="auto")[0] == (truth is None)


def test_corrupted_tensors_rejected():
    rng = random.Random(99)
    bases = [sl2(GF(5)), sl2(GF(3)), lie_from_algebra(SteinbergAlgebra(pair_groupoid(3), GF(2))),
             direct_sum(sl2(GF(3)), sl2(GF(3)))]
    rejected = accepted = 0
    while rejected < 100:
        L = rng.choice(bases)
        F, n = L.field, L.dim
        c = [[list(v) for v in row] for row in L.brackets]
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        d = F(rng.randrange(1, F.characteristic))
        c[i][j][k] = F.add(c[i][j][k], d)
        if rng.random() < 0.5 and i != j:
            # keep antisymmetry so only the Jacobi check can catch it
            c[j][i][k] = F.sub(c[j][i][k], d)
        valid = jacobi_holds(F, c)
        if valid:
            LieAlgebra(F, c)
            accepted += 1
        else:
            with pytest.raises(LieAlgebraError):
                LieAlgebra(F, c)
            rejected += 1
    assert rejected == 100


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_cross_check_grid(n, p):
    r = cross_check_groupoid(pair_groupoid(n), p, name=f"P{n}")
    expected = Kind.SIMPLE if n % p else Kind.NOT_SIMPLE
    assert r.agree and r.theorem is expected and r.oracle is expected
    # [M_n, M_n] = sl_n in every characteristic
    assert r.dimension == n * n - 1
    js = r.to_json()
    assert set(js) >= {"theorem", "oracle", "agree", "witness"}


def test_cross_check_requires_simple_groupoid():
    with pytest.raises(ValueError):
        cross_check_groupoid(CORPUS["Z2"], 3)


def test_cross_check_reports_disagreement(monkeypatch):
    import lieverdict.lieoracle as lo

    monkeypatch.setattr(lo, "is_simple_finite_field", lambda L, seed=0: (False, None))
    with pytest.raises(InvariantBreach):
        lo.cross_check_groupoid(pair_groupoid(2), 3)
