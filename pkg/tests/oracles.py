"""Brute-force reference computations used by the tests.

Everything here works straight from definitions by enumeration, sharing no
code with the library beyond the data types.
"""

from __future__ import annotations

from itertools import chain, combinations, product

import networkx as nx
from hypothesis import strategies as st

from lieverdict.graphcore import Edge, Graph


def subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))


# -- graphs ----------------------------------------------------------------------

def _all_edges(g: Graph):
    """Finite edges plus one representative per infinite bundle."""
    return list(g.edges) + [Edge(f"<bundle {s}->{r}>", s, r) for s, r in g.infinite_bundles]


def hs_by_definition(g: Graph, h) -> bool:
    h = set(h)
    for e in _all_edges(g):
        if e.rng in h and e.src not in h:
            return False
    for v in g.vertices:
        if v in h or g.has_infinite_into(v):
            continue
        ins = [e for e in g.edges if e.rng == v]
        if ins and all(e.src in h for e in ins):
            return False
    return True


def only_trivial_hs_brute(g: Graph) -> bool:
    full = set(g.vertices)
    for h in subsets(g.vertices):
        if set(h) not in (set(), full) and hs_by_definition(g, h):
            return False
    return True


def edge_cycles(g: Graph):
    """All simple cycles as edge tuples e1..en with s(e_i) = r(e_{i+1})."""
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    edges = _all_edges(g)
    dg.add_edges_from((e.src, e.rng) for e in edges)
    for nodes in nx.simple_cycles(dg):
        # nodes is a src->rng walk; path order reads it backwards
        hops = list(zip(nodes, nodes[1:] + nodes[:1]))
        choices = [[e for e in edges if (e.src, e.rng) == hop] for hop in hops]
        for pick in product(*choices):
            yield tuple(reversed(pick))


def cycle_has_entry(g: Graph, cycle) -> bool:
    for e in cycle:
        if g.has_infinite_into(e.rng):
            return True
        if any(f.rng == e.rng and f.name != e.name for f in g.edges):
            return True
    return False


def every_cycle_has_entry_brute(g: Graph) -> bool:
    return all(cycle_has_entry(g, c) for c in edge_cycles(g))


@st.composite
def graphs(draw, max_vertices=6, max_edges=10, bundles=True):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    m = draw(st.integers(0, max_edges))
    pairs = draw(st.lists(st.tuples(st.sampled_from(vs), st.sampled_from(vs)), min_size=m, max_size=m))
    edges = tuple(Edge(f"e{k}", s, r) for k, (s, r) in enumerate(pairs))
    inf = ()
    if bundles:
        inf = tuple(draw(st.lists(st.tuples(st.sampled_from(vs), st.sampled_from(vs)), max_size=2, unique=True)))
    return Graph(tuple(vs), edges, inf)


# -- linear algebra ----------------------------------------------------------------

def in_span_brute(F, v, basis) -> bool:
    v = tuple(F(x) for x in v)
    for coeffs in product(range(F.characteristic), repeat=len(basis)):
        acc = [F.zero] * len(v)
        for c, b in zip(coeffs, basis):
            for i, x in enumerate(b):
                acc[i] = F.add(acc[i], F.mul(F(c), F(x)))
        if tuple(acc) == v:
            return True
    return False


def lie_is_ideal(L, basis) -> bool:
    from lieverdict.exactfield import Subspace

    span = Subspace(L.field, L.dim, basis)
    return all(span.contains(L.bracket(L.basis_vector(k), b)) for b in basis for k in range(L.dim))


def jacobi_holds(field, c) -> bool:
    """Direct check of [x,x] = 0 and Jacobi on basis triples."""
    n = len(c)

    def br(x, y):
        out = [field.zero] * n
        for i in range(n):
            for j in range(n):
                if x[i] and y[j]:
                    for k in range(n):
                        out[k] = field.add(out[k], field.mul(field.mul(x[i], y[j]), field(c[i][j][k])))
        return out

    e = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for i in range(n):
        if any(field(x) != 0 for x in c[i][i]):
            return False
        for j in range(n):
            if any(field.add(field(a), field(b)) != 0 for a, b in zip(c[i][j], c[j][i])):
                return False
    for i, j, k in product(range(n), repeat=3):
        a = br(e[i], br(e[j], e[k]))
        b = br(e[j], br(e[k], e[i]))
        d = br(e[k], br(e[i], e[j]))
        if any(field.add(field.add(x, y), z) != 0 for x, y, z in zip(a, b, d)):
            return False
    return True


# -- self-similar actions ---------------------------------------------------------------

def paths_into(graph: Graph, v: str, length: int):
    """All edge tuples e1..en with r(e1) = v and s(e_i) = r(e_{i+1})."""
    if length == 0:
        yield ()
        return
    for e in graph.in_edges(v):
        for rest in paths_into(graph, e.src, length - 1):
            yield (e.name,) + rest


def act_brute(a, g, edges):
    """Apply g letter by letter; returns (image edges, final state)."""
    out = []
    h = g
    for e in edges:
        out.append(a.act_edge(h, e))
        h = a.phi(h, e)
    return tuple(out), h


def strongly_fixed_brute(a, g, edges) -> bool:
    if not edges:
        return g == a.identity
    img, h = act_brute(a, g, edges)
    return img == tuple(edges) and h == a.identity


def minimal_strongly_fixed_brute(a, g, v, max_len):
    out = []
    for n in range(max_len + 1):
        for p in paths_into(a.graph, v, n):
            if strongly_fixed_brute(a, g, p) and not any(strongly_fixed_brute(a, g, p[:k]) for k in range(n)):
                out.append(p)
    return out


def entry_free_circuits_brute(a, max_len):
    E = a.graph
    found = []
    for g in a.group.elements:
        for n in range(1, max_len + 1):
            for v in E.vertices:
                for p in paths_into(E, v, n):
                    src = E.edge(p[-1]).src
                    if src != a.act_vertex(g, v):
                        continue
                    ok = all([f.name for f in E.in_edges(E.edge(p[i]).src)] == [p[i + 1]] for i in range(n - 1))
                    ok = ok and [f.name for f in E.in_edges(src)] == [a.act_edge(g, p[0])]
                    if ok:
                        found.append((g, p))
    return found


def slack_brute(a, g, v, horizon):
    """Least n such that every path into v of length in [n, horizon] is strongly fixed, else None."""
    bad = [n for n in range(horizon + 1)
           if not all(strongly_fixed_brute(a, g, p) for p in paths_into(a.graph, v, n))]
    if bad and bad[-1] == horizon:
        return None
    return bad[-1] + 1 if bad else 0


def weakly_transitive_brute(a) -> bool:
    E = a.graph
    dg = nx.DiGraph()
    dg.add_nodes_from(E.vertices)
    dg.add_edges_from((e.src, e.rng) for e in E.edges)
    for cyc in nx.simple_cycles(dg):
        for v in E.vertices:
            orbit = {a.act_vertex(g, v) for g in a.group.elements}
            if not any(nx.has_path(dg, w, u) for w in cyc for u in orbit):
                return False
    return True


def rank_mod_p(rows, p) -> int:
    """Plain Gaussian elimination over Z/p on integer rows; independent of the library."""
    m = [[x % p for x in r] for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def unit_commutators(d):
    """Flattened [E_ij, E_kl] for all matrix-unit pairs in M_d."""
    out = []
    for i, j, k, l in product(range(d), repeat=4):
        m = [0] * (d * d)
        if j == k:
            m[i * d + l] += 1
        if l == i:
            m[k * d + j] -= 1
        out.append(m)
    return out
