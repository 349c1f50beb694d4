"""Named example graphs, groupoids and self-similar actions.

The same objects are shipped as JSON documents in ``lieverdict/fixtures/``
so the command line can be pointed at them; ``load_json`` reads those.
"""

from __future__ import annotations

import json
from importlib import resources

from .graphcore import Edge, Graph, rose
from .groupoidcore import (
    FiniteGroupoid,
    cyclic_group_groupoid,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    transformation_groupoid,
)
from .selfsimilar import FiniteGroup, SelfSimilarAction, trivial_action, validate_action


def _g(vertices, edges, bundles=()):
    return Graph(tuple(vertices), tuple(Edge(*e) for e in edges), tuple(bundles))


# -- graphs ---------------------------------------------------------------------

def r_infinity() -> Graph:
    """R_N: one vertex and infinitely many loops."""
    return _g(["v1"], [], [("v1", "v1")])


def line2() -> Graph:
    """E2: u --e--> v, i.e. s(e) = u, r(e) = v."""
    return _g(["u", "v"], [("e", "u", "v")])


def graph_corpus() -> dict[str, Graph]:
    return {
        "R1": rose(1),
        "R2": rose(2),
        "R3": rose(3),
        "R4": rose(4),
        "R_inf": r_infinity(),
        "E2": line2(),
        "point": _g(["v"], []),
        "two_points": _g(["u", "v"], []),
        # loop a at v, f: v -> w, b: w -> v
        "E3": _g(["v", "w"], [("a", "v", "v"), ("f", "v", "w"), ("b", "w", "v")]),
        "two_loops": _g(["v1", "v2"], [("l1", "v1", "v1"), ("l2", "v2", "v2")]),
        "toeplitz": _g(["u", "v"], [("a", "u", "u"), ("e", "u", "v")]),
        "toeplitz_rev": _g(["u", "v"], [("a", "u", "u"), ("e", "v", "u")]),
        "cycle3": _g(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")]),
        "cycle3_chord": _g(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "x", "z")]),
        "cycle2_double": _g(["x", "y"], [("a", "x", "y"), ("b", "y", "x"), ("c", "y", "x")]),
        "complete3": _g(
            ["p", "q", "r"],
            [(f"{s}{t}", s, t) for s in "pqr" for t in "pqr"],
        ),
        "line3": _g(["a", "b", "c"], [("e1", "a", "b"), ("e2", "b", "c")]),
        "fan_in": _g(["a", "b", "c"], [("e1", "a", "c"), ("e2", "b", "c")]),
        "bundle_line": _g(["u", "v"], [("a", "u", "u")], [("u", "v")]),
        "bundle_pair": _g(["u", "v"], [("a", "u", "v"), ("b", "v", "u")], [("v", "v")]),
        "loops_linked": _g(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("e", "u", "v")]),
        "flip_graph": _g(["v", "w"], [("a", "w", "v"), ("b", "v", "w"), ("c", "v", "v"), ("d", "w", "w")]),
        "star4": _g(["c", "l1", "l2", "l3"], [("s1", "l1", "c"), ("s2", "l2", "c"), ("s3", "l3", "c"), ("o", "c", "c")]),
        "wide5": _g(
            ["a", "b", "c", "d", "e"],
            [("ab", "a", "b"), ("bc", "b", "c"), ("cd", "c", "d"), ("de", "d", "e"), ("ea", "e", "a"), ("aa", "a", "a")],
        ),
        "big8": _g(
            [f"v{i}" for i in range(8)],
            [(f"e{i}", f"v{i}", f"v{(i + 1) % 8}") for i in range(8)] + [("x", "v0", "v0"), ("y", "v3", "v5")],
        ),
    }


# -- groupoids ---------------------------------------------------------------------

def z2_groupoid() -> FiniteGroupoid:
    """Z/2 as a groupoid with arrows e (the unit) and s."""
    return group_groupoid(["e", "s"], [["e", "s"], ["s", "e"]], "e", unit="e")


def singleton() -> FiniteGroupoid:
    return pair_groupoid(1)


def regular_z3() -> FiniteGroupoid:
    """Z/3 acting on itself by translation: isomorphic to P_3."""
    els = ["0", "1", "2"]
    mul = [[str((i + j) % 3) for j in range(3)] for i in range(3)]
    pts = ["p0", "p1", "p2"]
    act = {g: {f"p{k}": f"p{(k + int(g)) % 3}" for k in range(3)} for g in els}
    return transformation_groupoid(els, mul, "0", pts, act)


def z2_on_two_fixed() -> FiniteGroupoid:
    """Z/2 acting trivially on two points: isotropy everywhere."""
    els = ["0", "1"]
    mul = [["0", "1"], ["1", "0"]]
    act = {g: {"x": "x", "y": "y"} for g in els}
    return transformation_groupoid(els, mul, "0", ["x", "y"], act)


def s3_on_three() -> FiniteGroupoid:
    """S_3 acting on {1,2,3}: transitive, with Z/2 isotropy."""
    from itertools import permutations

    perms = list(permutations(range(3)))
    names = ["".join(str(i + 1) for i in p) for p in perms]
    idx = {p: i for i, p in enumerate(perms)}
    mul = [[names[idx[tuple(p[q[k]] for k in range(3))]] for q in perms] for p in perms]
    pts = ["1", "2", "3"]
    act = {names[i]: {pts[k]: pts[p[k]] for k in range(3)} for i, p in enumerate(perms)}
    return transformation_groupoid(names, mul, "123", pts, act)


def groupoid_corpus() -> dict[str, FiniteGroupoid]:
    return {
        "singleton": singleton(),
        "P2": pair_groupoid(2),
        "P3": pair_groupoid(3),
        "P4": pair_groupoid(4),
        "Z2": z2_groupoid(),
        "Z3": cyclic_group_groupoid(3),
        "two_points": disjoint_union(singleton(), singleton()),
        "P2_plus_point": disjoint_union(pair_groupoid(2), singleton()),
        "regular_Z3": regular_z3(),
        "Z2_fixed": z2_on_two_fixed(),
        "S3_on_3": s3_on_three(),
    }


def effective_minimal_names() -> list[str]:
    return ["singleton", "P2", "P3", "P4", "regular_Z3"]


# -- self-similar actions ---------------------------------------------------------------

def _z2() -> FiniteGroup:
    return FiniteGroup.cyclic(2, ["1", "s"])


def swap() -> SelfSimilarAction:
    """R_2 with loops a, b; s swaps them and phi(g, e) = g."""
    G = _z2()
    E = _g(["v"], [("a", "v", "v"), ("b", "v", "v")])
    act = SelfSimilarAction(
        E, G, {}, {"s": {"a": "b", "b": "a"}},
        {(g, e): g for g in G.elements for e in ("a", "b")},
    )
    validate_action(act)
    return act


def nhaus() -> SelfSimilarAction:
    """R_2; s fixes both loops, phi(s, a) = s and phi(s, b) = 1."""
    G = _z2()
    E = _g(["v"], [("a", "v", "v"), ("b", "v", "v")])
    act = SelfSimilarAction(
        E, G, {}, {},
        {("1", "a"): "1", ("1", "b"): "1", ("s", "a"): "s", ("s", "b"): "1"},
    )
    validate_action(act)
    return act


def triv2() -> SelfSimilarAction:
    """R_2 with Z/2 acting trivially and the trivial cocycle."""
    G = _z2()
    E = _g(["v"], [("a", "v", "v"), ("b", "v", "v")])
    act = SelfSimilarAction(E, G, {}, {}, {(g, e): "1" for g in G.elements for e in ("a", "b")})
    validate_action(act)
    return act


def flip() -> SelfSimilarAction:
    """Z/2 swapping the two vertices of flip_graph, phi(g, e) = g."""
    G = _z2()
    E = graph_corpus()["flip_graph"]
    act = SelfSimilarAction(
        E, G, {"s": {"v": "w", "w": "v"}}, {"s": {"a": "b", "b": "a", "c": "d", "d": "c"}},
        {(g, e.name): g for g in G.elements for e in E.edges},
    )
    validate_action(act)
    return act


def action_corpus() -> dict[str, SelfSimilarAction]:
    out = {"SWAP": swap(), "NHAUS": nhaus(), "TRIV2": triv2(), "FLIP": flip()}
    for name, g in graph_corpus().items():
        if g.is_row_finite and all(g.in_edges(v) for v in g.vertices):
            out[f"trivial_{name}"] = trivial_action(g)
    return out


# -- JSON documents ------------------------------------------------------------------

def load_json(name: str) -> dict:
    """Read ``fixtures/<name>.json`` shipped with the package."""
    ref = resources.files("lieverdict") / "fixtures" / f"{name}.json"
    return json.loads(ref.read_text())


def fixture_path(name: str) -> str:
    return str(resources.files("lieverdict") / "fixtures" / f"{name}.json")
