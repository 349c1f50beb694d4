"""Directed graphs in the range-first convention used for Leavitt path algebras.

An edge ``e`` runs from ``src`` to ``rng``; ``r^{-1}(v)`` is the set of edges
whose range is ``v``, and a path ``e1 e2 ... en`` satisfies
``src(e_i) == rng(e_{i+1})`` so that it *ends* at ``rng(e1)``.  Relations
such as ``v = sum_{e in r^{-1}(v)} e e^*`` are therefore indexed by incoming
edges.  This is the reverse of the orientation common in much of the
literature and every function below follows it.

Infinitely many parallel edges between a fixed pair of vertices are declared
as an *infinite bundle*; vertex sets are always finite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import inf
from typing import Iterable

from .verdicts import Kind, Verdict

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "VertexClass",
    "parse_graph",
    "classify_vertex",
    "hs_closure",
    "is_hereditary",
    "is_saturated",
    "only_trivial_hs",
    "every_cycle_has_entry",
    "lpa_is_simple",
    "rose",
]

SIMPLICITY_THEOREM = (
    "L_K(E) simple iff the only hereditary saturated subsets are trivial "
    "and every cycle has an entry"
)


class GraphError(ValueError):
    pass


class VertexClass(str, Enum):
    SOURCE = "Source"
    REGULAR = "Regular"
    INFINITE_RECEIVER = "InfiniteReceiver"


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    rng: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    infinite_bundles: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if not self.vertices:
            raise GraphError("graph must have at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex name")
        vs = set(self.vertices)
        seen = set()
        for e in self.edges:
            if e.name in seen:
                raise GraphError(f"duplicate edge name {e.name!r}")
            seen.add(e.name)
            for end in (e.src, e.rng):
                if end not in vs:
                    raise GraphError(f"edge {e.name!r} references undeclared vertex {end!r}")
        for s, r in self.infinite_bundles:
            for end in (s, r):
                if end not in vs:
                    raise GraphError(f"infinite bundle ({s!r},{r!r}) references undeclared vertex {end!r}")

    # -- lookups ------------------------------------------------------------

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def edge(self, name: str) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise GraphError(f"unknown edge {name!r}")

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        """Finite part of r^{-1}(v), in declaration order."""
        return tuple(e for e in self.edges if e.rng == v)

    def has_infinite_into(self, v: str) -> bool:
        return any(r == v for _, r in self.infinite_bundles)

    def in_degree(self, v: str) -> float:
        self.index(v)
        if self.has_infinite_into(v):
            return inf
        return len(self.in_edges(v))

    @property
    def is_row_finite(self) -> bool:
        return not self.infinite_bundles

    def vertex_predecessors(self, v: str) -> set[str]:
        """s(r^{-1}(v)), infinite bundles included."""
        out = {e.src for e in self.edges if e.rng == v}
        out.update(s for s, r in self.infinite_bundles if r == v)
        return out

    def sorted_subset(self, subset: Iterable[str]) -> tuple[str, ...]:
        subset = set(subset)
        return tuple(v for v in self.vertices if v in subset)

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"name": e.name, "src": e.src, "rng": e.rng} for e in self.edges],
            "infinite_bundles": [{"src": s, "rng": r} for s, r in self.infinite_bundles],
        }


def parse_graph(document) -> Graph:
    """Build a :class:`Graph` from its JSON document (a dict or a JSON string)."""
    if isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, dict):
        raise GraphError("graph document must be a JSON object")
    vertices = document.get("vertices")
    if not isinstance(vertices, list):
        raise GraphError("'vertices' must be a finite list of names")
    if not vertices:
        raise GraphError("empty vertex list")
    edges = []
    for k, item in enumerate(document.get("edges", [])):
        try:
            edges.append(Edge(str(item["name"]), str(item["src"]), str(item["rng"])))
        except (KeyError, TypeError):
            raise GraphError(f"edges[{k}] needs 'name', 'src' and 'rng'") from None
    bundles = []
    for k, item in enumerate(document.get("infinite_bundles", [])):
        try:
            pair = (str(item["src"]), str(item["rng"]))
        except (KeyError, TypeError):
            raise GraphError(f"infinite_bundles[{k}] needs 'src' and 'rng'") from None
        if pair not in bundles:
            bundles.append(pair)
    return Graph(tuple(str(v) for v in vertices), tuple(edges), tuple(bundles))


def rose(n: int, vertex: str = "v") -> Graph:
    """R_n: one vertex carrying n loops named e1..en."""
    return Graph((vertex,), tuple(Edge(f"e{i}", vertex, vertex) for i in range(1, n + 1)))


def classify_vertex(g: Graph, v: str) -> VertexClass:
    d = g.in_degree(v)
    if d == 0:
        return VertexClass.SOURCE
    if d == inf:
        return VertexClass.INFINITE_RECEIVER
    return VertexClass.REGULAR


def is_hereditary(g: Graph, h: Iterable[str]) -> bool:
    h = set(h)
    if any(e.rng in h and e.src not in h for e in g.edges):
        return False
    return not any(r in h and s not in h for s, r in g.infinite_bundles)


def is_saturated(g: Graph, h: Iterable[str]) -> bool:
    h = set(h)
    for v in g.vertices:
        if v in h or classify_vertex(g, v) is not VertexClass.REGULAR:
            continue
        if g.vertex_predecessors(v) <= h:
            return False
    return True


def hs_closure(g: Graph, h: Iterable[str]) -> frozenset[str]:
    """Smallest hereditary and saturated set containing ``h``."""
    closed = set(h)
    for v in closed:
        g.index(v)
    regular = [v for v in g.vertices if classify_vertex(g, v) is VertexClass.REGULAR]
    preds = {v: g.vertex_predecessors(v) for v in g.vertices}
    changed = True
    while changed:
        changed = False
        # hereditary: r(e) in H forces s(e) in H
        for v in list(closed):
            new = preds[v] - closed
            if new:
                closed |= new
                changed = True
        # saturated: a regular vertex fed only from H joins H
        for v in regular:
            if v not in closed and preds[v] <= closed:
                closed.add(v)
                changed = True
    return frozenset(closed)


def only_trivial_hs(g: Graph) -> tuple[bool, frozenset[str] | None]:
    """True iff the only hereditary saturated subsets are the empty set and E^0.

    Any nonempty hereditary saturated set contains some vertex and hence the
    closure of that vertex, so closing singletons is enough.
    """
    full = frozenset(g.vertices)
    for v in g.vertices:
        c = hs_closure(g, {v})
        if c != full:
            return False, c
    return True, None


def every_cycle_has_entry(g: Graph) -> tuple[bool, tuple[str, ...] | None]:
    """Condition (L).  On failure the witness is an entry-free cycle ``e1..en``.

    A cycle has no entry exactly when each of its vertices receives one edge
    in total, so the search walks backwards from in-degree-1 vertices along
    their unique incoming edge.
    """
    unique_in = {}
    for v in g.vertices:
        if g.has_infinite_into(v):
            continue
        ins = g.in_edges(v)
        if len(ins) == 1:
            unique_in[v] = ins[0]
    done: set[str] = set()
    for start in g.vertices:
        if start in done or start not in unique_in:
            continue
        walk: list[str] = []
        pos: dict[str, int] = {}
        v = start
        while v in unique_in and v not in done and v not in pos:
            pos[v] = len(walk)
            walk.append(v)
            v = unique_in[v].src
        if v in pos:
            cycle_vertices = walk[pos[v]:]
            return False, tuple(unique_in[u].name for u in cycle_vertices)
        done.update(walk)
    return True, None


def lpa_is_simple(g: Graph) -> Verdict:
    """Simplicity of L_K(E); the answer does not depend on the field."""
    ok, witness = only_trivial_hs(g)
    if not ok:
        return Verdict(
            Kind.NOT_SIMPLE,
            reason="nontrivial hereditary saturated subset",
            witness=g.sorted_subset(witness),
            theorems=(SIMPLICITY_THEOREM,),
        )
    ok, cycle = every_cycle_has_entry(g)
    if not ok:
        return Verdict(
            Kind.NOT_SIMPLE,
            reason="cycle without entry",
            witness=cycle,
            theorems=(SIMPLICITY_THEOREM,),
        )
    return Verdict(Kind.SIMPLE, theorems=(SIMPLICITY_THEOREM,))
