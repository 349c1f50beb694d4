"""Self-similar actions (G, E, sigma, phi) of finite groups on finite graphs.

Conventions
-----------
Paths follow :mod:`lieverdict.graphcore`: ``e1 e2 ... en`` with
``s(e_i) == r(e_{i+1})``, ending at ``r(e1)``.  A group element acts on a
path by consuming the range-most edge first::

    g.(e mu) = (g.e)(phi(g, e).mu)        phi(g, e mu) = phi(phi(g, e), mu)

so the cocycle acts as the state of a Mealy machine reading the path from
its range end.  On a length-zero path (a vertex) ``phi(g, v) = g``; with
this choice the unit triples ``(v, 1, v)`` of S_{G,E} are idempotents and a
vertex is strongly fixed by the identity only.

The cocycle law checked is ``phi(gh, x) == phi(g, h.x) * phi(h, x)``, which
is the form under which ``(gh).mu == g.(h.mu)`` holds on paths.

All path questions (strong fixing, slackness, fixing a cylinder) are
answered on the finite *restriction automaton* whose states are pairs
``(h, w)``: reading an edge ``e`` with ``r(e) == w`` and ``h.e == e`` moves to
``(phi(h, e), s(e))``; an edge with ``h.e != e`` is *broken* at that state.
There are at most ``|G| * |E^0|`` states, which bounds every search.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .exactfield import FieldSpec
from .graphcore import Graph, GraphError, parse_graph
from .lpalie import lpa_lie_simple
from .verdicts import Kind, Verdict

__all__ = [
    "ActionError",
    "NonHausdorffError",
    "FiniteGroup",
    "Path",
    "SelfSimilarAction",
    "SGETriple",
    "make_path",
    "make_triple",
    "ZERO",
    "parse_action",
    "trivial_action",
    "validate_action",
    "act_on_path",
    "is_strongly_fixed",
    "sgE_multiply",
    "sgE_star",
    "RestrictionAutomaton",
    "MinimalStronglyFixed",
    "minimal_strongly_fixed",
    "is_hausdorff",
    "circuits_with_no_entry",
    "weakly_g_transitive",
    "fixes_cylinder_pointwise",
    "is_slack",
    "EPReport",
    "ep_verdict",
]

HAUSDORFF_THEOREM = (
    "groupoid of (G, E) is Hausdorff iff every (g, v) has finitely many "
    "minimal strongly fixed paths"
)
SIMPLICITY_THEOREM = (
    "L_K(G, E) simple iff E is weakly G-transitive, every G-circuit has an "
    "entry, and every g fixing Z(v) pointwise is slack at v"
)
UNITAL_LEMMA = "L_K(G, E) is unital iff E^0 is finite, with 1 = sum_v P_(v, 1)"
CENTER_THEOREM = "simple L_K(G, E) with finite E^0 has center K*1"
LIE_THEOREM = (
    "for nontrivial simple L_K(G, E) with finite E^0: the commutator Lie "
    "algebra is simple iff 1 is not a sum of commutators"
)


class ActionError(ValueError):
    pass


class NonHausdorffError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# -- groups -----------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[str, ...]
    table: dict = field(hash=False, compare=False)
    identity: str = ""

    def mul(self, g: str, h: str) -> str:
        return self.table[(g, h)]

    def inv(self, g: str) -> str:
        for h in self.elements:
            if self.table[(g, h)] == self.identity:
                return h
        raise ActionError(f"{g!r} has no inverse")

    def __len__(self):
        return len(self.elements)

    @classmethod
    def from_table(cls, elements: Sequence[str], mul: Sequence[Sequence[str]], identity: str) -> "FiniteGroup":
        elements = tuple(str(x) for x in elements)
        if identity not in elements:
            raise ActionError(f"identity {identity!r} is not a group element")
        if len(mul) != len(elements) or any(len(r) != len(elements) for r in mul):
            raise ActionError("multiplication table must be |G| x |G|")
        table = {}
        for i, g in enumerate(elements):
            for j, h in enumerate(elements):
                x = mul[i][j]
                x = elements[x] if isinstance(x, int) else str(x)
                table[(g, h)] = x
        return cls(elements, table, identity)

    @classmethod
    def trivial(cls, name: str = "1") -> "FiniteGroup":
        return cls((name,), {(name, name): name}, name)

    @classmethod
    def cyclic(cls, n: int, names: Sequence[str] | None = None) -> "FiniteGroup":
        names = list(names) if names else [str(k) for k in range(n)]
        return cls.from_table(names, [[names[(i + j) % n] for j in range(n)] for i in range(n)], names[0])

    def validate(self) -> None:
        E = set(self.elements)
        for (g, h), x in self.table.items():
            if x not in E:
                raise ActionError(f"product {g}*{h} = {x!r} is not a group element")
        for g in self.elements:
            if self.mul(self.identity, g) != g or self.mul(g, self.identity) != g:
                raise ActionError(f"identity law fails at {g!r}")
            self.inv(g)
        for a in self.elements:
            for b in self.elements:
                ab = self.mul(a, b)
                for c in self.elements:
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise ActionError(f"group multiplication is not associative on ({a}, {b}, {c})")


# -- paths --------------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    """A path ``edges[0] edges[1] ...`` ending at ``vertex`` (its range)."""

    vertex: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        return "".join(self.edges) if len(self.edges) and all(len(e) == 1 for e in self.edges) \
            else (" ".join(self.edges) if self.edges else self.vertex)

    def to_json(self):
        return list(self.edges) if self.edges else self.vertex


def _source(graph: Graph, p: Path) -> str:
    return graph.edge(p.edges[-1]).src if p.edges else p.vertex


def _check_path(graph: Graph, p: Path) -> None:
    graph.index(p.vertex)
    if p.edges:
        if graph.edge(p.edges[0]).rng != p.vertex:
            raise ActionError(f"path {p} does not end at {p.vertex!r}")
        for a, b in zip(p.edges, p.edges[1:]):
            if graph.edge(a).src != graph.edge(b).rng:
                raise ActionError(f"path {p} is not composable at ({a}, {b})")


def _concat(graph: Graph, p: Path, q: Path) -> Path:
    if _source(graph, p) != q.vertex:
        raise ActionError(f"cannot concatenate {p} and {q}")
    return Path(p.vertex, p.edges + q.edges)


def make_path(graph: Graph, spec) -> Path:
    """A path from a vertex name or a sequence of edge names (range-most first)."""
    if isinstance(spec, Path):
        _check_path(graph, spec)
        return spec
    if isinstance(spec, str) and spec in graph.vertices:
        return Path(spec)
    edges = tuple(spec)
    if not edges:
        raise ActionError("a length-zero path must be given by its vertex")
    try:
        p = Path(graph.edge(edges[0]).rng, edges)
    except GraphError as exc:
        raise ActionError(str(exc)) from None
    _check_path(graph, p)
    return p


# -- the action ------------------------------------------------------------------------

class SelfSimilarAction:
    def __init__(self, graph: Graph, group: FiniteGroup, vertex_action: dict, edge_action: dict, cocycle: dict):
        self.graph = graph
        self.group = group
        ident_v = {v: v for v in graph.vertices}
        ident_e = {e.name: e.name for e in graph.edges}
        self.vertex_action = {g: dict(vertex_action.get(g, ident_v)) for g in group.elements}
        self.edge_action = {g: dict(edge_action.get(g, ident_e)) for g in group.elements}
        self.cocycle = dict(cocycle)

    def act_vertex(self, g: str, v: str) -> str:
        return self.vertex_action[g][v]

    def act_edge(self, g: str, e: str) -> str:
        return self.edge_action[g][e]

    def phi(self, g: str, e: str) -> str:
        try:
            return self.cocycle[(g, e)]
        except KeyError:
            raise ActionError(f"cocycle undefined at ({g}, {e})") from None

    @property
    def identity(self) -> str:
        return self.group.identity

    @property
    def state_bound(self) -> int:
        return len(self.group) * len(self.graph.vertices)

    def to_json(self) -> dict:
        G = self.group
        return {
            "graph": self.graph.to_json(),
            "group": {
                "elements": list(G.elements),
                "mul": [[G.mul(g, h) for h in G.elements] for g in G.elements],
                "identity": G.identity,
            },
            "vertex_action": {g: dict(self.vertex_action[g]) for g in G.elements},
            "edge_action": {g: dict(self.edge_action[g]) for g in G.elements},
            "cocycle": {f"({g},{e})": h for (g, e), h in self.cocycle.items()},
        }


_PAIR = re.compile(r"\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)")


def _permutation(obj, domain: Sequence[str], what: str) -> dict:
    if isinstance(obj, dict):
        return {str(k): str(v) for k, v in obj.items()}
    if isinstance(obj, list):
        if len(obj) != len(domain):
            raise ActionError(f"{what} permutation list has length {len(obj)}, expected {len(domain)}")
        return {d: str(x) for d, x in zip(domain, obj)}
    raise ActionError(f"{what} permutation must be a mapping or a list")


def parse_action(document) -> SelfSimilarAction:
    """Build and validate an action from its JSON document.

    ``cocycle`` may also be the string ``"trivial"`` (phi is always the
    identity) or ``"group"`` (phi(g, e) = g).  Omitted permutations default to
    the identity.
    """
    if isinstance(document, str):
        document = json.loads(document)
    try:
        graph = parse_graph(document["graph"])
        gdoc = document["group"]
        group = FiniteGroup.from_table(gdoc["elements"], gdoc["mul"], str(gdoc["identity"]))
    except KeyError as exc:
        raise ActionError(f"action document is missing {exc}") from None
    vnames = list(graph.vertices)
    enames = [e.name for e in graph.edges]
    vact = {str(g): _permutation(p, vnames, f"vertex_action[{g}]") for g, p in document.get("vertex_action", {}).items()}
    eact = {str(g): _permutation(p, enames, f"edge_action[{g}]") for g, p in document.get("edge_action", {}).items()}
    raw = document.get("cocycle", {})
    if raw == "trivial":
        cocycle = {(g, e): group.identity for g in group.elements for e in enames}
    elif raw == "group":
        cocycle = {(g, e): g for g in group.elements for e in enames}
    elif isinstance(raw, dict):
        cocycle = {}
        for key, val in raw.items():
            m = _PAIR.fullmatch(key.strip())
            if m is None:
                raise ActionError(f"cocycle key {key!r} is not of the form '(g,e)'")
            cocycle[(m.group(1), m.group(2))] = str(val)
    else:
        raise ActionError("cocycle must be a mapping, 'trivial' or 'group'")
    action = SelfSimilarAction(graph, group, vact, eact, cocycle)
    validate_action(action)
    return action


def trivial_action(graph: Graph) -> SelfSimilarAction:
    """The trivial group acting trivially; L_K(G, E) is then L_K(E)."""
    G = FiniteGroup.trivial()
    cocycle = {(G.identity, e.name): G.identity for e in graph.edges}
    return SelfSimilarAction(graph, G, {}, {}, cocycle)


def validate_action(a: SelfSimilarAction) -> None:
    """Check every standing hypothesis; raise :class:`ActionError` on the first failure."""
    G, E = a.group, a.graph
    G.validate()
    if E.infinite_bundles:
        raise ActionError("graph must be row-finite (no infinite bundles)")
    for v in E.vertices:
        if not E.in_edges(v):
            raise ActionError(f"graph has a source: r^-1({v}) is empty")
    vset = set(E.vertices)
    eset = {e.name for e in E.edges}
    for g in G.elements:
        va, ea = a.vertex_action[g], a.edge_action[g]
        if set(va) != vset or set(va.values()) != vset:
            raise ActionError(f"vertex action of {g!r} is not a permutation of E^0")
        if set(ea) != eset or set(ea.values()) != eset:
            raise ActionError(f"edge action of {g!r} is not a permutation of E^1")
        for e in E.edges:
            img = E.edge(ea[e.name])
            if img.rng != va[e.rng]:
                raise ActionError(f"r(g.e) != g.r(e) for g={g}, e={e.name}")
            if img.src != va[e.src]:
                raise ActionError(f"s(g.e) != g.s(e) for g={g}, e={e.name}")
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            for v in E.vertices:
                if a.act_vertex(gh, v) != a.act_vertex(g, a.act_vertex(h, v)):
                    raise ActionError(f"action is not a homomorphism at ({g}, {h}, {v})")
            for e in eset:
                if a.act_edge(gh, e) != a.act_edge(g, a.act_edge(h, e)):
                    raise ActionError(f"action is not a homomorphism at ({g}, {h}, {e})")
    for g in G.elements:
        for e in E.edges:
            x = a.phi(g, e.name)
            if x not in G.elements:
                raise ActionError(f"cocycle value phi({g},{e.name}) = {x!r} is not a group element")
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            for e in sorted(eset):
                lhs = a.phi(gh, e)
                rhs = G.mul(a.phi(g, a.act_edge(h, e)), a.phi(h, e))
                if lhs != rhs:
                    raise ActionError(
                        f"cocycle law fails at (g,h,x)=({g},{h},{e}): phi(gh,x)={lhs} but phi(g,h.x)phi(h,x)={rhs}"
                    )
    for g in G.elements:
        for e in E.edges:
            x = a.phi(g, e.name)
            for v in E.vertices:
                if a.act_vertex(x, v) != a.act_vertex(g, v):
                    raise ActionError(f"phi({g},{e.name}).{v} != {g}.{v}")


# -- acting on paths ------------------------------------------------------------------------

def act_on_path(a: SelfSimilarAction, g: str, path) -> tuple[Path, str]:
    """``(g.path, phi(g, path))``, reading the path from its range end."""
    p = make_path(a.graph, path)
    if not p.edges:
        return Path(a.act_vertex(g, p.vertex)), g
    state = g
    out = []
    for e in p.edges:
        out.append(a.act_edge(state, e))
        state = a.phi(state, e)
    return Path(a.act_vertex(g, p.vertex), tuple(out)), state


def is_strongly_fixed(a: SelfSimilarAction, g: str, path) -> bool:
    p = make_path(a.graph, path)
    img, state = act_on_path(a, g, p)
    return img == p and state == a.identity


# -- the inverse semigroup S_{G,E} -------------------------------------------------------------

@dataclass(frozen=True)
class SGETriple:
    alpha: Path
    g: str
    beta: Path

    def __str__(self):
        return f"({self.alpha}, {self.g}, {self.beta})"


class _Zero:
    def __repr__(self):
        return "0"

    __str__ = __repr__


ZERO = _Zero()


def make_triple(a: SelfSimilarAction, alpha, g: str, beta) -> SGETriple:
    alpha = make_path(a.graph, alpha)
    beta = make_path(a.graph, beta)
    if g not in a.group.elements:
        raise ActionError(f"{g!r} is not a group element")
    if _source(a.graph, alpha) != a.act_vertex(g, _source(a.graph, beta)):
        raise ActionError(f"triple ({alpha}, {g}, {beta}) violates s(alpha) = g.s(beta)")
    return SGETriple(alpha, g, beta)


def _split_prefix(graph: Graph, prefix: Path, whole: Path) -> Path | None:
    """epsilon with whole = prefix epsilon, or None."""
    if prefix.vertex != whole.vertex or whole.edges[:len(prefix.edges)] != prefix.edges:
        return None
    return Path(_source(graph, prefix), whole.edges[len(prefix.edges):])


def sgE_multiply(a: SelfSimilarAction, x, y):
    if x is ZERO or y is ZERO:
        return ZERO
    G, E = a.group, a.graph
    for t in (x, y):
        make_triple(a, t.alpha, t.g, t.beta)
    alpha, g, beta = x.alpha, x.g, x.beta
    gamma, h, delta = y.alpha, y.g, y.beta
    eps = _split_prefix(E, beta, gamma)
    if eps is not None:
        moved, state = act_on_path(a, g, eps)
        return SGETriple(_concat(E, alpha, moved), G.mul(state, h), delta)
    eps = _split_prefix(E, gamma, beta)
    if eps is not None:
        hinv = G.inv(h)
        moved, state = act_on_path(a, hinv, eps)
        return SGETriple(alpha, G.mul(g, G.inv(state)), _concat(E, delta, moved))
    return ZERO


def sgE_star(a: SelfSimilarAction, x):
    if x is ZERO:
        return ZERO
    return SGETriple(x.beta, a.group.inv(x.g), x.alpha)


# -- restriction automaton --------------------------------------------------------------------

class RestrictionAutomaton:
    """States ``(h, w)``; fixed edges move to ``(phi(h, e), s(e))``."""

    def __init__(self, a: SelfSimilarAction):
        self.action = a
        self.identity = a.identity
        self._cache: dict = {}

    def step(self, state):
        """``(fixed, broken)``: fixed is a list of ``(edge, next_state)``."""
        if state in self._cache:
            return self._cache[state]
        a = self.action
        h, w = state
        fixed, broken = [], []
        for e in a.graph.in_edges(w):
            if a.act_edge(h, e.name) == e.name:
                fixed.append((e.name, (a.phi(h, e.name), e.src)))
            else:
                broken.append(e.name)
        self._cache[state] = (fixed, broken)
        return fixed, broken

    def is_identity_state(self, state) -> bool:
        return state[0] == self.identity

    def reachable(self, start, through_identity: bool = False) -> dict:
        """BFS parents over fixed transitions; identity states are not expanded unless asked."""
        parent = {start: None}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            if self.is_identity_state(s) and not through_identity:
                continue
            for e, t in self.step(s)[0]:
                if t not in parent:
                    parent[t] = (s, e)
                    queue.append(t)
        return parent


def _trace_back(parent, state) -> list[str]:
    edges = []
    while parent[state] is not None:
        state, e = parent[state]
        edges.append(e)
    return edges[::-1]


def _find_cycle(states, succ):
    """A cycle ``[(state, edge), ...]`` in the graph ``succ`` restricted to ``states``, or None."""
    colour = {s: 0 for s in states}
    for root in states:
        if colour[root]:
            continue
        stack = [(root, iter(succ(root)))]
        on_path = [(root, None)]
        colour[root] = 1
        while stack:
            s, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[s] = 2
                stack.pop()
                on_path.pop()
                continue
            e, t = nxt
            if t not in colour:
                continue
            if colour[t] == 1:
                idx = next(i for i, (u, _) in enumerate(on_path) if u == t)
                loop_states = [u for u, _ in on_path[idx:]]
                loop_edges = [edge for _, edge in on_path[idx + 1:]] + [e]
                return t, loop_states, loop_edges
            if colour[t] == 0:
                colour[t] = 1
                on_path.append((t, e))
                stack.append((t, iter(succ(t))))
    return None


@dataclass(frozen=True)
class MinimalStronglyFixed:
    """Minimal strongly fixed paths for ``g`` with range ``v``.

    When ``infinite`` is set, the family ``stem + loop^k + exit`` (k >= 0)
    consists of pairwise distinct minimal strongly fixed paths.
    """

    g: str
    v: str
    paths: tuple[Path, ...] = ()
    infinite: bool = False
    stem: tuple[str, ...] = ()
    loop: tuple[str, ...] = ()
    exit: tuple[str, ...] = ()

    def family(self, k: int) -> Path:
        if not self.infinite:
            raise ValueError("finite result has no pumping family")
        return Path(self.v, self.stem + self.loop * k + self.exit)

    def to_json(self) -> dict:
        if self.infinite:
            return {"g": self.g, "v": self.v, "infinite": True,
                    "family": {"stem": list(self.stem), "loop": list(self.loop), "exit": list(self.exit)}}
        return {"g": self.g, "v": self.v, "infinite": False, "paths": [p.to_json() for p in self.paths]}


def minimal_strongly_fixed(a: SelfSimilarAction, g: str, v: str, depth_bound: int | None = None) -> MinimalStronglyFixed:
    a.graph.index(v)
    if g == a.identity:
        return MinimalStronglyFixed(g, v, (Path(v),))
    bound = depth_bound if depth_bound is not None else a.state_bound + 1
    auto = RestrictionAutomaton(a)
    start = (g, v)
    parent = auto.reachable(start)
    inner = [s for s in parent if not auto.is_identity_state(s)]
    # productive: an identity state is reachable through non-identity states
    productive = set()
    changed = True
    while changed:
        changed = False
        for s in inner:
            if s in productive:
                continue
            if any(auto.is_identity_state(t) or t in productive for _, t in auto.step(s)[0]):
                productive.add(s)
                changed = True

    def succ(s):
        return [(e, t) for e, t in auto.step(s)[0] if t in productive]

    found = _find_cycle([s for s in inner if s in productive], succ)
    if found is not None:
        entry, _, loop_edges = found
        stem = _trace_back(parent, entry)
        # shortest route from the loop to an identity state
        back = {entry: None}
        queue = deque([entry])
        exit_edges = None
        while queue and exit_edges is None:
            s = queue.popleft()
            for e, t in auto.step(s)[0]:
                if auto.is_identity_state(t):
                    exit_edges = _trace_back(back, s) + [e]
                    break
                if t in productive and t not in back:
                    back[t] = (s, e)
                    queue.append(t)
        return MinimalStronglyFixed(g, v, (), True, tuple(stem), tuple(loop_edges), tuple(exit_edges))
    paths = []

    def walk(s, prefix):
        if len(prefix) >= bound:
            raise RuntimeError(f"depth bound {bound} exceeded")
        for e, t in auto.step(s)[0]:
            if auto.is_identity_state(t):
                paths.append(Path(v, prefix + (e,)))
            elif t in productive:
                walk(t, prefix + (e,))

    if start in productive:
        walk(start, ())
    return MinimalStronglyFixed(g, v, tuple(paths))


def is_hausdorff(a: SelfSimilarAction, depth_bound: int | None = None):
    """``(True, None)`` or ``(False, MinimalStronglyFixed)`` for the first infinite (g, v)."""
    for g in a.group.elements:
        for v in a.graph.vertices:
            res = minimal_strongly_fixed(a, g, v, depth_bound)
            if res.infinite:
                return False, res
    return True, None


# -- simplicity conditions ------------------------------------------------------------------------

def circuits_with_no_entry(a: SelfSimilarAction, length_bound: int | None = None) -> list[tuple[str, Path]]:
    """Entry-free G-circuits ``(g, gamma)``, the shortest one per (g, first edge).

    An entry-free circuit only passes through vertices with a single incoming
    edge, so the edges after the first are forced.
    """
    E = a.graph
    bound = length_bound if length_bound is not None else len(E.edges) + 1
    found = []
    for g in a.group.elements:
        for first in E.edges:
            target = a.act_edge(g, first.name)
            edges = [first.name]
            while len(edges) <= bound:
                ins = E.in_edges(E.edge(edges[-1]).src)
                if len(ins) != 1:
                    break
                if ins[0].name == target:
                    found.append((g, Path(first.rng, tuple(edges))))
                    break
                edges.append(ins[0].name)
    return found


def _cycle_in_component(E: Graph, comp: set[str]) -> tuple[str, ...]:
    """An edge cycle ``e1..en`` (range-first order) inside a strongly connected set."""
    start = min(comp, key=E.index)
    # walk backwards along incoming edges that stay inside the component
    seen = {}
    walk = []
    v = start
    while v not in seen:
        seen[v] = len(walk)
        e = next(e for e in E.in_edges(v) if e.src in comp)
        walk.append(e)
        v = e.src
    return tuple(e.name for e in walk[seen[v]:])


def weakly_g_transitive(a: SelfSimilarAction):
    """Every infinite path passes a vertex with a path to every G-orbit.

    An infinite path in a finite graph eventually stays in one strongly
    connected component and visits all vertices of some cycle there, and
    vertices in one component reach the same vertices.  So it suffices to
    check, per component containing a cycle, that some vertex of it has a
    path (source to range) into each orbit G.v.
    """
    E = a.graph
    dg = nx.DiGraph()
    dg.add_nodes_from(E.vertices)
    dg.add_edges_from((e.src, e.rng) for e in E.edges)
    for comp in nx.strongly_connected_components(dg):
        rep = next(iter(comp))
        if len(comp) == 1 and not dg.has_edge(rep, rep):
            continue
        reach = nx.descendants(dg, rep) | {rep}
        for v in E.vertices:
            orbit = {a.act_vertex(g, v) for g in a.group.elements}
            if not (reach & orbit):
                return False, (_cycle_in_component(E, comp), v)
    return True, None


def fixes_cylinder_pointwise(a: SelfSimilarAction, g: str, v: str) -> bool:
    """Does g fix every infinite path with range v?"""
    auto = RestrictionAutomaton(a)
    for s in auto.reachable((g, v)):
        if not auto.is_identity_state(s) and auto.step(s)[1]:
            return False
    return True


def is_slack(a: SelfSimilarAction, g: str, v: str):
    """``(True, n)`` with the least such n, or ``(False, None)``."""
    a.graph.index(v)
    if g == a.identity:
        return True, 0
    auto = RestrictionAutomaton(a)
    inner = [s for s in auto.reachable((g, v)) if not auto.is_identity_state(s)]
    if any(auto.step(s)[1] for s in inner):
        return False, None

    def succ(s):
        return [(e, t) for e, t in auto.step(s)[0] if not auto.is_identity_state(t)]

    if _find_cycle(inner, succ) is not None:
        return False, None
    longest: dict = {}

    def depth(s):
        if s not in longest:
            longest[s] = max((1 + depth(t) for _, t in succ(s)), default=0)
        return longest[s]

    return True, depth((g, v)) + 1


# -- verdicts ----------------------------------------------------------------------------------------

@dataclass(frozen=True)
class EPReport:
    hausdorff: bool
    simple: Verdict
    unital: bool
    center: Verdict
    lie: Verdict
    conditions: dict

    def to_json(self, field_spec: FieldSpec | None = None) -> dict:
        return {
            "hausdorff": self.hausdorff,
            "simple": self.simple.to_json(field_spec),
            "unital": self.unital,
            "center": self.center.to_json(field_spec),
            "lie": self.lie.to_json(field_spec),
            "conditions": self.conditions,
        }


def ep_verdict(a: SelfSimilarAction, f: FieldSpec, depth_bound: int | None = None) -> EPReport:
    haus, bad = is_hausdorff(a, depth_bound)
    if not haus:
        raise NonHausdorffError(
            f"groupoid is not Hausdorff: infinitely many minimal strongly fixed paths for ({bad.g}, {bad.v})",
            witness=bad,
        )
    trans, trans_witness = weakly_g_transitive(a)
    circuits = circuits_with_no_entry(a)
    slack_failures = []
    for v in a.graph.vertices:
        for g in a.group.elements:
            if fixes_cylinder_pointwise(a, g, v) and not is_slack(a, g, v)[0]:
                slack_failures.append((g, v))
    conditions = {
        "weakly_transitive": trans,
        "weakly_transitive_witness": None if trans else
        {"cycle": list(trans_witness[0]), "vertex": trans_witness[1]},
        "entry_free_circuits": [{"g": g, "circuit": p.to_json()} for g, p in circuits],
        "non_slack_pointwise_fixers": [{"g": g, "v": v} for g, v in slack_failures],
    }
    base = (HAUSDORFF_THEOREM, SIMPLICITY_THEOREM)
    reasons = []
    if not trans:
        reasons.append("E is not weakly G-transitive")
    if circuits:
        reasons.append("a G-circuit has no entry")
    if slack_failures:
        reasons.append("some g fixes Z(v) pointwise without being slack at v")
    if reasons:
        simple = Verdict(Kind.NOT_SIMPLE, reason="; ".join(reasons), theorems=base)
        blocked = Verdict(Kind.INAPPLICABLE, reason="L_K(G, E) is not simple", theorems=base)
        return EPReport(True, simple, True, blocked, blocked, conditions)
    simple = Verdict(Kind.SIMPLE, theorems=base)
    center = Verdict(Kind.SCALARS, reason="center is K*1 with 1 = sum_v P_(v, 1)",
                     theorems=base + (UNITAL_LEMMA, CENTER_THEOREM))
    if len(a.group) == 1:
        # with G trivial, L_K(G, E) is the Leavitt path algebra L_K(E)
        lie = lpa_lie_simple(a.graph, f)
    else:
        lie = Verdict(
            Kind.UNDECIDED,
            reason="Simple iff identity not in commutator subspace; membership undecided "
                   "(no finite criterion is available for nontrivial G)",
            theorems=base + (UNITAL_LEMMA, LIE_THEOREM),
        )
    return EPReport(True, simple, True, center, lie, conditions)
