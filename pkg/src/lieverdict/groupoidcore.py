"""Finite groupoids with an explicit composition table.

A finite groupoid is given the discrete topology: it is the only Hausdorff
topology on a finite set.  Consequently every subset is compact open, every
subset on which source and range are injective is a compact open
bisection, and "interior" is the identity operation.  This is what makes
effectiveness, minimality and Steinberg algebras decidable here.

Units are identified with their identity arrows (an identity arrow carries
the unit's name).  Composition ``a*b`` is defined exactly when
``src(a) == rng(b)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "Arrow",
    "FiniteGroupoid",
    "GroupoidError",
    "BisectionError",
    "parse_groupoid",
    "validate_groupoid",
    "pair_groupoid",
    "group_groupoid",
    "cyclic_group_groupoid",
    "transformation_groupoid",
    "disjoint_union",
    "rename_arrows",
    "is_effective",
    "is_minimal",
    "orbits",
    "is_invariant",
    "is_bisection",
    "bisection_product",
    "bisection_inverse",
]


class GroupoidError(ValueError):
    pass


class BisectionError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    rng: str


class FiniteGroupoid:
    """Units, arrows, and the composition and inverse tables.

    Construction does not check the axioms; call :func:`validate_groupoid`.
    """

    def __init__(self, units: Sequence[str], arrows: Sequence[Arrow], compose: dict, inverse: dict):
        self.units = tuple(units)
        unit_set = set(self.units)
        if len(unit_set) != len(self.units):
            raise GroupoidError("duplicate unit name")
        arrows = list(arrows)
        names = {a.name for a in arrows}
        if len(names) != len(arrows):
            raise GroupoidError("duplicate arrow name")
        for a in arrows:
            if a.src not in unit_set or a.rng not in unit_set:
                raise GroupoidError(f"arrow {a.name!r} has an endpoint that is not a unit")
        compose = dict(compose)
        inverse = dict(inverse)
        # identity arrows are inferred when omitted
        for u in self.units:
            if u not in names:
                arrows.insert(self.units.index(u), Arrow(u, u, u))
                names.add(u)
            ident = next(a for a in arrows if a.name == u)
            if ident.src != u or ident.rng != u:
                raise GroupoidError(f"arrow named after unit {u!r} must be a loop at {u!r}")
        by_name = {a.name: a for a in arrows}
        for a in arrows:
            compose.setdefault((a.rng, a.name), a.name)
            compose.setdefault((a.name, a.src), a.name)
        for u in self.units:
            inverse.setdefault(u, u)
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        self._by_name = by_name
        self._index = {a.name: i for i, a in enumerate(self.arrows)}
        self.compose_table: dict[tuple[str, str], str] = compose
        self.inverse_table: dict[str, str] = inverse

    # -- basic structure ------------------------------------------------------

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise GroupoidError(f"unknown arrow {name!r}") from None

    def index(self, name: str) -> int:
        return self._index[name]

    def src(self, name: str) -> str:
        return self.arrow(name).src

    def rng(self, name: str) -> str:
        return self.arrow(name).rng

    def identity(self, unit: str) -> str:
        return unit

    def is_unit(self, name: str) -> bool:
        return name in self.units

    def composable(self, a: str, b: str) -> bool:
        return self.src(a) == self.rng(b)

    def compose(self, a: str, b: str) -> str | None:
        """``a*b`` (first b, then a), or None when not composable."""
        if not self.composable(a, b):
            return None
        return self.compose_table[(a, b)]

    def inverse(self, a: str) -> str:
        return self.inverse_table[a]

    def isotropy(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows if a.src == a.rng)

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        return f"FiniteGroupoid(units={len(self.units)}, arrows={len(self.arrows)})"

    def to_json(self) -> dict:
        return {
            "units": list(self.units),
            "arrows": [{"name": a.name, "src": a.src, "rng": a.rng} for a in self.arrows],
            "compose": [[a, b, c] for (a, b), c in sorted(self.compose_table.items(), key=lambda kv: (self.index(kv[0][0]), self.index(kv[0][1])))],
            "inverse": [[a, self.inverse_table[a]] for a in self.arrow_names],
        }


def parse_groupoid(document) -> FiniteGroupoid:
    if isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, dict):
        raise GroupoidError("groupoid document must be a JSON object")
    try:
        units = [str(u) for u in document["units"]]
        arrows = [Arrow(str(a["name"]), str(a["src"]), str(a["rng"])) for a in document.get("arrows", [])]
    except (KeyError, TypeError) as exc:
        raise GroupoidError(f"malformed groupoid document: missing {exc}") from None
    compose = {}
    for k, entry in enumerate(document.get("compose", [])):
        if len(entry) != 3:
            raise GroupoidError(f"compose[{k}] must be [a, b, a*b]")
        a, b, c = (str(x) for x in entry)
        compose[(a, b)] = c
    inverse = {}
    for k, entry in enumerate(document.get("inverse", [])):
        if len(entry) != 2:
            raise GroupoidError(f"inverse[{k}] must be [a, a^-1]")
        inverse[str(entry[0])] = str(entry[1])
    g = FiniteGroupoid(units, arrows, compose, inverse)
    validate_groupoid(g)
    return g


def validate_groupoid(g: FiniteGroupoid) -> None:
    """Raise :class:`GroupoidError` naming the first violated axiom."""
    names = g.arrow_names
    name_set = set(names)
    for (a, b), c in g.compose_table.items():
        for x in (a, b, c):
            if x not in name_set:
                raise GroupoidError(f"composition ({a}, {b}) -> {c} mentions unknown arrow {x!r}")
        if g.src(a) != g.rng(b):
            raise GroupoidError(f"composite declared for ({a}, {b}) but s({a}) != r({b})")
        if g.src(c) != g.src(b) or g.rng(c) != g.rng(a):
            raise GroupoidError(f"composite {a}*{b} = {c} has wrong source or range")
    for a in names:
        for b in names:
            if g.src(a) == g.rng(b) and (a, b) not in g.compose_table:
                raise GroupoidError(f"composable pair ({a}, {b}) has no composite")
    for u in g.units:
        if g.inverse_table.get(u) != u:
            raise GroupoidError(f"identity arrow {u!r} is not its own inverse")
    for a in names:
        if a not in g.inverse_table:
            raise GroupoidError(f"arrow {a!r} has no inverse")
        ai = g.inverse_table[a]
        if ai not in name_set:
            raise GroupoidError(f"inverse of {a!r} is unknown arrow {ai!r}")
        if g.src(ai) != g.rng(a) or g.rng(ai) != g.src(a):
            raise GroupoidError(f"inverse {ai!r} of {a!r} has wrong endpoints")
        if g.compose_table[(a, ai)] != g.rng(a):
            raise GroupoidError(f"{a}*{ai} is not the identity at r({a})")
        if g.compose_table[(ai, a)] != g.src(a):
            raise GroupoidError(f"{ai}*{a} is not the identity at s({a})")
        if g.compose_table[(g.rng(a), a)] != a or g.compose_table[(a, g.src(a))] != a:
            raise GroupoidError(f"identity law fails at arrow {a!r}")
    by_src: dict[str, list[str]] = {u: [] for u in g.units}
    for a in names:
        by_src[g.src(a)].append(a)
    # (a*b)*c == a*(b*c) whenever s(a)=r(b), s(b)=r(c)
    for c in names:
        for b in by_src[g.rng(c)]:
            bc = g.compose_table[(b, c)]
            for a in by_src[g.rng(b)]:
                ab = g.compose_table[(a, b)]
                if g.compose_table[(ab, c)] != g.compose_table[(a, bc)]:
                    raise GroupoidError(f"associativity fails on ({a}, {b}, {c})")


# -- constructions ------------------------------------------------------------

def pair_groupoid(n: int) -> FiniteGroupoid:
    """P_n: units u1..un and one arrow g_ij from u_j to u_i for each pair."""
    units = [f"u{i}" for i in range(1, n + 1)]

    def name(i, j):
        return units[i - 1] if i == j else f"g{i}{j}" if n < 10 else f"g{i}_{j}"

    arrows = [Arrow(name(i, j), units[j - 1], units[i - 1]) for i in range(1, n + 1) for j in range(1, n + 1)]
    compose = {}
    for i, j, k in product(range(1, n + 1), repeat=3):
        compose[(name(i, j), name(j, k))] = name(i, k)
    inverse = {name(i, j): name(j, i) for i in range(1, n + 1) for j in range(1, n + 1)}
    return FiniteGroupoid(units, arrows, compose, inverse)


def group_groupoid(elements: Sequence[str], mul: Sequence[Sequence[str]], identity: str, unit: str = "*") -> FiniteGroupoid:
    """A finite group as a one-unit groupoid; ``identity`` becomes the unit."""
    elements = list(elements)
    rename = {x: (unit if x == identity else x) for x in elements}
    arrows = [Arrow(rename[x], unit, unit) for x in elements]
    compose = {}
    inverse = {}
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            z = mul[i][j]
            compose[(rename[x], rename[y])] = rename[z]
            if z == identity:
                inverse[rename[x]] = rename[y]
    return FiniteGroupoid([unit], arrows, compose, inverse)


def cyclic_group_groupoid(n: int, unit: str = "*") -> FiniteGroupoid:
    """Z/n as a one-unit groupoid with arrows '*', 'c1', ..., 'c{n-1}'."""
    elements = ["c0"] + [f"c{k}" for k in range(1, n)]
    mul = [[f"c{(i + j) % n}" for j in range(n)] for i in range(n)]
    return group_groupoid(elements, mul, "c0", unit)


def transformation_groupoid(elements: Sequence[str], mul: Sequence[Sequence[str]], identity: str,
                            points: Sequence[str], act: dict) -> FiniteGroupoid:
    """G x X with arrow (g, x): x -> g.x; ``act[g][x]`` is g.x."""
    elements = list(elements)
    idx = {g: i for i, g in enumerate(elements)}

    def name(g, x):
        return x if g == identity else f"{g}.{x}"

    arrows = [Arrow(name(g, x), x, act[g][x]) for x in points for g in elements]
    compose = {}
    inverse = {}
    for g in elements:
        for x in points:
            for h in elements:
                # (h, g.x) * (g, x) = (hg, x)
                compose[(name(h, act[g][x]), name(g, x))] = name(mul[idx[h]][idx[g]], x)
                if mul[idx[h]][idx[g]] == identity:
                    inverse[name(g, x)] = name(h, act[g][x])
    return FiniteGroupoid(points, arrows, compose, inverse)


def disjoint_union(*parts: FiniteGroupoid, tags: Sequence[str] | None = None) -> FiniteGroupoid:
    tags = list(tags) if tags else [str(i + 1) for i in range(len(parts))]

    def t(tag, x):
        return f"{x}_{tag}"

    units, arrows, compose, inverse = [], [], {}, {}
    for tag, g in zip(tags, parts):
        units += [t(tag, u) for u in g.units]
        arrows += [Arrow(t(tag, a.name), t(tag, a.src), t(tag, a.rng)) for a in g.arrows]
        compose.update({(t(tag, a), t(tag, b)): t(tag, c) for (a, b), c in g.compose_table.items()})
        inverse.update({t(tag, a): t(tag, b) for a, b in g.inverse_table.items()})
    return FiniteGroupoid(units, arrows, compose, inverse)


def rename_arrows(g: FiniteGroupoid, mapping: dict) -> FiniteGroupoid:
    """Relabel units and arrows; ``mapping`` must be injective on all names."""
    m = lambda x: mapping.get(x, x)  # noqa: E731
    return FiniteGroupoid(
        [m(u) for u in g.units],
        [Arrow(m(a.name), m(a.src), m(a.rng)) for a in g.arrows],
        {(m(a), m(b)): m(c) for (a, b), c in g.compose_table.items()},
        {m(a): m(b) for a, b in g.inverse_table.items()},
    )


# -- properties -------------------------------------------------------------

def is_effective(g: FiniteGroupoid) -> tuple[bool, str | None]:
    """Discrete case: no non-identity arrow has equal source and range."""
    for a in g.arrows:
        if a.src == a.rng and not g.is_unit(a.name):
            return False, a.name
    return True, None


def orbits(g: FiniteGroupoid) -> list[frozenset[str]]:
    parent = {u: u for u in g.units}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for a in g.arrows:
        ra, rb = find(a.src), find(a.rng)
        if ra != rb:
            parent[ra] = rb
    classes: dict[str, list[str]] = {}
    for u in g.units:
        classes.setdefault(find(u), []).append(u)
    return [frozenset(c) for c in classes.values()]


def is_invariant(g: FiniteGroupoid, subset: Iterable[str]) -> bool:
    """s(a) in D implies r(a) in D, for every arrow a."""
    d = set(subset)
    return all(a.rng in d for a in g.arrows if a.src in d)


def is_minimal(g: FiniteGroupoid) -> tuple[bool, frozenset[str] | None]:
    """Discrete case: a single orbit.  The witness is the orbit of the first unit."""
    obs = orbits(g)
    if len(obs) == 1:
        return True, None
    first = next(o for o in obs if g.units[0] in o)
    return False, first


# -- bisections ---------------------------------------------------------------

def is_bisection(g: FiniteGroupoid, u: Iterable[str]) -> bool:
    u = list(u)
    srcs = [g.src(a) for a in u]
    rngs = [g.rng(a) for a in u]
    return len(set(srcs)) == len(srcs) and len(set(rngs)) == len(rngs)


def _require_bisection(g, u):
    u = frozenset(u)
    if not is_bisection(g, u):
        raise BisectionError(f"{sorted(u)} is not a bisection")
    return u


def bisection_product(g: FiniteGroupoid, u: Iterable[str], v: Iterable[str]) -> frozenset[str]:
    """UV = {ab : a in U, b in V, r(b) = s(a)}."""
    u = _require_bisection(g, u)
    v = _require_bisection(g, v)
    return frozenset(g.compose(a, b) for a in u for b in v if g.composable(a, b))


def bisection_inverse(g: FiniteGroupoid, u: Iterable[str]) -> frozenset[str]:
    u = _require_bisection(g, u)
    return frozenset(g.inverse(a) for a in u)
