"""Generators for the almost-planar graph families.

Families covered:

* Möbius ladders ``V_{2k}`` (cubic, 2k vertices, 3k edges).
* Bicycle wheels ``B_n`` (rim cycle on n-2 vertices plus two adjacent
  hubs joined to every rim vertex) and their spoke-deleted minors,
  including the alternating family ``A_n``.
* Wheels ``W_{n-1}`` (hub plus rim), used by the fan machinery.
* ``K_{3,3}`` plus chords inside one color class, and the two fan
  families ``H1(p, q, r)`` / ``H2(p, q, r)`` grown from it by the
  type-1 fan attachment.

Each generator returns a :class:`LabeledInstance`: the graph plus role
labels tying vertices and edges to the family's standard names, which
the constructive cycle builders rely on.

Label conventions fixed here (and relied on everywhere else):

* Bicycle: rim vertices 1..n-2, rim edge ``r_i`` joins i and i+1
  (indices wrap, ``r_{n-2}`` joins n-2 and 1), s-hub is vertex n,
  t-hub is vertex n-1, spoke ``s_i``/``t_i`` joins the hub to rim
  vertex i, and ``z`` joins the hubs.  With the alternating family
  keeping odd-indexed s-spokes and even-indexed t-spokes, this hub
  assignment is the one that makes ``A_n`` (even n) bipartite with
  classes {1, 3, ..., n-1} and {2, 4, ..., n}.
* Möbius: vertices 1..k down the left rail, k+1..2k down the right;
  rail edges i..i+1 for i <= k-2 on each side, rungs {i, k+i} for
  i <= k, and four closure edges {1, k}, {k+1, 2k}, {k-1, 2k},
  {k, 2k-1}.  This is the labeling under which the standard explicit
  cycle listings for V_2k (even-length ladders, the Hamiltonian cycle,
  and the odd-length crossing cycles for even k) hold verbatim, and
  V_6 comes out exactly K_{3,3}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional, Sequence, Union

from .graph import Edge, Graph, edge, is_k_connected
from .planarity import is_planar

# -- family specs -------------------------------------------------------------

CHORD_NAMES = ("ab", "bc", "ac")


@dataclass(frozen=True)
class Mobius:
    k: int


@dataclass(frozen=True)
class Bicycle:
    n: int
    removed_s: frozenset[int] = frozenset()
    removed_t: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Wheel:
    n: int


@dataclass(frozen=True)
class K33Chain:
    extra_edges: frozenset[str] = frozenset()


@dataclass(frozen=True)
class H1:
    p: int
    q: int
    r: int
    deleted: frozenset[str] = frozenset()


@dataclass(frozen=True)
class H2:
    p: int
    q: int
    r: int
    deleted: frozenset[str] = frozenset()


FamilySpec = Union[Mobius, Bicycle, Wheel, K33Chain, H1, H2]


def spec_to_json(spec: FamilySpec) -> dict:
    if isinstance(spec, Mobius):
        return {"family": "mobius", "k": spec.k}
    if isinstance(spec, Bicycle):
        return {
            "family": "bicycle",
            "n": spec.n,
            "removed_s": sorted(spec.removed_s),
            "removed_t": sorted(spec.removed_t),
        }
    if isinstance(spec, Wheel):
        return {"family": "wheel", "n": spec.n}
    if isinstance(spec, K33Chain):
        return {"family": "k33chain", "extra_edges": sorted(spec.extra_edges)}
    if isinstance(spec, (H1, H2)):
        return {
            "family": "h1" if isinstance(spec, H1) else "h2",
            "p": spec.p,
            "q": spec.q,
            "r": spec.r,
            "deleted": sorted(spec.deleted),
        }
    raise TypeError(f"not a family spec: {spec!r}")


def spec_from_json(data: dict) -> FamilySpec:
    fam = data.get("family")
    if fam == "mobius":
        return Mobius(k=int(data["k"]))
    if fam == "bicycle":
        return Bicycle(
            n=int(data["n"]),
            removed_s=frozenset(int(i) for i in data.get("removed_s", ())),
            removed_t=frozenset(int(i) for i in data.get("removed_t", ())),
        )
    if fam == "wheel":
        return Wheel(n=int(data["n"]))
    if fam == "k33chain":
        return K33Chain(frozenset(data.get("extra_edges", ())))
    if fam in ("h1", "h2"):
        cls = H1 if fam == "h1" else H2
        return cls(
            p=int(data["p"]),
            q=int(data["q"]),
            r=int(data["r"]),
            deleted=frozenset(data.get("deleted", ())),
        )
    raise ValueError(f"unknown family {fam!r}")


# -- labeled instances ---------------------------------------------------------


@dataclass(frozen=True)
class LabeledInstance:
    """A graph together with role labels for vertices and edges."""

    graph: Graph
    family: Optional[FamilySpec]
    vertex_roles: dict[int, str] = field(default_factory=dict)
    edge_roles: dict[Edge, str] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def vertex(self, role: str) -> int:
        """Look up the vertex carrying a role (roles are unique)."""
        for v, r in self.vertex_roles.items():
            if r == role:
                return v
        raise KeyError(f"no vertex with role {role!r}")

    @property
    def role_to_vertex(self) -> dict[str, int]:
        return {r: v for v, r in self.vertex_roles.items()}

    def roles_to_json(self) -> dict:
        return {
            "schema": 1,
            "family": None if self.family is None else spec_to_json(self.family),
            "vertex_roles": {str(v): r for v, r in sorted(self.vertex_roles.items())},
            "edge_roles": [
                {"u": e[0], "v": e[1], "role": r}
                for e, r in sorted(self.edge_roles.items())
            ],
            "warnings": list(self.warnings),
        }

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in self.graph.vertices():
            role = self.vertex_roles.get(v)
            attr = f' [role="{role}"]' if role else ""
            lines.append(f"  {v}{attr};")
        for e in self.graph.sorted_edges():
            role = self.edge_roles.get(e)
            attr = f' [role="{role}"]' if role else ""
            lines.append(f"  {e[0]} -- {e[1]}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph) -> str:
    return LabeledInstance(g, None).to_dot()


# -- Möbius ladders ------------------------------------------------------------


def gen_mobius(k: int) -> LabeledInstance:
    """Möbius ladder V_2k, labeled 1..k left and k+1..2k right."""
    if k < 3:
        raise ValueError("Möbius ladder needs k >= 3")
    n = 2 * k
    vroles = {i: f"ladder-left-{i}" for i in range(1, k + 1)}
    vroles.update({k + i: f"ladder-right-{i}" for i in range(1, k + 1)})
    eroles: dict[Edge, str] = {}
    for i in range(1, k - 1):
        eroles[edge(i, i + 1)] = "ladder-side"
        eroles[edge(k + i, k + i + 1)] = "ladder-side"
    for i in range(1, k + 1):
        eroles[edge(i, k + i)] = "ladder-rung"
    for u, v in ((1, k), (k + 1, 2 * k), (k - 1, 2 * k), (k, 2 * k - 1)):
        eroles[edge(u, v)] = "ladder-twist"
    return LabeledInstance(
        Graph(n, frozenset(eroles)), Mobius(k), vroles, eroles
    )


# -- bicycle wheels ------------------------------------------------------------


def rim_index(n: int, i: int) -> int:
    """Map any integer onto the rim 1..n-2 (modular indexing)."""
    r = n - 2
    return (i - 1) % r + 1


def gen_bicycle(
    n: int,
    removed_s: Sequence[int] | frozenset[int] = (),
    removed_t: Sequence[int] | frozenset[int] = (),
    require_3_connected: bool = True,
) -> LabeledInstance:
    """Bicycle wheel B_n with optional spoke removals.

    Removing both spokes at one rim vertex leaves it with degree 2; with
    ``require_3_connected`` that is an error, otherwise the raw graph is
    produced with a warning flag.
    """
    if n < 5:
        raise ValueError("bicycle wheel needs n >= 5")
    rs = frozenset(removed_s)
    rt = frozenset(removed_t)
    r = n - 2
    for i in rs | rt:
        if not 1 <= i <= r:
            raise ValueError(f"spoke index {i} out of range 1..{r}")
    warnings: tuple[str, ...] = ()
    doubly = sorted(rs & rt)
    if doubly:
        if require_3_connected:
            raise ValueError(
                f"violates 3-connectivity precondition: rim vertices {doubly} "
                "lose both spokes"
            )
        warnings = (f"rim vertices {doubly} have degree 2",)

    hub_s, hub_t = n, n - 1
    vroles = {i: f"rim-{i}" for i in range(1, r + 1)}
    vroles[hub_s] = "hub-s"
    vroles[hub_t] = "hub-t"
    eroles: dict[Edge, str] = {}
    for i in range(1, r + 1):
        eroles[edge(i, rim_index(n, i + 1))] = f"r{i}"
    for i in range(1, r + 1):
        if i not in rs:
            eroles[edge(hub_s, i)] = f"s{i}"
        if i not in rt:
            eroles[edge(hub_t, i)] = f"t{i}"
    eroles[edge(hub_s, hub_t)] = "z"
    return LabeledInstance(
        Graph(n, frozenset(eroles)), Bicycle(n, rs, rt), vroles, eroles, warnings
    )


def a_graph_spec(n: int) -> Bicycle:
    """Spec of A_n: keep odd-indexed s-spokes and even-indexed t-spokes."""
    if n < 5:
        raise ValueError("A_n needs n >= 5")
    r = n - 2
    return Bicycle(
        n,
        removed_s=frozenset(i for i in range(1, r + 1) if i % 2 == 0),
        removed_t=frozenset(i for i in range(1, r + 1) if i % 2 == 1),
    )


def gen_a_graph(n: int) -> LabeledInstance:
    """Irreducible alternating-spoke bicycle minor A_n."""
    spec = a_graph_spec(n)
    return gen_bicycle(n, spec.removed_s, spec.removed_t)


# -- wheels --------------------------------------------------------------------


def gen_wheel(n: int) -> LabeledInstance:
    """Wheel on n vertices: hub n joined to the rim cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    vroles = {i: f"rim-{i}" for i in range(1, n)}
    vroles[n] = "hub"
    eroles: dict[Edge, str] = {}
    for i in range(1, n):
        j = i + 1 if i < n - 1 else 1
        eroles[edge(i, j)] = f"r{i}"
        eroles[edge(i, n)] = f"spoke{i}"
    return LabeledInstance(Graph(n, frozenset(eroles)), Wheel(n), vroles, eroles)


# -- K33 chain and the fan families --------------------------------------------


def _chord_edge(inst: LabeledInstance, name: str) -> Edge:
    rv = inst.role_to_vertex
    return edge(rv[name[0]], rv[name[1]])


def gen_k33_chain(extra_edges: Sequence[str] | frozenset[str] = ()) -> LabeledInstance:
    """K_{3,3} on {a,b,c} x {x1,y1,z1} plus chords among a, b, c."""
    extras = frozenset(extra_edges)
    bad = extras - set(CHORD_NAMES)
    if bad:
        raise ValueError(f"unknown chord names: {sorted(bad)}")
    ids = {"a": 1, "b": 2, "c": 3, "x1": 4, "y1": 5, "z1": 6}
    vroles = {v: r for r, v in ids.items()}
    eroles: dict[Edge, str] = {}
    for left in ("a", "b", "c"):
        for right in ("x1", "y1", "z1"):
            eroles[edge(ids[left], ids[right])] = "base"
    for name in sorted(extras):
        eroles[edge(ids[name[0]], ids[name[1]])] = name
    return LabeledInstance(
        Graph(6, frozenset(eroles)), K33Chain(extras), vroles, eroles
    )


def attach_fan(
    inst: LabeledInstance,
    triangle: tuple[Edge, Edge, Edge],
    sides: tuple[Edge, Edge],
    length: int,
    new_vertex_roles: Optional[Sequence[str]] = None,
) -> LabeledInstance:
    """Attach a type-1 fan of the given length across a triangle.

    The two side edges must share a vertex (the fan hub).  The third
    triangle edge is replaced by a path of length-1 new vertices, each
    joined to the hub.  A fan of length 1 is the identity.
    """
    if length < 1:
        raise ValueError("fan length must be >= 1")
    tri = tuple(edge(*e) for e in triangle)
    e_side, f_side = (edge(*e) for e in sides)
    g = inst.graph
    for t in tri:
        if t not in g.edges:
            raise ValueError(f"triangle edge {t} not in graph")
    verts = set(tri[0]) | set(tri[1]) | set(tri[2])
    if len(verts) != 3:
        raise ValueError(f"edges {tri} do not form a triangle")
    if {e_side, f_side} - set(tri):
        raise ValueError("sides must be two of the triangle's edges")
    shared = set(e_side) & set(f_side)
    if len(shared) != 1:
        raise ValueError("side edges must share exactly one vertex")
    hub = shared.pop()
    u = next(w for w in e_side if w != hub)
    v = next(w for w in f_side if w != hub)
    g_edge = edge(u, v)
    if g_edge not in tri or g_edge in (e_side, f_side):
        raise ValueError("third triangle edge must join the non-hub corners")

    if length == 1:
        return inst

    count = length - 1
    if new_vertex_roles is not None and len(new_vertex_roles) != count:
        raise ValueError(f"need {count} new vertex roles")
    new_ids = list(range(g.n + 1, g.n + count + 1))
    vroles = dict(inst.vertex_roles)
    for idx, w in enumerate(new_ids):
        vroles[w] = (
            new_vertex_roles[idx] if new_vertex_roles else f"fan{hub}-{idx + 1}"
        )

    eroles = dict(inst.edge_roles)
    eroles.pop(g_edge, None)
    edges = set(g.edges)
    edges.discard(g_edge)
    chain = [v] + new_ids + [u]
    for a, b in zip(chain, chain[1:]):
        e2 = edge(a, b)
        edges.add(e2)
        eroles[e2] = "fan-path"
    for w in new_ids:
        e2 = edge(hub, w)
        edges.add(e2)
        eroles[e2] = "fan-spoke"
    return replace(
        inst,
        graph=Graph(g.n + count, frozenset(edges)),
        vertex_roles=vroles,
        edge_roles=eroles,
    )


def _gen_h(spec: Union[H1, H2]) -> LabeledInstance:
    if min(spec.p, spec.q, spec.r) < 1:
        raise ValueError("fan lengths p, q, r must be >= 1")
    bad = spec.deleted - set(CHORD_NAMES)
    if bad:
        raise ValueError(f"unknown deletable edges: {sorted(bad)}")
    inst = gen_k33_chain(CHORD_NAMES)
    rv = inst.role_to_vertex
    a, b, c = rv["a"], rv["b"], rv["c"]
    x1, y1, z1 = rv["x1"], rv["y1"], rv["z1"]

    inst = attach_fan(
        inst,
        (edge(a, b), edge(b, x1), edge(a, x1)),
        (edge(a, b), edge(b, x1)),
        spec.p,
        [f"x{i}" for i in range(2, spec.p + 1)],
    )
    inst = attach_fan(
        inst,
        (edge(b, c), edge(b, y1), edge(c, y1)),
        (edge(b, c), edge(b, y1)),
        spec.q,
        [f"y{i}" for i in range(2, spec.q + 1)],
    )
    third_side = edge(b, z1) if isinstance(spec, H1) else edge(a, z1)
    inst = attach_fan(
        inst,
        (edge(a, b), edge(b, z1), edge(a, z1)),
        (edge(a, b), third_side),
        spec.r,
        [f"z{i}" for i in range(2, spec.r + 1)],
    )

    g = inst.graph
    eroles = dict(inst.edge_roles)
    for name in sorted(spec.deleted):
        ch = _chord_edge(inst, name)
        if ch in g.edges:
            g = Graph(g.n, g.edges - {ch})
            eroles.pop(ch, None)
    return replace(inst, graph=g, family=spec, edge_roles=eroles)


def gen_h1(
    p: int, q: int, r: int, deleted: Sequence[str] | frozenset[str] = ()
) -> LabeledInstance:
    """H1(p, q, r): three fans on K33''', all hubbed at b."""
    return _gen_h(H1(p, q, r, frozenset(deleted)))


def gen_h2(
    p: int, q: int, r: int, deleted: Sequence[str] | frozenset[str] = ()
) -> LabeledInstance:
    """H2(p, q, r): like H1 but the third fan is hubbed at a."""
    return _gen_h(H2(p, q, r, frozenset(deleted)))


# -- dispatcher ----------------------------------------------------------------


def generate(spec: FamilySpec, require_3_connected: bool = True) -> LabeledInstance:
    """Build the labeled instance for any family spec."""
    if isinstance(spec, Mobius):
        return gen_mobius(spec.k)
    if isinstance(spec, Bicycle):
        return gen_bicycle(
            spec.n, spec.removed_s, spec.removed_t, require_3_connected
        )
    if isinstance(spec, Wheel):
        return gen_wheel(spec.n)
    if isinstance(spec, K33Chain):
        return gen_k33_chain(spec.extra_edges)
    if isinstance(spec, (H1, H2)):
        return _gen_h(spec)
    raise TypeError(f"not a family spec: {spec!r}")


# -- enumeration of bicycle minors ----------------------------------------------
#
# Spoke-removal patterns are encoded as strings over {B, S, T} indexed
# by rim vertex: B keeps both spokes, S keeps only the s-spoke, T only
# the t-spoke.  Patterns that leave a rim vertex with no spoke are
# never 3-connected and are not enumerated.

_B_MINOR_CAP = 12


def _pattern_orbit(state: str) -> set[str]:
    r = len(state)
    swap = str.maketrans("ST", "TS")
    orbit = set()
    for flip in (False, True):
        s = state[::-1] if flip else state
        for shift in range(r):
            rot = s[shift:] + s[:shift]
            orbit.add(rot)
            orbit.add(rot.translate(swap))
    return orbit


def _bicycle_from_pattern(n: int, state: str) -> Bicycle:
    return Bicycle(
        n,
        removed_s=frozenset(i + 1 for i, ch in enumerate(state) if ch == "T"),
        removed_t=frozenset(i + 1 for i, ch in enumerate(state) if ch == "S"),
    )


@lru_cache(maxsize=None)
def enumerate_b_minors(
    n: int,
    require_3connected: bool = True,
    require_nonplanar: bool = True,
    cap: int = _B_MINOR_CAP,
) -> tuple[Bicycle, ...]:
    """All spoke-deletion specs of B_n passing the requested filters.

    Filters are computed, not assumed.  Results are deduplicated up to
    rim rotation, rim reflection and hub swap, and returned in a stable
    order (fewest removals first).
    """
    if n < 5:
        raise ValueError("need n >= 5")
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")
    r = n - 2
    seen: set[str] = set()
    out: list[tuple[tuple[int, str], Bicycle]] = []
    for chars in itertools.product("BST", repeat=r):
        state = "".join(chars)
        if state in seen:
            continue
        seen |= _pattern_orbit(state)
        spec = _bicycle_from_pattern(n, state)
        g = gen_bicycle(n, spec.removed_s, spec.removed_t).graph
        if require_3connected and not is_k_connected(g, 3):
            continue
        if require_nonplanar and is_planar(g):
            continue
        removed = len(spec.removed_s) + len(spec.removed_t)
        out.append(((removed, state), spec))
    out.sort(key=lambda item: item[0])
    return tuple(spec for _, spec in out)
