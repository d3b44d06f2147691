"""Brute-force ground truth for cycle structure.

Everything here is exhaustive search, deliberately independent of the
constructive builders: per-length cycle search with distance pruning,
Hamiltonian cycle and Hamiltonian path search over all vertex pairs.
Instances are capped at desk scale (default 18 vertices, overridable
via the APK_ORACLE_CAP environment variable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import OracleCapError
from .graph import Graph

DEFAULT_CAP = 18


def oracle_cap(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("APK_ORACLE_CAP")
    return int(env) if env else DEFAULT_CAP


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    limit = oracle_cap(cap)
    if g.n > limit:
        raise OracleCapError(
            f"instance too large for oracle: n={g.n} > cap {limit}"
        )


def _distances(g: Graph) -> list[list[int]]:
    """All-pairs BFS distances; unreachable pairs get n+1."""
    inf = g.n + 1
    dist = [[inf] * (g.n + 1) for _ in range(g.n + 1)]
    for s in g.vertices():
        row = dist[s]
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if row[w] > d:
                        row[w] = d
                        nxt.append(w)
            frontier = nxt
    return dist


def _cycle_of_length(
    g: Graph, length: int, dist: list[list[int]]
) -> Optional[list[int]]:
    """Find one simple cycle of exactly the given length, if any.

    Canonical search: the cycle is rooted at its smallest vertex, so
    each cycle is explored once up to rotation and direction.
    """
    adj = {v: sorted(g.adj[v]) for v in g.vertices()}
    on_path = [False] * (g.n + 1)

    def rec(path: list[int], v: int, s: int) -> Optional[list[int]]:
        remaining = length - len(path)
        if remaining == 0:
            return list(path) if s in g.adj[v] else None
        for w in adj[v]:
            if w <= s or on_path[w]:
                continue
            if dist[w][s] > remaining:
                continue
            on_path[w] = True
            path.append(w)
            got = rec(path, w, s)
            path.pop()
            on_path[w] = False
            if got is not None:
                return got
        return None

    for s in g.vertices():
        if len(adj[s]) < 2:
            continue
        on_path[s] = True
        got = rec([s], s, s)
        on_path[s] = False
        if got is not None:
            return got
    return None


@dataclass(frozen=True)
class CycleSpectrum:
    """The set of cycle lengths present, with optional witness cycles."""

    n: int
    lengths: frozenset[int]
    witnesses: Optional[dict[int, list[int]]] = None

    @property
    def pancyclic(self) -> bool:
        return self.lengths == frozenset(range(3, self.n + 1))

    @property
    def hamiltonian(self) -> bool:
        return self.n in self.lengths

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "lengths": sorted(self.lengths),
            "witnesses": (
                {str(k): v for k, v in sorted(self.witnesses.items())}
                if self.witnesses is not None
                else None
            ),
            "pancyclic": self.pancyclic,
            "hamiltonian": self.hamiltonian,
        }


def cycle_spectrum(
    g: Graph, witnesses: bool = False, cap: Optional[int] = None
) -> CycleSpectrum:
    """Exhaustive cycle spectrum over lengths 3..n."""
    _check_cap(g, cap)
    dist = _distances(g)
    lengths = set()
    found: dict[int, list[int]] = {}
    for length in range(3, g.n + 1):
        cyc = _cycle_of_length(g, length, dist)
        if cyc is not None:
            lengths.add(length)
            if witnesses:
                found[length] = cyc
    return CycleSpectrum(g.n, frozenset(lengths), found if witnesses else None)


def is_pancyclic(g: Graph, cap: Optional[int] = None) -> bool:
    """True iff cycles of every length 3..n exist."""
    _check_cap(g, cap)
    dist = _distances(g)
    for length in range(3, g.n + 1):
        if _cycle_of_length(g, length, dist) is None:
            return False
    return True


def hamiltonian_cycle(g: Graph, cap: Optional[int] = None) -> Optional[list[int]]:
    _check_cap(g, cap)
    if g.n < 3:
        return None
    return _cycle_of_length(g, g.n, _distances(g))


def is_hamiltonian(g: Graph, cap: Optional[int] = None) -> bool:
    return hamiltonian_cycle(g, cap) is not None


def hamiltonian_path(
    g: Graph, u: int, v: int, cap: Optional[int] = None
) -> Optional[list[int]]:
    """A spanning path from u to v, or None."""
    _check_cap(g, cap)
    if u == v:
        raise ValueError("endpoints must differ")
    dist = _distances(g)
    adj = {w: sorted(g.adj[w]) for w in g.vertices()}
    on_path = [False] * (g.n + 1)
    on_path[u] = True

    def rec(path: list[int], w: int) -> Optional[list[int]]:
        remaining = g.n - len(path)
        if remaining == 0:
            return list(path) if w == v else None
        if dist[w][v] > remaining:
            return None
        for x in adj[w]:
            if on_path[x] or (x == v and remaining > 1):
                continue
            on_path[x] = True
            path.append(x)
            got = rec(path, x)
            path.pop()
            on_path[x] = False
            if got is not None:
                return got
        return None

    return rec([u], u)


def hamiltonian_connectivity(
    g: Graph, cap: Optional[int] = None
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check every vertex pair for a spanning path.

    Returns (True, None) or (False, first failing pair).
    """
    _check_cap(g, cap)
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            if hamiltonian_path(g, u, v, cap) is None:
                return False, (u, v)
    return True, None


def is_hamiltonian_connected(g: Graph, cap: Optional[int] = None) -> bool:
    return hamiltonian_connectivity(g, cap)[0]


# -- sequence validation --------------------------------------------------------


@dataclass(frozen=True)
class SeqCheck:
    """Validation verdict with a reason code on failure."""

    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_seq(
    g: Graph, seq: Sequence[int], expect_length: int, closed: bool
) -> SeqCheck:
    if len(seq) != expect_length:
        return SeqCheck(False, "wrong length")
    if closed and expect_length < 3:
        return SeqCheck(False, "wrong length")
    for v in seq:
        if not 1 <= v <= g.n:
            return SeqCheck(False, "vertex out of range")
    if len(set(seq)) != len(seq):
        return SeqCheck(False, "duplicate vertex")
    pairs = list(zip(seq, seq[1:]))
    if closed:
        pairs.append((seq[-1], seq[0]))
    for a, b in pairs:
        if not g.has_edge(a, b):
            return SeqCheck(False, f"missing edge ({a}, {b})")
    return SeqCheck(True)


def validate_cycle(g: Graph, seq: Sequence[int], expect_length: int) -> SeqCheck:
    """Check that seq is a simple cycle of the expected length in g.

    The sequence lists each cycle vertex once; the closing edge from
    last back to first is implied.
    """
    return _check_seq(g, seq, expect_length, closed=True)


def validate_path(g: Graph, seq: Sequence[int], expect_length: int) -> SeqCheck:
    """Check that seq is a simple path on expect_length vertices in g."""
    return _check_seq(g, seq, expect_length, closed=False)
