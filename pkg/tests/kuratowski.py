"""Exhaustive Kuratowski-subdivision planarity oracle, used only in tests.

A graph is planar iff it contains no subdivision of K5 or K3,3.  The
search below picks branch vertices of sufficient degree and tries to
realize all required branch paths internally vertex-disjoint, by plain
backtracking.  Exponential, but honest: it decides planarity from the
definition-level characterization and serves as an independent check on
the production planarity test for small graphs.
"""

from __future__ import annotations

import itertools

from almostplanar.graph import Graph


def _disjoint_paths(
    g: Graph, pairs: list[tuple[int, int]], branch: frozenset[int]
) -> bool:
    """Try to realize all pairs as paths, internally disjoint from each
    other and from the branch vertices."""
    used: set[int] = set()

    def connect(idx: int) -> bool:
        if idx == len(pairs):
            return True
        s, t = pairs[idx]

        def extend(v: int, interior: list[int]) -> bool:
            for w in g.adj[v]:
                if w == t:
                    used.update(interior)
                    if connect(idx + 1):
                        return True
                    used.difference_update(interior)
                elif w not in branch and w not in used and w not in interior:
                    interior.append(w)
                    if extend(w, interior):
                        return True
                    interior.pop()
            return False

        return extend(s, [])

    return connect(0)


def _has_k5_subdivision(g: Graph) -> bool:
    candidates = [v for v in g.vertices() if g.degree(v) >= 4]
    for branch in itertools.combinations(candidates, 5):
        bset = frozenset(branch)
        pairs = list(itertools.combinations(branch, 2))
        if _disjoint_paths(g, pairs, bset):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    candidates = [v for v in g.vertices() if g.degree(v) >= 3]
    for six in itertools.combinations(candidates, 6):
        for left in itertools.combinations(six, 3):
            if six[0] not in left:
                continue  # fix six[0] on the left to kill the side swap
            right = tuple(v for v in six if v not in left)
            pairs = [(u, v) for u in left for v in right]
            if _disjoint_paths(g, pairs, frozenset(six)):
                return True
    return False


def is_planar_kuratowski(g: Graph) -> bool:
    """Planarity by exhaustive subdivision search (small graphs only)."""
    return not _has_k33_subdivision(g) and not _has_k5_subdivision(g)
