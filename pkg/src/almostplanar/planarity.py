"""Exact planarity testing and the almost-planarity decision procedure.

A non-planar graph is almost-planar when, for every edge, deleting or
contracting that edge yields a planar graph.  The check below tests
every edge both ways and returns the full evidence table.

The per-call planarity test runs the left-right criterion (via
networkx) behind cheap exact shortcuts; the test suite cross-validates
it against an exhaustive Kuratowski-subdivision search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import networkx as nx

from .graph import Edge, Graph, contract_edge, delete_edge, is_connected


@lru_cache(maxsize=262144)
def _planar_cached(g: Graph) -> bool:
    n, m = g.n, g.m
    if n <= 4 or m <= 8:
        # smallest non-planar graphs are K5 (10 edges) and K3,3 (9 edges)
        return True
    if m > 3 * n - 6:
        return False
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    G.add_edges_from(g.edges)
    return nx.check_planarity(G, counterexample=False)[0]


def is_planar(g: Graph) -> bool:
    """Exact planarity verdict."""
    return _planar_cached(g)


@dataclass(frozen=True)
class EdgeEvidence:
    edge: Edge
    deletion_planar: bool
    contraction_planar: bool

    @property
    def passes(self) -> bool:
        return self.deletion_planar or self.contraction_planar


@dataclass(frozen=True)
class AlmostPlanarEvidence:
    """Per-edge deletion/contraction planarity table plus the verdict.

    verdict is True only for connected non-planar graphs where every
    edge passes.  failing_edge is the first edge (in sorted order)
    failing both tests, present only for connected non-planar inputs.
    """

    verdict: bool
    per_edge: tuple[EdgeEvidence, ...]
    failing_edge: Optional[Edge]
    note: str = ""

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "verdict": self.verdict,
            "edges": [
                {
                    "u": ev.edge[0],
                    "v": ev.edge[1],
                    "del_planar": ev.deletion_planar,
                    "con_planar": ev.contraction_planar,
                }
                for ev in self.per_edge
            ],
            "failing_edge": (
                None
                if self.failing_edge is None
                else {"u": self.failing_edge[0], "v": self.failing_edge[1]}
            ),
        }


@lru_cache(maxsize=65536)
def is_almost_planar(g: Graph) -> AlmostPlanarEvidence:
    """Decide almost-planarity, returning evidence for every edge.

    Planar input fails by definition.  Disconnected input fails too:
    the notion is only meaningful for connected graphs (the families
    characterized by it are all 3-connected), and accepting e.g. a
    non-planar component plus an isolated vertex would be vacuous.
    """
    if is_planar(g):
        return AlmostPlanarEvidence(False, (), None, note="graph is planar")
    if not is_connected(g):
        return AlmostPlanarEvidence(False, (), None, note="graph is disconnected")
    rows = []
    failing: Optional[Edge] = None
    for e in g.sorted_edges():
        row = EdgeEvidence(
            edge=e,
            deletion_planar=is_planar(delete_edge(g, e)),
            contraction_planar=is_planar(contract_edge(g, e)),
        )
        rows.append(row)
        if failing is None and not row.passes:
            failing = e
    return AlmostPlanarEvidence(failing is None, tuple(rows), failing)
