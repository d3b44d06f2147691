import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from almostplanar.families import gen_bicycle, gen_mobius, gen_wheel
from almostplanar.graph import Graph, delete_edge, edge
from almostplanar.planarity import is_almost_planar, is_planar

from kuratowski import is_planar_kuratowski


def test_planar_basics(k4, k5, k33):
    assert is_planar(k4)
    assert not is_planar(k5)
    assert not is_planar(k33)
    assert is_planar(gen_wheel(6).graph)


@pytest.mark.parametrize("n", range(6, 11))
def test_bicycle_minus_axle_planar(n):
    g = gen_bicycle(n).graph
    assert not is_planar(g)
    assert is_planar(delete_edge(g, edge(n - 1, n)))


def test_planar_euler_bound_consistency(k5, k33, petersen):
    # never planar when m > 3n-6; bipartite inputs obey m <= 2n-4
    for g in (k5, k33, petersen, gen_bicycle(7).graph):
        if g.m > 3 * g.n - 6:
            assert not is_planar(g)
    assert k33.m > 2 * k33.n - 4  # bipartite bound violated, so non-planar


def test_kuratowski_oracle_agrees_on_corpus(k4, k5, k6, k33, petersen):
    corpus = [
        k4,
        k5,
        k6,
        k33,
        petersen,
        gen_wheel(7).graph,
        gen_bicycle(7).graph,
        delete_edge(gen_bicycle(7).graph, edge(6, 7)),
        gen_mobius(4).graph,
        gen_mobius(5).graph,
        Graph.from_edges(3, [(1, 2), (2, 3)]),
        Graph(5, frozenset()),
    ]
    for g in corpus:
        assert is_planar(g) == is_planar_kuratowski(g), g


@given(st.randoms())
@settings(max_examples=25, deadline=None)
def test_planarity_invariant_under_relabeling(rng):
    g = gen_mobius(4).graph
    perm = list(g.vertices())
    rng.shuffle(perm)
    h = g.relabel({v: perm[v - 1] for v in g.vertices()})
    assert is_planar(h) == is_planar(g)


@given(st.integers(0, 500))
@settings(max_examples=30, deadline=None)
def test_random_small_graphs_against_kuratowski(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(4, 8)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    m = rng.randint(0, len(pairs))
    g = Graph.from_edges(n, rng.sample(pairs, m))
    assert is_planar(g) == is_planar_kuratowski(g)


def test_almost_planar_mobius():
    for k in (4, 5):
        ev = is_almost_planar(gen_mobius(k).graph)
        assert ev.verdict
        assert ev.failing_edge is None
        assert len(ev.per_edge) == 3 * k
        assert all(row.passes for row in ev.per_edge)


def test_almost_planar_rejects_k6(k6):
    ev = is_almost_planar(k6)
    assert not ev.verdict
    assert ev.failing_edge == (1, 2)
    row = ev.per_edge[0]
    assert not row.deletion_planar and not row.contraction_planar


def test_almost_planar_rejects_planar():
    ev = is_almost_planar(gen_wheel(6).graph)
    assert not ev.verdict
    assert ev.per_edge == ()
    assert "planar" in ev.note


def test_almost_planar_rejects_disconnected(k5):
    # K5 plus an isolated vertex: every edge test passes but the notion
    # is reserved for connected graphs
    g = Graph(6, k5.edges)
    ev = is_almost_planar(g)
    assert not ev.verdict
    assert "disconnected" in ev.note


def test_evidence_json_shape(k6):
    data = is_almost_planar(k6).to_json()
    assert data["schema"] == 1
    assert data["verdict"] is False
    assert data["failing_edge"] == {"u": 1, "v": 2}
    assert {"u", "v", "del_planar", "con_planar"} == set(data["edges"][0])
    json.dumps(data)  # serializable
