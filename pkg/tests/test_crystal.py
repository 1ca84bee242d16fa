import pytest

from afk.crystal import crystal_graph, lambda_dominant_count
from afk.filtration import omega_lambda
from afk.rootdata import FIXTURE_TYPES, AffineWeight


def W(*c):
    return AffineWeight(tuple(c), 0)


def test_a2_cycle(nat):
    g = crystal_graph(nat("A", 2))
    assert set(g.edges) == {(0, 1, 0), (1, 2, 2), (2, 0, 1)}
    assert g.is_single_cycle()


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_type_a_single_cycle(nat, rank):
    g = crystal_graph(nat("A", rank))
    assert len(g.edges) == rank + 1 and g.is_single_cycle()


def test_b3_short_label_path(nat):
    g = crystal_graph(nat("B", 3))
    assert sorted((s, t) for s, t, i in g.edges if i == 3) == [(2, 3), (3, 4)]


# 2l + 2 arrows: the defining ones plus the two extra E_1 arrows (and, in type D, the second E_{l-1} arrow)
EDGE_COUNTS = {("B", 3): 8, ("B", 4): 10, ("D", 4): 10, ("D", 5): 12, ("C", 2): 4, ("C", 3): 6, ("C", 4): 8}


@pytest.mark.parametrize("family,rank", FIXTURE_TYPES)
def test_graph_shape(nat, family, rank):
    m = nat(family, rank)
    g = crystal_graph(m)
    assert g.is_connected() and g.degree_ok()
    if (family, rank) in EDGE_COUNTS:
        assert len(g.edges) == EDGE_COUNTS[(family, rank)]
    wts = g.traversal_weights()
    assert [wts[v] for v in g.vertices] == list(m.weights)


def test_counts(nat):
    assert lambda_dominant_count(nat("A", 2), W(1, 1, 0)) == 2
    assert lambda_dominant_count(nat("A", 1), W(1, 0)) == 1
    m = nat("B", 3)
    lam = W(1, 0, 0, 0)
    assert lambda_dominant_count(m, lam) == len(omega_lambda(m, lam))


def test_dot(nat):
    dot = crystal_graph(nat("A", 1)).to_dot()
    assert dot.startswith("digraph crystal_A1 {") and 'w0 -> w1 [label="0"];' in dot
