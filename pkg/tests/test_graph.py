import itertools

import numpy as np
import pytest

from mptg.graph import (
    AugmentedMatrix,
    Graph,
    GraphFormatError,
    all_graphs,
    augmented,
    complement,
    format_graph,
    induced_subgraph,
    make_caterpillar,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_wheel,
    parse_graph,
    relabel,
)


def test_parse_single_edge():
    g = parse_graph("n 2\n0 1")
    assert g.n == 2 and list(g.edges()) == [(0, 1)]


def test_parse_edgeless_and_cycle():
    assert parse_graph("n 3").m == 0
    assert parse_graph("n 4\n0 1\n1 2\n2 3\n3 0") == make_cycle(4)


def test_parse_comments_and_duplicates():
    g = parse_graph("# c4\nn 3\n\n0 1\n1 0\n  # trailing\n1 2\n")
    assert g.m == 2


@pytest.mark.parametrize("text, line", [
    ("n 3\n0 3", 2),
    ("n 3\n1 1", 2),
    ("n 3\n0 1 2", 2),
    ("n 3\n0 x", 2),
    ("0 1", 1),
    ("", 1),
    ("n -1", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line


def test_format_round_trip():
    g = make_wheel(5)
    assert parse_graph(format_graph(g)) == g


def test_graph_invariants():
    g = Graph(3, [(0, 1), (1, 2)])
    assert not g.adj.diagonal().any()
    assert np.array_equal(g.adj, g.adj.T)
    with pytest.raises(ValueError):
        g.adj[0, 2] = True
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_masks_match_adjacency():
    g = make_wheel(4)
    for v in range(g.n):
        assert g.masks[v] == sum(1 << int(u) for u in np.flatnonzero(g.adj[v]))


def test_equality_is_label_sensitive():
    assert make_path(3) != Graph(3, [(0, 2), (1, 2)])
    assert make_path(3) == Graph(3, [(1, 0), (2, 1)])
    assert hash(make_path(3)) == hash(Graph(3, [(1, 2), (0, 1)]))


def test_constructors():
    assert make_wheel(4).m == 8
    c6bar = complement(make_cycle(6))
    assert c6bar.m == 9
    for u, v in c6bar.edges():
        assert min((u - v) % 6, (v - u) % 6) in (2, 3)
    cat = make_caterpillar([2, 0, 1])
    assert cat.n == 6 and cat.m == 5
    assert make_complete_bipartite(2, 3).m == 6
    assert make_complete(4).m == 6


@pytest.mark.parametrize("fn, arg", [
    (make_cycle, 2), (make_wheel, 2), (make_complete, 0), (make_path, 0),
])
def test_constructor_minimums(fn, arg):
    with pytest.raises(ValueError):
        fn(arg)


def test_bad_constructor_args():
    with pytest.raises(ValueError):
        make_complete_bipartite(0, 3)
    with pytest.raises(ValueError):
        make_caterpillar([])
    with pytest.raises(ValueError):
        make_caterpillar([1, -1])


def test_complement_involution_and_full_induced():
    for g in all_graphs(4):
        assert complement(complement(g)) == g
        assert induced_subgraph(g, range(4)) == g


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 2 ** 6
    assert len({g for g in all_graphs(3)}) == 8


def test_augmented_views():
    g = make_cycle(5)
    a = augmented(g)
    assert np.array_equal(a.a, g.adj | np.eye(5, dtype=bool))
    assert augmented(Graph(4, []), (3, 1, 0, 2)).a.sum() == 4
    assert augmented(make_complete(3), (2, 0, 1)).a.all()
    perm = (2, 4, 1, 0, 3)
    b = augmented(g, perm)
    for i, j in itertools.product(range(5), repeat=2):
        assert b[i, j] == (i == j or g.has_edge(perm[i], perm[j]))
    assert b.graph() == relabel(g, perm)
    with pytest.raises(ValueError):
        augmented(g, (0, 1, 2))
    with pytest.raises(ValueError):
        augmented(g, (0, 0, 1, 2, 3))


def test_first_last_one():
    a = AugmentedMatrix(np.array([[1, 0, 1], [0, 1, 0], [1, 0, 1]], dtype=bool))
    assert (a.first_one(0), a.last_one(0)) == (0, 2)
    assert (a.first_one(1), a.last_one(1)) == (1, 1)


def test_augmented_matrix_rejects_asymmetric():
    with pytest.raises(ValueError):
        AugmentedMatrix(np.array([[1, 1], [0, 1]], dtype=bool))
