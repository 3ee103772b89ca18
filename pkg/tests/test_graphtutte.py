import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ybx.graphtutte import (TV, XV, YV, Multigraph, acyclic_orientations, chromatic_from_tutte,
                            chromatic_multipartite, complete_tutte, forest_poly,
                            forest_recurrence, forest_tilde, forests_bruteforce, hilb_ab, multipartite_tutte,
                            poly_bernoulli, spanning_trees, tutte_dc, universal_chromatic,
                            universal_chromatic_from_tutte)


@st.composite
def multigraphs(draw, max_n=5, max_m=2):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    ms = draw(st.lists(st.integers(0, max_m), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph.from_edges(n, [(i, j, m) for (i, j), m in zip(pairs, ms) if m])


def relabel(G, perm):
    return Multigraph(G.n, [[G.mult[perm[i]][perm[j]] for j in range(G.n)] for i in range(G.n)])


def colorings(G, k):
    return sum(all(c[i] != c[j] for i, j, _ in G.edges())
               for c in itertools.product(range(k), repeat=G.n))


@settings(max_examples=40, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_tutte_relabel_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert tutte_dc(G) == tutte_dc(relabel(G, perm))


@settings(max_examples=40, deadline=None)
@given(multigraphs())
def test_tutte_evaluations(G):
    T = tutte_dc(G)
    if G.kappa() == 1:
        assert T.evaluate({XV: 1, YV: 1}) == spanning_trees(G)
    assert T.evaluate({XV: 2, YV: 2}) == 2 ** G.num_edges()
    assert T.evaluate({XV: 2, YV: 0}) == acyclic_orientations(G)


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_n=4))
def test_chromatic_against_colorings(G):
    P = chromatic_from_tutte(tutte_dc(G), G)
    for k in range(4):
        assert P.evaluate({TV: k}) == colorings(G, k)


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_n=5, max_m=1))
def test_hilb_ab_counts_acyclic_orientations(G):
    assert hilb_ab(G).evaluate({TV: 1}) == acyclic_orientations(G)


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 2, 1), (3, 3)])
def test_multipartite_engines(parts):
    G = Multigraph.multipartite(parts)
    T, kappa = multipartite_tutte(parts)
    assert T == tutte_dc(G) and kappa == 1
    assert chromatic_multipartite(parts) == chromatic_from_tutte(T, G)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graph(n):
    assert complete_tutte(n) == tutte_dc(Multigraph.complete(n))


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (3, 3)])
def test_poly_bernoulli_is_acyclic_count(n, m):
    assert poly_bernoulli(n, m) == acyclic_orientations(Multigraph.multipartite((n, m)))


@pytest.mark.parametrize("n", range(1, 6))
def test_forests(n):
    assert forest_recurrence(n) == forest_tilde(n)
    assert forests_bruteforce(n) == forest_poly(n)


@pytest.mark.parametrize("n", [3, 4])
def test_universal_chromatic(n):
    assert universal_chromatic(n) == universal_chromatic_from_tutte(n)


def test_parse_graph_file():
    G = Multigraph.parse("3\n1 2\n2 3 2\n# comment\n")
    assert G.num_edges() == 3 and G.kappa() == 1
    with pytest.raises(ValueError):
        Multigraph.parse("2\n1 3\n")
