import random

import pytest

from conftest import random_graph, small_corpus
from cliquetheta.graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from cliquetheta.oracle import (
    EdgeExists,
    TooLarge,
    chromatic_poly_oracle,
    chromatic_poly_via_addition,
    count_colourings,
    count_colourings_bruteforce,
)
from cliquetheta.poly import IntPoly, X, evaluate, falling_factorial


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(3), falling_factorial(3)),
        (path_graph(3), X * (X - 1) ** 2),
        (cycle_graph(4), IntPoly((0, -3, 6, -4, 1))),
        (cycle_graph(4), (X - 1) ** 4 + (X - 1)),
        (SimpleGraph(0), IntPoly((1,))),
        (SimpleGraph(3), X ** 3),
    ],
)
def test_oracle_examples(g, expected):
    assert chromatic_poly_oracle(g) == expected


@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_formula(n):
    assert chromatic_poly_oracle(cycle_graph(n)) == (X - 1) ** n + (-1) ** n * (X - 1)


@pytest.mark.parametrize("n", range(1, 10))
def test_tree_formula(n):
    assert chromatic_poly_oracle(path_graph(n)) == X * (X - 1) ** (n - 1)


def test_addition_contraction_examples():
    assert chromatic_poly_via_addition(SimpleGraph(2), (0, 1)) == X ** 2
    assert chromatic_poly_via_addition(path_graph(3), (0, 2)) == X * (X - 1) ** 2
    with pytest.raises(EdgeExists):
        chromatic_poly_via_addition(path_graph(3), (0, 1))


def test_addition_contraction_on_random_graphs():
    rng = random.Random(11)
    checked = 0
    while checked < 20:
        g = random_graph(6, 0.5, rng)
        non_edges = g.non_edges()
        if not non_edges:
            continue
        e = rng.choice(non_edges)
        assert chromatic_poly_via_addition(g, e) == chromatic_poly_oracle(g)
        checked += 1


def test_shortcuts_do_not_change_the_answer():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(8, rng.uniform(0.2, 0.8), rng)
        assert chromatic_poly_oracle(g) == chromatic_poly_oracle(g, clique_sums=False)


@pytest.mark.parametrize(
    "g, q, expected",
    [
        (complete_graph(3), 3, 6),
        (complete_graph(3), 2, 0),
        (cycle_graph(4), 2, 2),
        (SimpleGraph(0), 0, 1),
        (SimpleGraph(2), 0, 0),
    ],
)
def test_count_colourings_examples(g, q, expected):
    assert count_colourings(g, q) == expected
    assert count_colourings_bruteforce(g, q) == expected


def test_count_colourings_agrees_with_bruteforce():
    for g in small_corpus().values():
        for q in range(4):
            assert count_colourings(g, q) == count_colourings_bruteforce(g, q)


def test_oracle_evaluates_to_colouring_counts():
    rng = random.Random(2)
    for _ in range(15):
        g = random_graph(rng.randint(2, 7), 0.5, rng)
        poly = chromatic_poly_oracle(g)
        for q in range(5):
            assert evaluate(poly, q) == count_colourings(g, q)


def test_coefficient_structure():
    rng = random.Random(9)
    for _ in range(30):
        g = random_graph(rng.randint(1, 9), 0.5, rng)
        poly = chromatic_poly_oracle(g)
        c = poly.coeffs
        assert poly.degree == g.n_vertices
        assert c[-1] == 1
        assert c[-2] == -g.n_edges if g.n_vertices >= 1 else True
        # signs alternate, ignoring zeros below the number of components
        assert all(ci * (-1) ** (g.n_vertices - i) >= 0 for i, ci in enumerate(c))
        assert evaluate(poly, 0) == 0
        if g.n_edges:
            assert evaluate(poly, 1) == 0


def test_cap():
    with pytest.raises(TooLarge):
        chromatic_poly_oracle(path_graph(20))
    assert chromatic_poly_oracle(path_graph(20), cap=None) == X * (X - 1) ** 19
    with pytest.raises(TooLarge):
        count_colourings(path_graph(11), 2)
