import random

import pytest

from cliquetheta.graphs import (
    CliquePath,
    CliqueTheta,
    GeneralizedTheta,
    RingOfCliques,
    SimpleGraph,
    build,
    complete_graph,
    cycle_graph,
    path_graph,
)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def small_corpus():
    """Named graphs on at most 7 vertices."""
    graphs = {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "P3": path_graph(3),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "empty3": SimpleGraph(3),
        "K23": build(GeneralizedTheta((2, 2, 2))),
        "theta_1_3": build(GeneralizedTheta((1, 3))),
        "L(1,2,1)": build(CliquePath((1, 2, 1))),
        "R(1,2,2)": build(RingOfCliques((1, 2, 2))),
        "R(1,1,1,1,2)": build(RingOfCliques((1, 1, 1, 1, 2))),
        "T(1,[1,1],[1],1)": build(CliqueTheta(1, ((1, 1), (1,)), 1)),
        "T(2,[1],[1],1)": build(CliqueTheta(2, ((1,), (1,)), 1)),
        "petersen_minus": SimpleGraph.from_edges(
            6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 5)]
        ),
    }
    rng = random.Random(7)
    for i in range(8):
        graphs[f"random{i}"] = random_graph(rng.randint(4, 7), 0.45, rng)
    return graphs


def join_corpus():
    """Ten base graphs for the join-shift identity."""
    return [
        complete_graph(1),
        complete_graph(2),
        path_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        SimpleGraph(2),
        build(GeneralizedTheta((2, 2, 2))),
        build(RingOfCliques((1, 2, 1, 2))),
        build(CliqueTheta(1, ((1, 1), (2,)), 1)),
        SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
    ]


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
