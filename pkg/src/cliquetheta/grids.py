"""Exhaustive parameter grids used by the verification sweeps."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .graphs import CliquePath, CliqueTheta, RingOfCliques


def compositions(total_max: int, part_max: int | None = None, length_max: int | None = None):
    """All tuples of positive integers with sum <= ``total_max``."""

    def rec(remaining: int, prefix: tuple):
        if prefix:
            yield prefix
        if length_max is not None and len(prefix) >= length_max:
            return
        top = remaining if part_max is None else min(remaining, part_max)
        for a in range(1, top + 1):
            yield from rec(remaining - a, prefix + (a,))

    yield from rec(total_max, ())


def clique_path_grid(n_max: int = 4, a_max: int = 3) -> Iterator[CliquePath]:
    for n in range(1, n_max + 1):
        for a in product(range(1, a_max + 1), repeat=n):
            yield CliquePath(a)


def ring_grid(sizes=(3, 4, 5), a_max: int = 3) -> Iterator[RingOfCliques]:
    for n in sizes:
        for a in product(range(1, a_max + 1), repeat=n):
            yield RingOfCliques(a)


def clique_theta_grid(max_vertices: int = 12, n_max: int = 3, k_max: int = 3) -> Iterator[CliqueTheta]:
    """Every ``T(1, S_1..S_n, k)`` with ``n <= n_max``, ``k <= k_max`` and at most ``max_vertices`` vertices.

    The ``S_i`` are ordered, so reorderings of the same graph all appear.
    """
    for k in range(1, k_max + 1):
        budget = max_vertices - 1 - k
        for n in range(1, n_max + 1):
            yield from (CliqueTheta(1, S, k) for S in _path_tuples(n, budget))


def _path_tuples(n: int, budget: int):
    if n == 0:
        yield ()
        return
    for s in compositions(budget - (n - 1)):
        for rest in _path_tuples(n - 1, budget - sum(s)):
            yield (s,) + rest


def scaling_grid(n_max: int = 3, len_max: int = 2, a_max: int = 2, k_max: int = 2) -> Iterator[CliqueTheta]:
    """Clique-thetas with ``n <= 3`` paths of at most 2 cliques of size at most 2, ``k <= 2``."""
    paths = [s for L in range(1, len_max + 1) for s in product(range(1, a_max + 1), repeat=L)]
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            for S in product(paths, repeat=n):
                yield CliqueTheta(1, S, k)
