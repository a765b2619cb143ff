"""Ground-truth chromatic polynomials for small graphs.

The recursion is plain deletion-contraction

    P(G) = P(G - e) - P(G / e)

terminated at edgeless and complete graphs.  With ``clique_sums=True``
(the default) the recursion also splits along clique cut-sets,

    P(G) = P(H1) * P(H2) / (X)_c      when H1 and H2 meet in a K_c,

which covers disconnected graphs (c = 0) and simplicial vertices.  Graphs
travel through the recursion as tuples of adjacency bitmasks; the memo
table lives for one top-level call only.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Dict, Optional, Tuple

from .graphs import SimpleGraph
from .poly import IntPoly, div_exact, falling_factorial, falling_factorial_at, mul

DEFAULT_VERTEX_CAP = 18
COUNT_VERTEX_CAP = 10
COUNT_COLOUR_CAP = 6

Adj = Tuple[int, ...]


class TooLarge(ValueError):
    pass


class EdgeExists(ValueError):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _induced(adj: Adj, keep: int) -> Adj:
    """Subgraph induced on the vertex mask ``keep``, relabelled in increasing order."""
    verts = list(_bits(keep))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for w in _bits(adj[v] & keep):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def _remove_edge(adj: Adj, u: int, v: int) -> Adj:
    out = list(adj)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return tuple(out)


def _contract(adj: Adj, u: int, v: int) -> Adj:
    """Merge ``v`` into ``u`` (loops and parallel edges dropped), then delete ``v``."""
    out = list(adj)
    merged = (adj[u] | adj[v]) & ~((1 << u) | (1 << v))
    out[u] = merged
    for w in _bits(adj[v]):
        if w != u:
            out[w] |= 1 << u
    full = (1 << len(adj)) - 1
    return _induced(tuple(out), full & ~(1 << v))


def _component(adj: Adj, start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _is_clique(adj: Adj, mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in _bits(mask))


def _clique_separator(adj: Adj) -> Optional[Tuple[int, int, int]]:
    """Find a clique ``C`` whose removal disconnects the graph.

    Returns ``(side1, side2, C)`` with ``side1 | side2`` covering every vertex,
    ``side1 & side2 == C``.  Candidate separators are the neighbourhoods of
    components of ``G - N[v]``; these are minimal separators, so the search
    is sound but not exhaustive.
    """
    n = len(adj)
    full = (1 << n) - 1
    for v in range(n):
        closed = adj[v] | (1 << v)
        rest = full & ~closed
        while rest:
            start = (rest & -rest).bit_length() - 1
            comp = _component(adj, start, full & ~closed)
            rest &= ~comp
            sep = 0
            for w in _bits(comp):
                sep |= adj[w]
            sep &= ~comp
            if _is_clique(adj, sep):
                return comp | sep, full & ~comp, sep
    return None


class _Oracle:
    def __init__(self, clique_sums: bool):
        self.clique_sums = clique_sums
        self.memo: Dict[Adj, IntPoly] = {}

    def __call__(self, adj: Adj) -> IntPoly:
        hit = self.memo.get(adj)
        if hit is None:
            hit = self._solve(adj)
            self.memo[adj] = hit
        return hit

    def _solve(self, adj: Adj) -> IntPoly:
        n = len(adj)
        if n == 0:
            return IntPoly((1,))
        degrees = [_popcount(m) for m in adj]
        n_edges = sum(degrees) // 2
        if n_edges == 0:
            return IntPoly((0,) * n + (1,))
        if n_edges == n * (n - 1) // 2:
            return falling_factorial(n)

        if self.clique_sums:
            full = (1 << n) - 1
            # simplicial vertex: K_{d+1} glued along K_d
            for v in sorted(range(n), key=degrees.__getitem__):
                if _is_clique(adj, adj[v]):
                    rest = _induced(adj, full & ~(1 << v))
                    return mul(self(rest), falling_factorial_at(degrees[v], 1))
            comp = _component(adj, 0, full)
            if comp != full:
                return mul(self(_induced(adj, comp)), self(_induced(adj, full & ~comp)))
            split = _clique_separator(adj)
            if split is not None:
                s1, s2, sep = split
                top = mul(self(_induced(adj, s1)), self(_induced(adj, s2)))
                return div_exact(top, falling_factorial(_popcount(sep)))

        u, v = self._pick_edge(adj, degrees)
        return self(_remove_edge(adj, u, v)) - self(_contract(adj, u, v))

    @staticmethod
    def _pick_edge(adj: Adj, degrees) -> Tuple[int, int]:
        # Lowest-degree vertex that has neighbours; drop the edge to the
        # neighbour sharing the fewest of its other neighbours, which pushes
        # the vertex towards being simplicial.
        u = min((v for v in range(len(adj)) if degrees[v]), key=lambda v: (degrees[v], v))
        nbrs = adj[u]
        v = min(_bits(nbrs), key=lambda w: (_popcount(adj[w] & nbrs), -degrees[w], w))
        return u, v


def _check_cap(g: SimpleGraph, cap: Optional[int]):
    if cap is not None and g.n_vertices > cap:
        raise TooLarge(f"{g.n_vertices} vertices exceeds the oracle cap of {cap}")


def chromatic_poly_oracle(
    g: SimpleGraph, *, cap: Optional[int] = DEFAULT_VERTEX_CAP, clique_sums: bool = True
) -> IntPoly:
    """Chromatic polynomial of ``g`` by deletion-contraction.

    Parameters
    ----------
    g : SimpleGraph
    cap : int or None
        Soft vertex limit; ``None`` disables it.
    clique_sums : bool
        Split along clique cut-sets before recursing.  Turning this off gives
        raw deletion-contraction, useful only as a cross-check.
    """
    _check_cap(g, cap)
    return _Oracle(clique_sums)(g.adjacency_masks())


def chromatic_poly_via_addition(
    g: SimpleGraph, e: Tuple[int, int], *, cap: Optional[int] = DEFAULT_VERTEX_CAP
) -> IntPoly:
    """``P(G) = P(G + e) + P((G + e) / e)`` for a non-edge ``e``."""
    u, v = e
    if u == v:
        raise ValueError("a non-edge needs two distinct endpoints")
    if g.has_edge(u, v):
        raise EdgeExists(f"({u}, {v}) is already an edge")
    _check_cap(g, cap)
    plus = g.add_edge(u, v)
    oracle = _Oracle(True)
    adj = plus.adjacency_masks()
    return oracle(adj) + oracle(_contract(adj, min(u, v), max(u, v)))


def count_colourings(g: SimpleGraph, q: int) -> int:
    """Number of proper ``q``-colourings, by enumerating colour assignments.

    Vertices are coloured in label order and a partial assignment is
    abandoned as soon as it is improper, so only proper prefixes are visited.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    if g.n_vertices > COUNT_VERTEX_CAP or q > COUNT_COLOUR_CAP:
        raise TooLarge(
            f"enumeration limited to {COUNT_VERTEX_CAP} vertices and {COUNT_COLOUR_CAP} colours"
        )
    n = g.n_vertices
    if n == 0:
        return 1
    earlier = [[w for w in g.neighbours(v) if w < v] for v in range(n)]
    colours = [0] * n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(q):
            if all(colours[w] != c for w in earlier[v]):
                colours[v] = c
                total += extend(v + 1)
        return total

    return extend(0)


def count_colourings_bruteforce(g: SimpleGraph, q: int) -> int:
    """Same count by checking every one of the ``q**n`` assignments (tiny graphs only)."""
    edges = list(g.edges)
    return sum(
        all(col[u] != col[v] for u, v in edges)
        for col in iproduct(range(q), repeat=g.n_vertices)
    )
