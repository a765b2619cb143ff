"""Simple graphs and the clique-graph families built on paths, cycles and thetas.

Vertex labelling is deterministic so tests can refer to vertices:

* ``CliquePath(a)`` / ``RingOfCliques(a)``: clique ``i`` occupies the next
  ``a[i]`` labels, in spec order.
* ``GeneralizedTheta(m)``: terminals are 0 and 1; the internal vertices of
  path ``i`` follow in order from the 0 side to the 1 side.
* ``CliqueTheta(j, S, k)``: the ``j``-clique first, then the ``k``-clique,
  then the internal cliques of each ``S[i]`` in order (``S[i][0]`` sits next
  to the ``j``-clique).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, Sequence, Tuple, Union

import networkx as nx


class InvalidSpec(ValueError):
    pass


class VertexOutOfRange(IndexError):
    pass


class UnsupportedLength(ValueError):
    pass


Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph on vertices ``0..n_vertices-1``."""

    n_vertices: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidSpec(f"loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n_vertices - 1}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "SimpleGraph":
        return cls(n, frozenset(edges))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbours(self, v: int) -> set:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency_masks(self) -> tuple:
        masks = [0] * self.n_vertices
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def non_edges(self) -> list:
        return [e for e in combinations(range(self.n_vertices), 2) if e not in self.edges]

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph(self.n_vertices, self.edges | {(min(u, v), max(u, v))})

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "SimpleGraph":
        index = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls(len(index), frozenset((index[u], index[v]) for u, v in g.edges))

    def to_graph6(self) -> str:
        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode("ascii").strip()

    @classmethod
    def from_graph6(cls, text: str) -> "SimpleGraph":
        raw = text.strip()
        if raw.startswith(">>graph6<<"):
            raw = raw[len(">>graph6<<"):]
        return cls.from_networkx(nx.from_graph6_bytes(raw.encode("ascii")))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


# ---------------------------------------------------------------------------
# Family specifications
# ---------------------------------------------------------------------------


def _positive_tuple(values, what: str) -> tuple:
    try:
        out = tuple(int(v) for v in values)
    except TypeError as exc:
        raise InvalidSpec(f"{what} must be a sequence of integers") from exc
    if not out:
        raise InvalidSpec(f"{what} must be nonempty")
    if any(v < 1 for v in out):
        raise InvalidSpec(f"{what} entries must be positive, got {out}")
    return out


@dataclass(frozen=True)
class CliquePath:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _positive_tuple(self.a, "clique sizes"))

    family = "clique_path"


@dataclass(frozen=True)
class RingOfCliques:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _positive_tuple(self.a, "clique sizes"))
        if len(self.a) < 3:
            raise InvalidSpec("a ring of cliques needs at least 3 cliques")

    family = "ring_of_cliques"


@dataclass(frozen=True)
class GeneralizedTheta:
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", _positive_tuple(self.m, "path lengths"))
        if sum(1 for x in self.m if x == 1) > 1:
            raise InvalidSpec("two paths of length 1 would form a multi-edge")

    family = "generalized_theta"


@dataclass(frozen=True)
class CliqueTheta:
    j: int
    S: tuple
    k: int

    def __post_init__(self):
        if int(self.j) < 1 or int(self.k) < 1:
            raise InvalidSpec("extremal clique sizes must be positive")
        if isinstance(self.S, (str, bytes)) or not len(self.S):
            raise InvalidSpec("a clique-theta needs at least one clique-path")
        object.__setattr__(self, "j", int(self.j))
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "S", tuple(_positive_tuple(s, "S entries") for s in self.S))

    family = "clique_theta"

    @property
    def n_paths(self) -> int:
        return len(self.S)

    @property
    def n_vertices(self) -> int:
        return self.j + self.k + sum(sum(s) for s in self.S)


FamilySpec = Union[CliquePath, RingOfCliques, GeneralizedTheta, CliqueTheta]


def spec_to_dict(spec: FamilySpec) -> dict:
    if isinstance(spec, CliqueTheta):
        return {"family": spec.family, "j": spec.j, "S": [list(s) for s in spec.S], "k": spec.k}
    if isinstance(spec, GeneralizedTheta):
        return {"family": spec.family, "m": list(spec.m)}
    if isinstance(spec, (CliquePath, RingOfCliques)):
        return {"family": spec.family, "a": list(spec.a)}
    raise TypeError(f"not a family spec: {spec!r}")


def spec_from_dict(obj: dict) -> FamilySpec:
    try:
        family = obj["family"]
        if family == "clique_theta":
            return CliqueTheta(obj["j"], obj["S"], obj["k"])
        if family == "generalized_theta":
            return GeneralizedTheta(obj["m"])
        if family == "clique_path":
            return CliquePath(obj["a"])
        if family == "ring_of_cliques":
            return RingOfCliques(obj["a"])
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(f"malformed family spec: {obj!r}") from exc
    raise InvalidSpec(f"unknown family {family!r}")


def spec_to_json(spec: FamilySpec) -> str:
    return json.dumps(spec_to_dict(spec), separators=(",", ":"))


def spec_from_json(text: str) -> FamilySpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InvalidSpec("family spec JSON must be an object")
    return spec_from_dict(obj)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = set()

    def clique(self, size: int) -> list:
        verts = list(range(self.n, self.n + size))
        self.n += size
        self.edges.update(combinations(verts, 2))
        return verts

    def join(self, xs, ys):
        for u in xs:
            for v in ys:
                self.edges.add((min(u, v), max(u, v)))

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(self.edges))


def build(spec: FamilySpec) -> SimpleGraph:
    """Expand a family spec into an explicit labelled :class:`SimpleGraph`."""
    b = _Builder()
    if isinstance(spec, (CliquePath, RingOfCliques)):
        cliques = [b.clique(a) for a in spec.a]
        for x, y in zip(cliques, cliques[1:]):
            b.join(x, y)
        if isinstance(spec, RingOfCliques):
            b.join(cliques[-1], cliques[0])
        return b.graph()
    if isinstance(spec, GeneralizedTheta):
        s, t = b.clique(1), b.clique(1)
        for m in spec.m:
            chain = [s] + [b.clique(1) for _ in range(m - 1)] + [t]
            for x, y in zip(chain, chain[1:]):
                b.join(x, y)
        return b.graph()
    if isinstance(spec, CliqueTheta):
        left, right = b.clique(spec.j), b.clique(spec.k)
        for sizes in spec.S:
            chain = [left] + [b.clique(a) for a in sizes] + [right]
            for x, y in zip(chain, chain[1:]):
                b.join(x, y)
        return b.graph()
    raise InvalidSpec(f"not a family spec: {spec!r}")


def join_complete(g: SimpleGraph, n: int) -> SimpleGraph:
    """``g`` joined with ``K_n``: new vertices ``g.n_vertices .. g.n_vertices+n-1``."""
    if n < 1:
        raise ValueError("join order must be positive")
    new = range(g.n_vertices, g.n_vertices + n)
    edges = set(g.edges)
    edges.update(combinations(new, 2))
    edges.update((u, v) for u in range(g.n_vertices) for v in new)
    return SimpleGraph(g.n_vertices + n, frozenset(edges))


def blow_up_vertex(g: SimpleGraph, v: int, n: int) -> SimpleGraph:
    """Replace ``v`` by an ``n``-clique whose vertices all inherit ``v``'s neighbours.

    ``v`` keeps its label; the ``n - 1`` copies are appended at the end.
    """
    if not 0 <= v < g.n_vertices:
        raise VertexOutOfRange(f"vertex {v} not in graph on {g.n_vertices} vertices")
    if n < 1:
        raise ValueError("clique size must be positive")
    nbrs = g.neighbours(v)
    copies = list(range(g.n_vertices, g.n_vertices + n - 1))
    clique = [v] + copies
    edges = set(g.edges)
    edges.update(combinations(clique, 2))
    edges.update((w, c) for c in copies for w in nbrs)
    return SimpleGraph(g.n_vertices + n - 1, frozenset(edges))


def theta_as_clique_theta(m: Sequence[int]) -> CliqueTheta:
    """Rewrite the generalised theta graph with path lengths ``m`` as ``T(1, S, 1)``.

    A path of ``m_i`` edges has ``m_i - 1`` internal vertices, each a 1-clique.
    """
    m = tuple(m)
    if not m or any(x < 2 for x in m):
        raise UnsupportedLength(f"every path needs at least one internal vertex, got {m}")
    return CliqueTheta(1, tuple((1,) * (x - 1) for x in m), 1)
