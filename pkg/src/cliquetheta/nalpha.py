"""Root scaling for clique-thetas, join shifts, and a best-effort root approximator.

Scaling every clique size of ``T(1, S_1, ..., S_n, k)`` by ``p`` scales the
interesting factor's roots by ``p``.  At the polynomial level this is the
exact identity

    F_p(p X) = p^d F_1(X),      d = sum |S_i| = deg F_1,

where ``F_1`` and ``F_p`` are the interesting factors of the original and
scaled graphs.  Joining a graph with ``K_n`` shifts its roots by ``n``:
``P_{G v K_n}(X) = (X)_n P_G(X - n)``.

The approximator searches generalised theta graphs with uniform path
lengths (and, optionally, their scaled blow-ups) for a root near a target.
Targets inside the disc ``|z - 1| < 1`` are approached through ``w = z - 2``
and a join with ``K_2``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .closed_forms import clique_theta_poly, interesting_factor_theta
from .graphs import CliqueTheta, spec_to_dict, theta_as_clique_theta
from .poly import IntPoly, compose_linear, falling_factorial, shift
from .roots import find_roots, relative_residual

DISC_SLACK = 1e-12


class EmptySearch(ValueError):
    pass


def _require_j1(spec: CliqueTheta):
    if spec.j != 1:
        raise ValueError(f"root scaling is only defined here for j == 1, got j = {spec.j}")


def scale_spec(spec: CliqueTheta, p: int) -> CliqueTheta:
    """``T(1, pS_1, ..., pS_n, pk)``."""
    _require_j1(spec)
    if p < 1:
        raise ValueError("scale factor must be a positive integer")
    return CliqueTheta(1, tuple(tuple(p * a for a in s) for s in spec.S), p * spec.k)


@dataclass(frozen=True)
class ScalingReport:
    holds: bool
    p: int
    degree: int
    base_factor: IntPoly
    scaled_factor: IntPoly
    lhs: IntPoly
    rhs: IntPoly


def verify_scaling_exact(spec: CliqueTheta, p: int) -> ScalingReport:
    """Check ``F_p(pX) == p^d F_1(X)`` in exact integer arithmetic.

    Written with the ``1/X`` of each ring factor rescaled too, so the power
    of ``p`` is the degree ``d`` of the interesting factor.
    """
    f1 = interesting_factor_theta(spec)
    fp = interesting_factor_theta(scale_spec(spec, p))
    d = f1.degree
    lhs = compose_linear(fp, p, 0).to_int()
    rhs = (p ** d) * f1
    return ScalingReport(lhs == rhs, p, d, f1, fp, lhs, rhs)


def match_roots(predicted: Sequence[complex], actual: Sequence[complex], tol: float):
    """Greedy nearest-neighbour pairing; returns (all_matched, worst_distance).

    Each actual root is used at most once, so two predictions cannot both
    claim the same root.
    """
    pool = list(actual)
    worst = 0.0
    for z in predicted:
        if not pool:
            return False, float("inf")
        dists = [abs(z - w) for w in pool]
        i = int(np.argmin(dists))
        worst = max(worst, dists[i])
        pool.pop(i)
    return worst <= tol, worst


def verify_scaling_numeric(spec: CliqueTheta, p: int, tol: float = 1e-8) -> Tuple[bool, float]:
    """Every non-integer root of ``spec``'s polynomial, times ``p``, is a root of the scaled graph's."""
    base = find_roots(clique_theta_poly(spec)).non_integer
    scaled = find_roots(clique_theta_poly(scale_spec(spec, p))).non_integer
    return match_roots(p * base, scaled, tol)


def shifted_poly_by_join(p_g: IntPoly, n: int) -> IntPoly:
    """Chromatic polynomial of ``G`` joined with ``K_n``, given ``P_G``."""
    if n < 1:
        raise ValueError("join order must be positive")
    return falling_factorial(n) * shift(p_g, -n)


@dataclass(frozen=True)
class NAlphaWitness:
    spec: CliqueTheta
    join_order: int
    poly: IntPoly


def nalpha_witness(base: CliqueTheta, join_order: int, p: int) -> NAlphaWitness:
    """Graph realising ``p * (alpha + join_order)`` for each non-integer root ``alpha`` of ``base``.

    The graph is ``scale_spec(base, p)`` joined with ``K_{p * join_order}``.
    """
    _require_j1(base)
    if join_order < 0 or join_order % 2:
        raise ValueError("join order must be a nonnegative even integer")
    scaled = scale_spec(base, p)
    poly = clique_theta_poly(scaled)
    joined = p * join_order
    if joined:
        poly = shifted_poly_by_join(poly, joined)
    return NAlphaWitness(scaled, joined, poly)


# ---------------------------------------------------------------------------
# Approximator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Budget:
    """Search limits.

    ``n_max``/``m_max`` bound the number and length of paths of the uniform
    theta graphs; ``p_max`` bounds the blow-up factor; ``nonuniform_total``
    (0 = off) additionally admits theta graphs with mixed lengths whose
    total edge count is at most this value.
    """

    n_max: int = 12
    m_max: int = 12
    p_max: int = 1
    nonuniform_total: int = 0

    def dominates(self, other: "Budget") -> bool:
        return (
            self.n_max >= other.n_max
            and self.m_max >= other.m_max
            and self.p_max >= other.p_max
            and self.nonuniform_total >= other.nonuniform_total
        )


@dataclass(frozen=True)
class ApproxResult:
    """Best root found for ``target``.

    The realised graph is ``scale_spec(witness, scale_p)`` joined with
    ``K_{join_order}`` (no join when 0); ``achieved_root`` is one of its
    chromatic roots.
    """

    target: complex
    achieved_root: complex
    witness: CliqueTheta
    join_order: int
    scale_p: int
    residual: float
    routed_through_disc: bool = False
    error: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "error", abs(self.achieved_root - self.target))

    def realised_spec(self) -> CliqueTheta:
        return scale_spec(self.witness, self.scale_p)

    def realised_poly(self) -> IntPoly:
        poly = clique_theta_poly(self.realised_spec())
        if self.join_order:
            poly = shifted_poly_by_join(poly, self.join_order)
        return poly

    def verify(self, tol: float = 1e-8) -> bool:
        """Rebuild the witness polynomial, solve it, and look for ``achieved_root``."""
        roots = find_roots(self.realised_poly()).non_integer
        return bool(len(roots)) and float(np.min(np.abs(roots - self.achieved_root))) <= tol

    def to_dict(self) -> dict:
        return {
            "target": [self.target.real, self.target.imag],
            "achieved": [self.achieved_root.real, self.achieved_root.imag],
            "error": self.error,
            "witness": spec_to_dict(self.witness),
            "join_order": self.join_order,
            "scale_p": self.scale_p,
            "residual": self.residual,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=None)
def _theta_roots(lengths: Tuple[int, ...]) -> Tuple[complex, ...]:
    spec = theta_as_clique_theta(lengths)
    return tuple(find_roots(interesting_factor_theta(spec)).non_integer.tolist())


def _candidate_thetas(budget: Budget):
    seen = set()
    for n in range(2, budget.n_max + 1):
        for m in range(2, budget.m_max + 1):
            lengths = (m,) * n
            seen.add(lengths)
            yield lengths
    if budget.nonuniform_total:
        for n in range(2, budget.n_max + 1):
            for lengths in combinations_with_replacement(range(2, budget.m_max + 1), n):
                if sum(lengths) <= budget.nonuniform_total and lengths not in seen:
                    yield lengths


def _search(target: complex, budget: Budget, cloud: Optional[list], join: int):
    best = None
    for lengths in _candidate_thetas(budget):
        roots = _theta_roots(lengths)
        spec = theta_as_clique_theta(lengths)
        for p in range(1, budget.p_max + 1):
            n_vertices = 1 + p + p * sum(lengths) - p * len(lengths)
            key_spec = json.dumps([list(lengths), p])
            for z in roots:
                zp = p * z
                if cloud is not None:
                    cloud.append((lengths, p, join, zp + join))
                key = (abs(zp - target), n_vertices, key_spec, zp.real, zp.imag)
                if best is None or key < best[0]:
                    best = (key, spec, p, zp)
    return best


def approximate_root(
    target: complex,
    eps: float = 1e-6,
    budget: Budget = Budget(),
    *,
    cloud: Optional[list] = None,
) -> ApproxResult:
    """Closest chromatic root to ``target`` among the graphs admitted by ``budget``.

    ``eps`` is the accuracy the caller hopes for; it is not guaranteed at a
    finite budget (compare ``result.error`` against it).  Enlarging the
    budget never increases the returned error.  If ``cloud`` is a list, every
    candidate root visited is appended to it as ``(lengths, p, join, root)``.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if budget.n_max < 2 or budget.m_max < 2 or budget.p_max < 1:
        raise EmptySearch(f"budget {budget} admits no theta graph")
    target = complex(target)
    in_disc = abs(target - 1) < 1 - DISC_SLACK
    join = 2 if in_disc else 0
    aim = target - join
    best = _search(aim, budget, cloud, join)
    if best is None:
        raise EmptySearch(f"budget {budget} admits no theta graph")
    _, spec, p, zp = best
    achieved = zp + join
    poly = clique_theta_poly(scale_spec(spec, p))
    if join:
        poly = shifted_poly_by_join(poly, join)
    return ApproxResult(
        target=target,
        achieved_root=achieved,
        witness=spec,
        join_order=join,
        scale_p=p,
        residual=relative_residual(poly, achieved),
        routed_through_disc=in_disc,
    )


def cloud_to_csv(cloud: List[tuple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["path_lengths", "scale_p", "join_order", "re", "im"])
    for lengths, p, join, z in cloud:
        w.writerow([" ".join(map(str, lengths)), p, join, repr(z.real), repr(z.imag)])
    return buf.getvalue()
