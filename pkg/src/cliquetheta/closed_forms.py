"""Closed-form chromatic polynomials for clique-paths, rings of cliques and clique-thetas.

Conventions
-----------
``(X)_n`` is the falling factorial and ``(X - c)_n`` the same shifted by ``c``.
``r(1, a_2, ..., a_n; X)`` is the interesting factor of the ring
``R(1, a_2, ..., a_n)``:

    r = ( prod (X - a_i) - prod (-a_i) ) / X

Clique-theta formulas require a trivial left extremal clique (``j == 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .graphs import CliquePath, CliqueTheta, FamilySpec, GeneralizedTheta, InvalidSpec, RingOfCliques
from .poly import (
    IntPoly,
    RatPoly,
    X,
    binomial_poly,
    div_exact,
    evaluate,
    falling_factorial,
    falling_factorial_at,
    linear,
    product,
)


class IntegralityViolation(ArithmeticError):
    """A formula that must produce an integer polynomial left a rational residue."""


class NoClosedForm(ValueError):
    pass


@dataclass(frozen=True)
class InterestingFactor:
    poly: IntPoly
    provenance: str


def _require_j1(spec: CliqueTheta):
    if spec.j != 1:
        raise NoClosedForm(f"closed forms need j == 1, got j = {spec.j}")


# ---------------------------------------------------------------------------
# Clique-paths and rings
# ---------------------------------------------------------------------------


def clique_path_poly(a: Sequence[int]) -> IntPoly:
    a = CliquePath(a).a
    if len(a) == 1:
        return falling_factorial(a[0])
    top = product(falling_factorial(x + y) for x, y in zip(a, a[1:]))
    bottom = product(falling_factorial(x) for x in a[1:-1])
    return div_exact(top, bottom)


def interesting_factor_ring(a: Sequence[int]) -> IntPoly:
    """``r(1, a_2, ..., a_n; X)`` for the tail ``a = (a_2, ..., a_n)``."""
    a = tuple(a)
    if not a:
        raise InvalidSpec("interesting factor needs at least one clique size")
    shifted = product(linear(x) for x in a)
    const = 1
    for x in a:
        const *= -x
    return div_exact(shifted - const, X)


def ring_reduced_poly(a: Sequence[int]) -> IntPoly:
    """Ring ``R(1, a_2, ..., a_n)`` as a product of falling factorials and ``r``."""
    a = RingOfCliques(a).a
    if a[0] != 1:
        raise InvalidSpec(f"reduced ring formula needs a_1 == 1, got {a}")
    n = len(a)
    # 1-based indexing to keep the factor ranges readable
    A = (None,) + a
    out = X * falling_factorial_at(1, A[n - 1] + A[n] - 1)
    for i in range(2, n - 1):
        out = out * falling_factorial_at(A[i + 1] + 1, A[i] - 1)
    return out * interesting_factor_ring(a[1:])


def _v(k: int) -> RatPoly:
    prev = binomial_poly(k - 1) if k >= 1 else RatPoly(())
    return binomial_poly(k) - prev


def ring_general_poly(a: Sequence[int], *, sign: str = "corrected") -> IntPoly:
    """Read's summation formula for an arbitrary ring of cliques.

    The sum runs over ``k = 0..min(a)`` (larger ``k`` make ``(a_i)_k`` vanish),
    and each term's denominator ``prod (X)_{a_i+k}`` is divided into the
    prefactor ``prod (X)_{a_i+a_{i+1}}`` exactly before summing in rational
    arithmetic.

    ``sign`` selects the per-term sign:

    ``"corrected"``  ``(-1)^{nk} prod (a_i)_k``       (matches the oracle)
    ``"printed"``    ``(-1)^{nk} prod (-(a_i)_k)``    (off by ``(-1)^n``)
    ``"n-k"``        ``(-1)^{n-k} prod (-(a_i)_k)``
    ``"k"``          ``(-1)^k prod (-(a_i)_k)``
    """
    a = RingOfCliques(a).a
    n = len(a)
    prefactor = product(falling_factorial(a[i] + a[(i + 1) % n]) for i in range(n))
    total = RatPoly(())
    for k in range(min(a) + 1):
        coeff = 1
        for x in a:
            coeff *= evaluate(falling_factorial(k), x)
        if sign == "corrected":
            s = (-1) ** (n * k)
        elif sign == "printed":
            s = (-1) ** (n * k) * (-1) ** n
        elif sign == "n-k":
            s = (-1) ** (n - k) * (-1) ** n
        elif sign == "k":
            s = (-1) ** k * (-1) ** n
        else:
            raise ValueError(f"unknown sign convention {sign!r}")
        denom = product(falling_factorial(x + k) for x in a)
        total = total + _v(k) * div_exact(prefactor, denom) * Fraction(s * coeff)
    if not total.is_integral():
        raise IntegralityViolation(f"ring formula left rational coefficients for {a}")
    return total.to_int()


# ---------------------------------------------------------------------------
# Clique-thetas
# ---------------------------------------------------------------------------


def interesting_factor_theta(spec: CliqueTheta) -> IntPoly:
    """``k (X-k)^{n-1} prod r(1,S_i) + prod r(1,S_i,k)``; monic of degree ``sum |S_i|``."""
    _require_j1(spec)
    k, n = spec.k, spec.n_paths
    first = k * linear(k) ** (n - 1) * product(interesting_factor_ring(s) for s in spec.S)
    second = product(interesting_factor_ring(s + (k,)) for s in spec.S)
    return first + second


def clique_theta_prefactor(spec: CliqueTheta) -> IntPoly:
    """The falling-factorial part of the clique-theta formula."""
    _require_j1(spec)
    k, S = spec.k, spec.S
    out = falling_factorial(S[-1][-1] + k)
    for s in S[:-1]:
        out = out * falling_factorial_at(k + 1, s[-1] - 1)
    for s in S:
        for left, right in zip(s, s[1:]):
            out = out * falling_factorial_at(right + 1, left - 1)
    return out


def clique_theta_poly(spec: CliqueTheta) -> IntPoly:
    """Chromatic polynomial of ``T(1, S_1, ..., S_n, k)`` from the product formula."""
    return clique_theta_prefactor(spec) * interesting_factor_theta(spec)


def _empty_theta_poly(k: int) -> IntPoly:
    # the singleton and the k-clique with no paths between them
    return X * falling_factorial(k)


def _theta_base_case(sizes: Sequence[int], k: int) -> IntPoly:
    """All paths have one internal clique: ``g + k f``.

    ``f`` is the K_k-sum of (a_i + k)-cliques (singleton merged into the
    k-clique), ``g`` the K_{k+1}-sum of (a_i + k + 1)-cliques (singleton
    joined to the k-clique).
    """
    n = len(sizes)
    f = div_exact(product(falling_factorial(a + k) for a in sizes), falling_factorial(k) ** (n - 1))
    g = div_exact(
        product(falling_factorial(a + k + 1) for a in sizes), falling_factorial(k + 1) ** (n - 1)
    )
    return g + k * f


def clique_theta_poly_recursive(spec: CliqueTheta) -> IntPoly:
    """Same polynomial as :func:`clique_theta_poly`, via the path-shortening recurrence.

    Pick a path ``S_1`` with at least two cliques and delete/contract the
    edges from the singleton to its first clique:

        P(T) = P(T minus path 1) * P(L(S_1, k)) / (X)_k
               - a_1 * (X)_{a_1 + a_2} * P(T with a_1 dropped from S_1) / (X)_{a_2 + 1}

    When every path has a single clique the ``g + k f`` base case applies.
    """
    _require_j1(spec)
    return _recur(tuple(spec.S), spec.k)


@lru_cache(maxsize=65536)
def _recur(S: tuple, k: int) -> IntPoly:
    if not S:
        return _empty_theta_poly(k)
    long_paths = [i for i, s in enumerate(S) if len(s) >= 2]
    if not long_paths:
        return _theta_base_case([s[0] for s in S], k)
    i = long_paths[0]
    s1 = S[i]
    others = S[:i] + S[i + 1:]
    a1, a2 = s1[0], s1[1]
    deleted = div_exact(_recur(others, k) * clique_path_poly(s1 + (k,)), falling_factorial(k))
    shortened = S[:i] + (s1[1:],) + S[i + 1:]
    contracted = div_exact(
        falling_factorial(a1 + a2) * _recur(shortened, k), falling_factorial(a2 + 1)
    )
    return deleted - a1 * contracted


def cycle_poly(m: int) -> IntPoly:
    """``(X-1)^m + (-1)^m (X-1)``."""
    return linear(1) ** m + (-1) ** m * linear(1)


def generalized_theta_poly(m: Sequence[int]) -> IntPoly:
    """Generalised theta graph; paths of length >= 2 go through the clique-theta formula.

    A single direct edge between the terminals is removed by deletion-contraction:
    contracting it turns every other path into a cycle through one shared vertex.
    """
    from .graphs import theta_as_clique_theta

    m = GeneralizedTheta(m).m
    rest = tuple(x for x in m if x != 1)
    if len(rest) == len(m):
        return clique_theta_poly(theta_as_clique_theta(m))
    if not rest:
        return falling_factorial(2)
    without_edge = generalized_theta_poly(rest)
    bouquet = div_exact(product(cycle_poly(x) for x in rest), X ** (len(rest) - 1))
    return without_edge - bouquet


def formula_poly(spec: FamilySpec) -> IntPoly:
    """Closed-form polynomial for any family spec that has one."""
    if isinstance(spec, CliquePath):
        return clique_path_poly(spec.a)
    if isinstance(spec, RingOfCliques):
        a = spec.a
        if 1 in a:
            i = a.index(1)
            return ring_reduced_poly(a[i:] + a[:i])
        return ring_general_poly(a)
    if isinstance(spec, GeneralizedTheta):
        return generalized_theta_poly(spec.m)
    if isinstance(spec, CliqueTheta):
        return clique_theta_poly(spec)
    raise TypeError(f"not a family spec: {spec!r}")
