"""Complex roots of exact integer polynomials.

Integer roots are removed first by exact division, so chromatic
polynomials lose their ``0, 1, 2, ...`` roots before any floating point is
involved.  The remaining factor goes to one of two engines:

``"arb"``
    flint's ball-arithmetic root isolation (``fmpz_poly.complex_roots``),
    which raises its working precision until every root is certified.
``"aberth"``
    Aberth-Ehrlich simultaneous iteration, first in double precision and
    then continued in gmpy2 multiprecision against the exact coefficients.
    Interesting factors of large theta graphs have coefficients near 2^140
    with roots of modulus ~10, so double precision alone is useless there.

The reported residual of a root ``z`` is the backward-error measure

    |p(z)| / sum_i |c_i| |z|^i

evaluated exactly enough (in multiprecision) on the original polynomial.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import flint
import gmpy2
import numpy as np

from .poly import IntPoly, div_exact, linear

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 1000


class NoConvergence(ArithmeticError):
    def __init__(self, message: str, worst_residual: float):
        super().__init__(message)
        self.worst_residual = worst_residual


@dataclass(frozen=True)
class RootSet:
    """Roots of one polynomial.

    ``integer_roots`` holds ``(value, multiplicity)`` pairs found exactly;
    ``complex_roots`` holds ``(re, im, residual)`` for everything else, one
    entry per root, sorted by real then imaginary part.
    """

    integer_roots: Tuple[Tuple[int, int], ...]
    complex_roots: Tuple[Tuple[float, float, float], ...]
    source_degree: int

    @property
    def non_integer(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im, _ in self.complex_roots], dtype=complex)

    def all_roots(self) -> np.ndarray:
        """Every root as a complex array, integer roots repeated by multiplicity."""
        ints = [complex(v) for v, m in self.integer_roots for _ in range(m)]
        return np.concatenate([np.array(ints, dtype=complex), self.non_integer])

    @property
    def max_residual(self) -> float:
        return max((r for _, _, r in self.complex_roots), default=0.0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "multiplicity", "residual"])
        for v, m in self.integer_roots:
            w.writerow([v, 0, m, 0])
        for re, im, res in self.complex_roots:
            w.writerow([repr(re), repr(im), 1, f"{res:.3e}"])
        return buf.getvalue()


def _root_bound(coeffs: Sequence[int]) -> float:
    """Fujiwara bound on the moduli of the roots (coefficients constant-first)."""
    d = len(coeffs) - 1
    lead = abs(coeffs[-1])
    best = -math.inf
    for k in range(1, d + 1):
        c = abs(coeffs[d - k])
        if c == 0:
            continue
        ratio = math.log(c) - math.log(lead)
        if k == d:
            ratio -= math.log(2)
        best = max(best, ratio / k)
    return 2.0 * math.exp(best) if best > -math.inf else 0.0


def deflate_integer_roots(p: IntPoly) -> Tuple[IntPoly, List[Tuple[int, int]]]:
    """Divide out every integer root of ``p`` exactly.

    Returns the integer-root-free quotient and ``(root, multiplicity)`` pairs
    in increasing order of root.  Candidates are the divisors of the lowest
    nonzero coefficient inside the Fujiwara bound.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    coeffs = list(p.coeffs)
    found = []
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        found.append((0, zeros))
    q = IntPoly(tuple(coeffs[zeros:]))
    if q.degree < 1:
        return q, found
    bound = int(math.floor(_root_bound(q.coeffs))) + 1
    for m in sorted(range(-bound, bound + 1), key=lambda v: (abs(v), v)):
        if m == 0 or q.degree < 1 or q.coeffs[0] % m:
            continue
        mult = 0
        while q.degree >= 1:
            try:
                q = div_exact(q, linear(m))
            except ArithmeticError:
                break
            mult += 1
        if mult:
            found.append((m, mult))
    found.sort()
    return q, found


# ---------------------------------------------------------------------------
# Aberth-Ehrlich
# ---------------------------------------------------------------------------


def _horner_with_derivative(c: np.ndarray, z: np.ndarray):
    # c is highest-degree first
    p = np.full_like(z, c[0])
    dp = np.zeros_like(z)
    for a in c[1:]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def aberth(coeffs: Sequence[int], max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Double-precision Aberth-Ehrlich iteration (coefficients constant-first).

    Starts from a circle of radius half the Fujiwara bound, rotated off the
    real axis.  Good enough on its own only for well-conditioned inputs.
    """
    d = len(coeffs) - 1
    if d < 1:
        return np.zeros(0, dtype=complex)
    lead = coeffs[-1]
    c = np.array([float(gmpy2.mpq(x, lead)) for x in reversed(coeffs)], dtype=complex)
    if not np.all(np.isfinite(c)):
        raise OverflowError("coefficients exceed double range")
    if d == 1:
        return np.array([-c[1]], dtype=complex)
    radius = max(_root_bound(coeffs) / 2, 1e-3)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    eye = np.eye(d, dtype=bool)
    for _ in range(max_sweeps):
        p, dp = _horner_with_derivative(c, z)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            diff[eye] = 1.0
            inv = 1.0 / diff
            inv[eye] = 0.0
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        step[~np.isfinite(step)] = 0.0
        z = z - step
        if np.all(np.abs(step) <= 1e-15 * np.maximum(np.abs(z), 1.0)):
            break
    return z


def aberth_refine(
    coeffs: Sequence[int], start: Sequence[complex], max_sweeps: int = MAX_SWEEPS
) -> List[complex]:
    """Continue Aberth sweeps in multiprecision until relative steps drop below 1e-20.

    Working precision is ``2 * (coefficient bits) + 64``, which keeps the
    cancellation in Horner's rule from swamping the corrections.  Updates are
    applied in place (Gauss-Seidel order).
    """
    bits = max(abs(c) for c in coeffs).bit_length()
    prec = 2 * bits + 64
    ctx = gmpy2.context(gmpy2.get_context(), precision=prec)
    with ctx:
        c = [gmpy2.mpfr(x) for x in reversed(coeffs)]
        z = [gmpy2.mpc(complex(v)) for v in start]
        d = len(z)
        tol = gmpy2.mpfr("1e-20")
        for _ in range(max_sweeps):
            worst = 0
            for i in range(d):
                zi = z[i]
                p, dp = c[0], gmpy2.mpc(0)
                for a in c[1:]:
                    dp = dp * zi + p
                    p = p * zi + a
                if p == 0:
                    continue
                ratio = p / dp
                repel = sum(1 / (zi - z[j]) for j in range(d) if j != i)
                st = ratio / (1 - ratio * repel)
                z[i] = zi - st
                worst = max(worst, abs(st) / max(1, abs(zi)))
            if worst < tol:
                break
        else:
            raise NoConvergence("multiprecision Aberth did not settle", float("inf"))
        return [complex(v) for v in z]


def _arb_roots(q: IntPoly) -> List[complex]:
    out = []
    for ball, mult in flint.fmpz_poly(list(q.coeffs)).complex_roots():
        z = complex(float(ball.real.mid()), float(ball.imag.mid()))
        out.extend([z] * mult)
    return out


def relative_residual(p: IntPoly, z: complex) -> float:
    """``|p(z)| / sum |c_i| |z|^i`` in enough precision to be exact at double output."""
    bits = max(abs(c) for c in p.coeffs).bit_length()
    ctx = gmpy2.context(gmpy2.get_context(), precision=bits + 128)
    with ctx:
        w = gmpy2.mpc(complex(z))
        r = abs(w)
        val, scale = gmpy2.mpc(0), gmpy2.mpfr(0)
        for c in reversed(p.coeffs):
            val = val * w + c
            scale = scale * r + abs(c)
        return float(abs(val) / scale) if scale else 0.0


def find_roots(
    p: IntPoly, tol: float = DEFAULT_TOL, *, method: str = "arb", max_sweeps: int = MAX_SWEEPS
) -> RootSet:
    """All roots of ``p``: integers exactly, the rest to relative residual ``<= tol``.

    Raises :class:`NoConvergence` (carrying the worst residual) if any
    non-integer root fails the residual test.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    quotient, ints = deflate_integer_roots(p)
    if quotient.degree < 1:
        return RootSet(tuple(ints), (), p.degree)
    if method == "arb":
        approx = _arb_roots(quotient)
    elif method == "aberth":
        approx = aberth_refine(quotient.coeffs, aberth(quotient.coeffs, max_sweeps), max_sweeps)
    else:
        raise ValueError(f"unknown root-finding method {method!r}")
    residuals = [relative_residual(p, z) for z in approx]
    worst = max(residuals)
    if worst > tol:
        raise NoConvergence(f"worst relative residual {worst:.3e} exceeds {tol:.1e}", worst)
    order = sorted(range(len(approx)), key=lambda i: (approx[i].real, approx[i].imag))
    roots = tuple((approx[i].real, approx[i].imag, residuals[i]) for i in order)
    return RootSet(tuple(ints), roots, p.degree)


def reconstruct(roots: np.ndarray) -> np.ndarray:
    """Monic coefficients (constant-first) of ``prod (X - r)`` in floating point."""
    return np.poly(roots)[::-1]
