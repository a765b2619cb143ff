"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored constant term first.  The zero polynomial is the
empty tuple; every other polynomial has a nonzero last coefficient.

    IntPoly((0, 2, -3, 1))  ->  X^3 - 3X^2 + 2X

Arithmetic between two ``IntPoly`` values stays in ``IntPoly``; anything
touching a ``RatPoly`` (or a ``Fraction`` scalar) is promoted to ``RatPoly``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class NonDivisible(ArithmeticError):
    """Raised by :func:`div_exact` when the remainder is nonzero."""


def _strip(coeffs: Iterable[Number]) -> list:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


class _DensePoly:
    coeffs: tuple

    # -- structure -------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> Number:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, neg(_lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), neg(self))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = _make((1,), type(self) is IntPoly)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __floordiv__(self, other):
        return div_exact(self, _lift(other))

    def __call__(self, x):
        if isinstance(x, complex) or isinstance(x, float):
            return eval_complex(self, x)
        return evaluate(self, x)

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(_strip([other]))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "X" if i == 1 else f"X^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True, eq=False)
class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        vals = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"IntPoly coefficient must be int, got {type(c).__name__}")
            vals.append(int(c))
        object.__setattr__(self, "coeffs", tuple(_strip(vals)))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def to_rat(self) -> "RatPoly":
        return RatPoly(self.coeffs)

    def to_json(self) -> str:
        return poly_to_json(self)


@dataclass(frozen=True, eq=False)
class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients (``Fraction``, lowest terms)."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_strip(Fraction(c) for c in self.coeffs)))

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        """Convert to :class:`IntPoly`; raises ``ValueError`` if any denominator is not 1."""
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return IntPoly(tuple(c.numerator for c in self.coeffs))


AnyPoly = Union[IntPoly, RatPoly]

X = IntPoly((0, 1))
ONE = IntPoly((1,))
ZERO = IntPoly(())


def _make(coeffs, integral: bool) -> AnyPoly:
    return IntPoly(tuple(coeffs)) if integral else RatPoly(tuple(coeffs))


def _lift(v) -> AnyPoly:
    if isinstance(v, _DensePoly):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(v, int):
        return IntPoly((v,))
    if isinstance(v, Fraction):
        return RatPoly((v,))
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial")


def _both_int(a: AnyPoly, b: AnyPoly) -> bool:
    return isinstance(a, IntPoly) and isinstance(b, IntPoly)


def as_poly(v) -> AnyPoly:
    """Coerce an int, Fraction, or coefficient sequence into a polynomial."""
    if isinstance(v, (list, tuple)):
        if all(isinstance(c, int) for c in v):
            return IntPoly(tuple(v))
        return RatPoly(tuple(v))
    return _lift(v)


def add(a: AnyPoly, b: AnyPoly) -> AnyPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return _make((a[i] + b[i] for i in range(n)), _both_int(a, b))


def neg(a: AnyPoly) -> AnyPoly:
    return type(a)(tuple(-c for c in a.coeffs))


def mul(a: AnyPoly, b: AnyPoly) -> AnyPoly:
    integral = _both_int(a, b)
    if not a.coeffs or not b.coeffs:
        return _make((), integral)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return _make(out, integral)


def scale(a: AnyPoly, c: Number) -> AnyPoly:
    """Multiply every coefficient by the scalar ``c``."""
    return mul(a, _lift(c))


def divmod_poly(a: AnyPoly, b: AnyPoly) -> tuple:
    """Long division ``a = q*b + r`` with ``deg r < deg b``, over the rationals."""
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db = len(b.coeffs) - 1
    lead = Fraction(b.coeffs[-1])
    if len(rem) <= db:
        return RatPoly(()), RatPoly(tuple(rem))
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c / lead
        quot[i - db] = q
        for j, cb in enumerate(b.coeffs):
            rem[i - db + j] -= q * cb
    return RatPoly(tuple(quot)), RatPoly(tuple(rem[:db]))


def div_exact(a: AnyPoly, b: AnyPoly) -> AnyPoly:
    """Return ``q`` with ``a == q*b``; raise :class:`NonDivisible` otherwise.

    For two ``IntPoly`` arguments the quotient must also be integral.
    """
    if _both_int(a, b) and b.coeffs and b.coeffs[-1] in (1, -1):
        return _div_exact_unit(a, b)
    q, r = divmod_poly(a, b)
    if r.coeffs:
        raise NonDivisible(f"{a} is not divisible by {b} (remainder {r})")
    if _both_int(a, b):
        if not q.is_integral():
            raise NonDivisible(f"{a} / {b} has non-integral quotient {q}")
        return q.to_int()
    return q


def _div_exact_unit(a: IntPoly, b: IntPoly) -> IntPoly:
    # integer long division by a divisor with unit leading coefficient
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) <= db:
        if rem:
            raise NonDivisible(f"{a} is not divisible by {b}")
        return IntPoly(())
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c * lead
        quot[i - db] = q
        base = i - db
        for j in range(db + 1):
            rem[base + j] -= q * bc[j]
    if any(rem[:db]):
        raise NonDivisible(f"{a} is not divisible by {b} (remainder {IntPoly(tuple(rem[:db]))})")
    return IntPoly(tuple(quot))


def compose_linear(a: AnyPoly, s: Number, t: Number) -> RatPoly:
    """Return ``a(s*X + t)`` expanded exactly."""
    lin = RatPoly((Fraction(t), Fraction(s)))
    out = RatPoly(())
    for c in reversed(a.coeffs):
        out = add(mul(out, lin), RatPoly((c,)))
    return out


def shift(a: AnyPoly, t: int) -> AnyPoly:
    """``a(X + t)`` for integer ``t``, keeping the input's coefficient ring."""
    out = compose_linear(a, 1, t)
    return out.to_int() if isinstance(a, IntPoly) else out


def falling_factorial(n: int) -> IntPoly:
    """``(X)_n = X(X-1)...(X-n+1)``; the constant 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("falling factorial order must be nonnegative")
    return falling_factorial_at(0, n)


def falling_factorial_at(offset: int, n: int) -> IntPoly:
    """``(X - offset)_n = (X-offset)(X-offset-1)...(X-offset-n+1)``."""
    if n < 0:
        raise ValueError("falling factorial order must be nonnegative")
    out = [1]
    for i in range(n):
        root = offset + i
        # multiply by (X - root)
        nxt = [0] * (len(out) + 1)
        for d, c in enumerate(out):
            nxt[d + 1] += c
            nxt[d] -= root * c
        out = nxt
    return IntPoly(tuple(out))


def binomial_poly(k: int) -> RatPoly:
    """``C(X, k) = (X)_k / k!`` as a rational polynomial."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ff = falling_factorial(k)
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return RatPoly(tuple(Fraction(c, fact) for c in ff.coeffs))


def evaluate(a: AnyPoly, x: Number) -> Number:
    """Exact Horner evaluation at an integer or rational point."""
    acc: Number = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return acc.numerator
    return acc


def eval_complex(a: AnyPoly, z: complex) -> complex:
    """Floating-point Horner evaluation at a complex point."""
    z = complex(z)
    acc = 0j
    for c in reversed(a.coeffs):
        acc = acc * z + float(c)
    return acc


def product(polys: Iterable[AnyPoly]) -> AnyPoly:
    out: AnyPoly = ONE
    for p in polys:
        out = mul(out, p)
    return out


def linear(root: Number) -> AnyPoly:
    """The monic linear polynomial ``X - root``."""
    return _make((-root, 1), isinstance(root, int))


def poly_to_json(a: AnyPoly) -> str:
    """``{"coeffs": ["c0", "c1", ...]}`` with decimal (or ``p/q``) strings."""
    return json.dumps({"coeffs": [str(c) for c in a.coeffs]})


def poly_from_json(text: Union[str, dict]) -> AnyPoly:
    obj = json.loads(text) if isinstance(text, str) else text
    raw: Sequence = obj["coeffs"]
    vals = [Fraction(str(c)) for c in raw]
    if all(v.denominator == 1 for v in vals):
        return IntPoly(tuple(v.numerator for v in vals))
    return RatPoly(tuple(vals))


# Functional alias matching the operator names used across the package.
eval = evaluate  # noqa: A001
