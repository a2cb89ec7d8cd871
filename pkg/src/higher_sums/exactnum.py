"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator. Polynomials are dense, immutable and
carry the name of their indeterminate so that a polynomial in ``n`` is
never silently combined with one in ``k``.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

VARIABLES = ("n", "k")

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(value: Scalar | str, denominator: int = 1) -> Fraction:
    """Build a canonical Rational from an int, Fraction or ``"p/q"`` string."""
    if isinstance(value, str):
        if denominator != 1:
            raise TypeError("string input cannot take a separate denominator")
        return Fraction(value.strip())
    return Fraction(value, denominator)


def rat_arith(a: Scalar, b: Scalar, op: str) -> Fraction:
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def format_rational(x: Scalar) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with Rational coefficients.

    ``coeffs[j]`` is the coefficient of ``var**j``. The zero polynomial has
    an empty coefficient tuple and ``degree`` ``None``.
    """

    var: str
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.var not in VARIABLES:
            raise ValueError(f"indeterminate must be one of {VARIABLES}, got {self.var!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # construction helpers

    @classmethod
    def zero(cls, var: str) -> Polynomial:
        return cls(var, ())

    @classmethod
    def constant(cls, var: str, c: Scalar) -> Polynomial:
        return cls(var, (c,))

    @classmethod
    def monomial(cls, var: str, degree: int, c: Scalar = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls(var, (0,) * degree + (c,))

    @classmethod
    def from_roots(cls, var: str, roots: Iterable[Scalar]) -> Polynomial:
        p = cls.constant(var, 1)
        for r in roots:
            p = p * cls(var, (-Fraction(r), 1))
        return p

    # inspection

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def low_order(self) -> int | None:
        """Exponent of the lowest nonzero term."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return None

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if self.var != other.var:
            raise ValueError(
                f"indeterminate mismatch: polynomial in {self.var} vs polynomial in {other.var}"
            )

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.var, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(q.coeffs))
        return Polynomial(self.var, [self.coeff(j) + q.coeff(j) for j in range(size)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.var, [-c for c in self.coeffs])

    def __sub__(self, other: object) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.is_zero() or q.is_zero():
            return Polynomial.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(q.coeffs):
                    out[i + j] += a * b
        return Polynomial(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.var, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> Polynomial:
        return Polynomial(self.var, [c * a for a in self.coeffs])

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def shift(self, by: Scalar) -> Polynomial:
        """Return p(x + by)."""
        result = Polynomial.zero(self.var)
        lin = Polynomial(self.var, (by, 1))
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "coeffs": {str(j): format_rational(c) for j, c in enumerate(self.coeffs) if c},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Polynomial:
        coeffs = data.get("coeffs", {})
        size = max((int(j) for j in coeffs), default=-1) + 1
        dense = [Fraction(0)] * size
        for j, c in coeffs.items():
            dense[int(j)] = Fraction(c)
        return cls(data["var"], dense)

    def __str__(self) -> str:
        return format_poly_text(self)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_substitute_negated(p: Polynomial) -> Polynomial:
    """Return p(-x)."""
    return Polynomial(p.var, [-c if j % 2 else c for j, c in enumerate(p.coeffs)])


def interpolate(var: str, points: Iterable[tuple[Scalar, Scalar]]) -> Polynomial:
    """Exact Lagrange interpolation through distinct nodes."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Polynomial.zero(var)
    for i, (xi, yi) in enumerate(pts):
        if not yi:
            continue
        others = xs[:i] + xs[i + 1:]
        denom = Fraction(1)
        for xj in others:
            denom *= xi - xj
        result = result + Polynomial.from_roots(var, others).scale(yi / denom)
    return result


# rendering

def _term_text(c: Fraction, var: str, j: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if j == 0:
        body = format_rational(a)
    else:
        power = var if j == 1 else f"{var}^{j}"
        if a == 1:
            body = power
        elif a.denominator == 1:
            body = f"{a.numerator}*{power}"
        else:
            body = f"{a.numerator}/{a.denominator}*{power}"
    if first:
        return f"-{body}" if sign == "-" else body
    return f" {sign} {body}"


def format_poly_text(p: Polynomial) -> str:
    """Plain text, highest degree first, e.g. ``n^2 - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        if c:
            parts.append(_term_text(c, p.var, j, not parts))
    return "".join(parts)


def latex_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def format_poly_latex(p: Polynomial) -> str:
    """LaTeX, highest degree first, e.g. ``n^{2} - 1``."""
    if p.is_zero():
        return "0"
    out = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        if not c:
            continue
        a = abs(c)
        if j == 0:
            body = latex_rational(a)
        else:
            power = p.var if j == 1 else f"{p.var}^{{{j}}}"
            body = power if a == 1 else f"{latex_rational(a)} {power}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


def content_factor(p: Polynomial) -> tuple[Fraction, int, Polynomial]:
    """Split p as ``c * var**e * q`` with q primitive over the integers.

    The leading coefficient of q is positive; c carries the sign.
    """
    if p.is_zero():
        return Fraction(0), 0, p
    from math import gcd, lcm

    e = p.low_order() or 0
    rest = p.coeffs[e:]
    den = 1
    for c in rest:
        den = lcm(den, c.denominator)
    nums = [int(c * den) for c in rest]
    g = 0
    for v in nums:
        g = gcd(g, v)
    if nums[-1] < 0:
        g = -g
    q = Polynomial(p.var, [Fraction(v, g) for v in nums])
    return Fraction(g, den), e, q


def format_poly_latex_factored(p: Polynomial) -> str:
    """LaTeX with the rational content and the lowest power pulled out.

    ``-k^3/8 + k^2/8`` renders as ``-\\frac{1}{8} k^{2} \\left(k - 1\\right)``.
    """
    if p.is_zero():
        return "0"
    c, e, q = content_factor(p)
    pieces = []
    if abs(c) != 1:
        pieces.append(latex_rational(abs(c)))
    if e:
        pieces.append(p.var if e == 1 else f"{p.var}^{{{e}}}")
    if q.degree:
        inner = format_poly_latex(q)
        pieces.append(f"\\left({inner}\\right)" if pieces or c < 0 else inner)
    body = " ".join(pieces) if pieces else "1"
    return f"-{body}" if c < 0 else body
