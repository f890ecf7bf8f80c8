"""Exact integer arithmetic: combinatorial numbers, integer polynomials and
rational interpolation.

Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa, IntegralityViolation


@lru_cache(maxsize=None)
def stirling2(a: int, b: int) -> int:
    """Stirling number of the second kind, with S(0, 0) = 1."""
    if a < 0 or b < 0:
        return 0
    if a == b:
        return 1
    if b == 0 or b > a:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


def falling(x, j: int):
    """Falling factorial x(x-1)...(x-j+1).

    ``x`` may be an int, a Fraction or an IntPolynomial; the empty product is 1.
    """
    out = 1
    for i in range(j):
        out = out * (x - i)
    return out


def double_falling(x, j: int):
    """Step-two falling factorial x(x-2)...(x-2j+2)."""
    out = 1
    for i in range(j):
        out = out * (x - 2 * i)
    return out


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in ``t`` with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def t(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @staticmethod
    def _lift(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def sign_alternates(self) -> bool:
        """True when (-1)^i times the coefficient of t^(deg-i) is never negative."""
        d = self.degree
        return all((-1) ** i * self.coefficient(d - i) >= 0 for i in range(d + 1))

    def format(self, style: str = "plain") -> str:
        """Render in descending powers, e.g. ``t^3 - 6t^2 + 12t - 8``.

        ``style="latex"`` braces the exponents: ``t^{3} - 6t^{2} + 12t - 8``.
        """
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "t" if i == 1 else (f"t^{{{i}}}" if style == "latex" else f"t^{i}")
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(t(?:\^\{?(\d+)\}?)?)?")

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Inverse of :meth:`format` for both the plain and the LaTeX style."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                power = int(m.group(4)) if m.group(4) else 1
            else:
                power = 0
            coeffs[power] = coeffs.get(power, 0) + sign * mag
            pos = m.end()
        deg = max(coeffs)
        return cls(tuple(coeffs.get(i, 0) for i in range(deg + 1)))


def poly_eval(p: IntPolynomial, t: int) -> int:
    return p(t)


def _to_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def interpolate_rational(points: Sequence[tuple[int, object]]) -> list[Fraction]:
    """Newton divided differences over the rationals.

    Returns ascending monomial coefficients of the unique polynomial of degree
    below ``len(points)`` through ``points``.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        seen = set()
        dup = next(x for x in xs if x in seen or seen.add(x))
        raise DuplicateAbscissa(f"abscissa {dup} appears more than once")
    table = [_to_fraction(v) for _, v in points]
    newton = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])

    # expand c0 + c1(t-x0) + c2(t-x0)(t-x1) + ... by Horner from the top
    coeffs = [newton[-1]]
    for i in range(len(newton) - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] -= xs[i] * c
        shifted[0] += newton[i]
        coeffs = shifted
    return coeffs


def interpolate(points: Iterable[tuple[int, object]]) -> IntPolynomial:
    """Exact interpolation; every resulting coefficient must be an integer."""
    coeffs = interpolate_rational(list(points))
    bad = [c for c in coeffs if c.denominator != 1]
    if bad:
        raise IntegralityViolation(f"non-integral interpolated coefficient {bad[0]}")
    return IntPolynomial(tuple(c.numerator for c in coeffs))
