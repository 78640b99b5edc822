"""The abelian group of rational points on a Weierstrass curve.

All operations are chord-and-tangent formulas evaluated exactly over Q.
Curves are duck-typed: anything carrying exact a1, a2, a3, a4, a6 attributes
works, so both the general and the short model from ecq.curves are accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import rational_roots
from .errors import DenominatorVanishesError, ParseError


@dataclass(frozen=True)
class Point:
    """A rational point: affine (x, y), or the basepoint at infinity.

    Infinity is encoded by x = y = None; use the module-level INFINITY
    singleton rather than building it by hand.
    """

    x: Fraction | None
    y: Fraction | None

    @classmethod
    def affine(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self):
        # infinity sorts before every affine point
        if self.is_infinity:
            return (0, Fraction(0), Fraction(0))
        return (1, self.x, self.y)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = Point(None, None)


class SlopeIntercept(NamedTuple):
    """The line y = lam*x + nu through two addends (or tangent at one)."""

    lam: Fraction
    nu: Fraction


def _b_quantities(curve) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def negate(curve, p: Point) -> Point:
    if p.is_infinity:
        return INFINITY
    return Point(p.x, -p.y - curve.a1 * p.x - curve.a3)


def chord(curve, p: Point, q: Point) -> SlopeIntercept:
    """Slope and intercept of the line used to add p and q.

    Raises on the vertical-line case (p + q = O), where no such line of the
    form y = lam*x + nu exists.
    """
    if p.is_infinity or q.is_infinity:
        raise ValueError("no chord through the point at infinity")
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    x1, y1 = p.x, p.y
    x2, y2 = q.x, q.y
    if x1 == x2:
        den = 2 * y1 + a1 * x1 + a3
        if den == 0:
            raise ValueError("vertical line: sum is the point at infinity")
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    return SlopeIntercept(lam, nu)


def add(curve, p: Point, q: Point) -> Point:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a1, a2, a3 = curve.a1, curve.a2, curve.a3
    if p.x == q.x and p.y + q.y + a1 * q.x + a3 == 0:
        return INFINITY
    lam, nu = chord(curve, p, q)
    x3 = lam * lam + a1 * lam - a2 - p.x - q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return Point(x3, y3)


def double(curve, p: Point) -> Point:
    return add(curve, p, p)


def mul(curve, n: int, p: Point) -> Point:
    """[n]p by binary double-and-add; negative n goes through negate."""
    if n < 0:
        return negate(curve, mul(curve, -n, p))
    acc = INFINITY
    base = p
    while n:
        if n & 1:
            acc = add(curve, acc, base)
        base = double(curve, base)
        n >>= 1
    return acc


def x_double_formula(curve, x: Fraction) -> Fraction:
    """x([2]P) for any P with x(P) = x, via the duplication rational function.

    Raises DenominatorVanishesError when the denominator cubic vanishes,
    i.e. when x is a 2-torsion abscissa and [2]P = O.
    """
    x = Fraction(x)
    b2, b4, b6, b8 = _b_quantities(curve)
    den = 4 * x**3 + b2 * x**2 + 2 * b4 * x + b6
    if den == 0:
        raise DenominatorVanishesError(f"x = {x} is a 2-torsion abscissa")
    num = x**4 - b4 * x**2 - 2 * b6 * x - b8
    return num / den


def two_torsion(curve) -> list[Point]:
    """All affine rational points of exact order 2, sorted by x.

    These are the rational roots of 4x^3 + b2 x^2 + 2 b4 x + b6; the list has
    0, 1 or 3 entries. The y-coordinate is pinned by P = -P.
    """
    b2, b4, b6, _ = _b_quantities(curve)
    out = []
    for x0 in rational_roots([b6, 2 * b4, b2, Fraction(4)]):
        y0 = -(curve.a1 * x0 + curve.a3) / 2
        out.append(Point(x0, y0))
    return out


def order_of_point(curve, p: Point, max_order: int) -> int | None:
    """Smallest n <= max_order with [n]p = O, or None if every multiple up to
    the bound is affine (order exceeds the bound)."""
    acc = p
    for n in range(1, max_order + 1):
        if acc.is_infinity:
            return n
        acc = add(curve, acc, p)
    return None


def parse_point(text: str) -> Point:
    """Parse "x,y" with exact rationals, or "O" for the point at infinity."""
    text = text.strip()
    if text == "O":
        return INFINITY
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'x,y' or 'O', got {text!r}")
    try:
        return Point(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad point {text!r}: {exc}") from None


def format_point(p: Point) -> str:
    if p.is_infinity:
        return "O"
    return f"{p.x},{p.y}"
