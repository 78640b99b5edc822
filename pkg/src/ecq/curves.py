"""Weierstrass curve models over Q, their invariant quantities, and exact
model transformations.

Two models are provided: the general y^2 + a1 xy + a3 y = x^3 + a2 x^2 +
a4 x + a6 and the short y^2 = x^3 + Ax + B. The short model exposes a1..a6
properties so every curve operation in the package accepts either.

No floating point anywhere; all coefficients and transformations are exact.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction

from .arith import factorize
from .errors import ParseError, SingularCurveError
from .group import INFINITY, Point


@dataclass(frozen=True)
class Invariants:
    """The quantities b2, b4, b6, b8, c4, c6 and the discriminant."""

    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    delta: Fraction


@dataclass(frozen=True)
class GeneralCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    Construction rejects singular models; use GeneralCurve.unchecked to hold
    a singular equation for inspection (the CLI reports those in-band).
    """

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if check and compute_invariants(self).delta == 0:
            raise SingularCurveError(f"discriminant is zero for {self}")

    @classmethod
    def unchecked(cls, a1, a2, a3, a4, a6) -> "GeneralCurve":
        return cls(a1, a2, a3, a4, a6, check=False)

    def __repr__(self) -> str:
        return f"GeneralCurve({self.a1},{self.a2},{self.a3},{self.a4},{self.a6})"


@dataclass(frozen=True)
class ShortCurve:
    """y^2 = x^3 + Ax + B, nonsingular iff -16(4A^3 + 27B^2) != 0."""

    A: Fraction
    B: Fraction
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if check and 4 * self.A**3 + 27 * self.B**2 == 0:
            raise SingularCurveError(f"discriminant is zero for {self}")

    @classmethod
    def unchecked(cls, A, B) -> "ShortCurve":
        return cls(A, B, check=False)

    # short models are general models with a1 = a2 = a3 = 0
    @property
    def a1(self) -> Fraction:
        return Fraction(0)

    @property
    def a2(self) -> Fraction:
        return Fraction(0)

    @property
    def a3(self) -> Fraction:
        return Fraction(0)

    @property
    def a4(self) -> Fraction:
        return self.A

    @property
    def a6(self) -> Fraction:
        return self.B

    def __repr__(self) -> str:
        return f"ShortCurve({self.A},{self.B})"


Curve = GeneralCurve | ShortCurve


def compute_invariants(curve: Curve) -> Invariants:
    """All seven invariant quantities, exactly.

    c4^3 - c6^2 = 1728*delta holds for every input; tests enforce it.
    """
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return Invariants(b2, b4, b6, b8, c4, c6, delta)


@dataclass(frozen=True)
class PointMap:
    """Invertible affine change of coordinates (x, y) -> (ax + b, cy + dx + e).

    a and c are nonzero, so the map is a bijection on rational points and
    composes/inverts exactly.
    """

    x_scale: Fraction
    x_shift: Fraction
    y_scale: Fraction
    y_slope: Fraction
    y_shift: Fraction

    def __post_init__(self):
        for name in ("x_scale", "x_shift", "y_scale", "y_slope", "y_shift"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x_scale == 0 or self.y_scale == 0:
            raise ValueError("degenerate point map")

    @classmethod
    def identity(cls) -> "PointMap":
        return cls(1, 0, 1, 0, 0)

    def apply(self, p: Point) -> Point:
        if p.is_infinity:
            return INFINITY
        return Point(
            self.x_scale * p.x + self.x_shift,
            self.y_scale * p.y + self.y_slope * p.x + self.y_shift,
        )

    def inverse(self) -> "PointMap":
        a, b, c, d, e = self.x_scale, self.x_shift, self.y_scale, self.y_slope, self.y_shift
        return PointMap(1 / a, -b / a, 1 / c, -d / (a * c), (d * b / a - e) / c)


@dataclass(frozen=True)
class CompletedSquareCurve:
    """y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6, the square-completed model."""

    b2: Fraction
    b4: Fraction
    b6: Fraction

    def contains(self, p: Point) -> bool:
        if p.is_infinity:
            return True
        x, y = p.x, p.y
        return y * y == 4 * x**3 + self.b2 * x**2 + 2 * self.b4 * x + self.b6


def complete_square(curve: Curve) -> tuple[CompletedSquareCurve, PointMap]:
    """Absorb the xy and y terms: (x, y) -> (x, 2y + a1 x + a3).

    The image model is y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 and the returned map
    is an exact bijection on rational points.
    """
    inv = compute_invariants(curve)
    model = CompletedSquareCurve(inv.b2, inv.b4, inv.b6)
    return model, PointMap(1, 0, 2, curve.a1, curve.a3)


def short_form(curve: Curve) -> tuple[ShortCurve, PointMap]:
    """An integral-friendly short model plus the exact point bijection onto it.

    Short input comes back unchanged with the identity map. General input is
    square-completed and then rescaled by (x, y) -> (36x + 3 b2, 216y +
    108 a1 x + 108 a3), which lands on y^2 = x^3 - 27 c4 x - 54 c6; for
    integral input coefficients the target coefficients are integers.
    """
    if isinstance(curve, ShortCurve):
        return curve, PointMap.identity()
    inv = compute_invariants(curve)
    target = ShortCurve(-27 * inv.c4, -54 * inv.c6, check=False)
    pmap = PointMap(36, 3 * inv.b2, 216, 108 * curve.a1, 108 * curve.a3)
    return target, pmap


def integral_short_model(curve: ShortCurve) -> tuple[ShortCurve, PointMap]:
    """Rescale (x, y) -> (u^2 x, u^3 y) with the least u making A, B integers.

    A picks up u^4 and B picks up u^6, so per prime p in a denominator the
    needed exponent is ceil(ord/4) resp. ceil(ord/6).
    """
    exponents: dict[int, int] = {}
    for value, weight in ((curve.A, 4), (curve.B, 6)):
        den = value.denominator
        if den == 1:
            continue
        for p, e in factorize(den).items():
            need = -(-e // weight)
            exponents[p] = max(exponents.get(p, 0), need)
    u = 1
    for p, k in exponents.items():
        u *= p**k
    target = ShortCurve(curve.A * u**4, curve.B * u**6, check=False)
    return target, PointMap(u * u, 0, u**3, 0, 0)


def is_on_curve(curve: Curve, p: Point) -> bool:
    """Whether p is the basepoint or satisfies the Weierstrass equation exactly."""
    if p.is_infinity:
        return True
    x, y = p.x, p.y
    lhs = y * y + curve.a1 * x * y + curve.a3 * y
    rhs = x**3 + curve.a2 * x * x + curve.a4 * x + curve.a6
    return lhs == rhs


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def parse_curve(text: str, short: bool | None = None, allow_singular: bool = False) -> Curve:
    """Parse "a1,a2,a3,a4,a6" (general) or "A,B" (short).

    short=True forces the two-component reading; by default the component
    count decides. Singular models raise unless allow_singular is set.
    """
    parts = [parse_rational(p) for p in text.strip().split(",")]
    if short is True and len(parts) != 2:
        raise ParseError(f"short model needs 'A,B', got {len(parts)} components")
    if len(parts) == 2:
        return ShortCurve(parts[0], parts[1], check=not allow_singular)
    if len(parts) == 5:
        return GeneralCurve(*parts, check=not allow_singular)
    raise ParseError(f"expected 2 (short) or 5 (general) components, got {len(parts)}")
