"""Naive heights on Q and on projective space over Q.

Places of Q, standard absolute values and the product formula; exact height
magnitudes with the logarithm taken only at the very end; bounded-height
enumeration; and the two height inequalities (polynomial roots, morphisms)
as executable checks.

Only Q is implemented: every place has local degree 1, so heights of
projective points reduce to a max over coprime integer coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .arith import factorize, is_prime, ord_at
from .errors import CommonZeroError, RootsDoNotMatchError
from .polynomials import Poly


@dataclass(frozen=True)
class Place:
    """A place of Q: the archimedean one (p is None) or a p-adic one."""

    p: int | None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def archimedean(cls) -> "Place":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_archimedean(self) -> bool:
        return self.p is None

    @property
    def local_degree(self) -> int:
        # over Q every completion has degree 1
        return 1


def abs_value(place: Place, x: Fraction) -> Fraction:
    """|x| at the place, exactly: usual absolute value, or p^(-ord_p(x))."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("absolute value of 0 is not used here")
    if place.is_archimedean:
        return abs(x)
    v = ord_at(place.p, x)
    return Fraction(1, place.p**v) if v >= 0 else Fraction(place.p ** (-v))


def places_of(x: Fraction) -> list[Place]:
    """The archimedean place plus every p-adic place where |x|_p != 1."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no support")
    primes = sorted(set(factorize(x.numerator)) | set(factorize(x.denominator)))
    return [Place.archimedean()] + [Place.prime(p) for p in primes]


def verify_product_formula(x: Fraction) -> bool:
    """Whether the product of |x|_v over all places equals 1, exactly.

    Only finitely many places contribute factors other than 1, so the finite
    product over places_of(x) is the whole product.
    """
    prod = Fraction(1)
    for place in places_of(x):
        prod *= abs_value(place, x)
    return prod == 1


@dataclass(frozen=True)
class HeightValue:
    """Exact height magnitude H >= 1; the real h = log H is derived."""

    magnitude: int

    def __post_init__(self):
        if self.magnitude < 1:
            raise ValueError("height magnitudes are at least 1")

    @property
    def log_value(self) -> float:
        return math.log(self.magnitude)


def height_rational(t) -> HeightValue:
    """H(t) = max(|p|, q) for t = p/q in lowest terms; H(0) = 1."""
    t = Fraction(t)
    return HeightValue(max(abs(t.numerator), t.denominator))


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^N(Q) in canonical coordinates.

    Arbitrary rational coordinates are accepted; they are scaled to coprime
    integers with the first nonzero one positive, so equality is structural.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Sequence):
        fracs = [Fraction(c) for c in coords]
        if not fracs or all(c == 0 for c in fracs):
            raise ValueError("projective coordinates must not all vanish")
        scale = lcm(*(c.denominator for c in fracs))
        ints = [int(c * scale) for c in fracs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        first = next(c for c in ints if c != 0)
        if first < 0:
            ints = [-c for c in ints]
        object.__setattr__(self, "coords", tuple(ints))

    def __repr__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


def height_projective(point: ProjectivePoint) -> HeightValue:
    """H(P) = max |x_i| over the canonical coprime integer coordinates."""
    return HeightValue(max(abs(c) for c in point.coords))


def height_projective_by_places(point: ProjectivePoint) -> Fraction:
    """The place-product form of the projective height, as a cross-check.

    Product over the archimedean place and every prime dividing some
    coordinate of max_i |x_i|_v; agrees with height_projective over Q.
    """
    prod = Fraction(max(abs(c) for c in point.coords))
    primes: set[int] = set()
    for c in point.coords:
        if c != 0:
            primes |= set(factorize(c))
    for p in sorted(primes):
        place = Place.prime(p)
        prod *= max(abs_value(place, Fraction(c)) for c in point.coords if c != 0)
    return prod


def enumerate_rationals(bound: int) -> list[Fraction]:
    """Exactly {t in Q : H(t) <= bound}, ordered by denominator then numerator."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    out = []
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
    return out


@dataclass(frozen=True)
class RootHeightBounds:
    """The sandwich 2^-d * prod H(roots) <= H(coeffs) <= 2^(d-1) * prod H(roots)."""

    lower: Fraction
    coeff_height: int
    upper: Fraction
    holds: bool


def root_height_bounds(coeffs: Sequence, roots: Sequence) -> RootHeightBounds:
    """Check the coefficient-height sandwich for a fully rational-rooted polynomial.

    coeffs are [a0, ..., ad] with a0 leading; the polynomial must factor as
    a0 * prod (T - root_j) over the given roots, else RootsDoNotMatchError.
    """
    cs = [Fraction(c) for c in coeffs]
    if len(cs) < 2 or cs[0] == 0:
        raise ValueError("need a polynomial of degree >= 1 with nonzero leading coefficient")
    rs = [Fraction(r) for r in roots]
    d = len(cs) - 1
    if len(rs) != d:
        raise RootsDoNotMatchError(f"degree {d} polynomial needs {d} roots, got {len(rs)}")
    expanded = [Fraction(1)]
    for r in rs:
        nxt = [Fraction(0)] * (len(expanded) + 1)
        for i, c in enumerate(expanded):
            nxt[i] += c
            nxt[i + 1] += -r * c
        expanded = nxt
    if [cs[0] * c for c in expanded] != cs:
        raise RootsDoNotMatchError("roots do not reproduce the coefficients")
    coeff_height = height_projective(ProjectivePoint(cs)).magnitude
    prod = 1
    for r in rs:
        prod *= height_rational(r).magnitude
    lower = Fraction(prod, 2**d)
    upper = Fraction(2 ** (d - 1) * prod)
    return RootHeightBounds(lower, coeff_height, upper, lower <= coeff_height <= upper)


def morphism_height_scan(
    forms: Sequence[Poly], degree: int, samples: Sequence[ProjectivePoint]
) -> tuple[Fraction, Fraction]:
    """Extremes of H(F(P)) / H(P)^degree over the sample, exactly.

    The forms must be homogeneous of the common degree in the sample's
    coordinate count. A sample where every form vanishes raises
    CommonZeroError. The returned pair witnesses the two-sided morphism
    height bound for this F.
    """
    if not samples:
        raise ValueError("need at least one sample point")
    nvars = len(samples[0].coords)
    for f in forms:
        if f.nvars != nvars:
            raise ValueError("form arity does not match the sample coordinates")
        if not f.is_homogeneous(degree):
            raise ValueError(f"{f!r} is not homogeneous of degree {degree}")
    lo = hi = None
    for point in samples:
        values = [f.evaluate(point.coords) for f in forms]
        if all(v == 0 for v in values):
            raise CommonZeroError(f"all forms vanish at {point!r}")
        hf = height_projective(ProjectivePoint(values)).magnitude
        hp = height_projective(point).magnitude
        ratio = Fraction(hf, hp**degree)
        lo = ratio if lo is None else min(lo, ratio)
        hi = ratio if hi is None else max(hi, ratio)
    return lo, hi
