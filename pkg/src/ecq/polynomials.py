"""Small exact polynomial ring: dict-backed, fixed number of variables.

Coefficients stay in whatever exact type they come in as (int or Fraction);
nothing here ever rounds. Supports just what the identity checks and height
scans need: ring operations, powers, evaluation, degree and homogeneity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, object] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            if coeff != 0:
                clean[tuple(mono)] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def gens(cls, nvars: int) -> tuple["Poly", ...]:
        """The variables X_0, ..., X_{nvars-1} as polynomials."""
        out = []
        for i in range(nvars):
            mono = tuple(1 if j == i else 0 for j in range(nvars))
            out.append(cls(nvars, {mono: 1}))
        return tuple(out)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        terms: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self.nvars == other.nvars and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Whether all monomials share one total degree (the given one, if any).

        The zero polynomial counts as homogeneous of every degree.
        """
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def evaluate(self, values: Sequence):
        """Exact evaluation at a point; result type follows the inputs."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        acc = 0
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def coefficient(self, mono: Iterable[int]):
        return self.terms.get(tuple(mono), 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        names = "XYZWVU"
        parts = []
        for mono, coeff in sorted(self.terms.items(), reverse=True):
            vars_part = "".join(
                f"{names[i % len(names)]}^{e}" if e > 1 else names[i % len(names)]
                for i, e in enumerate(mono)
                if e
            )
            parts.append(f"{coeff}{'*' if vars_part else ''}{vars_part}")
        return "Poly(" + " + ".join(parts) + ")"


def poly_from_coeffs(coeffs: Sequence[Fraction | int]) -> Poly:
    """Univariate polynomial from ascending coefficients [c0, c1, ...]."""
    return Poly(1, {(i,): c for i, c in enumerate(coeffs)})
