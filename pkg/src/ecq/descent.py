"""The descent procedure over an abstract abelian group with a height oracle,
plus the concrete m = 2 instantiation on elliptic curves, where division is
halving through the duplication quartic.

The engine is group-agnostic: anything with exact equality, an addition, a
negation, a zero and a real-valued height can be descended, given coset
representatives of A/mA and a divide oracle. Heights only need to satisfy
the two inequalities h(P+Q) <= 2h(P) + C1' and h(mP) >= m^2 h(P) - C2; the
engine audits both on every step and raises instead of looping when the
supplied constants are too small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Sequence

from .arith import rational_roots, sqrt_rational
from .curves import ShortCurve
from .errors import NonContractionError
from .group import INFINITY, Point, add, double, negate, two_torsion
from .ec_heights import enumerate_points, hx

_AUDIT_SLACK = 1e-9  # float slack for comparing height logs


@dataclass
class DescentProblem:
    """Everything descend() needs about one group.

    divide(P) must return (i, P1) with P = m*P1 + coset_reps[i]; the engine
    re-checks that equation in the group on every call.
    """

    add: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    zero: Any
    height: Callable[[Any], float]
    m: int
    coset_reps: list
    divide: Callable[[Any], tuple[int, Any]]
    c1_prime: float
    c2: float

    def mul(self, n: int, x):
        if n < 0:
            return self.neg(self.mul(-n, x))
        acc = self.zero
        base = x
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    @property
    def threshold(self) -> float:
        """Terminal height bound 1 + (C1' + C2)/2; valid for every m >= 2."""
        return 1 + (self.c1_prime + self.c2) / 2


@dataclass
class DescentChain:
    """A run of the division step: start = P_0, steps[j] = (i_{j+1}, P_{j+1}).

    Each step satisfies P_{j-1} = m * P_j + Q_{i_j}, so the start point is
    recovered exactly as m^n * final + sum_j m^(j-1) * Q_{i_j}.
    """

    start: Any
    steps: list[tuple[int, Any]] = field(default_factory=list)
    final: Any = None

    def reconstruct(self, problem: DescentProblem):
        acc = self.final
        for i, _ in reversed(self.steps):
            acc = problem.add(problem.mul(problem.m, acc), problem.coset_reps[i])
        return acc


def descend(problem: DescentProblem, start) -> DescentChain:
    """Divide down from start until the height drops under the threshold.

    Every step is audited: the divide output must satisfy its defining
    equation exactly, and the height must contract per
    h(P_j) <= (2 h(P_{j-1}) + C1' + C2) / m^2. Violations, or exceeding the
    safety cap of 10*(1 + h(start)) steps, raise NonContractionError.
    """
    chain = DescentChain(start=start, final=start)
    current = start
    h_current = problem.height(current)
    cap = int(10 * (1 + max(h_current, 0.0))) + 1
    while h_current > problem.threshold:
        if len(chain.steps) >= cap:
            raise NonContractionError(
                f"no contraction after {cap} steps (h = {h_current:.3f}); "
                "constants are too small or the oracle is broken"
            )
        i, nxt = problem.divide(current)
        recombined = problem.add(problem.mul(problem.m, nxt), problem.coset_reps[i])
        if recombined != current:
            raise NonContractionError("divide oracle output fails its defining equation")
        h_next = problem.height(nxt)
        bound = (2 * h_current + problem.c1_prime + problem.c2) / problem.m**2
        if h_next > bound + _AUDIT_SLACK:
            raise NonContractionError(
                f"height rose above the contraction bound: {h_next:.6f} > {bound:.6f}"
            )
        chain.steps.append((i, nxt))
        current = nxt
        h_current = h_next
    chain.final = current
    return chain


def generators(problem: DescentProblem, bounded_elements: Sequence) -> list:
    """Coset representatives plus the supplied bounded-height elements.

    Provided the bounded set contains every element under the threshold,
    every descent chain reconstructs its start from this list alone.
    """
    out = list(problem.coset_reps)
    for e in bounded_elements:
        if e not in out:
            out.append(e)
    return out


def halve_point(curve: ShortCurve, p: Point) -> list[Point]:
    """All rational Q with [2]Q = p (0, 1, 2 or 4 of them), sorted.

    Candidate abscissas are the rational roots of the duplication quartic
    F(X,1) - x(p) * G(X,1); every candidate is confirmed by doubling, so a
    returned point is a half by construction.
    """
    if p.is_infinity:
        return sorted([INFINITY] + two_torsion(curve), key=Point.sort_key)
    A, B = curve.A, curve.B
    xp = p.x
    quartic = [A * A - 4 * B * xp, -8 * B - 4 * A * xp, -2 * A, -4 * xp, Fraction(1)]
    halves = []
    for x0 in rational_roots(quartic):
        rhs = x0**3 + A * x0 + B
        y0 = sqrt_rational(rhs)
        if y0 is None:
            continue
        candidates = {Point(x0, y0), Point(x0, -y0)}
        for cand in candidates:
            if double(curve, cand) == p:
                halves.append(cand)
    return sorted(halves, key=Point.sort_key)


@dataclass(frozen=True)
class ConstantEstimates:
    """Empirical height constants scanned from a bounded sample."""

    c1_prime: float
    c2: float
    sample_size: int


def estimate_constants(
    curve: ShortCurve, sample_log_height: float, reps: Sequence[Point] | None = None
) -> ConstantEstimates:
    """Scan witnesses for the two height constants over all points up to the bound.

    c2 maximizes 4h(P) - h([2]P); c1_prime maximizes h(P+Q) - 2h(P) with Q
    running over reps (the whole sample when reps is omitted). Both floor at
    0. These are lower bounds for the true constants; descend() surfaces
    NonContractionError rather than looping if they turn out too small.
    """
    points = enumerate_points(curve, sample_log_height)
    qs = list(reps) if reps is not None else points
    c2 = 0.0
    c1 = 0.0
    for p in points:
        hp = hx(curve, p).magnitude
        h2 = hx(curve, double(curve, p)).magnitude
        c2 = max(c2, 4 * math.log(hp) - math.log(h2))
        for q in qs:
            hs = hx(curve, add(curve, p, q)).magnitude
            c1 = max(c1, math.log(hs) - 2 * math.log(hp))
    return ConstantEstimates(c1, c2, len(points))


def elliptic_divide(curve: ShortCurve, reps: Sequence[Point]) -> Callable[[Point], tuple[int, Point]]:
    """The m = 2 divide oracle: try reps in order, halve P - Q_i, take the
    first success with the lexicographically smallest half."""

    def divide(p: Point) -> tuple[int, Point]:
        for i, q in enumerate(reps):
            halves = halve_point(curve, add(curve, p, negate(curve, q)))
            if halves:
                return i, halves[0]
        raise NonContractionError(
            f"no coset representative admits a rational half of {p!r}; "
            "the representative set does not cover E(Q)/2E(Q)"
        )

    return divide


def elliptic_problem(
    curve: ShortCurve, reps: Sequence[Point], c1_prime: float, c2: float
) -> DescentProblem:
    """Wire a short curve into the generic engine with the x-height and m = 2."""
    return DescentProblem(
        add=partial(add, curve),
        neg=partial(negate, curve),
        zero=INFINITY,
        height=lambda p: hx(curve, p).log_value,
        m=2,
        coset_reps=list(reps),
        divide=elliptic_divide(curve, reps),
        c1_prime=c1_prime,
        c2=c2,
    )
