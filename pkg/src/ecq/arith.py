"""Integer and rational helpers: primality, factorization, square detection,
squarefree reduction, rational roots of integer-cleared polynomials.

Everything is exact. Factorization is plain trial division, which is
deliberate: inputs here are desk-scale and this keeps the package free of
dependencies.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the 12-base set is exact below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_TRIAL_LIMIT = 1 << 16


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n, deterministic sweep over c."""
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}. n must be nonzero.

    Trial division up to a fixed bound, then perfect-square peeling and
    Pollard rho on whatever cofactor is left, so big-height inputs stay fast.
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    n = abs(n)
    out: dict[int, int] = {}

    def record(p: int, e: int = 1) -> None:
        out[p] = out.get(p, 0) + e

    for p in (2, 3):
        while n % p == 0:
            record(p)
            n //= p
    f = 5
    while f * f <= n and f < _TRIAL_LIMIT:
        for p in (f, f + 2):
            while n % p == 0:
                record(p)
                n //= p
        f += 6
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
            # below the trial bound squared anything left is prime
            record(m)
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|, n nonzero."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def isqrt_exact(n: int) -> int | None:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def sqrt_rational(q: Fraction) -> Fraction | None:
    """Exact nonnegative square root of q in Q, or None."""
    q = Fraction(q)
    num = isqrt_exact(q.numerator)
    if num is None:
        return None
    den = isqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def _squarefree_int(n: int) -> int:
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return out


def squarefree_part(q: Fraction | int) -> int:
    """The squarefree integer representing q modulo nonzero rational squares.

    p/q and p*q differ by the square q^2, and numerator and denominator are
    coprime, so their squarefree parts just multiply; factoring them
    separately keeps trial division in range.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no square class")
    return _squarefree_int(q.numerator) * _squarefree_int(q.denominator)


def ord_at(p: int, x: Fraction) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def rational_roots(coeffs: Sequence[Fraction | int]) -> list[Fraction]:
    """All rational roots of sum(coeffs[i] * X**i), ascending, each once.

    Clears denominators to a primitive integer polynomial and tests the
    divisor pairs of the constant and leading coefficients; no factorization
    of the polynomial itself.
    """
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has every rational as a root")
    scale = 1
    for c in cs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in cs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]

    roots: set[Fraction] = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
        ints = ints[low:]
    if len(ints) > 1:
        for p in divisors(ints[0]):
            for q in divisors(ints[-1]):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    acc = Fraction(0)
                    for c in reversed(ints):
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)
