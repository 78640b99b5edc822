from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecq.arith import (
    divisors,
    factorize,
    is_prime,
    isqrt_exact,
    ord_at,
    rational_roots,
    sqrt_rational,
    squarefree_part,
)


@pytest.mark.parametrize("n", [2, 3, 5, 7, 11, 97, 101, 7919, 2**31 - 1])
def test_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [-7, 0, 1, 4, 9, 91, 561, 2**31, 7919 * 7919])
def test_composites(n):
    assert not is_prime(n)


def test_factorize():
    assert factorize(128) == {2: 7}
    assert factorize(-432) == {2: 4, 3: 3}
    assert factorize(1) == {}
    assert factorize(2 * 3 * 5 * 7 * 11) == {2: 1, 3: 1, 5: 1, 7: 1, 11: 1}
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=2, max_value=50000))
def test_factorize_reconstructs(n):
    prod = 1
    for p, e in factorize(n).items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-7) == [1, 7]
    assert divisors(1) == [1]


def test_isqrt_exact():
    assert isqrt_exact(0) == 0
    assert isqrt_exact(49) == 7
    assert isqrt_exact(50) is None
    assert isqrt_exact(-4) is None


def test_sqrt_rational():
    assert sqrt_rational(F(9, 4)) == F(3, 2)
    assert sqrt_rational(F(2)) is None
    assert sqrt_rational(F(4, 3)) is None
    assert sqrt_rational(F(0)) == 0


def test_squarefree_part():
    assert squarefree_part(18) == 2
    assert squarefree_part(-18) == -2
    assert squarefree_part(1) == 1
    assert squarefree_part(F(1, 2)) == 2
    assert squarefree_part(F(-4, 9)) == -1
    with pytest.raises(ValueError):
        squarefree_part(0)


@given(st.integers(min_value=-3000, max_value=3000).filter(lambda n: n != 0))
def test_squarefree_part_is_class_representative(n):
    s = squarefree_part(n)
    # n/s is a perfect square of a rational
    assert sqrt_rational(F(n, s)) is not None
    assert all(e == 1 for e in factorize(s).values())


def test_ord_at():
    assert ord_at(2, F(12)) == 2
    assert ord_at(5, F(7, 25)) == -2
    assert ord_at(3, F(7)) == 0
    with pytest.raises(ValueError):
        ord_at(2, F(0))


def test_rational_roots_cubic():
    # 4x^3 - 4x = 4x(x-1)(x+1)
    assert rational_roots([0, -4, 0, 4]) == [-1, 0, 1]
    # 4x^3 + 4 has the single rational root -1
    assert rational_roots([4, 0, 0, 4]) == [-1]
    # 4x^3 - 8: no rational root
    assert rational_roots([-8, 0, 0, 4]) == []


def test_rational_roots_fractional():
    # (2x - 1)(3x + 2) = 6x^2 + x - 2
    assert rational_roots([-2, 1, 6]) == [F(-2, 3), F(1, 2)]
    # fractional coefficients are cleared first
    assert rational_roots([F(-1, 4), 0, 1]) == [F(-1, 2), F(1, 2)]


def test_rational_roots_degenerate():
    assert rational_roots([5]) == []
    with pytest.raises(ValueError):
        rational_roots([0, 0])


@given(
    st.lists(
        st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=4
    )
)
def test_rational_roots_finds_planted(roots):
    # expand prod (x - r), ascending coefficients
    coeffs = [F(1)]
    for r in roots:
        nxt = [F(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    assert rational_roots(coeffs) == sorted(set(roots))
