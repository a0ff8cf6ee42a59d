"""Integer factorization and prime utilities."""

from fractions import Fraction
from typing import Iterator

from sympy import factorint, primerange


def factor_integer(n: int) -> list[int]:
    """
    Complete prime factorization of |n| as a sorted multiset.

    Args:
        n: Nonzero integer

    Returns:
        Primes with repetition, e.g. 12 -> [2, 2, 3]; 1 -> []

    Raises:
        ValueError: If n is zero.
    """
    n = int(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    primes: list[int] = []
    for p, k in sorted(factorint(abs(n)).items()):
        primes.extend([int(p)] * int(k))
    return primes


def prime_divisors(n: int) -> set[int]:
    """Distinct primes dividing n; empty for n in {0, 1, -1}."""
    if n in (0, 1, -1):
        return set()
    return set(factor_integer(n))


def p_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(q: Fraction, p: int) -> int:
    """v_p of a nonzero rational."""
    return p_valuation(q.numerator, p) - p_valuation(q.denominator, p)


def small_primes(bound: int) -> Iterator[int]:
    """Primes p <= bound in increasing order."""
    return (int(p) for p in primerange(2, bound + 1))
