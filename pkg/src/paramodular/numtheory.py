"""Elementary number theory: unitary divisors, the group Xi(t), quadratic
residues, Kronecker symbols and Hurwitz-Kronecker class numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint


def factor(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in factorint(n).items()}


def nu(t: int) -> int:
    """Number of distinct prime divisors."""
    return len(factor(t))


def divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factor(n).values())


def unitary_divisors(t: int) -> list[int]:
    if t < 1:
        raise ValueError("t must be positive")
    return [d for d in divisors(t) if gcd(d, t // d) == 1]


def is_unitary_divisor(d: int, t: int) -> bool:
    return d >= 1 and t % d == 0 and gcd(d, t // d) == 1


def prime_power_parts(t: int) -> list[int]:
    """The exact prime powers p^a || t in ascending order of p."""
    return [p ** e for p, e in sorted(factor(t).items())]


@dataclass(frozen=True)
class XiElement:
    t: int
    d: int
    value: int

    def __post_init__(self):
        t, d, v = self.t, self.d, self.value
        assert (v * v - 1) % (4 * t) == 0
        assert (v + 1) % (2 * d) == 0 and (v - 1) % (2 * (t // d)) == 0


def xi_element(t: int, d: int) -> XiElement:
    """The residue mod 2t which is -1 mod 2d and 1 mod 2t/d."""
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    td = t // d
    # 2d and 2t_d share only the factor 2; both targets are odd, so CRT on d, t_d
    # and an odd lift mod 2 is enough.
    inv = pow(d, -1, td) if td > 1 else 0
    # v = -1 + 2d*k with -1 + 2dk = 1 mod 2td  <=>  dk = 1 mod td
    v = (-1 + 2 * d * inv) % (2 * t)
    return XiElement(t, d, v)


def xi_group(t: int) -> list[XiElement]:
    return [xi_element(t, d) for d in unitary_divisors(t)]


def xi_residues(t: int) -> list[int]:
    """Brute-force Xi(t) as a sorted list of residues."""
    return [x for x in range(2 * t) if (x * x - 1) % (4 * t) == 0]


def qr_solvable(a: int, m: int) -> bool:
    """True iff x^2 = a (mod m) has a solution."""
    if m < 1:
        raise ValueError("modulus must be positive")
    a %= m
    return any(x * x % m == a for x in range(m))


def kronecker_symbol(a: int, n: int) -> int:
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # n odd positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def square_part(n: int) -> int:
    """Largest q with q^2 | n."""
    if n < 1:
        raise ValueError("n must be positive")
    q = 1
    for p, e in factor(n).items():
        q *= p ** (e // 2)
    return q


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced positive definite forms (a, b, c) with b^2 - 4ac = disc < 0."""
    out = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            out.append((a, b, c))
        a += 1
    return out


@lru_cache(maxsize=None)
def class_number_h1(disc: int) -> Fraction:
    if disc == 0:
        return Fraction(-1, 12)
    if disc > 0 or disc % 4 not in (0, 1):
        return Fraction(0)
    total = Fraction(0)
    for a, b, c in reduced_forms(disc):
        if a == c and b == 0:
            total += Fraction(1, 2)
        elif a == b == c:
            total += Fraction(1, 3)
        else:
            total += 1
    return total


@lru_cache(maxsize=None)
def class_number_hn(n: int, disc: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return class_number_h1(disc)
    g = gcd(n, disc) if disc else n
    a = square_part(g)
    b = g // (a * a)
    if disc % (a * a * b * b):
        return Fraction(0)
    reduced = disc // (a * a * b * b)
    return a * a * b * kronecker_symbol(reduced, n // (a * a * b)) * class_number_h1(reduced)
