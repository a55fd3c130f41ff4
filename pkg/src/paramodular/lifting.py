"""Fourier coefficients of the arithmetic lift and the V_d eigen-identity.

The lift of a Jacobi form with coefficients f(n, l) has coefficients

    b(n, l, m) = sum_{a | (n, l, m)} a^(k-1) f(nm / a^2, l / a)

indexed by the positive matrices [[n, l/2], [l/2, mt]].  The operator V_d
replaces the index matrix N by d^-1 A~^T N A~ with A~ = [[d, t], [y, dx]].
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .jacobi import (CoefficientKey, CoefficientTable, EigenCharacter, key_of,
                     make_key, WEIGHT)
from .numtheory import divisors, is_unitary_divisor, unitary_divisors, xi_element
from .symplectic import euclid_xy

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LiftIndex:
    """The matrix [[n, l/2], [l/2, m t]]; t is supplied by the caller."""

    n: int
    l: int
    m: int

    def __post_init__(self):
        if self.n <= 0 or self.m <= 0:
            raise ValueError("n and m must be positive")

    def disc(self, t: int) -> int:
        """4 det N = 4nmt - l^2."""
        return 4 * self.n * self.m * t - self.l * self.l

    def is_positive(self, t: int) -> bool:
        return self.disc(t) > 0

    def content(self) -> int:
        return gcd(gcd(self.n, self.l), self.m)

    def matrix(self, t: int):
        half = Fraction(self.l, 2)
        return [[Fraction(self.n), half], [half, Fraction(self.m * t)]]


def _check_index(t: int, index: LiftIndex):
    if not index.is_positive(t):
        raise ValueError(f"{index} is not positive definite for t={t}")


def lift_coefficient(table: CoefficientTable, index: LiftIndex, k: int = WEIGHT) -> Fraction:
    if k != WEIGHT:
        raise ValueError("only weight 3 is supported")
    t = table.t
    _check_index(t, index)
    total = Fraction(0)
    for a in divisors(index.content()):
        key = key_of(t, index.n * index.m // (a * a), index.l // a)
        total += a ** (k - 1) * table.get(key)
    return total


def a_matrix(t: int, d: int, xy=None):
    x, y = xy if xy is not None else euclid_xy(t, d)
    return [[d * x, -t], [-y, d]]


def atilde_matrix(t: int, d: int, xy=None):
    """d * A_d^{-1} = [[d, t], [y, dx]]."""
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    x, y = xy if xy is not None else euclid_xy(t, d)
    if d * x - y * (t // d) != 1:
        raise ValueError("x*d - y*t_d must equal 1")
    return [[d, t], [y, d * x]]


def transform_index(t: int, d: int, index: LiftIndex, xy=None) -> LiftIndex:
    """d^-1 A~^T N A~ written back as (n~, l~, m~)."""
    _check_index(t, index)
    (_, _), (y, dx) = atilde_matrix(t, d, xy)
    x = dx // d
    td = t // d
    n, l, m = index.n, index.l, index.m
    n2 = d * n + y * l + y * y * m * td
    l2 = 2 * n * t + l * (dx + y * td) + 2 * x * y * m * t
    m2 = td * n + x * l + d * x * x * m
    return LiftIndex(n2, l2, m2)


def synth_eigen_table(t: int, eps: EigenCharacter, seed: int, d_max: int) -> CoefficientTable:
    """Random coefficients with table|W_d = eps(xi_d) table for every d || t.

    One value is drawn per Xi(t)-orbit of keys.  If some xi_d with
    eps(xi_d) = -1 fixes the residue, the orbit is forced to zero.
    """
    if eps.t != t:
        raise ValueError("character belongs to a different index")
    if eps(t) != -1:
        raise ValueError("odd weight needs eps(xi_t) = -1")
    if d_max < 4 * t:
        raise ValueError("d_max must be at least 4t")
    rng = random.Random(f"eigen-table:{t}:{eps.pattern}:{seed}:{d_max}")
    xis = [(d, xi_element(t, d).value) for d in unitary_divisors(t)]
    values: dict = {}
    mod = 2 * t
    for r in range(mod):
        first = (-r * r) % (4 * t) or 4 * t
        for disc in range(first, d_max + 1, 4 * t):
            if CoefficientKey(disc, r) in values:
                continue
            orbit = {}
            consistent = True
            for d, xi in xis:
                img = xi * r % mod
                sign = eps(d)
                if img in orbit and orbit[img] != sign:
                    consistent = False
                orbit[img] = sign
            v = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 6))
            for img, sign in orbit.items():
                values[make_key(t, disc, img)] = sign * v if consistent else Fraction(0)
    return CoefficientTable(t, values, d_max)


def flip_key(table: CoefficientTable, key: CoefficientKey) -> CoefficientTable:
    """Copy of ``table`` with the sign of a single coefficient reversed."""
    out = table.copy()
    out.values[key] = -table.get(key)
    return out


@dataclass
class LiftReport:
    t: int
    d: int
    bound: int
    checked: int = 0
    skipped: int = 0
    witness: dict | None = None
    ok: bool = True
    notes: list = field(default_factory=list)


def lift_indices(t: int, bound: int):
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            for l in range(-bound, bound + 1):
                if 4 * n * m * t > l * l:
                    yield LiftIndex(n, l, m)


def verify_theorem_2_1(table: CoefficientTable, eps: EigenCharacter, d: int,
                       bound: int) -> LiftReport:
    """Check b(N~) = eps(xi_d) b(N) for every index with entries up to ``bound``."""
    t = table.t
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    report = LiftReport(t, d, bound)
    sign = eps(d)
    for index in lift_indices(t, bound):
        if table.d_max is not None and index.disc(t) > table.d_max:
            report.skipped += 1
            continue
        lhs = lift_coefficient(table, transform_index(t, d, index))
        rhs = sign * lift_coefficient(table, index)
        report.checked += 1
        if lhs != rhs:
            report.ok = False
            report.witness = {"n": index.n, "l": index.l, "m": index.m,
                              "transformed": transform_index(t, d, index).__dict__,
                              "lhs": str(lhs), "rhs": str(rhs)}
            break
    if report.skipped:
        msg = f"{report.skipped} indices beyond D_max={table.d_max} were not checked"
        report.notes.append(msg)
        log.warning(msg)
    return report


def mutation_control(table: CoefficientTable, eps: EigenCharacter, d: int,
                     bound: int) -> LiftReport:
    """Flip the coefficient at (4t-1, 1) and rerun; for d != 1 this must fail.

    The key of index (1, 1, 1) moves to residue xi_d under V_d, so the flip
    breaks the identity there.  Flipping a whole orbit would not: the table
    would still be an eigen-table.
    """
    t = table.t
    return verify_theorem_2_1(flip_key(table, make_key(t, 4 * t - 1, 1)), eps, d, bound)


def table_for_bound(t: int, eps: EigenCharacter, seed: int, bound: int) -> CoefficientTable:
    """An eigen-table complete for every index with entries up to ``bound``."""
    return synth_eigen_table(t, eps, seed, 4 * t * bound * bound)
