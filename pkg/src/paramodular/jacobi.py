"""Weight 3 Jacobi cusp forms of index t: W_d operators, traces and
eigenspace dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .numtheory import (class_number_h1, class_number_hn, divisors, is_squarefree,
                        is_unitary_divisor, kronecker_symbol, nu, prime_power_parts,
                        square_part, unitary_divisors, xi_element)
from .weil import eigenspace_dimension

WEIGHT = 3


class FormulaError(ArithmeticError):
    """A trace or dimension came out non-integral or negative."""


@dataclass(frozen=True)
class EigenCharacter:
    """Signs on the generators xi_{p^a} of Xi(t), keyed by p^a."""

    t: int
    signs: tuple  # ((p^a, +-1), ...) ascending in p

    @classmethod
    def from_signs(cls, t: int, signs) -> "EigenCharacter":
        parts = prime_power_parts(t)
        if isinstance(signs, dict):
            if set(signs) != set(parts):
                raise ValueError(f"signs must be given on {parts}")
            pairs = tuple((q, int(signs[q])) for q in parts)
        else:
            signs = list(signs)
            if len(signs) != len(parts):
                raise ValueError(f"expected {len(parts)} signs")
            pairs = tuple(zip(parts, (int(s) for s in signs)))
        if any(s not in (-1, 1) for _, s in pairs):
            raise ValueError("signs must be +1 or -1")
        return cls(t, pairs)

    @classmethod
    def from_pattern(cls, t: int, pattern: str) -> "EigenCharacter":
        return cls.from_signs(t, [1 if c == "+" else -1 for c in pattern])

    def __call__(self, d: int) -> int:
        """epsilon(xi_d) for a unitary divisor d."""
        if not is_unitary_divisor(d, self.t):
            raise ValueError(f"{d} is not a unitary divisor of {self.t}")
        value = 1
        for q, s in self.signs:
            if d % q == 0:
                value *= s
        return value

    @property
    def pattern(self) -> str:
        return "".join("+" if s > 0 else "-" for _, s in self.signs)

    def as_dict(self) -> dict:
        return {q: s for q, s in self.signs}


def all_characters(t: int) -> list[EigenCharacter]:
    parts = prime_power_parts(t)
    return [EigenCharacter(t, tuple(zip(parts, s)))
            for s in product((1, -1), repeat=len(parts))]


@dataclass(frozen=True, order=True)
class CoefficientKey:
    disc: int
    residue: int

    def __post_init__(self):
        if self.disc <= 0:
            raise ValueError("cusp form coefficients need positive discriminant")


def make_key(t: int, disc: int, l: int) -> CoefficientKey:
    r = l % (2 * t)
    if (disc + r * r) % (4 * t):
        raise ValueError(f"D={disc} is not congruent to -l^2 mod 4t")
    return CoefficientKey(disc, r)


def key_of(t: int, n: int, l: int) -> CoefficientKey:
    return make_key(t, 4 * n * t - l * l, l)


def wd_key_map(t: int, d: int, key: CoefficientKey) -> CoefficientKey:
    xi = xi_element(t, d).value
    return make_key(t, key.disc, xi * key.residue)


def wd_key_map_crt(t: int, d: int, key: CoefficientKey) -> CoefficientKey:
    """Same map from the defining congruences l' = -l mod 2d, l' = l mod 2t/d."""
    l = key.residue
    m = 2 * t
    r = next(x for x in range(m) if (x + l) % (2 * d) == 0 and (x - l) % (2 * t // d) == 0)
    return make_key(t, key.disc, r)


@dataclass
class CoefficientTable:
    t: int
    values: dict = field(default_factory=dict)   # CoefficientKey -> Fraction
    d_max: int | None = None                     # complete for disc <= d_max
    weight: int = WEIGHT

    def __post_init__(self):
        if self.weight != WEIGHT:
            raise ValueError("only weight 3 is supported")

    def get(self, key: CoefficientKey) -> Fraction:
        if key in self.values:
            return self.values[key]
        if self.d_max is not None and key.disc <= self.d_max:
            return Fraction(0)
        raise KeyError(f"coefficient {key} outside table support")

    def copy(self) -> "CoefficientTable":
        return CoefficientTable(self.t, dict(self.values), self.d_max, self.weight)

    def scaled(self, c) -> "CoefficientTable":
        return CoefficientTable(self.t, {k: c * v for k, v in self.values.items()},
                                self.d_max, self.weight)

    def equals(self, other: "CoefficientTable") -> bool:
        keys = set(self.values) | set(other.values)
        return all(self.values.get(k, 0) == other.values.get(k, 0) for k in keys)


def apply_wd(table: CoefficientTable, d: int) -> CoefficientTable:
    """(Phi|W_d) has coefficient f(W_d key) at key."""
    out = {}
    for key, v in table.values.items():
        # W_d is an involution: the coefficient at W_d(key) becomes v
        out[wd_key_map(table.t, d, key)] = v
    return CoefficientTable(table.t, out, table.d_max, table.weight)


def eigen_projection(table: CoefficientTable, eps: EigenCharacter) -> CoefficientTable:
    """2^{-nu} sum_d eps(xi_d) (table | W_d)."""
    t = table.t
    ds = unitary_divisors(t)
    acc: dict = {}
    for d in ds:
        img = apply_wd(table, d)
        for k, v in img.values.items():
            acc[k] = acc.get(k, Fraction(0)) + eps(d) * v
    scale = Fraction(1, len(ds))
    return CoefficientTable(t, {k: scale * v for k, v in acc.items()}, table.d_max, table.weight)


# ---- trace formula -----------------------------------------------------------

def _delta(a: int, b: int) -> int:
    return 1 if b % a == 0 else 0


def trace_wd_printed(t: int, d: int) -> Fraction:
    """The closed six-term class number expression for tr(W_d).

    Exact for square-free t.  For t with a square factor it is not even
    integral (t=4 gives -1/8), so the engine below does not rely on it.
    """
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    td = t // d
    h = class_number_hn
    total = Fraction(1, 4) * sum(h(td, -4 * e) for e in divisors(d))
    total -= Fraction(1, 4) * sum(h(d, -4 * e) for e in divisors(td))
    total += Fraction(3, 2) * (h(d, 0) - h(td, 0))
    total += Fraction(1, 2) * (_delta(2, td) * h(d, -4) - _delta(2, d) * h(td, -4))
    total += _delta(3, td) * h(d, -3) - _delta(3, d) * h(td, -3)
    qd, qtd = square_part(d), square_part(td)
    total += Fraction(1, 4) * (gcd(qtd, 2) * qd - gcd(qd, 2) * qtd)
    return total


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise FormulaError(f"{what} = {x} is not an integer")
    return int(x)


def _signs_key(eps: "EigenCharacter") -> tuple:
    return tuple((d, eps(d)) for d in unitary_divisors(eps.t))


def trace_wd_full(t: int, d: int) -> int:
    """tr(W_d) on J^cusp_{3,t}, as sum_eps eps(xi_d) dim J^eps."""
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    return sum(eps(d) * dim_eigenspace(t, eps) for eps in all_characters(t))


def trace_wd_squarefree(t: int, d: int) -> int:
    if not is_squarefree(t) or gcd(t, 6) != 1:
        raise ValueError("the short trace formula needs square-free t prime to 6")
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    td = t // d
    s = sum(kronecker_symbol(-4 * e, td) * class_number_h1(-4 * e) for e in divisors(d))
    s -= sum(kronecker_symbol(-4 * e, d) * class_number_h1(-4 * e) for e in divisors(td))
    value = Fraction(1, 4) * s + Fraction(td - d, 8)
    return _as_integer(value, f"short tr(W_{d}) at t={t}")


def dim_cusp(t: int) -> int:
    return trace_wd_full(t, 1)


def dim_eigenspace(t: int, eps: EigenCharacter) -> int:
    if eps.t != t:
        raise ValueError("character belongs to a different index")
    try:
        return eigenspace_dimension(t, _signs_key(eps))
    except ArithmeticError as exc:
        raise FormulaError(str(exc)) from exc


@dataclass
class TraceRow:
    t: int
    d: int
    trace: int


@dataclass
class DimRow:
    t: int
    pattern: str
    signs: dict
    dim: int


def trace_table(t: int) -> list[TraceRow]:
    return [TraceRow(t, d, trace_wd_full(t, d)) for d in unitary_divisors(t)]


def dim_table(t: int) -> list[DimRow]:
    return [DimRow(t, e.pattern, e.as_dict(), dim_eigenspace(t, e)) for e in all_characters(t)]


@dataclass
class TrivialScan:
    max_t: int
    pairs: list          # (t, {p^a: sign}) with nu(t)=2, eps(xi_t)=-1, dim 0, dim J^cusp > 0
    zero_dimension: list  # t with dim J^cusp = 0


def trivial_eigenspace_scan(max_t: int) -> TrivialScan:
    if max_t < 1:
        raise ValueError("max_t must be positive")
    pairs = []
    zeros = []
    for t in range(1, max_t + 1):
        total = dim_cusp(t)
        if total == 0:
            zeros.append(t)
            continue
        if nu(t) != 2:
            continue
        for eps in all_characters(t):
            if eps(t) == -1 and dim_eigenspace(t, eps) == 0:
                pairs.append((t, eps.as_dict()))
    return TrivialScan(max_t, pairs, zeros)
