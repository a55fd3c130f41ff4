"""Humbert surfaces in the paramodular moduli space and the ramification of
the covering by the extended group.

A primitive vector l of the dual lattice with positive norm cuts out a
Humbert surface of discriminant 2t * norm(l).  Reflections -sigma_l that lie
in the extended group fix such surfaces pointwise; which cosets V_d contain
them is decided by two quadratic residue conditions, checked here against a
brute-force search over reflection vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, isqrt

from . import _exact as ex
from .numtheory import (divisors, is_squarefree, is_unitary_divisor, qr_solvable,
                        unitary_divisors, xi_element)
from .orthogonal import (InvolutionClass, LatticeVector, disc_action,
                         involution_classify, psi_map, reflection)
from .symplectic import SymplecticSimilitude, gamma_star_contains


def component_count(t: int, disc: int) -> int:
    """Number of b mod 2t with b^2 = disc mod 4t."""
    if disc < 1:
        raise ValueError("discriminant must be positive")
    return sum(1 for b in range(2 * t) if (b * b - disc) % (4 * t) == 0)


@dataclass(frozen=True)
class HumbertComponent:
    """Surface f(tau2^2 - tau1 tau3) + c tau3 + b tau2 + ta tau1 + te = 0."""

    t: int
    ell: LatticeVector
    discriminant: int
    equation: tuple   # (te, ta, b, c, f)

    def evaluate(self, tau1, tau2, tau3):
        te, ta, b, c, f = self.equation
        return f * (tau2 * tau2 - tau1 * tau3) + c * tau3 + b * tau2 + ta * tau1 + te


def _dual_integer_coords(ell: LatticeVector, t: int):
    e, a, beta, c, f = ell.coords
    b = -2 * t * beta
    coords = (e, a, b, c, f)
    if any(x.denominator != 1 for x in coords):
        raise ValueError("vector is not in the dual lattice")
    return tuple(int(x) for x in coords)


def primitive_dual(ell: LatticeVector, t: int) -> LatticeVector:
    """The primitive dual-lattice vector on the ray through ``ell``."""
    coords = [Fraction(x) for x in ell.coords]
    coords[2] *= 2 * t
    den = reduce(lambda x, y: x * y // gcd(x, y), (x.denominator for x in coords), 1)
    ints = [int(x * den) for x in coords]
    g = reduce(gcd, (abs(x) for x in ints))
    if g == 0:
        raise ValueError("zero vector")
    out = [Fraction(x, g) for x in ints]
    out[2] /= 2 * t
    return LatticeVector(out)


def humbert_equation(ell: LatticeVector, t: int) -> HumbertComponent:
    norm = ell.norm(t)
    if norm <= 0:
        raise ValueError("Humbert surfaces need a vector of positive norm")
    e, a, b, c, f = _dual_integer_coords(ell, t)
    if reduce(gcd, (abs(x) for x in (e, a, b, c, f))) != 1:
        raise ValueError("vector is not primitive in the dual lattice")
    disc = 2 * t * norm
    if disc != b * b - 4 * f * (t * e) - 4 * c * (t * a):
        raise AssertionError("discriminant mismatch")
    return HumbertComponent(t, ell, int(disc), (t * e, t * a, b, c, f))


def humbert_discriminant(ell: LatticeVector, t: int) -> int:
    return int(2 * t * primitive_dual(ell, t).norm(t))


def _require_squarefree(t: int):
    if t < 1 or not is_squarefree(t):
        raise ValueError("this classification needs square-free t")


def ramification_divisor(t: int, d: int) -> frozenset:
    """Discriminants of the Humbert surfaces fixed by involutions in Gamma_t V_d."""
    _require_squarefree(t)
    if t % d:
        raise ValueError(f"{d} does not divide {t}")
    td = t // d
    if qr_solvable(d, 4 * td):
        return frozenset({4 * d, d})
    if qr_solvable(d, td):
        return frozenset({4 * d})
    return frozenset()


@dataclass
class RamificationEntry:
    d: int
    discriminants: set
    components: dict = field(default_factory=dict)   # disc -> component count
    witnesses: dict = field(default_factory=dict)    # disc -> lattice vector coords


@dataclass
class RamificationReport:
    t: int
    entries: dict                 # d -> RamificationEntry
    distinct: bool | None = None
    oracle_consistent: bool | None = None

    def discriminant_map(self) -> dict:
        return {d: frozenset(e.discriminants) for d, e in self.entries.items()}


def ramification_total(t: int) -> RamificationReport:
    """Surfaces H_4d and H_d over d > 1, with the norm invariants checked distinct."""
    _require_squarefree(t)
    entries = {}
    invariants = []
    for d in divisors(t):
        if d == 1:
            continue
        td = t // d
        discs = set()
        if qr_solvable(d, td):
            discs.add(4 * d)
            invariants.append((Fraction(2, td), 4 * d))
        if d % 2 and qr_solvable(d, 4 * td):
            discs.add(d)
            invariants.append((Fraction(1, 2 * td), d))
        entries[d] = RamificationEntry(d, discs, {D: component_count(t, D) for D in discs})
    norms = [n for n, _ in invariants]
    discs = [D for _, D in invariants]
    distinct = len(set(norms)) == len(norms) and len(set(discs)) == len(discs)
    return RamificationReport(t, entries, distinct)


def _coset_of(t: int, xi: int) -> int | None:
    for d in unitary_divisors(t):
        if xi_element(t, d).value == xi % (2 * t):
            return d
    return None


def _divisor_pairs(k: int, bound: int):
    """(a, c) with a*c = k and |a|, |c| <= bound."""
    if k == 0:
        for x in range(-bound, bound + 1):
            yield 0, x
            if x:
                yield x, 0
        return
    for a in divisors(k):
        if a > bound:
            break
        c = k // a
        if abs(c) <= bound:
            yield a, c
            yield -a, -c


def reflection_survey(t: int, bound: int) -> RamificationReport:
    """Brute-force oracle: reflections sigma_l with l = (0, a, b, c, 0) in L_t.

    Only norms dividing 2 div(l) give integral reflections, and div(l) | 2t,
    so the norm 2(tb^2 - ac) runs over even divisors of 4t.
    """
    if t < 1 or bound < 1:
        raise ValueError("t and bound must be positive")
    entries = {d: RamificationEntry(d, set()) for d in unitary_divisors(t)}
    best: dict = {}
    norms = [n for n in divisors(4 * t) if n % 2 == 0]
    for b in range(-bound, bound + 1):
        for norm in norms:
            for a, c in _divisor_pairs(t * b * b - norm // 2, bound):
                if gcd(gcd(a, b), c) != 1:
                    continue
                div = gcd(gcd(a, 2 * t * b), c)
                if (2 * div) % norm:
                    continue
                xi = (4 * t * b * b // norm - 1) % (2 * t)
                d = _coset_of(t, xi)
                if d is None:
                    raise AssertionError(f"reflection with xi={xi} outside Xi({t})")
                disc = 2 * t * norm // (div * div)
                entries[d].discriminants.add(disc)
                rank = (max(abs(a), abs(b), abs(c)), (a, b, c))
                if (d, disc) not in best or rank < best[(d, disc)]:
                    best[(d, disc)] = rank
    for (d, disc), (_, abc) in best.items():
        a, b, c = abc
        entries[d].witnesses[disc] = (0, a, b, c, 0)
        entries[d].components[disc] = component_count(t, disc)
    return RamificationReport(t, entries)


def survey_agrees(t: int, bound: int | None = None) -> tuple[bool, RamificationReport]:
    """Compare the survey with ramification_divisor for every d | t."""
    report = reflection_survey(t, bound if bound is not None else 10 * t)
    ok = all(frozenset(report.entries[d].discriminants) == ramification_divisor(t, d)
             for d in divisors(t))
    report.oracle_consistent = ok
    return ok, report


@dataclass
class InvolutionRep:
    t: int
    d: int
    kind: int              # 1: H_4d family, 2: H_d family
    abc: tuple
    ell: LatticeVector
    sigma: list
    discriminant: int
    coset: int


def _small_solution(pred, start: int = 1):
    """Lexicographically least (a, b, c) by max norm, then tuple order."""
    r = start
    while True:
        found = [abc for abc in product(range(-r, r + 1), repeat=3)
                 if max(map(abs, abc)) == r and pred(*abc)]
        if found:
            return min(found)
        r += 1


def _witness(t: int, d: int, kind: int, abc, ell: LatticeVector) -> InvolutionRep:
    refl = reflection(ell, t)
    if not refl.integral:
        raise AssertionError("reflection is not integral on L_t")
    coset = _coset_of(t, disc_action(-refl.map, t))
    if coset != d:
        raise AssertionError(f"-sigma lies in V_{coset}, expected V_{d}")
    return InvolutionRep(t, d, kind, tuple(abc), ell, refl.map.m,
                         humbert_discriminant(ell, t), coset)


def involution_reps(t: int, d: int) -> list[InvolutionRep]:
    _require_squarefree(t)
    if t % d:
        raise ValueError(f"{d} does not divide {t}")
    td = t // d
    if not qr_solvable(d, td):
        raise ValueError(f"{d} is not a square mod {td}: no involution in this coset")
    out = []
    abc = _small_solution(lambda a, b, c: gcd(gcd(a, b), c) == 1
                          and d * b * b - td * a * c == 1, start=0)
    a, b, c = abc
    out.append(_witness(t, d, 1, abc, LatticeVector([0, a, Fraction(b, td), c, 0])))
    if qr_solvable(d, 4 * td):
        abc = _small_solution(lambda a, b, c: gcd(gcd(a, b), c) == 1
                              and d * b * b - 4 * td * a * c == 1, start=0)
        a, b, c = abc
        out.append(_witness(t, d, 2, abc, LatticeVector([0, a, Fraction(b, 2 * td), c, 0])))
    return out


@dataclass
class BraschReport:
    t: int
    f: int
    matrix: SymplecticSimilitude    # sqrt(t) * N, multiplier t
    square_is_minus_identity: bool
    coset: int | None
    psi_class: InvolutionClass


def brasch_matrix(t: int, f: int) -> BraschReport:
    if t % 4 != 1:
        raise ValueError("the example needs t = 1 mod 4")
    if f < 1:
        raise ValueError("f must be positive")
    c = -f * f * t - 1
    m = [[-f * t, 1, 0, f * t],
         [c * t, 0, f * t, f * f * t * t],
         [c * t, 0, f * t, -c * t],
         [0, 1, -1, 0]]
    g = SymplecticSimilitude(m, t)
    square = ex.equal(ex.matmul(g.m, g.m), ex.scale(ex.identity(4), -t))
    return BraschReport(t, f, g, square, gamma_star_contains(g, t),
                        involution_classify(psi_map(g, t), t))
