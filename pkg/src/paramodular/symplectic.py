"""Symplectic similitudes of Q^4 and the paramodular group Gamma_t.

The alternating form is J = (0 E; -E 0).  A similitude ``g`` with multiplier
``mu`` satisfies ``g J g^T = mu J``.  Real elements such as
V_d = d^{-1/2} Vtilde_d are never formed: they are carried as the integral
pair ``(Vtilde_d, d)`` and every relation is restated multiplicatively.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from . import _exact as ex
from .numtheory import is_unitary_divisor, unitary_divisors

J4 = ex.as_matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

# ordered basis e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4
WEDGE_PAIRS = list(combinations(range(4), 2))


@dataclass
class SymplecticSimilitude:
    m: list
    mu: Fraction = Fraction(1)
    # (x, y) from the extended Euclid step when built by make_vtilde
    euclid: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        self.m = ex.as_matrix(self.m)
        self.mu = Fraction(self.mu)
        if self.mu <= 0:
            raise ValueError("multiplier must be positive")
        if not ex.equal(ex.matmul(ex.matmul(self.m, J4), ex.transpose(self.m)),
                        ex.scale(J4, self.mu)):
            raise ValueError("matrix is not a symplectic similitude with this multiplier")

    def __matmul__(self, other: "SymplecticSimilitude") -> "SymplecticSimilitude":
        return SymplecticSimilitude(ex.matmul(self.m, other.m), self.mu * other.mu)

    def inverse(self) -> "SymplecticSimilitude":
        return SymplecticSimilitude(ex.inverse(self.m), 1 / self.mu)

    def scaled(self, c) -> "SymplecticSimilitude":
        """The same projective element with matrix multiplied by ``c``."""
        c = Fraction(c)
        return SymplecticSimilitude(ex.scale(self.m, c), self.mu * c * c)

    def __neg__(self):
        return SymplecticSimilitude(ex.scale(self.m, -1), self.mu)

    def rows(self):
        return [[str(x) for x in row] for row in self.m]


def is_symplectic(m, mu=1) -> bool:
    m = ex.as_matrix(m)
    return ex.equal(ex.matmul(ex.matmul(m, J4), ex.transpose(m)), ex.scale(J4, Fraction(mu)))


def wedge_square(g):
    """Matrix of the map X -> g X g^T on bivectors (lexicographic basis)."""
    out = []
    for i, j in WEDGE_PAIRS:
        row = []
        for k, l in WEDGE_PAIRS:
            row.append(g[i][k] * g[j][l] - g[i][l] * g[j][k])
        out.append(row)
    return out


def pfaffian(x):
    x = ex.as_matrix(x)
    if not ex.equal(x, ex.scale(ex.transpose(x), -1)):
        raise ValueError("matrix is not skew-symmetric")
    return x[0][1] * x[2][3] - x[0][2] * x[1][3] + x[0][3] * x[1][2]


# positions (0-based) constrained in Gamma_t
_T_MULTIPLE = [(0, 3), (1, 0), (1, 2), (1, 3), (2, 3)]


def gamma_t_contains(g: SymplecticSimilitude, t: int) -> bool:
    if g.mu != 1 or not is_symplectic(g.m):
        return False
    for i in range(4):
        for j in range(4):
            x = g.m[i][j]
            if (i, j) == (3, 1):
                if (x * t).denominator != 1:
                    return False
            elif x.denominator != 1:
                return False
            elif (i, j) in _T_MULTIPLE and x.numerator % t:
                return False
    return True


def c_matrix(t: int):
    return ex.as_matrix([[1, 0, 0, 0], [0, Fraction(1, t), 0, 0], [0, 0, 1, 0], [0, 0, 0, t]])


def conjugate_to_hat(g: SymplecticSimilitude, t: int) -> SymplecticSimilitude:
    """C_t g C_t^{-1}."""
    c = c_matrix(t)
    return SymplecticSimilitude(ex.matmul(ex.matmul(c, g.m), ex.inverse(c)), g.mu)


def conjugate_from_hat(g: SymplecticSimilitude, t: int) -> SymplecticSimilitude:
    c = c_matrix(t)
    return SymplecticSimilitude(ex.matmul(ex.matmul(ex.inverse(c), g.m), c), g.mu)


_HAT_T_MULTIPLE = [(0, 1), (2, 1), (3, 0), (3, 1), (3, 2)]


def gamma_hat_pattern(g: SymplecticSimilitude, t: int) -> bool:
    if g.mu != 1 or not is_symplectic(g.m):
        return False
    for i in range(4):
        for j in range(4):
            x = g.m[i][j]
            if (i, j) == (1, 3):
                if (x * t).denominator != 1:
                    return False
            elif x.denominator != 1:
                return False
            elif (i, j) in _HAT_T_MULTIPLE and x.numerator % t:
                return False
    return True


def gamma_hat_contains(g: SymplecticSimilitude, t: int) -> bool:
    by_pattern = gamma_hat_pattern(g, t)
    by_conjugation = gamma_t_contains(conjugate_from_hat(g, t), t)
    if by_pattern != by_conjugation:
        raise AssertionError("pattern and conjugation tests for the hat group disagree")
    return by_pattern


def euclid_xy(t: int, d: int) -> tuple[int, int]:
    """Integers x, y with x*d - y*(t/d) = 1."""
    td = t // d
    if td == 1:
        return (0, -1) if d > 1 else (1, 0)
    # x d = 1 mod td
    x = pow(d, -1, td) if d % td else 0
    y = (x * d - 1) // td
    return x, y


def make_vtilde(t: int, d: int, xy: tuple[int, int] | None = None) -> SymplecticSimilitude:
    if not is_unitary_divisor(d, t):
        raise ValueError(f"{d} is not a unitary divisor of {t}")
    x, y = xy if xy is not None else euclid_xy(t, d)
    if x * d - y * (t // d) != 1:
        raise ValueError("x*d - y*t_d must equal 1")
    m = [[d * x, -1, 0, 0],
         [-y * t, d, 0, 0],
         [0, 0, d, y * t],
         [0, 0, 1, d * x]]
    return SymplecticSimilitude(m, d, euclid=(x, y))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def gamma_star_contains(g: SymplecticSimilitude, t: int) -> int | None:
    """The unitary d with g V_d^{-1} in Gamma_t, or None."""
    found = None
    for d in unitary_divisors(t):
        r = _rational_sqrt(Fraction(d) / g.mu)
        if r is None:
            continue
        h = ex.scale(ex.matmul(g.m, ex.inverse(make_vtilde(t, d).m)), r)
        if gamma_t_contains(SymplecticSimilitude(h), t):
            if found is not None:
                raise AssertionError("element lies in two cosets of Gamma_t")
            found = d
    return found


def gamma_hat_star_contains(g: SymplecticSimilitude, t: int) -> int | None:
    return gamma_star_contains(conjugate_from_hat(g, t), t)


def vhat_t(t: int) -> SymplecticSimilitude:
    """sqrt(t) * V^_t, the transpose of the d=t coset representative."""
    return SymplecticSimilitude([[0, t, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, t, 0]], t)


@dataclass(frozen=True)
class SiegelPoint:
    """Point (tau1, tau2; tau2, tau3) of the Siegel upper half-space."""

    tau1: object
    tau2: object
    tau3: object

    def matrix(self):
        return [[self.tau1, self.tau2], [self.tau2, self.tau3]]

    @classmethod
    def from_matrix(cls, m):
        if m[0][1] != m[1][0]:
            raise ValueError("matrix is not symmetric")
        return cls(m[0][0], m[0][1], m[1][1])

    def in_domain(self, t: int = 1) -> bool:
        y1, y2, y3 = self.tau1.im, self.tau2.im, self.tau3.im
        return y1 > 0 and y1 * y3 - y2 * y2 > 0


def moebius(g: SymplecticSimilitude | list, z: SiegelPoint) -> SiegelPoint:
    """(A z + B)(C z + D)^{-1}; the multiplier cancels projectively."""
    m = g.m if isinstance(g, SymplecticSimilitude) else g
    a = ex.sub_block(m, (0, 1), (0, 1))
    b = ex.sub_block(m, (0, 1), (2, 3))
    c = ex.sub_block(m, (2, 3), (0, 1))
    d = ex.sub_block(m, (2, 3), (2, 3))
    zm = z.matrix()
    num = ex.add(ex.matmul(a, zm), b)
    den = ex.add(ex.matmul(c, zm), d)
    if ex.det(den) == 0:
        raise ZeroDivisionError("C z + D is singular")
    return SiegelPoint.from_matrix(ex.matmul(num, ex.inverse(den)))


def vd_tau_action(t: int, d: int, z: SiegelPoint, xy: tuple[int, int] | None = None) -> SiegelPoint:
    x, y = xy if xy is not None else euclid_xy(t, d)
    td = t // d
    left = [[x, -1], [-y * td, d]]
    mid = [[d * z.tau1, z.tau2], [z.tau2, z.tau3 / d]]
    right = [[x, -y * td], [-1, d]]
    return SiegelPoint.from_matrix(ex.matmul(ex.matmul(left, mid), right))


# ---- Gamma_t sampling --------------------------------------------------------

def upper_translation(t: int, b11: int, b12: int, b22: int) -> SymplecticSimilitude:
    """(E B; 0 E) with B = (b11, t b12; t b12, t b22)."""
    return SymplecticSimilitude([[1, 0, b11, t * b12], [0, 1, t * b12, t * b22],
                                 [0, 0, 1, 0], [0, 0, 0, 1]])


def lower_translation(t: int, c11: int, c12: int, c22: int) -> SymplecticSimilitude:
    """(E 0; C E) with C = (c11, c12; c12, c22/t)."""
    return SymplecticSimilitude([[1, 0, 0, 0], [0, 1, 0, 0],
                                 [c11, c12, 1, 0], [c12, Fraction(c22, t), 0, 1]])


def unit_block(u) -> SymplecticSimilitude:
    """diag(U, U^{-T}) for U in GL_2(Z)."""
    u = ex.as_matrix(u)
    return SymplecticSimilitude(ex.block([[u, ex.zeros(2)],
                                          [ex.zeros(2), ex.transpose(ex.inverse(u))]]))


def x_matrix(t: int, k: int = 1) -> SymplecticSimilitude:
    """The unipotent element with entries k t at (2,1) and -k t at (3,4)."""
    return unit_block([[1, 0], [k * t, 1]])


def first_plane_swap() -> SymplecticSimilitude:
    """e1 -> -e3, e3 -> e1 on the first hyperbolic pair."""
    return SymplecticSimilitude([[0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1]])


def _random_generator(rng: random.Random, t: int) -> SymplecticSimilitude:
    kind = rng.randrange(6)
    r = lambda: rng.randint(-2, 2)  # noqa: E731
    if kind == 0:
        return upper_translation(t, r(), r(), r())
    if kind == 1:
        return lower_translation(t, r(), r(), r())
    if kind == 2:
        return unit_block(rng.choice([[[1, 1], [0, 1]], [[1, -1], [0, 1]],
                                      [[-1, 0], [0, 1]], [[1, 0], [0, -1]]]))
    if kind == 3:
        return x_matrix(t, rng.choice([-1, 1, 2]))
    if kind == 4:
        return first_plane_swap()
    return unit_block([[1, 0], [t * rng.choice([-1, 1]), 1]])


def sample_gamma_t(t: int, seed: int, length: int = 6) -> SymplecticSimilitude:
    if length < 1:
        raise ValueError("length must be at least 1")
    rng = random.Random(f"gamma_t:{t}:{seed}:{length}")
    g = _random_generator(rng, t)
    for _ in range(length - 1):
        g = g @ _random_generator(rng, t)
    return g
