"""Hilbert modular surfaces inside the paramodular moduli space.

Points (z1, z2) of H x H map to the Siegel space by z -> R^T diag(z1, z2) R,
where R = [[1, r], [1, r']] and r is a fixed element of Q(sqrt t).  Matrices
of SL2 over Q(sqrt t) act compatibly through

    g -> diag(R^T, R^-1) [[d(a, a'), d(b, b')], [d(c, c'), d(d, d')]] diag(R^-T, R)

with d(x, y) = diag(x, y) and ' the Galois conjugation.  All arithmetic is
exact in Q(sqrt t) and in Q(sqrt t)(i).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from . import _exact as ex
from ._exact import ComplexScalar
from .numtheory import is_squarefree
from .symplectic import SiegelPoint, SymplecticSimilitude, gamma_t_contains, moebius, x_matrix


class QuadScalar:
    """a + b sqrt(t) with rational a, b."""

    __slots__ = ("a", "b", "t")

    def __init__(self, a=0, b=0, t: int = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.t = t

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.t != self.t and other.b != 0 and self.b != 0:
                raise ValueError("mixing different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.t)
        return NotImplemented

    def _field(self, other):
        return self.t or other.t

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.t)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = self._field(o)
        return QuadScalar(self.a * o.a + t * self.b * o.b, self.a * o.b + self.b * o.a, t)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        """Galois conjugate: sqrt(t) -> -sqrt(t)."""
        return QuadScalar(self.a, -self.b, self.t)

    def norm(self) -> Fraction:
        return self.a * self.a - self.t * self.b * self.b

    def inverse(self) -> "QuadScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quadratic scalar is zero")
        return QuadScalar(self.a / n, -self.b / n, self.t)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadScalar(other, 0, self.t) * self.inverse()

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Sign under the real embedding with sqrt(t) > 0."""
        a, b, t = self.a, self.b, self.t
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with t b^2
        big_a = a * a > t * b * b
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.t}))"


def sqrt_t(t: int) -> QuadScalar:
    return QuadScalar(0, 1, t)


def quad(t: int, a, b=0) -> QuadScalar:
    return QuadScalar(a, b, t)


# Elements of Q(sqrt t)(i): complex numbers whose parts are QuadScalars.
BiComplexScalar = ComplexScalar


def bicomplex(t: int, re_a, re_b, im_a, im_b) -> ComplexScalar:
    return ComplexScalar(QuadScalar(re_a, re_b, t), QuadScalar(im_a, im_b, t))


class OrderKind(enum.Enum):
    O_FULL = "O_full"
    O2 = "O2"
    O2_TILDE = "O2_tilde"
    O2_TILDE_INVERSE = "O2_tilde_inverse"


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def order_contains(x: QuadScalar, kind: OrderKind) -> bool:
    a, b, t = x.a, x.b, x.t
    if kind is OrderKind.O2:
        return _is_int(a) and _is_int(b)
    if kind is OrderKind.O2_TILDE:
        return _is_int(2 * a) and _is_int(2 * b)
    if kind is OrderKind.O2_TILDE_INVERSE:
        return _is_int(a / 2) and _is_int(b / 2)
    if kind is OrderKind.O_FULL:
        if t % 4 == 1:
            # x = m + n (1 + sqrt t)/2  <=>  2b = n, a - b = m
            return _is_int(2 * b) and _is_int(a - b)
        return _is_int(a) and _is_int(b)
    raise ValueError(f"unknown order {kind}")


class Variant(enum.Enum):
    H4T_1MOD4 = "H4t_1mod4"
    HT_1MOD4 = "Ht_1mod4"
    H4T_OTHER = "H4t_other"


def _check_variant(t: int, variant: Variant):
    if t < 2 or not is_squarefree(t):
        raise ValueError("t must be square-free and at least 2")
    one_mod_four = t % 4 == 1
    if (variant is Variant.H4T_OTHER) == one_mod_four:
        raise ValueError(f"variant {variant.value} does not apply to t={t}")


def omega(t: int) -> QuadScalar:
    return QuadScalar(Fraction(1, 2), Fraction(1, 2), t) if t % 4 == 1 else sqrt_t(t)


def r_entry(t: int, variant: Variant) -> QuadScalar:
    """The element r with R = [[1, r], [1, r']]."""
    _check_variant(t, variant)
    if variant is Variant.H4T_OTHER:
        return sqrt_t(t)
    eta = sqrt_t(t) * omega(t)
    return 2 * eta if variant is Variant.H4T_1MOD4 else eta


def r_matrix(t: int, variant: Variant):
    r = r_entry(t, variant)
    one = quad(t, 1)
    return [[one, r], [one, r.conjugate()]]


def image_plane(t: int, variant: Variant) -> tuple:
    """(alpha, beta, gamma) with alpha tau1 + beta tau2 + gamma tau3 = 0 on the image.

    r and r' are the roots of X^2 - (r + r')X + r r', which gives the plane
    (r r') tau1 - (r + r') tau2 + tau3 = 0.
    """
    r = r_entry(t, variant)
    s, p = r + r.conjugate(), r * r.conjugate()
    return (p.a, -s.a, Fraction(1))


def order_for(variant: Variant) -> dict:
    """Where each entry of the Hilbert modular group lives, per variant."""
    if variant is Variant.HT_1MOD4:
        return {"a": OrderKind.O_FULL, "b": OrderKind.O_FULL,
                "c": OrderKind.O_FULL, "d": OrderKind.O_FULL}
    return {"a": OrderKind.O2, "b": OrderKind.O2_TILDE,
            "c": OrderKind.O2_TILDE_INVERSE, "d": OrderKind.O2}


def _diag(x, y):
    return [[x, 0 * x], [0 * y, y]]


def _rationalize(m):
    out = []
    for row in m:
        new_row = []
        for x in row:
            if isinstance(x, QuadScalar):
                if not x.is_rational():
                    raise ArithmeticError("sqrt(t) part did not cancel")
                x = x.a
            new_row.append(Fraction(x))
        out.append(new_row)
    return out


def _blocks(t: int, variant: Variant):
    r = r_matrix(t, variant)
    rt = ex.transpose(r)
    return r, rt, ex.inverse(r), ex.inverse(rt)


def psi_hat_pair(g1, g2, t: int, variant: Variant) -> SymplecticSimilitude:
    """Image of a pair (g1, g2) of 2x2 matrices over Q(sqrt t)."""
    r, rt, r_inv, rt_inv = _blocks(t, variant)
    (a1, b1), (c1, d1) = g1
    (a2, b2), (c2, d2) = g2
    a = ex.matmul(ex.matmul(rt, _diag(a1, a2)), rt_inv)
    b = ex.matmul(ex.matmul(rt, _diag(b1, b2)), r)
    c = ex.matmul(ex.matmul(r_inv, _diag(c1, c2)), rt_inv)
    d = ex.matmul(ex.matmul(r_inv, _diag(d1, d2)), r)
    return SymplecticSimilitude(_rationalize(ex.block([[a, b], [c, d]])))


def galois(g):
    return [[x.conjugate() for x in row] for row in g]


def psi_hat_embed(g, t: int, variant: Variant) -> SymplecticSimilitude:
    (a, b), (c, d) = g
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    return psi_hat_pair(g, galois(g), t, variant)


def swap_involution(t: int, variant: Variant) -> SymplecticSimilitude:
    """S = diag(R^T J R^-T, R^-1 J R), the image of the factor swap."""
    r, rt, r_inv, rt_inv = _blocks(t, variant)
    one, zero = quad(t, 1), quad(t, 0)
    j = [[zero, one], [one, zero]]
    upper = ex.matmul(ex.matmul(rt, j), rt_inv)
    lower = ex.matmul(ex.matmul(r_inv, j), r)
    zeros = [[zero, zero], [zero, zero]]
    return SymplecticSimilitude(_rationalize(ex.block([[upper, zeros], [zeros, lower]])))


@dataclass
class Decomposition:
    g1: list
    g2: list
    memberships: dict     # entry name -> bool
    galois_paired: dict   # entry name -> bool

    @property
    def all_true(self) -> bool:
        return all(self.memberships.values()) and all(self.galois_paired.values())


class NotInImageError(ValueError):
    pass


def _diagonal_entries(m, t: int):
    if m[0][1] != 0 or m[1][0] != 0:
        raise NotInImageError("block is not diagonal after undoing R")
    return tuple(x if isinstance(x, QuadScalar) else quad(t, x) for x in (m[0][0], m[1][1]))


def lemma_3_12_decompose(m: SymplecticSimilitude, t: int, variant: Variant) -> Decomposition:
    """Undo the R-conjugation blockwise and test the entries against the orders."""
    r, rt, r_inv, rt_inv = _blocks(t, variant)
    rows = [[quad(t, x) for x in row] for row in m.m]
    a = ex.sub_block(rows, (0, 1), (0, 1))
    b = ex.sub_block(rows, (0, 1), (2, 3))
    c = ex.sub_block(rows, (2, 3), (0, 1))
    d = ex.sub_block(rows, (2, 3), (2, 3))
    a1, a2 = _diagonal_entries(ex.matmul(ex.matmul(rt_inv, a), rt), t)
    b1, b2 = _diagonal_entries(ex.matmul(ex.matmul(rt_inv, b), r_inv), t)
    c1, c2 = _diagonal_entries(ex.matmul(ex.matmul(r, c), rt), t)
    d1, d2 = _diagonal_entries(ex.matmul(ex.matmul(r, d), r_inv), t)
    orders = order_for(variant)
    first = {"a": a1, "b": b1, "c": c1, "d": d1}
    second = {"a": a2, "b": b2, "c": c2, "d": d2}
    memberships = {k: order_contains(first[k], orders[k]) for k in first}
    paired = {k: second[k] == first[k].conjugate() for k in first}
    return Decomposition([[a1, b1], [c1, d1]], [[a2, b2], [c2, d2]], memberships, paired)


def _random_entry(rng: random.Random, t: int, kind: OrderKind, size: int) -> QuadScalar:
    m, n = rng.randint(-size, size), rng.randint(-size, size)
    if kind is OrderKind.O2:
        return quad(t, m, n)
    if kind is OrderKind.O2_TILDE:
        return quad(t, Fraction(m, 2), Fraction(n, 2))
    if kind is OrderKind.O2_TILDE_INVERSE:
        return quad(t, 2 * m, 2 * n)
    return quad(t, m, 0) + n * omega(t)


def sample_hilbert_group(t: int, variant: Variant, seed: int, length: int = 4, size: int = 2):
    """Deterministic product of unipotent generators of the relevant group."""
    _check_variant(t, variant)
    rng = random.Random(f"hilbert:{t}:{variant.value}:{seed}:{length}")
    orders = order_for(variant)
    one, zero = quad(t, 1), quad(t, 0)
    g = [[one, zero], [zero, one]]
    for _ in range(length):
        if rng.random() < 0.5:
            step = [[one, _random_entry(rng, t, orders["b"], size)], [zero, one]]
        else:
            step = [[one, zero], [_random_entry(rng, t, orders["c"], size), one]]
        g = ex.matmul(g, step)
    return g


def phi_hat(z1, z2, t: int, variant: Variant) -> SiegelPoint:
    r = r_entry(t, variant)
    rc = r.conjugate()
    return SiegelPoint(z1 + z2, z1 * r + z2 * rc, z1 * (r * r) + z2 * (rc * rc))


def humbert_image_identity(t: int, variant: Variant, plane=None) -> bool:
    """Does alpha tau1 + beta tau2 + gamma tau3 vanish identically on the image?

    The image is linear in (z1, z2), so it is enough that both coefficient
    vectors (1, r, r^2) and (1, r', r'^2) are annihilated.
    """
    alpha, beta, gamma = plane if plane is not None else image_plane(t, variant)
    r = r_entry(t, variant)
    return all(alpha + beta * x + gamma * x * x == 0 for x in (r, r.conjugate()))


def printed_plane(t: int, variant: Variant) -> tuple:
    """The image planes as they are written down for the two H_4t cases."""
    if variant is Variant.H4T_1MOD4:
        return (-(t * t - t), 2 * t, -1)
    if variant is Variant.H4T_OTHER:
        return (t, 0, -1)
    return image_plane(t, variant)


def x_transport_check(t: int) -> bool:
    """X^-1 carries the t = 1 mod 4 H_4t image plane onto {t tau1 - tau3 = 0}."""
    variant = Variant.H4T_1MOD4
    r = r_entry(t, variant)
    x_inv = x_matrix(t, -1)
    # X^-1 acts by tau -> A tau A^T with A = [[1, 0], [-t, 1]]; check on the
    # two generating directions z = (1, 0) and (0, 1).
    for root in (r, r.conjugate()):
        point = SiegelPoint(quad(t, 1), root, root * root)
        image = moebius(x_inv, point)
        if t * image.tau1 - image.tau3 != 0:
            return False
    return True


def act(g, z):
    (a, b), (c, d) = g
    return (a * z + b) / (c * z + d)


def equivariance_check(g, z1, z2, t: int, variant: Variant) -> bool:
    """phi_hat(g z1, g' z2) == Psi_hat(g) . phi_hat(z1, z2), exactly."""
    gc = galois(g)
    left = phi_hat(act(g, z1), act(gc, z2), t, variant)
    right = moebius(psi_hat_embed(g, t, variant), phi_hat(z1, z2, t, variant))
    return (left.tau1 == right.tau1 and left.tau2 == right.tau2
            and left.tau3 == right.tau3)


def swap_equivariance_check(z1, z2, t: int, variant: Variant) -> bool:
    left = phi_hat(z2, z1, t, variant)
    right = moebius(swap_involution(t, variant), phi_hat(z1, z2, t, variant))
    return (left.tau1 == right.tau1 and left.tau2 == right.tau2
            and left.tau3 == right.tau3)


def lattice_basis(z1, z2, t: int, variant: Variant):
    """The four printed generators of the period lattice, as pairs."""
    _check_variant(t, variant)
    rt = sqrt_t(t)
    if variant is Variant.H4T_OTHER:
        w = sqrt_t(t)
        half = Fraction(1, 2)
        return [(z1, z2), (z1 * w, z2 * w.conjugate()),
                (quad(t, half), quad(t, half)), (w * half, w.conjugate() * half)]
    eta = rt * omega(t)
    etac = eta.conjugate()
    third = (-etac / rt, eta / rt)
    if variant is Variant.HT_1MOD4:
        return [(z1, z2), (z1 * eta, z2 * etac), third, (rt, -rt)]
    return [(z1, z2), (z1 * (2 * eta), z2 * (2 * etac)), third,
            (rt * Fraction(1, 2), -rt * Fraction(1, 2))]


def _as_complex(x, t: int) -> ComplexScalar:
    if isinstance(x, ComplexScalar):
        return x
    return ComplexScalar(x if isinstance(x, QuadScalar) else quad(t, x), quad(t, 0))


def riemann_gram_check(t: int, variant: Variant, z1, z2):
    """E(u, v) = Im(u1 conj(v1) / Im z1 + u2 conj(v2) / Im z2) on the basis."""
    z1, z2 = _as_complex(z1, t), _as_complex(z2, t)
    y1, y2 = z1.im, z2.im
    if not (y1 > 0 and y2 > 0):
        raise ValueError("sample point must lie in H x H")
    basis = [(_as_complex(u, t), _as_complex(v, t)) for u, v in lattice_basis(z1, z2, t, variant)]
    gram = []
    for u in basis:
        row = []
        for v in basis:
            value = (u[0] * v[0].conjugate()).im / y1 + (u[1] * v[1].conjugate()).im / y2
            if not value.is_rational():
                raise ArithmeticError("Riemann form is not rational on the lattice")
            row.append(value.a)
        gram.append(row)
    return gram


def w_t(t: int):
    return ex.as_matrix([[0, 0, 1, 0], [0, 0, 0, t], [-1, 0, 0, 0], [0, -t, 0, 0]])


def sample_point(rng: random.Random, t: int, size: int = 3) -> ComplexScalar:
    """A point of Q(sqrt t)(i) with imaginary part positive for sqrt(t) > 0."""
    re = quad(t, Fraction(rng.randint(-size, size), rng.randint(1, 4)),
              Fraction(rng.randint(-size, size), rng.randint(1, 4)))
    while True:
        im = quad(t, Fraction(rng.randint(1, size * 2), rng.randint(1, 4)),
                  Fraction(rng.randint(-size, size), rng.randint(1, 4)))
        if im > 0:
            return ComplexScalar(re, im)


def gamma_t_image_check(g, t: int, variant: Variant) -> bool:
    return gamma_t_contains(psi_hat_embed(g, t, variant), t)
