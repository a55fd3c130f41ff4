"""The lattice L_t = W_t^perp in the bivectors of Z^4 and the map Psi.

Basis of L_t (fixed throughout)::

    e1^e2,  e2^e3,  e1^e3 - t e2^e4,  e4^e1,  e4^e3

Vectors are 5-tuples of Fractions in this basis; dual vectors have
third coordinate in (2t)^{-1} Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from . import _exact as ex
from .numtheory import xi_residues
from .symplectic import (WEDGE_PAIRS, SiegelPoint, SymplecticSimilitude, euclid_xy,
                         wedge_square)


def _perm_sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def wedge_pairing(x, y):
    """(X, Y) defined by X ^ Y = (X, Y) e1^e2^e3^e4."""
    total = 0
    for a, (i, j) in enumerate(WEDGE_PAIRS):
        if x[a] == 0:
            continue
        for b, (k, l) in enumerate(WEDGE_PAIRS):
            if y[b] != 0 and len({i, j, k, l}) == 4:
                total += x[a] * y[b] * _perm_sign((i, j, k, l))
    return total


def wedge_basis(t: int):
    """The five L_t basis bivectors followed by W_t, in wedge coordinates."""
    return [
        [1, 0, 0, 0, 0, 0],    # e1^e2
        [0, 0, 0, 1, 0, 0],    # e2^e3
        [0, 1, 0, 0, -t, 0],   # e1^e3 - t e2^e4
        [0, 0, -1, 0, 0, 0],   # e4^e1
        [0, 0, 0, 0, 0, -1],   # e4^e3
        [0, 1, 0, 0, t, 0],    # W_t
    ]


def gram_st(t: int):
    if t < 1:
        raise ValueError("t must be positive")
    return ex.as_matrix([[0, 0, 0, 0, -1],
                         [0, 0, 0, -1, 0],
                         [0, 0, 2 * t, 0, 0],
                         [0, -1, 0, 0, 0],
                         [-1, 0, 0, 0, 0]])


def gram_from_wedge(t: int):
    """S_t recomputed from the wedge pairing of the printed basis."""
    basis = wedge_basis(t)[:5]
    return [[Fraction(wedge_pairing(u, v)) for v in basis] for u in basis]


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))
        if len(self.coords) != 5:
            raise ValueError("lattice vectors have five coordinates")

    def pairing(self, other: "LatticeVector", t: int) -> Fraction:
        return bilinear(self.coords, other.coords, t)

    def norm(self, t: int) -> Fraction:
        return bilinear(self.coords, self.coords, t)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dual(self, t: int) -> bool:
        return all(x.denominator == 1 for x in ex.matvec(gram_st(t), self.coords))

    def __mul__(self, c):
        return LatticeVector([c * x for x in self.coords])

    __rmul__ = __mul__


def bilinear(u, v, t: int) -> Fraction:
    u1, u2, u3, u4, u5 = u
    v1, v2, v3, v4, v5 = v
    return -(u1 * v5 + u5 * v1) - (u2 * v4 + u4 * v2) + 2 * t * u3 * v3


@dataclass
class OrthogonalMap:
    m: list

    def __post_init__(self):
        self.m = ex.as_matrix(self.m)

    def is_isometry(self, t: int) -> bool:
        return preserves_form(self.m, gram_st(t))

    def __matmul__(self, other: "OrthogonalMap") -> "OrthogonalMap":
        return OrthogonalMap(ex.matmul(self.m, other.m))

    def __neg__(self):
        return OrthogonalMap(ex.scale(self.m, -1))

    def det(self):
        return ex.det(self.m)

    def rows(self):
        return [[str(x) for x in row] for row in self.m]


def preserves_form(m, gram) -> bool:
    return ex.equal(ex.matmul(ex.matmul(ex.transpose(m), gram), m), gram)


class NotParamodularError(ValueError):
    pass


def psi_map(g: SymplecticSimilitude, t: int) -> OrthogonalMap:
    """Psi(g) = wedge^2(I_t g I_t^{-1}) / mu restricted to L_t."""
    it = ex.as_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, t]])
    h = ex.matmul(ex.matmul(it, g.m), ex.inverse(it))
    p = ex.transpose(ex.as_matrix(wedge_basis(t)))
    full = ex.scale(ex.matmul(ex.matmul(ex.inverse(p), wedge_square(h)), p), 1 / g.mu)
    w_col = [full[i][5] for i in range(6)]
    w_row = full[5]
    unit = [0, 0, 0, 0, 0, 1]
    if w_col != unit or w_row != unit:
        raise NotParamodularError("W_t is not fixed; not a paramodular similitude")
    return OrthogonalMap([row[:5] for row in full[:5]])


def disc_action(o: OrthogonalMap, t: int) -> int:
    """Multiplier by which ``o`` acts on the discriminant group Z/2tZ."""
    if not ex.is_integral(o.m):
        raise ValueError("map is not integral on L_t")
    for i in range(5):
        if i != 2 and o.m[i][2].numerator % (2 * t):
            raise ValueError("map does not preserve the dual lattice")
    xi = int(o.m[2][2]) % (2 * t)
    if xi not in xi_residues(t):
        raise AssertionError("discriminant action outside Xi(t)")
    return xi


Z_I = (ex.ComplexScalar(1), ex.I, ex.ComplexScalar(0), ex.I, ex.ComplexScalar(1))


def siegel_to_quadric(z: SiegelPoint, t: int):
    """psi_t followed by the embedding into the projective quadric."""
    z3 = z.tau3 / t
    z2 = z.tau2 / t
    z1 = z.tau1
    return [t * z2 * z2 - z1 * z3, z3, z2, z1, ex.ComplexScalar(1)]


def quadric_to_siegel(vec, t: int) -> SiegelPoint:
    if vec[4] == 0:
        raise ValueError("point at infinity")
    z3, z2, z1 = (vec[1] / vec[4], vec[2] / vec[4], vec[3] / vec[4])
    return SiegelPoint(z1, t * z2, t * z3)


def orthogonal_action(o: OrthogonalMap, vec):
    return ex.matvec(o.m, vec)


def projectively_equal(u, v) -> bool:
    k = next((i for i in range(len(v)) if v[i] != 0), None)
    if k is None or u[k] == 0:
        return False
    r = u[k] / v[k]
    return all(u[i] == r * v[i] for i in range(len(u)))


def in_plus_component(o: OrthogonalMap, t: int) -> bool:
    image = orthogonal_action(o, list(Z_I))
    if bilinear(image, image, t) != 0:
        raise ValueError("image is not on the quadric")
    if image[4] == 0:
        raise ValueError("image has vanishing last coordinate")
    z1 = image[3] / image[4]
    return z1.im > 0


def divisor_of(v: LatticeVector, t: int) -> int:
    if not v.is_integral():
        raise ValueError("vector is not in L_t")
    if all(c == 0 for c in v.coords):
        raise ValueError("zero vector has no divisor")
    pairings = ex.matvec(gram_st(t), v.coords)
    return reduce(gcd, (abs(int(x)) for x in pairings))


@dataclass
class Reflection:
    vector: LatticeVector
    map: OrthogonalMap
    integral: bool


def reflection(v: LatticeVector, t: int) -> Reflection:
    n = v.norm(t)
    if n == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    sv = ex.matvec(gram_st(t), v.coords)
    c = v.coords
    m = [[Fraction(int(i == j)) - 2 * c[i] * sv[j] / n for j in range(5)] for i in range(5)]
    return Reflection(v, OrthogonalMap(m), ex.is_integral(m))


def reflection_integral_criterion(v: LatticeVector, t: int) -> bool:
    """norm(v) divides 2 div(v) for primitive integral v."""
    n = v.norm(t)
    return n != 0 and (2 * divisor_of(v, t)) % n == 0


@dataclass
class InvolutionClass:
    tag: str
    plus_dim: int
    minus_dim: int
    plus_space: list
    minus_space: list


def involution_classify(o: OrthogonalMap, t: int) -> InvolutionClass:
    n = 5
    if not ex.is_identity(ex.matmul(o.m, o.m)):
        raise ValueError("map is not an involution")
    if ex.is_identity(o.m) or ex.is_identity(ex.scale(o.m, -1)):
        raise ValueError("scalar map has no mixed spectrum")
    eye = ex.identity(n)
    plus = ex.nullspace(ex.sub(o.m, eye))
    minus = ex.nullspace(ex.add(o.m, eye))
    if len(plus) + len(minus) != n:
        raise AssertionError("involution is not diagonalisable")
    if len(minus) % 2:
        raise ValueError("involution has determinant -1")
    tag = {1: "reflection-type", 3: "rotation-type"}[len(plus)]
    return InvolutionClass(tag, len(plus), len(minus), plus, minus)


# ---- K3 lattice ------------------------------------------------------------

E8_CARTAN = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


def e8_minus():
    return ex.as_matrix([[-x for x in row] for row in E8_CARTAN])


def k3_gram():
    """Gram of U + U + U + E8(-1) + E8(-1) (rank 22)."""
    u = ex.as_matrix([[0, 1], [1, 0]])
    z = lambda r, c: ex.zeros(r, c)  # noqa: E731
    blocks = [u, u, u, e8_minus(), e8_minus()]
    sizes = [len(b) for b in blocks]
    rows = []
    for i, b in enumerate(blocks):
        rows.append([b if j == i else z(sizes[i], sizes[j]) for j in range(len(blocks))])
    return ex.block(rows)


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


@dataclass
class K3ComplementResult:
    ok: bool
    complement_basis: list
    complement_gram: list
    saturated: bool


def k3_complement_check(t: int) -> K3ComplementResult:
    gram = k3_gram()
    n = 22
    h = _unit(n, 4)
    h[5] = Fraction(t)                      # e + t f in the third U
    d_basis = [h] + [_unit(n, i) for i in range(6, 22)]
    pairing_rows = [ex.matvec(gram, v) for v in d_basis]
    complement_space = ex.nullspace(pairing_rows)
    hp = _unit(n, 4)
    hp[5] = Fraction(-t)                    # e - t f
    # ordered to match S_t: hyperbolic pairs at (1,5) and (2,4), <-2t> in the middle
    witness = [_unit(n, 0), _unit(n, 2), hp, _unit(n, 3), _unit(n, 1)]
    in_complement = all(all(x == 0 for x in ex.matvec(pairing_rows, w)) for w in witness)
    spans = (ex.rank(complement_space) == 5 == len(complement_space)
             and ex.rank(complement_space + witness) == 5)
    # saturation: gcd of maximal minors is 1
    g = 0
    for cols in combinations(range(n), 5):
        g = gcd(g, abs(int(ex.det([[w[c] for c in cols] for w in witness]))))
        if g == 1:
            break
    w_gram = [[sum(u[i] * gram[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])
               for v in witness] for u in witness]
    expected = ex.scale(gram_st(t), -1)
    ok = in_complement and spans and g == 1 and ex.equal(w_gram, expected)
    return K3ComplementResult(ok, witness, w_gram, g == 1)


def vd_image_template(t: int, d: int, xy: tuple[int, int] | None = None) -> OrthogonalMap:
    """Closed form of Psi(V_d) for the Euclid pair (x, y)."""
    x, y = xy if xy is not None else euclid_xy(t, d)
    td = t // d
    return OrthogonalMap([[1, 0, 0, 0, 0],
                          [0, d, -2 * y * t, y * y * td, 0],
                          [0, -1, d * x + td * y, -x * y, 0],
                          [0, td, -2 * t * x, x * x * d, 0],
                          [0, 0, 0, 0, 1]])
