"""Small exact linear algebra over Python fields.

Matrices are lists of lists.  Every routine only uses ``+ - * /`` and
comparison with ``0``, so the same code runs over :class:`fractions.Fraction`,
:class:`ComplexScalar` and the quadratic-field scalars of ``hilbert``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class ComplexScalar:
    """``re + im*i`` with ``re``, ``im`` taken from an exact real field.

    With Fraction parts this is a Gaussian rational; with quadratic-field
    parts it is the rank-4 algebra used for Hilbert modular points.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, (int, Rational)) and not isinstance(re, Fraction):
            re = Fraction(re)
        if isinstance(im, (int, Rational)) and not isinstance(im, Fraction):
            im = Fraction(im)
        self.re = re
        self.im = im

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, ComplexScalar):
            return other
        return cls(other, 0 * other if not isinstance(other, int) else 0)

    def __add__(self, other):
        o = self._coerce(other)
        return ComplexScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return ComplexScalar(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return ComplexScalar(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("complex scalar is zero")
        return ComplexScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re})+({self.im})i"


I = ComplexScalar(0, 1)


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None):
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def as_matrix(rows):
    """Copy ``rows`` into a matrix, turning ints into Fractions."""
    return [[frac(x) if isinstance(x, int) else x for x in row] for row in rows]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            s = s + x * y
        out.append(s)
    return out


def scale(a, c):
    return [[c * x for x in row] for row in a]


def add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b))


def is_identity(a) -> bool:
    return equal(a, identity(len(a)))


def block(blocks):
    """Assemble a matrix from a 2-d list of equally sized blocks."""
    out = []
    for brow in blocks:
        for i in range(len(brow[0])):
            row = []
            for b in brow:
                row.extend(b[i])
            out.append(row)
    return out


def sub_block(a, rows, cols):
    return [[a[i][j] for j in cols] for i in rows]


def _row_echelon(a):
    """Return (echelon copy, pivot columns, sign of row swaps)."""
    m = [list(r) for r in a]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    sign = 1
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots, sign


def rank(a) -> int:
    return len(_row_echelon(a)[1])


def det(a):
    n = len(a)
    m, pivots, sign = _row_echelon(a)
    if len(pivots) < n:
        return Fraction(0)
    out = sign
    for i in range(n):
        out = out * m[i][i]
    return out


def inverse(a):
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def kernel_dim(a) -> int:
    return len(a[0]) - rank(a)


def is_integral(a) -> bool:
    return all(frac(x).denominator == 1 for row in a for x in row)


def signature(gram):
    """(positive, negative) inertia of a symmetric rational matrix.

    Symmetric Gaussian elimination by congruence; a zero pivot with a
    nonzero off-diagonal entry is cured by adding that row/column.
    """
    m = [[frac(x) for x in row] for row in gram]
    n = len(m)
    pos = neg = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
            if j is None:
                k += 1
                continue
            s = 1 if 2 * m[k][j] + m[j][j] != 0 else -1
            for i in range(n):
                m[k][i] += s * m[j][i]
            for i in range(n):
                m[i][k] += s * m[i][j]
        piv = m[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
        for i in range(k + 1, n):
            m[k][i] = Fraction(0)
            m[i][k] = Fraction(0)
        k += 1
    return pos, neg


def to_int_rows(a):
    return [[int(x) for x in row] for row in a]


def nullspace(a):
    """Basis of the right kernel of ``a`` (list of column vectors)."""
    m, pivots, _ = _row_echelon(a)
    n_cols = len(a[0])
    # back-substitute to reduced echelon form
    rows = [r for r in m[: len(pivots)]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        piv = rows[i][c]
        rows[i] = [x / piv for x in rows[i]]
        for k in range(i):
            if rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis
