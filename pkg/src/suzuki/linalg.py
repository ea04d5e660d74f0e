"""Vectors and matrices over a :class:`~suzuki.ring.Ring`.

The natural module V has basis e1, e2, e-2, e-1, stored at positions
0, 1, 2, 3 (use :func:`idx` to translate signed indices).  Its exterior
square has basis, in this order::

    e1^e2, e1^e-2, e1^e-1, e2^e-2, e2^e-1, e-2^e-1

``rho`` keeps coordinates 0, 1, 4, 5 of a 6-vector; ``rho_hat`` is its
transpose.
"""

from __future__ import annotations

from itertools import combinations

from .ring import Element, Ring, RingError

__all__ = [
    "idx",
    "Vector",
    "Matrix",
    "WEDGE_BASIS",
    "identity",
    "s_matrix",
    "wedge_square",
    "rho",
    "rho_hat",
    "tau_map",
    "is_symplectic",
    "symplectic_inverse",
    "NotSymplecticError",
]

SIGNED = (1, 2, -2, -1)
_POS = {1: 0, 2: 1, -2: 2, -1: 3}

# pairs (i, j) with i before j in the order 1 < 2 < -2 < -1, as 0-based positions
WEDGE_BASIS = tuple(combinations(range(4), 2))
_RHO_ROWS = (0, 1, 4, 5)


def idx(i):
    """Signed basis index (1, 2, -2, -1) -> storage position (0..3)."""
    return _POS[i]


class NotSymplecticError(ValueError):
    pass


class Vector:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords):
        self.ring = ring
        self.coords = tuple(coords)

    @classmethod
    def from_values(cls, ring, values):
        return cls(ring, [ring(v).code for v in values])

    @classmethod
    def basis(cls, ring, n, i):
        return cls(ring, [int(k == i) for k in range(n)])

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return Element(self.ring, self.coords[i])

    def __add__(self, other):
        _same(self, other)
        return Vector(self.ring, [x ^ y for x, y in zip(self.coords, other.coords)])

    def scale(self, c: Element):
        return Vector(self.ring, [self.ring._mul(c.code, x) for x in self.coords])

    def __eq__(self, other):
        return isinstance(other, Vector) and self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Vector(%s, %r)" % (self.ring, [self.ring.decode(c) for c in self.coords])

    def tolist(self):
        return [self[i].to_json() for i in range(len(self))]


class Matrix:
    """Square matrix of ring-element codes, row-major and immutable."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def from_values(cls, ring, rows):
        """Build from nested canonical values (ints, pairs or Elements)."""
        rows = [[ring(v).code for v in r] for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(ring, rows)

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return Element(self.ring, self.rows[i][j])

    def at(self, i, j):
        """Entry by signed indices, e.g. ``g.at(-1, 1)`` is g_{-1,1}."""
        return self[_POS[i], _POS[j]]

    def cols(self):
        return tuple(zip(*self.rows))

    def transpose(self):
        return Matrix(self.ring, self.cols())

    def __matmul__(self, other):
        if isinstance(other, Vector):
            _same(self, other)
            dot = self.ring._dot
            return Vector(self.ring, [dot(r, other.coords) for r in self.rows])
        _same(self, other)
        dot = self.ring._dot
        cols = other.cols()
        return Matrix(self.ring, [[dot(r, c) for c in cols] for r in self.rows])

    __mul__ = __matmul__

    def __add__(self, other):
        _same(self, other)
        return Matrix(self.ring, [[x ^ y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def column(self, j):
        return Vector(self.ring, [r[j] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%s, %r)" % (self.ring, self.tolist())

    def tolist(self):
        dec = self.ring.decode
        return [[list(dec(c)) if self.ring.kind == "dual" else dec(c) for c in r] for r in self.rows]

    def is_identity(self):
        return all(c == int(i == j) for i, r in enumerate(self.rows) for j, c in enumerate(r))


def _same(a, b):
    if a.ring != b.ring:
        raise RingError("ring mismatch: %s vs %s" % (a.ring, b.ring))


def identity(ring, n=4):
    return Matrix(ring, [[int(i == j) for j in range(n)] for i in range(n)])


def s_matrix(ring):
    # antidiag(1, 1, -1, -1) with -1 = 1
    return Matrix(ring, [[int(i + j == 3) for j in range(4)] for i in range(4)])


def wedge_square(g: Matrix) -> Matrix:
    """Matrix of g^g on the exterior square; entries are 2x2 minors."""
    if g.n != 4:
        raise ValueError("wedge_square needs a 4x4 matrix")
    R, G = g.ring, g.rows
    mul = R._mul
    out = []
    for i, j in WEDGE_BASIS:
        gi, gj = G[i], G[j]
        out.append([mul(gi[k], gj[l]) ^ mul(gi[l], gj[k]) for k, l in WEDGE_BASIS])
    return Matrix(R, out)


def rho(v: Vector) -> Vector:
    if len(v) != 6:
        raise ValueError("rho acts on 6-vectors")
    return Vector(v.ring, [v.coords[r] for r in _RHO_ROWS])


def rho_hat(x: Vector) -> Vector:
    if len(x) != 4:
        raise ValueError("rho_hat acts on 4-vectors")
    out = [0] * 6
    for k, r in enumerate(_RHO_ROWS):
        out[r] = x.coords[k]
    return Vector(x.ring, out)


def tau_map(obj):
    """Apply the Tits endomorphism entrywise to a Vector or Matrix."""
    if isinstance(obj, Vector):
        t = obj.ring._tits
        return Vector(obj.ring, [t(c) for c in obj.coords])
    if isinstance(obj, Matrix):
        t = obj.ring._tits
        return Matrix(obj.ring, [[t(c) for c in r] for r in obj.rows])
    raise TypeError("tau_map expects a Vector or Matrix")


def is_symplectic(g: Matrix) -> bool:
    if g.n != 4:
        return False
    s = s_matrix(g.ring)
    return g.transpose() @ s @ g == s


def symplectic_inverse(g: Matrix) -> Matrix:
    """Inverse of a symplectic matrix as s g^t s."""
    if not is_symplectic(g):
        raise NotSymplecticError("matrix is not symplectic")
    # (s g^t s)[i][j] = g[3-j][3-i]
    G = g.rows
    return Matrix(g.ring, [[G[3 - j][3 - i] for j in range(4)] for i in range(4)])
