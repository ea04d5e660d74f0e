"""Membership in Sz(R, tau) and the standard elements x+, x-, h, s.

An element g of Sp(4, R) lies in the Suzuki group when

    rho((g ^ g) tau_6(v)) == tau_4(g rho(v))

for every v in the submodule spanned by e1^e2, e1^e-2, e2^e-1, e-2^e-1 and
v0 = e1^e-1 + e2^e-2.  Both sides are additive in v and pick up the factor
tau(r) when v is scaled by r, so it is enough to test the five generators.

Conventions: ``conj(g, h)`` is h^-1 g h and ``commutator(x, y)`` is
x y x^-1 y^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import (
    Matrix,
    Vector,
    identity,
    is_symplectic,
    rho,
    s_matrix,
    symplectic_inverse,
    tau_map,
    wedge_square,
)
from .ring import Element, Ring, RingError

__all__ = [
    "GroupElement",
    "Membership",
    "NotAMemberError",
    "v_generators",
    "v0",
    "is_member",
    "certify",
    "x_plus",
    "x_minus",
    "h",
    "s_element",
    "one",
    "conj",
    "commutator",
]

V_LABELS = ("e1^e2", "e1^e-2", "e2^e-1", "e-2^e-1", "v0")


class NotAMemberError(ValueError):
    pass


def v0(ring):
    return Vector(ring, [0, 0, 1, 1, 0, 0])


def v_generators(ring):
    """The five generators of the submodule V (as 6-vectors), v0 last."""
    basis = [Vector.basis(ring, 6, i) for i in (0, 1, 4, 5)]
    return basis + [v0(ring)]


@dataclass(frozen=True)
class Membership:
    """Outcome of :func:`is_member`; truthy iff g is in the group."""

    ok: bool
    reason: Optional[str] = None
    generator: Optional[int] = None
    coordinate: Optional[int] = None

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "member"
        if self.reason == "not-symplectic":
            return "not symplectic: g^t s g != s"
        return "relation fails at generator %s (coordinate %d)" % (V_LABELS[self.generator], self.coordinate)


def is_member(g) -> Membership:
    if isinstance(g, GroupElement):
        g = g.matrix
    if g.n != 4 or not is_symplectic(g):
        return Membership(False, "not-symplectic")
    W = wedge_square(g)
    for k, v in enumerate(v_generators(g.ring)):
        lhs = rho(W @ tau_map(v))
        rhs = tau_map(g @ rho(v))
        if lhs != rhs:
            c = next(i for i in range(4) if lhs.coords[i] != rhs.coords[i])
            return Membership(False, "relation", k, c)
    return Membership(True)


class GroupElement:
    """A 4x4 matrix regarded as an element of Sp(4, R).

    ``certified`` is True only when the matrix has passed :func:`is_member`.
    """

    __slots__ = ("matrix", "certified")

    def __init__(self, matrix: Matrix, certified=False):
        self.matrix = matrix
        self.certified = certified

    @property
    def ring(self) -> Ring:
        return self.matrix.ring

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.matrix @ other.matrix)

    __matmul__ = __mul__

    def inverse(self):
        return GroupElement(symplectic_inverse(self.matrix))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __getitem__(self, ij):
        return self.matrix[ij]

    def at(self, i, j):
        return self.matrix.at(i, j)

    def is_identity(self):
        return self.matrix.is_identity()

    def key(self):
        from .bruhat import canonical_key

        return canonical_key(self)

    def __repr__(self):
        return "GroupElement(%r)" % (self.matrix.tolist(),)


def certify(g) -> GroupElement:
    """Run the membership test and return a certified element, or raise."""
    if isinstance(g, GroupElement):
        g = g.matrix
    res = is_member(g)
    if not res:
        raise NotAMemberError(res.describe())
    return GroupElement(g, certified=True)


def _finish(m, check):
    return certify(m) if check else GroupElement(m)


def _elems(a, b):
    if not isinstance(a, Element) or not isinstance(b, Element):
        raise TypeError("expected ring elements")
    if a.ring != b.ring:
        raise RingError("ring mismatch")
    return a.ring


def x_plus(a: Element, b: Element, check=True) -> GroupElement:
    R = _elems(a, b)
    at = a.tits()
    rows = [
        [R.one, a, b + a * at, a * a * at + b.tits() + a * b],
        [R.zero, R.one, at, b],
        [R.zero, R.zero, R.one, a],
        [R.zero, R.zero, R.zero, R.one],
    ]
    return _finish(Matrix(R, [[e.code for e in r] for r in rows]), check)


def x_minus(a: Element, b: Element, check=True) -> GroupElement:
    """s x+(a, b) s: the entries of x+(a, b) with both index orders reversed."""
    X = x_plus(a, b, check=False).matrix.rows
    return _finish(Matrix(a.ring, [[X[3 - i][3 - j] for j in range(4)] for i in range(4)]), check)


def h(t: Element, check=True) -> GroupElement:
    """diag(t, t^(tau-1), t^(1-tau), t^-1) for a unit t."""
    R = t.ring
    ti, tt = t.inverse(), t.tits()
    diag = [t, tt * ti, t * tt.inverse(), ti]
    m = Matrix(R, [[diag[i].code if i == j else 0 for j in range(4)] for i in range(4)])
    return _finish(m, check)


def s_element(ring, check=True) -> GroupElement:
    return _finish(s_matrix(ring), check)


def one(ring) -> GroupElement:
    return GroupElement(identity(ring), certified=True)


def conj(g: GroupElement, by: GroupElement) -> GroupElement:
    """g^by = by^-1 g by."""
    return by.inverse() * g * by


def commutator(x: GroupElement, y: GroupElement) -> GroupElement:
    """[x, y] = x y x^-1 y^-1."""
    return x * y * x.inverse() * y.inverse()
