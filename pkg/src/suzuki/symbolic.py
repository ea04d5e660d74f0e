"""A small computer-algebra kernel for identities over any Tits ring.

Polynomials have coefficients in F2 and indeterminates ``(name, level)``:
level 0 is a free variable x, level 1 stands for tau(x).  Applying tau sends
x -> tau(x) and tau(x) -> x^2, so every expression built from the generator
formulas stays inside these two levels.  Only ``t`` (and its image) may carry
negative exponents.

An identity that holds here holds in every commutative characteristic-2 ring
with a Tits endomorphism (for t a unit), because evaluation at any such ring
is a homomorphism compatible with tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

__all__ = [
    "SymVar",
    "SymPoly",
    "SymMat",
    "var",
    "poly_add",
    "poly_mul",
    "poly_tau",
    "IDENTITIES",
    "IdentityResult",
    "check_identity",
    "identity_sides",
    "numeric_sides",
    "assignment",
    "LITERAL_VARIANTS",
]


@dataclass(frozen=True, order=True)
class SymVar:
    name: str
    level: int = 0
    laurent: bool = False

    def __post_init__(self):
        if self.level not in (0, 1):
            raise ValueError("level must be 0 or 1")

    def __str__(self):
        return "%s%d" % (self.name, self.level)


def _mono(items):
    """Normalize a {SymVar: exponent} mapping into a sorted tuple, dropping zeros."""
    out = []
    for v, e in sorted(items.items()):
        if e == 0:
            continue
        if e < 0 and not v.laurent:
            raise ValueError("negative exponent on non-Laurent variable %s" % v)
        out.append((v, e))
    return tuple(out)


class SymPoly:
    """Polynomial over F2: a set of monomials (coefficients are implicitly 1)."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = frozenset(terms)

    @classmethod
    def const(cls, c):
        return cls([()]) if c % 2 else cls()

    def __add__(self, other):
        other = _lift(other)
        return SymPoly(self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        other = _lift(other)
        acc = set()
        for m1 in self.terms:
            for m2 in other.terms:
                e = dict(m1)
                for v, k in m2:
                    e[v] = e.get(v, 0) + k
                m = _mono(e)
                acc ^= {m}
        return SymPoly(acc)

    __rmul__ = __mul__

    def inverse(self):
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (m,) = self.terms
        return SymPoly([_mono({v: -e for v, e in m})])

    def __pow__(self, k):
        base = self.inverse() if k < 0 else self
        out = SymPoly.const(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def tau(self):
        return poly_tau(self)

    def evaluate(self, values):
        """Evaluate with ``values`` mapping every SymVar to a ring element."""
        total = None
        for m in self.terms:
            term = None
            for v, e in m:
                x = values[v] ** e
                term = x if term is None else term * x
            if term is None:
                term = _one_like(values)
            total = term if total is None else total + term
        if total is None:
            return _one_like(values) + _one_like(values)
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymPoly.const(other)
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            if not m:
                parts.append("1")
            else:
                parts.append("*".join(str(v) if e == 1 else "%s^%d" % (v, e) for v, e in m))
        return " + ".join(parts)


def _lift(x):
    if isinstance(x, SymPoly):
        return x
    if isinstance(x, int):
        return SymPoly.const(x)
    raise TypeError("cannot use %r as a polynomial" % (x,))


def _one_like(values):
    return next(iter(values.values())).ring.one


def var(name, level=0):
    return SymPoly([((SymVar(name, level, name == "t"), 1),)])


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_tau(p: SymPoly) -> SymPoly:
    out = set()
    for m in p.terms:
        e = {}
        for v, k in m:
            if v.level == 0:
                w, k2 = SymVar(v.name, 1, v.laurent), k
            else:
                w, k2 = SymVar(v.name, 0, v.laurent), 2 * k
            e[w] = e.get(w, 0) + k2
        out ^= {_mono(e)}
    return SymPoly(out)


class SymMat:
    """4x4 matrix of SymPoly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_lift(x) for x in r) for r in rows)

    def __matmul__(self, other):
        cols = list(zip(*other.rows))
        return SymMat([[_dot(r, c) for c in cols] for r in self.rows])

    __mul__ = __matmul__

    def transpose(self):
        return SymMat(list(zip(*self.rows)))

    def flip(self):
        """s M s: reverse both index orders."""
        return SymMat([r[::-1] for r in self.rows[::-1]])

    def tau(self):
        return SymMat([[x.tau() for x in r] for r in self.rows])

    def inverse(self):
        """s M^t s, the inverse of a symplectic matrix."""
        return self.transpose().flip()

    def entries(self):
        return [x for r in self.rows for x in r]

    def __eq__(self, other):
        return isinstance(other, SymMat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def _dot(xs, ys):
    acc = SymPoly()
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def s_mat():
    return SymMat([[int(i + j == 3) for j in range(4)] for i in range(4)])


def eye():
    return SymMat([[int(i == j) for j in range(4)] for i in range(4)])


def sx_plus(a, b):
    a, b = _lift(a), _lift(b)
    at = a.tau()
    return SymMat([
        [1, a, b + a * at, a * a * at + b.tau() + a * b],
        [0, 1, at, b],
        [0, 0, 1, a],
        [0, 0, 0, 1],
    ])


def sx_minus(a, b):
    return sx_plus(a, b).flip()


def sh(t):
    ti, tt = t.inverse(), t.tau()
    d = [t, tt * ti, t * tt.inverse(), ti]
    return SymMat([[d[i] if i == j else 0 for j in range(4)] for i in range(4)])


def sconj(g, by, convention):
    if convention == "right":
        return by.inverse() @ g @ by
    if convention == "left":
        return by @ g @ by.inverse()
    raise ValueError("convention must be 'right' or 'left'")


_WEDGE = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_RHO = (0, 1, 4, 5)
_V_LABELS = ("e1^e2", "e1^e-2", "e2^e-1", "e-2^e-1", "v0")


def _minor(G, rows, cols):
    (i, j), (k, l) = rows, cols
    return G[i][k] * G[j][l] + G[i][l] * G[j][k]


def membership_sides(g: SymMat):
    """Both sides of g^t s g = s and of the five semilinear equations."""
    G = g.rows
    out = []
    form = g.transpose() @ s_mat() @ g
    for i in range(4):
        for j in range(4):
            out.append(("form[%d][%d]" % (i, j), form.rows[i][j], SymPoly.const(int(i + j == 3))))
    # on basis vectors tau_6 is the identity
    for k, c in enumerate(_RHO):
        for p in range(4):
            lhs = _minor(G, _WEDGE[_RHO[p]], _WEDGE[c])
            out.append(("%s[%d]" % (_V_LABELS[k], p), lhs, G[p][k].tau()))
    for p in range(4):
        row = _WEDGE[_RHO[p]]
        out.append(("v0[%d]" % p, _minor(G, row, _WEDGE[2]) + _minor(G, row, _WEDGE[3]), SymPoly()))
    return out


def _mat_sides(lhs, rhs, prefix=""):
    return [
        ("%s(%d,%d)" % (prefix, i, j), lhs.rows[i][j], rhs.rows[i][j])
        for i in range(4)
        for j in range(4)
    ]


# -- the registry ------------------------------------------------------------

a, a1 = var("a"), var("a", 1)
b, b1 = var("b"), var("b", 1)
c, c1 = var("c"), var("c", 1)
d = var("d")
t, t1 = var("t"), var("t", 1)


def _product_relation(conv):
    return _mat_sides(sx_plus(a, b) @ sx_plus(c, d), sx_plus(a + c, b + d + a1 * c))


def _inverse(conv):
    return _mat_sides(sx_plus(a, b) @ sx_plus(a, b + a * a1), eye())


def _s_element(conv):
    return _mat_sides(s_mat() @ s_mat(), eye(), "s^2") + membership_sides(s_mat())


def _x_plus_member(conv):
    return membership_sides(sx_plus(a, b))


def _h_member(conv):
    return membership_sides(sh(t))


def _u(tt):
    # t^(1 - tau)
    return tt * tt.tau().inverse()


def _weyl_lhs(literal):
    # the product on the right equals s h(t^tau); s h(t) only matches it at t = 1
    return s_mat() @ sh(t if literal else t1)


def _weyl_first(conv, literal=False):
    u = _u(t)
    rhs = sx_plus(u, t.inverse()) @ sx_minus(0, t) @ sx_plus(u, 0)
    return _mat_sides(_weyl_lhs(literal), rhs)


def _weyl_second(conv, literal=False):
    u = _u(t)
    return _mat_sides(_weyl_lhs(literal), sconj(sx_minus(0, t), sx_plus(u, 0), conv))


def _conjugation(conv):
    lhs = sconj(sx_plus(a, b), sh(t), conv)
    rhs = sx_plus(t1 * t.inverse() * t.inverse() * a, t1.inverse() * b)
    return _mat_sides(lhs, rhs)


def _core_entries(conv):
    # entries of x-(0,1) h(t) x+(a,b) x-(0,1), which pin down B & B^s & B^x-(0,1)
    xm = sx_minus(0, 1)
    g = xm @ sh(t) @ sx_plus(a, b) @ xm
    g0 = xm @ sh(t) @ xm
    tt = t1 * t.inverse()
    return [
        ("g[2,-2]", g.rows[1][2], tt * a1),
        ("g[2,-1]", g.rows[1][3], tt * b),
        ("g[-1,1] at a=b=0", g0.rows[3][0], t + t.inverse()),
    ]


IDENTITIES: Dict[str, Tuple[Callable, Tuple[str, ...]]] = {
    "product-relation": (_product_relation, ("a", "b", "c", "d")),
    "inverse": (_inverse, ("a", "b")),
    "s-element": (_s_element, ()),
    "x-plus-member": (_x_plus_member, ("a", "b")),
    "h-member": (_h_member, ("t",)),
    "weyl-first": (_weyl_first, ("t",)),
    "weyl-second": (_weyl_second, ("t",)),
    "conjugation": (_conjugation, ("a", "b", "t")),
    "core-entries": (_core_entries, ("a", "b", "t")),
}


LITERAL_VARIANTS = ("weyl-first", "weyl-second")


def identity_sides(name, convention="right", literal=False):
    """List of (label, lhs, rhs) polynomial pairs for a registry identity.

    ``literal=True`` selects the Weyl relation with s h(t) on the left instead
    of s h(t^tau); it is false for t != 1 and kept for comparison only.
    """
    try:
        fn, _ = IDENTITIES[name]
    except KeyError:
        raise KeyError("unknown identity %r" % (name,)) from None
    if literal:
        if name not in LITERAL_VARIANTS:
            raise KeyError("%r has no literal variant" % (name,))
        return fn(convention, literal=True)
    return fn(convention)


@dataclass
class IdentityResult:
    name: str
    ok: bool
    label: Optional[str] = None
    difference: Optional[SymPoly] = None

    def __bool__(self):
        return self.ok

    def line(self):
        if self.ok:
            return "%s: pass" % self.name
        return "%s: FAIL at %s, lhs - rhs = %r" % (self.name, self.label, self.difference)


def check_identity(name, convention="right", literal=False) -> IdentityResult:
    for label, lhs, rhs in identity_sides(name, convention, literal):
        if lhs != rhs:
            return IdentityResult(name, False, label, lhs + rhs)
    return IdentityResult(name, True)


# -- specialization into concrete rings ----------------------------------------

def assignment(ring, **vals):
    """SymVar -> Element map sending x0 to the value and x1 to its Tits image."""
    out = {}
    for name, x in vals.items():
        x = ring(x)
        lau = name == "t"
        out[SymVar(name, 0, lau)] = x
        out[SymVar(name, 1, lau)] = x.tits()
    return out


def numeric_sides(name, ring, values, convention="right", literal=False) -> List[Tuple[str, object, object]]:
    """The same (label, lhs, rhs) list computed with the numeric group code."""
    from . import group as G
    from .linalg import rho, s_matrix, tau_map, wedge_square

    v = {k: ring(x) for k, x in values.items()}
    O, I = ring.zero, ring.one

    def mat(m):
        return [[m[i, j] for j in range(4)] for i in range(4)]

    def sides(lhs, rhs, prefix=""):
        L, R = mat(lhs), mat(rhs)
        return [("%s(%d,%d)" % (prefix, i, j), L[i][j], R[i][j]) for i in range(4) for j in range(4)]

    def conj(x, by):
        if convention == "right":
            return by.inverse() * x * by
        return by * x * by.inverse()

    def member(g):
        m = g.matrix
        s = s_matrix(ring)
        form = m.transpose() @ s @ m
        out = [("form[%d][%d]" % (i, j), form[i, j], s[i, j]) for i in range(4) for j in range(4)]
        W = wedge_square(m)
        for k, vec in enumerate(G.v_generators(ring)):
            lhs = rho(W @ tau_map(vec))
            rhs = tau_map(m @ rho(vec))
            label = _V_LABELS[k]
            out.extend(("%s[%d]" % (label, p), lhs[p], rhs[p]) for p in range(4))
        return out

    one = G.one(ring)
    s = G.s_element(ring, check=False)
    xp = lambda p, q: G.x_plus(p, q, check=False)  # noqa: E731
    xm = lambda p, q: G.x_minus(p, q, check=False)  # noqa: E731
    hh = lambda p: G.h(p, check=False)  # noqa: E731

    if name == "product-relation":
        A, B, C, D = v["a"], v["b"], v["c"], v["d"]
        return sides((xp(A, B) * xp(C, D)).matrix, xp(A + C, B + D + A.tits() * C).matrix)
    if name == "inverse":
        A, B = v["a"], v["b"]
        return sides((xp(A, B) * xp(A, B + A * A.tits())).matrix, one.matrix)
    if name == "s-element":
        return sides((s * s).matrix, one.matrix, "s^2") + member(s)
    if name == "x-plus-member":
        return member(xp(v["a"], v["b"]))
    if name == "h-member":
        return member(hh(v["t"]))
    if name in ("weyl-first", "weyl-second"):
        T = v["t"]
        u = T * T.tits().inverse()
        if name == "weyl-first":
            rhs = xp(u, T.inverse()) * xm(O, T) * xp(u, O)
        else:
            rhs = conj(xm(O, T), xp(u, O))
        return sides((s * hh(T if literal else T.tits())).matrix, rhs.matrix)
    if name == "conjugation":
        A, B, T = v["a"], v["b"], v["t"]
        lhs = conj(xp(A, B), hh(T))
        rhs = xp(T.tits() * T.inverse() * T.inverse() * A, T.tits().inverse() * B)
        return sides(lhs.matrix, rhs.matrix)
    if name == "core-entries":
        A, B, T = v["a"], v["b"], v["t"]
        x = xm(O, I)
        g = x * hh(T) * xp(A, B) * x
        g0 = x * hh(T) * x
        tt = T.tits() * T.inverse()
        return [
            ("g[2,-2]", g.at(2, -2), tt * A.tits()),
            ("g[2,-1]", g.at(2, -1), tt * B),
            ("g[-1,1] at a=b=0", g0.at(-1, 1), T + T.inverse()),
        ]
    raise KeyError("unknown identity %r" % (name,))
