"""Characteristic-2 rings with a Tits endomorphism.

Two kinds of ring are supported:

* ``gf2m`` -- the field GF(2^m) for odd m, elements stored as coefficient
  bitmasks (bit i is the coefficient of X^i);
* ``dual`` -- the dual numbers GF(2^m)[eps]/(eps^2), elements a + b*eps
  stored as pairs (a, b).

In both cases the Tits endomorphism tau satisfies tau(tau(x)) = x^2.  On
GF(2^(2n+1)) it is x -> x^(2^(n+1)); on the dual numbers it is
a + b*eps -> tau(a).

Internally every element has an integer *code* such that addition is XOR
of codes (for dual numbers the code is ``a | b << m``).  Matrices and the
numpy kernels work on codes; :class:`Element` is the user-facing wrapper.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "Ring",
    "Element",
    "RingError",
    "NotInvertibleError",
    "make_ring",
    "add",
    "mul",
    "invert",
    "tits",
    "all_elements",
    "poly_mulmod",
    "is_irreducible",
    "smallest_irreducible",
]

MAX_DEGREE = 13


class RingError(ValueError):
    """Invalid ring parameters or mixing elements of different rings."""


class NotInvertibleError(ArithmeticError):
    pass


# -- polynomials over F2 as int bitmasks ------------------------------------

def _degree(p):
    return p.bit_length() - 1


def _polymod(a, b):
    db = _degree(b)
    while a and _degree(a) >= db:
        a ^= b << (_degree(a) - db)
    return a


def poly_mulmod(a, b, modulus):
    """Carry-less product of a and b reduced modulo ``modulus``."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> _degree(modulus) & 1:
            a ^= modulus
    return r


def is_irreducible(p):
    """Irreducibility over F2 by trial division with every lower-degree divisor."""
    d = _degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _polymod(p, q) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(m):
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("no irreducible polynomial of degree %d" % m)


# -- rings ------------------------------------------------------------------

class Ring:
    """A finite characteristic-2 ring with Tits endomorphism.

    Use :func:`make_ring` rather than calling this directly; rings are cached
    so equal specs are the same object.
    """

    def __init__(self, kind, m):
        if kind not in ("gf2m", "dual"):
            raise RingError("unknown ring kind %r" % (kind,))
        if not isinstance(m, int) or m < 1 or m > MAX_DEGREE or m % 2 == 0:
            raise RingError("extension degree must be odd and in 1..%d, got %r" % (MAX_DEGREE, m))
        self.kind = kind
        self.m = m
        self.n = (m - 1) // 2
        if kind == "gf2m":
            self.base = None
            self.modulus = smallest_irreducible(m)
            self.size = 1 << m
            self.width = m
            self._build_field_tables()
        else:
            self.base = make_ring("gf2m", m)
            self.modulus = self.base.modulus
            self.size = 1 << (2 * m)
            self.width = 2 * m
        self._mask = (1 << m) - 1
        self._table_cache = None

    def _build_field_tables(self):
        q, mod = self.size, self.modulus
        if q == 2:
            gen = 1
        else:
            for gen in range(2, q):
                x, order = gen, 1
                while x != 1:
                    x = poly_mulmod(x, gen, mod)
                    order += 1
                if order == q - 1:
                    break
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = poly_mulmod(x, gen, mod)
        self._exp, self._log = exp, log
        self._inv_table = [0] + [exp[(q - 1 - log[x]) % (q - 1)] for x in range(1, q)]
        tt = []
        for x in range(q):
            y = x
            for _ in range(self.n + 1):
                y = poly_mulmod(y, y, mod)
            tt.append(y)
        self._tits_table = tt

    # -- identity and comparison
    def __eq__(self, other):
        return isinstance(other, Ring) and (self.kind, self.m) == (other.kind, other.m)

    def __hash__(self):
        return hash((self.kind, self.m))

    def __repr__(self):
        return "make_ring(%r, %d)" % (self.kind, self.m)

    def __str__(self):
        if self.kind == "gf2m":
            return "GF(%d)" % self.size
        return "Dual(GF(%d))" % (1 << self.m)

    @property
    def is_field(self):
        return self.kind == "gf2m"

    @property
    def q(self):
        """Order of the residue field."""
        return 1 << self.m

    def to_dict(self):
        return {"kind": self.kind, "m": self.m}

    @staticmethod
    def from_dict(d):
        try:
            return make_ring(str(d["kind"]), d["m"])
        except (KeyError, TypeError) as exc:
            raise RingError("bad ring description %r" % (d,)) from exc

    # -- codes
    def encode(self, value):
        """Canonical value (int or pair) -> integer code."""
        if self.kind == "gf2m":
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < self.size:
                raise RingError("%r is not an element of %s" % (value, self))
            return int(value)
        try:
            a, b = value
        except (TypeError, ValueError):
            raise RingError("%r is not an element of %s" % (value, self)) from None
        q = 1 << self.m
        for c in (a, b):
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)) or not 0 <= c < q:
                raise RingError("%r is not an element of %s" % (value, self))
        return int(a) | int(b) << self.m

    def decode(self, code):
        if self.kind == "gf2m":
            return code
        return (code & self._mask, code >> self.m)

    def __call__(self, value):
        if isinstance(value, Element):
            if value.ring != self:
                raise RingError("element of %s used in %s" % (value.ring, self))
            return value
        return Element(self, self.encode(value))

    @property
    def zero(self):
        return Element(self, 0)

    @property
    def one(self):
        return Element(self, 1)

    # -- raw arithmetic on codes
    def _mul(self, x, y):
        if self.kind == "gf2m":
            if x and y:
                return self._exp[self._log[x] + self._log[y]]
            return 0
        f, mk, m = self.base._mul, self._mask, self.m
        a, b, c, d = x & mk, x >> m, y & mk, y >> m
        return f(a, c) | (f(a, d) ^ f(b, c)) << m

    def _is_unit(self, x):
        return (x & self._mask) != 0

    def _inv(self, x):
        if not self._is_unit(x):
            raise NotInvertibleError("%r is not a unit in %s" % (self.decode(x), self))
        if self.kind == "gf2m":
            return self._inv_table[x]
        f = self.base
        a, b = x & self._mask, x >> self.m
        ai = f._inv_table[a]
        # (a + b eps)^-1 = a^-1 + a^-2 b eps  (sign irrelevant in char 2)
        return ai | f._mul(f._mul(ai, ai), b) << self.m

    def _tits(self, x):
        if self.kind == "gf2m":
            return self._tits_table[x]
        return self.base._tits_table[x & self._mask]

    def _dot(self, xs, ys):
        acc = 0
        mul = self._mul
        for x, y in zip(xs, ys):
            if x and y:
                acc ^= mul(x, y)
        return acc

    # -- enumeration
    def codes(self):
        """All codes in ascending canonical order."""
        if self.kind == "gf2m":
            return list(range(self.size))
        q = 1 << self.m
        return [a | b << self.m for a in range(q) for b in range(q)]

    def elements(self):
        return [Element(self, c) for c in self.codes()]

    def units(self):
        return [Element(self, c) for c in self.codes() if self._is_unit(c)]

    # -- numpy tables for the vectorized kernels
    def tables(self):
        """(mul, inv, tits) lookup arrays indexed by code.

        ``inv`` holds 0 at non-units.  Only built for rings of at most 1024
        elements.
        """
        if self._table_cache is None:
            if self.size > 1024:
                raise RingError("%s is too large for table-driven kernels" % self)
            n = self.size
            dt = np.uint16
            mul = np.zeros((n, n), dtype=dt)
            for x in range(n):
                mul[x] = [self._mul(x, y) for y in range(n)]
            inv = np.array([self._inv(x) if self._is_unit(x) else 0 for x in range(n)], dtype=dt)
            tt = np.array([self._tits(x) for x in range(n)], dtype=dt)
            for arr in (mul, inv, tt):
                arr.setflags(write=False)
            self._table_cache = (mul, inv, tt)
        return self._table_cache


@lru_cache(maxsize=None)
def _ring(kind, m):
    return Ring(kind, m)


def make_ring(kind="gf2m", m=3):
    """Return the (cached) ring of the given kind and odd extension degree.

    >>> make_ring("gf2m", 3).modulus == 0b1011
    True
    """
    kind = {"GF2m": "gf2m", "Dual": "dual"}.get(kind, kind)
    if kind not in ("gf2m", "dual"):
        raise RingError("unknown ring kind %r" % (kind,))
    if isinstance(m, bool) or not isinstance(m, int) or m < 1 or m > MAX_DEGREE or m % 2 == 0:
        raise RingError("extension degree must be odd and in 1..%d, got %r" % (MAX_DEGREE, m))
    return _ring(kind, m)


class Element:
    """An immutable ring element."""

    __slots__ = ("ring", "code")

    def __init__(self, ring, code):
        self.ring = ring
        self.code = code

    @property
    def value(self):
        return self.ring.decode(self.code)

    def _other(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingError("ring mismatch: %s vs %s" % (self.ring, other.ring))
            return other.code
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return Element(self.ring, self.code ^ c)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return Element(self.ring, self.ring._mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return Element(self.ring, self.ring._mul(self.code, self.ring._inv(c)))

    def __pow__(self, k):
        x = self.inverse() if k < 0 else self
        k = abs(k)
        r = Element(self.ring, 1)
        while k:
            if k & 1:
                r = r * x
            x = x * x
            k >>= 1
        return r

    def inverse(self):
        return Element(self.ring, self.ring._inv(self.code))

    def tits(self):
        return Element(self.ring, self.ring._tits(self.code))

    def is_unit(self):
        return self.ring._is_unit(self.code)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.kind, self.ring.m, self.code))

    def __repr__(self):
        return "%s(%r)" % (self.ring, self.value)

    def to_json(self):
        v = self.value
        return list(v) if isinstance(v, tuple) else v


def _check_pair(x, y):
    if not isinstance(x, Element) or not isinstance(y, Element):
        raise TypeError("expected ring elements")
    if x.ring != y.ring:
        raise RingError("ring mismatch: %s vs %s" % (x.ring, y.ring))


def add(x, y):
    _check_pair(x, y)
    return x + y


def mul(x, y):
    _check_pair(x, y)
    return x * y


def invert(x):
    return x.inverse()


def tits(x):
    return x.tits()


def all_elements(ring):
    return ring.elements()
