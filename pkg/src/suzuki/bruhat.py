"""Bruhat normal form over finite fields.

Every g in Sz(F) is uniquely one of

* unit cell: ``h(t) x+(a, b)``                        (g_{-1,1} = 0)
* big cell:  ``x+(a1, b1)^-1 s h(t) x+(a, b)``        (g_{-1,1} != 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .group import GroupElement, NotAMemberError, h, is_member, s_element, x_plus
from .linalg import Matrix
from .ring import Element, Ring, RingError

__all__ = [
    "BruhatForm",
    "NotAFieldError",
    "decompose",
    "recompose",
    "canonical_key",
    "key_width",
    "x_plus_inverse_params",
]


class NotAFieldError(RingError):
    pass


@dataclass(frozen=True)
class BruhatForm:
    cell: str  # "unit" or "big"
    t: Element
    u2: Tuple[Element, Element]
    u1: Optional[Tuple[Element, Element]] = None

    def __post_init__(self):
        if self.cell not in ("unit", "big"):
            raise ValueError("cell must be 'unit' or 'big'")
        if (self.cell == "big") != (self.u1 is not None):
            raise ValueError("u1 is present exactly for the big cell")

    @property
    def ring(self) -> Ring:
        return self.t.ring

    def to_dict(self):
        return {
            "cell": self.cell,
            "u1": None if self.u1 is None else [e.to_json() for e in self.u1],
            "t": self.t.to_json(),
            "u2": [e.to_json() for e in self.u2],
        }

    @classmethod
    def from_dict(cls, ring, d):
        el = lambda v: ring(tuple(v) if isinstance(v, list) else v)  # noqa: E731
        u1 = None if d.get("u1") is None else (el(d["u1"][0]), el(d["u1"][1]))
        return cls(d["cell"], el(d["t"]), (el(d["u2"][0]), el(d["u2"][1])), u1)


def x_plus_inverse_params(a, b):
    """x+(a, b)^-1 = x+(a, b + a^(1+tau))."""
    return a, b + a * a.tits()


def _one_minus_tau(t):
    # t^(1-tau)
    return t * t.tits().inverse()


def decompose(g, check=True) -> BruhatForm:
    if isinstance(g, GroupElement):
        g = g.matrix
    R = g.ring
    if not R.is_field:
        raise NotAFieldError("Bruhat decomposition is only available over fields, not %s" % R)
    if check:
        res = is_member(g)
        if not res:
            raise NotAMemberError(res.describe())
    g41 = g.at(-1, 1)
    if not g41:
        t = g.at(1, 1)
        a = t.inverse() * g.at(1, 2)
        b = _one_minus_tau(t) * g.at(2, -1)
        return BruhatForm("unit", t, (a, b))
    g41i = g41.inverse()
    g31 = g.at(-2, 1)
    a1 = g41i * g31
    b1 = g41i * (g.at(2, 1) + g31.tits() * g31 * g41.tits().inverse())
    f = x_plus(a1, b1, check=False).matrix @ g
    t = f.at(-1, 1)
    a = t.inverse() * f.at(-1, 2)
    b = _one_minus_tau(t) * f.at(-2, -1)
    return BruhatForm("big", t, (a, b), (a1, b1))


def recompose(form: BruhatForm, check=True) -> GroupElement:
    t = form.t
    if not t.is_unit():
        raise ValueError("t must be a unit")
    m = h(t, check=False).matrix @ x_plus(*form.u2, check=False).matrix
    if form.cell == "big":
        R = t.ring
        # s * M reverses the rows of M
        m = Matrix(R, m.rows[::-1])
        m = x_plus(*x_plus_inverse_params(*form.u1), check=False).matrix @ m
    if check:
        res = is_member(m)
        if not res:
            raise AssertionError("recomposed element failed membership: %s" % res.describe())
        return GroupElement(m, certified=True)
    return GroupElement(m)


def key_width(ring) -> int:
    """Bits in a canonical key: 16 entries of ``ring.width`` bits each."""
    return 16 * ring.width


def canonical_key(g) -> int:
    """Pack the 16 entry codes row-major, first entry most significant."""
    if isinstance(g, GroupElement):
        g = g.matrix
    w = g.ring.width
    k = 0
    for r in g.rows:
        for c in r:
            k = k << w | c
    return k
