"""Witness suites for the group axioms, the Bruhat form and simplicity.

Each suite is deterministic in (ring, samples, seed).  Domains of at most
``EXHAUSTIVE_LIMIT`` cases are run exhaustively and ``samples`` is ignored.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import List

import numpy as np

from .bruhat import BruhatForm, NotAFieldError, canonical_key, decompose, recompose
from .enumeration import group_order, normal_closure, random_element
from .group import (
    GroupElement,
    commutator,
    conj,
    h,
    is_member,
    one,
    s_element,
    x_minus,
    x_plus,
)
from .kernels import Kernel

__all__ = ["SuiteReport", "SUITES", "run_suite", "random_word", "UnknownSuiteError"]

EXHAUSTIVE_LIMIT = 10**6


class UnknownSuiteError(KeyError):
    pass


@dataclass
class SuiteReport:
    suite: str
    ring: object
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    vacuous: bool = False
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self):
        if self.failures:
            return "fail"
        return "vacuous" if self.vacuous else "pass"

    @property
    def passed(self):
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)

    def to_dict(self):
        # elapsed is left out so identical runs serialize identically
        return {
            "suite": self.suite,
            "ring": self.ring.to_dict(),
            "cases": self.cases,
            "failures": sorted(self.failures),
            "status": self.status,
            "notes": list(self.notes),
        }

    def summary(self):
        s = "%s over %s: %s (%d cases, %.2fs)" % (self.suite, self.ring, self.status, self.cases, self.elapsed)
        for n in self.notes:
            s += "\n  note: " + n
        for f in sorted(self.failures)[:10]:
            s += "\n  " + f
        return s


def random_word(ring, rnd, length=6) -> GroupElement:
    """Product of random generators x+(a, b), h(t), s, checked for membership."""
    codes = ring.codes()
    units = [c for c in codes if ring._is_unit(c)]
    el = lambda pool: ring(ring.decode(rnd.choice(pool)))  # noqa: E731
    g = one(ring)
    for _ in range(length):
        k = rnd.randrange(4)
        if k == 0:
            g = g * x_plus(el(codes), el(codes), check=False)
        elif k == 1:
            g = g * x_minus(el(codes), el(codes), check=False)
        elif k == 2:
            g = g * h(el(units), check=False)
        else:
            g = g * s_element(ring, check=False)
    if not is_member(g):
        raise AssertionError("random word left the group")
    return GroupElement(g.matrix, certified=True)


def _field_only(report):
    if not report.ring.is_field:
        raise NotAFieldError("suite %r needs a field, got %s" % (report.suite, report.ring))


def _closure(rep, samples, rnd):
    R = rep.ring
    for i in range(samples):
        f, g = random_word(R, rnd), random_word(R, rnd)
        rep.cases += 1
        for what, x in (("f*g", f * g), ("g^-1", g.inverse())):
            res = is_member(x)
            if not res:
                rep.fail("case %d: %s not a member (%s): %r" % (i, what, res.describe(), x.matrix.tolist()))
        if not (g * g.inverse()).is_identity():
            rep.fail("case %d: g * g^-1 != 1" % i)


def _all_forms(R):
    els, units = R.elements(), R.units()
    for t in units:
        for a in els:
            for b in els:
                yield BruhatForm("unit", t, (a, b))
    for a1 in els:
        for b1 in els:
            for t in units:
                for a in els:
                    for b in els:
                        yield BruhatForm("big", t, (a, b), (a1, b1))


def _random_form(R, rnd):
    codes = R.codes()
    el = lambda pool: R(rnd.choice(pool))  # noqa: E731
    t = el(codes[1:])
    if rnd.randrange(R.q ** 2 + 1) == 0:
        return BruhatForm("unit", t, (el(codes), el(codes)))
    return BruhatForm("big", t, (el(codes), el(codes)), (el(codes), el(codes)))


def _roundtrip(rep, samples, rnd):
    _field_only(rep)
    R = rep.ring
    total = group_order(R)
    if total <= EXHAUSTIVE_LIMIT:
        forms = _all_forms(R)
        rep.notes.append("exhaustive over %d forms" % total)
        seen = set()
    else:
        forms = (_random_form(R, rnd) for _ in range(samples))
        seen = None
    for form in forms:
        rep.cases += 1
        g = recompose(form)
        back = decompose(g, check=False)
        if back != form:
            rep.fail("decompose(recompose(%s)) = %s" % (form.to_dict(), back.to_dict()))
        if recompose(back, check=False) != g:
            rep.fail("recompose(decompose(g)) != g for %s" % (form.to_dict(),))
        if seen is not None:
            seen.add(canonical_key(g))
    if seen is not None and len(seen) != total:
        rep.fail("only %d distinct elements from %d forms" % (len(seen), total))
    # recompose . decompose on elements that did not come from a form
    for i in range(min(samples, 1000)):
        g = random_word(R, rnd)
        rep.cases += 1
        if recompose(decompose(g), check=False) != g:
            rep.fail("word %d: recompose(decompose(g)) != g" % i)


def _units_not_one(R):
    return [t for t in R.units() if t != R.one]


def _commutators(rep, samples, rnd):
    _field_only(rep)
    R = rep.ring
    O, I = R.zero, R.one
    ts = _units_not_one(R)
    if not ts:
        rep.vacuous = True
        rep.notes.append("no unit t != 1 in %s; the simplicity argument needs F != F2" % R)
        return
    bad_a = [t for t in R.units() if I + (t * t / t.tits()) == O]
    bad_b = [t for t in R.units() if I + t.tits() == O]
    if bad_a != [I]:
        rep.fail("1 + t^(2-tau) vanishes at %r" % (bad_a,))
    if bad_b != [I]:
        rep.fail("1 + t^tau vanishes at %r" % (bad_b,))
    els = R.elements()
    cases = [(a, b, t) for a in els for b in els for t in ts]
    if len(cases) > EXHAUSTIVE_LIMIT:
        cases = [(rnd.choice(els), rnd.choice(els), rnd.choice(ts)) for _ in range(samples)]
    for a, b, t in cases:
        rep.cases += 1
        ht = h(t, check=False)
        tt = t.tits()
        t2 = t * t / tt  # t^(2 - tau)
        got = commutator(x_plus(O, b, check=False), ht)
        if got != x_plus(O, b * (I + tt), check=False):
            rep.fail("[x+(0,b), h(t)] at b=%r t=%r" % (b.value, t.value))
        got = commutator(x_plus(a, O, check=False), ht)
        want = x_plus(a * (I + t2), a * a.tits() * (tt + t2), check=False)
        if got != want:
            rep.fail("[x+(a,0), h(t)] at a=%r t=%r" % (a.value, t.value))


def _weyl(rep, samples, rnd):
    R = rep.ring
    O = R.zero
    s = s_element(R, check=False)
    for t in R.units():
        rep.cases += 1
        u = t / t.tits()
        lhs = s * h(t.tits(), check=False)
        first = x_plus(u, t.inverse(), check=False) * x_minus(O, t, check=False) * x_plus(u, O, check=False)
        second = conj(x_minus(O, t, check=False), x_plus(u, O, check=False))
        if lhs != first:
            rep.fail("first form fails at t=%r" % (t.value,))
        if lhs != second:
            rep.fail("second form fails at t=%r" % (t.value,))
    rep.notes.append("checked s*h(t^tau) = x+(t^(1-tau), t^-1) x-(0, t) x+(t^(1-tau), 0)")


def _corefree(rep, samples, rnd):
    _field_only(rep)
    R = rep.ring
    if R.q > 32:
        raise ValueError("corefree suite supports q <= 32")
    K = Kernel(R)
    t, a, b = (x.ravel() for x in np.meshgrid(K.units, K.codes, K.codes, indexing="ij"))
    B = K.recompose_unit(t, a, b)
    rep.cases += len(B)
    s = K.from_matrices([s_element(R)])
    xm = K.from_matrices([x_minus(R.zero, R.one)])  # self-inverse
    Bs = K.matmul(K.matmul(s, B), s)
    Bx = K.matmul(K.matmul(xm, B), xm)
    kB, kBs, kBx = (set(K.keys(m)) for m in (B, Bs, Bx))
    hk = set(K.keys(K.recompose_unit(K.units, np.zeros_like(K.units), np.zeros_like(K.units))))
    if kB & kBs != hk:
        rep.fail("B & B^s != H (sizes %d, %d)" % (len(kB & kBs), len(hk)))
    core = kB & kBs & kBx
    rep.notes.append("|B| = %d, |B & B^s & B^x-(0,1)| = %d" % (len(kB), len(core)))
    if core != set(K.keys(K.from_matrices([one(R)]))):
        rep.fail("intersection has %d elements, expected only the identity" % len(core))
    # entry formulas for g = x-(0,1) h(t) x+(a,b) x-(0,1)
    M, T, I = K.mul, K.tits, K.inv
    tt = M[T[t], I[t]]
    if not np.array_equal(Bx[:, 1, 2], M[tt, T[a]]):
        rep.fail("g[2,-2] != t^(tau-1) a^tau")
    if not np.array_equal(Bx[:, 1, 3], M[tt, b]):
        rep.fail("g[2,-1] != t^(tau-1) b")
    zero = (a == 0) & (b == 0)
    if not np.array_equal(Bx[zero, 3, 0], t[zero] ^ I[t[zero]]):
        rep.fail("g[-1,1] != t + t^-1 when a = b = 0")


def _perfectness(rep, samples, rnd):
    _field_only(rep)
    R = rep.ring
    O, I = R.zero, R.one
    ts = _units_not_one(R)
    if not ts:
        rep.vacuous = True
        rep.notes.append("no unit t != 1 in %s; x+(c, d) is not a product of commutators this way" % R)
        return
    t = ts[0]
    ht = h(t, check=False)
    tt, t2 = t.tits(), t * t / t.tits()
    s = s_element(R, check=False)
    els = R.elements()
    pairs = [(c, d) for c in els for d in els]
    if len(pairs) > EXHAUSTIVE_LIMIT:
        pairs = [(rnd.choice(els), rnd.choice(els)) for _ in range(samples)]
    for c, d in pairs:
        rep.cases += 1
        a = c / (I + t2)
        first = commutator(x_plus(a, O, check=False), ht)
        e = first.at(2, -1)  # the second parameter of x+(c, e)
        if first != x_plus(c, e, check=False):
            rep.fail("[x+(a,0), h(t)] != x+(c, *) at c=%r" % (c.value,))
        b = (d + e) / (I + tt)
        second = commutator(x_plus(O, b, check=False), ht)
        if second != x_plus(O, d + e, check=False):
            rep.fail("[x+(0,b), h(t)] != x+(0, d+e) at d=%r" % (d.value,))
        target = x_plus(c, d, check=False)
        if first * second != target:
            rep.fail("x+(%r, %r) is not the product of the two commutators" % (c.value, d.value))
        # x-(c, d) = s x+(c, d) s and conjugates of commutators are commutators
        cs = conj(first, s) * conj(second, s)
        if cs != x_minus(c, d, check=False):
            rep.fail("x-(%r, %r) is not the product of the conjugated commutators" % (c.value, d.value))


def _normalclosure(rep, samples, rnd):
    _field_only(rep)
    R = rep.ring
    if R.q == 2:
        rep.vacuous = True
        rep.notes.append("Sz(2) is not simple; the normal-closure witness only applies to F != F2")
        return
    order = group_order(R)
    seeds = []
    seed = rnd.randrange(2**31)
    while len(seeds) < samples:
        x = random_element(R, seed)
        if not x.is_identity():
            seeds.append(seed)
            n = normal_closure(x).count
            rep.cases += 1
            if n != order:
                rep.fail("normal closure of random_element(seed=%d) has %d elements, expected %d" % (seed, n, order))
        seed += 1
    rep.notes.append("seeds %s" % seeds)


SUITES = {
    "closure": _closure,
    "roundtrip": _roundtrip,
    "commutators": _commutators,
    "weyl": _weyl,
    "corefree": _corefree,
    "perfectness": _perfectness,
    "normalclosure": _normalclosure,
}


def run_suite(name, ring, samples=1000, seed=0) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuiteError("unknown suite %r (have: %s)" % (name, ", ".join(SUITES))) from None
    rep = SuiteReport(name, ring)
    t0 = time.perf_counter()
    fn(rep, samples, random.Random(seed))
    rep.elapsed = time.perf_counter() - t0
    return rep
