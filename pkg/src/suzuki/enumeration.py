"""Enumerating Sz(q) and subgroups of it.

Two independent routes to the whole group:

* :func:`iter_cell_batches` walks the Bruhat parametrization (unit cell, then
  big cell) in lexicographic parameter order;
* :func:`bfs_closure` grows the subgroup generated by a list of elements by
  breadth-first right multiplication, deduplicating on canonical keys.

Both run on the numpy kernel.  For q = 32 only the streaming
:func:`count_elements` path is practical (about 3.3e7 elements); it keeps one
batch of q^2 (q-1) matrices in memory at a time.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import FrozenSet

import numpy as np

from .bruhat import BruhatForm, NotAFieldError, recompose
from .group import GroupElement, s_element, x_plus
from .kernels import Kernel
from .linalg import Matrix, identity

__all__ = [
    "GroupSet",
    "LimitExceededError",
    "cell_count",
    "group_order",
    "iter_cell_batches",
    "enumerate_all",
    "enumerate_set",
    "count_elements",
    "write_keys",
    "standard_generators",
    "bfs_closure",
    "normal_closure",
    "random_element",
    "MAX_ENUM_Q",
    "MAX_CLOSURE_Q",
]

log = logging.getLogger(__name__)

MAX_ENUM_Q = 32
MAX_CLOSURE_Q = 8


class LimitExceededError(RuntimeError):
    """Raised when a closure grows past its limit; ``partial`` holds what was found."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


@dataclass(frozen=True)
class GroupSet:
    ring: object
    keys: FrozenSet[int] = field(repr=False)

    @property
    def count(self):
        return len(self.keys)

    def __len__(self):
        return len(self.keys)

    def __contains__(self, g):
        from .bruhat import canonical_key

        return canonical_key(g) in self.keys

    def matrices(self):
        """The elements as an ``(N, 4, 4)`` array of codes, in key order."""
        return Kernel(self.ring).decode_keys(sorted(self.keys))


def cell_count(q: int) -> int:
    """|Sz(q)| as the number of Bruhat parameter tuples, q^2 (q^2 + 1)(q - 1)."""
    m = q.bit_length() - 1
    if q < 2 or q != 1 << m or m % 2 == 0:
        raise ValueError("q must be 2^m with m odd, got %r" % (q,))
    unit = q * q * (q - 1)
    big = q * q * (q - 1) * q * q
    return unit + big


def group_order(ring) -> int:
    _require_field(ring)
    return cell_count(ring.q)


def _require_field(ring, max_q=None):
    if not ring.is_field:
        raise NotAFieldError("%s is not a field" % ring)
    if max_q is not None and ring.q > max_q:
        raise ValueError("q = %d exceeds the size guard %d" % (ring.q, max_q))


def iter_cell_batches(ring, kernel=None):
    """Yield ``(cell, params, matrices)`` batches covering the whole group once.

    The first batch is the unit cell, ordered by (t, a, b); then one batch per
    big-cell prefix (a1, b1), ordered by (t, a, b) within it.
    """
    _require_field(ring, MAX_ENUM_Q)
    K = kernel or Kernel(ring)
    t, a, b = (x.ravel() for x in np.meshgrid(K.units, K.codes, K.codes, indexing="ij"))
    yield "unit", (t, a, b), K.recompose_unit(t, a, b)
    n = len(t)
    for a1 in K.codes:
        for b1 in K.codes:
            A1 = np.full(n, a1, dtype=K.dtype)
            B1 = np.full(n, b1, dtype=K.dtype)
            yield "big", (A1, B1, t, a, b), K.recompose_big(A1, B1, t, a, b)


def enumerate_all(ring):
    """Stream every element of Sz(q) as a certified :class:`GroupElement`.

    Elements are checked in bulk by the vectorized membership test.
    """
    K = Kernel(ring)
    for _, _, mats in iter_cell_batches(ring, K):
        if not K.is_member(mats).all():
            raise AssertionError("enumeration produced a non-member")
        for rows in mats.tolist():
            yield GroupElement(Matrix(ring, rows), certified=True)


def enumerate_set(ring) -> GroupSet:
    K = Kernel(ring)
    keys = set()
    for _, _, mats in iter_cell_batches(ring, K):
        keys.update(K.keys(mats))
    return GroupSet(ring, frozenset(keys))


def count_elements(ring, verify=True) -> int:
    """Count Sz(q) by streaming the Bruhat cells.

    With ``verify`` every batch is checked for membership, and decomposing
    each matrix must return its own parameters.  Since decomposition is a left
    inverse of the parametrization, this certifies that no two parameter
    tuples give the same matrix, without keeping any keys in memory.
    """
    K = Kernel(ring)
    total = 0
    for cell, params, mats in iter_cell_batches(ring, K):
        if verify:
            if not K.is_member(mats).all():
                raise AssertionError("non-member in %s cell" % cell)
            big, a1, b1, t, a, b = K.decompose(mats)
            if cell == "unit":
                want = (np.zeros_like(big), 0, 0) + params
            else:
                want = (np.ones_like(big),) + params
            for got, exp in zip((big, a1, b1, t, a, b), want):
                if not np.array_equal(got, np.broadcast_to(exp, got.shape)):
                    raise AssertionError("Bruhat parameters not recovered in %s cell" % cell)
        total += len(mats)
    return total


def write_keys(ring, path) -> int:
    """Write one fixed-width record per element (2 * ring.width bytes, big-endian)."""
    K = Kernel(ring)
    n = 0
    with open(path, "wb") as fh:
        for _, _, mats in iter_cell_batches(ring, K):
            fh.write(K.key_bytes(mats).tobytes())
            n += len(mats)
    return n


def standard_generators(ring):
    """All x+(a, b) together with s; they generate Sz(F) over a field."""
    els = ring.elements()
    gens = [x_plus(a, b) for a in els for b in els]
    gens.append(s_element(ring))
    return gens


def _as_array(K, elements):
    return K.from_matrices(elements).reshape(-1, 4, 4)


def _grow(K, gens, elems, keys, frontier, limit, chunk=4096):
    """Right-multiply the frontier by ``gens`` until nothing new appears."""
    ng = len(gens)
    while len(frontier):
        nxt = []
        for i in range(0, len(frontier), chunk):
            block = frontier[i:i + chunk]
            prods = K.matmul(block[:, None], gens[None]).reshape(-1, 4, 4)
            fresh = []
            for j, k in enumerate(K.keys(prods)):
                if k not in keys:
                    keys.add(k)
                    fresh.append(j)
            if fresh:
                nxt.append(prods[fresh])
            if len(keys) > limit:
                elems.extend(nxt)
                raise LimitExceededError("closure exceeded limit %d" % limit)
        frontier = np.concatenate(nxt) if nxt else frontier[:0]
        elems.append(frontier)
        log.debug("closure: %d elements, frontier %d, %d generators", len(keys), len(frontier), ng)
    return elems


def bfs_closure(generators, limit=10**6) -> GroupSet:
    """The subgroup generated by ``generators`` (a finite group, so products suffice)."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    ring = generators[0].ring
    if any(not g.certified for g in generators):
        raise ValueError("generators must be certified members")
    K = Kernel(ring)
    gens = _as_array(K, generators)
    start = _as_array(K, [identity(ring)])
    keys = set(K.keys(start))
    try:
        _grow(K, gens, [start], keys, start, limit)
    except LimitExceededError as exc:
        exc.partial = GroupSet(ring, frozenset(keys))
        raise
    return GroupSet(ring, frozenset(keys))


def _inverse(G):
    # s g^t s for symplectic g
    return np.swapaxes(G, 1, 2)[:, ::-1, ::-1]


def normal_closure(x, ring=None, limit=10**6) -> GroupSet:
    """Smallest subgroup containing x and stable under conjugation by the standard generators."""
    ring = ring or x.ring
    _require_field(ring, MAX_CLOSURE_Q)
    if not x.certified:
        raise ValueError("x must be a certified member")
    K = Kernel(ring)
    conjugators = _as_array(K, standard_generators(ring))
    conj_inv = _inverse(conjugators)
    gens = _as_array(K, [x])
    start = _as_array(K, [identity(ring)])
    keys = set(K.keys(start))
    elems = _grow(K, gens, [start], keys, start, limit)
    while True:
        # conjugates c^-1 y c of every generator found so far
        cj = K.matmul(K.matmul(conj_inv[None], gens[:, None]), conjugators[None]).reshape(-1, 4, 4)
        outside = [i for i, k in enumerate(K.keys(cj)) if k not in keys]
        if not outside:
            return GroupSet(ring, frozenset(keys))
        z = cj[outside[:1]]
        gens = np.concatenate([gens, z])
        # the current subgroup is closed under the old generators; only z is new
        allel = np.concatenate(elems)
        prods = K.matmul(allel, z[0][None])
        fresh = [j for j, k in enumerate(K.keys(prods)) if k not in keys]
        keys.update(K.keys(prods[fresh]))
        elems.append(prods[fresh])
        _grow(K, gens, elems, keys, prods[fresh], limit)


def random_element(ring, seed: int) -> GroupElement:
    """Uniform element of Sz(F) drawn through its Bruhat parameters."""
    _require_field(ring)
    rnd = random.Random(seed)
    q = ring.q
    codes = ring.codes()
    units = [c for c in codes if c]
    pick = lambda pool: ring(ring.decode(rnd.choice(pool)))  # noqa: E731
    if rnd.randrange(q * q + 1) == 0:
        form = BruhatForm("unit", pick(units), (pick(codes), pick(codes)))
    else:
        u1 = (pick(codes), pick(codes))
        form = BruhatForm("big", pick(units), (pick(codes), pick(codes)), u1)
    return recompose(form)
