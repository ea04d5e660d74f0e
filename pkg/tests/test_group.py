import itertools
import random

import numpy as np
import pytest

from suzuki import make_ring
from suzuki.group import (
    NotAMemberError,
    certify,
    commutator,
    conj,
    h,
    is_member,
    one,
    s_element,
    v_generators,
    x_minus,
    x_plus,
)
from suzuki.kernels import Kernel
from suzuki.linalg import Matrix, identity, is_symplectic, symplectic_inverse
from suzuki.verify import random_word


def test_identity_and_s_are_members(any_ring):
    assert is_member(identity(any_ring))
    assert is_member(s_element(any_ring))


def test_v_generators(F8):
    gens = v_generators(F8)
    assert len(gens) == 5
    assert gens[-1].coords == (0, 0, 1, 1, 0, 0)


def test_diagonal_counterexample(F8):
    t = F8(2)
    ti = t.inverse()
    g = Matrix.from_values(F8, [[t, 0, 0, 0], [0, t, 0, 0], [0, 0, ti, 0], [0, 0, 0, ti]])
    assert is_symplectic(g)
    assert t.tits() != t * t
    res = is_member(g)
    assert not res
    assert res.reason == "relation" and res.generator == 0
    with pytest.raises(NotAMemberError):
        certify(g)


def test_non_symplectic_reason(F8):
    g = Matrix.from_values(F8, [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    res = is_member(g)
    assert not res and res.reason == "not-symplectic"
    assert "symplectic" in res.describe()


def test_x_plus_examples(F2, F8):
    assert x_plus(F8.zero, F8.zero).is_identity()
    g = x_plus(F2.one, F2.zero)
    assert g.matrix.rows[0] == (1, 1, 1, 1)
    assert g.matrix.rows[1] == (0, 1, 1, 0)
    a, b, c, d = F8(2), F8(3), F8(6), F8(1)
    assert x_plus(a, b) * x_plus(c, d) == x_plus(a + c, b + d + a.tits() * c)


def test_x_plus_matrix_entries(F8):
    for a in F8.elements():
        for b in F8.elements():
            g = x_plus(a, b)
            at = a.tits()
            assert g.certified
            assert g[0, 2] == b + a * at
            assert g[0, 3] == a * a * at + b.tits() + a * b
            assert g[1, 2] == at and g[1, 3] == b and g[2, 3] == a


def test_x_minus(F2, F8):
    assert x_minus(F8.zero, F8.zero).is_identity()
    assert is_member(x_minus(F2.one, F2.one))
    for a in F8.elements():
        for b in F8.elements():
            xm, xp = x_minus(a, b).matrix, x_plus(a, b).matrix
            assert all(xm[i, j] == xp[3 - i, 3 - j] for i in range(4) for j in range(4))
            s = s_element(F8)
            assert x_minus(a, b) == s * x_plus(a, b) * s


def test_h_examples(F8, D8):
    assert h(F8.one).is_identity()
    t = F8(2)
    # tits(2) = 6, invert(2) = 5, invert(6) = 3 since (X^2+X)(X+1) = X^3+X = 1
    assert F8(6) * F8(3) == F8.one
    g = h(t)
    assert [g[i, i] for i in range(4)] == [F8(2), F8(6) * F8(5), F8(2) * F8(3), F8(5)]
    assert [g[i, i].value for i in range(4)] == [2, 3, 6, 5]
    assert is_member(h(D8((1, 1))))


def test_h_is_homomorphism(any_ring):
    units = any_ring.units()[:12]
    for t in units:
        for u in units:
            assert h(t) * h(u) == h(t * u)


def test_s_element(any_ring):
    s = s_element(any_ring)
    assert (s * s).is_identity()
    for t in any_ring.units()[:10]:
        assert s * h(t) * s == h(t.inverse())


def test_product_relation_exhaustive(F8):
    els = F8.elements()
    X = {(a, b): x_plus(a, b, check=False) for a in els for b in els}
    for (a, b), (c, d) in itertools.product(X, repeat=2):
        assert X[a, b] * X[c, d] == X[a + c, b + d + a.tits() * c]


def test_inverse_formula(F8):
    for a in F8.elements():
        for b in F8.elements():
            assert x_plus(a, b).inverse() == x_plus(a, b + a * a.tits())


@pytest.mark.parametrize("m", [3, 5])
def test_weyl_relation(m):
    R = make_ring("gf2m", m)
    O = R.zero
    s = s_element(R)
    for t in R.units():
        u = t / t.tits()
        rhs = x_plus(u, t.inverse()) * x_minus(O, t) * x_plus(u, O)
        assert rhs == conj(x_minus(O, t), x_plus(u, O))
        assert s * h(t.tits()) == rhs
        # the relation with s h(t) on the left only survives at t = 1
        assert (s * h(t) == rhs) == (t == R.one)


def test_conjugation_formula(F8):
    for t in F8.units():
        ht = h(t)
        tt = t.tits()
        for a in F8.elements():
            for b in F8.elements():
                want = x_plus(tt / (t * t) * a, tt.inverse() * b)
                assert ht.inverse() * x_plus(a, b) * ht == want
                assert conj(x_plus(a, b), ht) == want


def test_commutator_convention(F8):
    t = F8(2)
    b = F8(3)
    got = commutator(x_plus(F8.zero, b), h(t))
    assert got == x_plus(F8.zero, b * (F8.one + t.tits()))


@pytest.mark.parametrize("kind,m", [("gf2m", 1), ("gf2m", 3), ("gf2m", 5), ("dual", 3)])
def test_closure_random(kind, m):
    R = make_ring(kind, m)
    rnd = random.Random(99)
    for _ in range(100):
        f, g = random_word(R, rnd), random_word(R, rnd)
        assert is_member(f * g)
        assert is_member(g.inverse())
        assert is_member(g.matrix.transpose())


def test_membership_failure_detected_q2(F2):
    # Sp(4, 2) has 720 elements, Sz(2) only 20: many unitriangular symplectic matrices are excluded
    found = []
    for vals in itertools.product(range(2), repeat=6):
        m = [[1, vals[0], vals[1], vals[2]], [0, 1, vals[3], vals[4]], [0, 0, 1, vals[5]], [0, 0, 0, 1]]
        g = Matrix.from_values(F2, m)
        if is_symplectic(g) and not is_member(g):
            found.append(g)
    assert found


def test_unitriangular_members_are_x_plus(F8):
    """Among all 8^6 upper unitriangular matrices exactly the 64 x+(a, b) are members."""
    K = Kernel(F8)
    vals = np.array(list(itertools.product(range(8), repeat=6)), dtype=K.dtype)
    G = np.zeros((len(vals), 4, 4), dtype=K.dtype)
    G[:, [0, 1, 2, 3], [0, 1, 2, 3]] = 1
    for k, (i, j) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]):
        G[:, i, j] = vals[:, k]
    members = G[K.is_member(G)]
    want = {x_plus(a, b).key() for a in F8.elements() for b in F8.elements()}
    assert set(K.keys(members)) == want


def test_diagonal_members_are_h(F8):
    units = F8.units()
    found = set()
    for d in itertools.product(units, repeat=4):
        g = Matrix.from_values(F8, [[d[i] if i == j else 0 for j in range(4)] for i in range(4)])
        if is_member(g):
            found.add(g)
    assert found == {h(t).matrix for t in units}


def test_transpose_closure(F8):
    rnd = random.Random(4)
    for _ in range(50):
        g = random_word(F8, rnd)
        assert is_member(g.matrix.transpose())
        assert g * g.inverse() == one(F8)
        assert g.inverse().matrix == symplectic_inverse(g.matrix)


def test_wrong_tits_breaks_membership(F8):
    # with x -> x^2 in place of the Tits map, x+(a, b) built from it is not a member
    a = F8(2)
    sq = a * a
    m = Matrix.from_values(F8, [[1, a, a * sq, a * a * sq], [0, 1, sq, 0], [0, 0, 1, a], [0, 0, 0, 1]])
    assert not is_member(m)
