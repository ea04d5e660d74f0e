import random

import numpy as np
import pytest

from suzuki import make_ring
from suzuki.bruhat import BruhatForm, canonical_key, decompose, recompose
from suzuki.group import h, is_member, x_plus
from suzuki.kernels import Kernel
from suzuki.linalg import Matrix
from suzuki.verify import random_word

RINGS = [("gf2m", 1), ("gf2m", 3), ("gf2m", 5), ("dual", 3)]


def random_matrices(R, rnd, n):
    els = R.codes()
    return [Matrix(R, [[rnd.choice(els) for _ in range(4)] for _ in range(4)]) for _ in range(n)]


@pytest.mark.parametrize("kind,m", RINGS)
def test_matmul_matches_scalar(kind, m):
    R = make_ring(kind, m)
    K = Kernel(R)
    rnd = random.Random(1)
    A, B = random_matrices(R, rnd, 50), random_matrices(R, rnd, 50)
    got = K.matmul(K.from_matrices(A), K.from_matrices(B))
    for g, a, b in zip(got, A, B):
        assert K.to_matrix(g) == a @ b


@pytest.mark.parametrize("kind,m", RINGS)
def test_membership_matches_scalar(kind, m):
    R = make_ring(kind, m)
    K = Kernel(R)
    rnd = random.Random(2)
    mats = [random_word(R, rnd).matrix for _ in range(40)]
    # perturb half of them by one entry
    for i in range(0, 40, 2):
        rows = [list(r) for r in mats[i].rows]
        rows[rnd.randrange(4)][rnd.randrange(4)] ^= 1
        mats[i] = Matrix(R, rows)
    mats += random_matrices(R, rnd, 20)
    got = K.is_member(K.from_matrices(mats))
    assert got.tolist() == [bool(is_member(g)) for g in mats]
    assert got[1::2][:20].all()


@pytest.mark.parametrize("m", [1, 3, 5])
def test_x_plus_and_h(m):
    R = make_ring("gf2m", m)
    K = Kernel(R)
    a = np.array(R.codes(), dtype=K.dtype)
    b = a[::-1].copy()
    X = K.x_plus(a, b)
    for i in range(len(a)):
        assert K.to_matrix(X[i]) == x_plus(R(int(a[i])), R(int(b[i]))).matrix
    D = K.h_diag(K.units)
    for i, t in enumerate(K.units):
        g = h(R(int(t)))
        assert D[i].tolist() == [g[k, k].value for k in range(4)]


@pytest.mark.parametrize("m", [1, 3, 5])
def test_recompose_and_decompose_match_scalar(m):
    R = make_ring("gf2m", m)
    K = Kernel(R)
    rnd = random.Random(3)
    codes, units = R.codes(), R.units()
    n = 100
    t = np.array([rnd.choice(units).code for _ in range(n)], dtype=K.dtype)
    a, b, a1, b1 = (np.array([rnd.choice(codes) for _ in range(n)], dtype=K.dtype) for _ in range(4))
    U = K.recompose_unit(t, a, b)
    G = K.recompose_big(a1, b1, t, a, b)
    for i in range(n):
        el = lambda x: R(int(x[i]))  # noqa: E731
        fu = BruhatForm("unit", el(t), (el(a), el(b)))
        fb = BruhatForm("big", el(t), (el(a), el(b)), (el(a1), el(b1)))
        assert K.to_matrix(U[i]) == recompose(fu).matrix
        assert K.to_matrix(G[i]) == recompose(fb).matrix
        assert decompose(K.to_matrix(G[i])) == fb
    big, A1, B1, T, A, B = K.decompose(np.concatenate([U, G]))
    assert not big[:n].any() and big[n:].all()
    assert np.array_equal(T, np.concatenate([t, t]))
    assert np.array_equal(A, np.concatenate([a, a])) and np.array_equal(B, np.concatenate([b, b]))
    assert np.array_equal(A1[n:], a1) and np.array_equal(B1[n:], b1)
    assert not A1[:n].any() and not B1[:n].any()


@pytest.mark.parametrize("kind,m", RINGS)
def test_keys(kind, m):
    R = make_ring(kind, m)
    K = Kernel(R)
    rnd = random.Random(4)
    mats = random_matrices(R, rnd, 30)
    arr = K.from_matrices(mats)
    keys = K.keys(arr)
    assert keys == [canonical_key(g) for g in mats]
    assert np.array_equal(K.decode_keys(keys), arr)
    recs = K.key_bytes(arr)
    assert recs.shape == (30, 2 * R.width)
    assert [int.from_bytes(r.tobytes(), "big") for r in recs] == keys


def test_symplectic_matches(F8):
    K = Kernel(F8)
    rnd = random.Random(5)
    from suzuki.linalg import is_symplectic

    mats = random_matrices(F8, rnd, 30) + [random_word(F8, rnd).matrix for _ in range(30)]
    assert K.is_symplectic(K.from_matrices(mats)).tolist() == [is_symplectic(g) for g in mats]
