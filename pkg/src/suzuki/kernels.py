"""Vectorized (numpy) versions of the group operations.

Matrices are ``(N, 4, 4)`` integer arrays of element codes; arithmetic goes
through the ring's lookup tables, addition is XOR.  Results agree entry for
entry with the scalar code in :mod:`suzuki.group` and :mod:`suzuki.bruhat`
(the test-suite checks this).
"""

from __future__ import annotations

import numpy as np

from .linalg import WEDGE_BASIS

_RHO_ROWS = (0, 1, 4, 5)


class Kernel:
    def __init__(self, ring):
        self.ring = ring
        self.mul, self.inv, self.tits = ring.tables()
        self.width = ring.width
        self.dtype = self.mul.dtype
        self.units = np.array([c for c in ring.codes() if ring._is_unit(c)], dtype=self.dtype)
        self.codes = np.array(ring.codes(), dtype=self.dtype)

    # -- basic arithmetic
    def matmul(self, A, B):
        M = self.mul
        out = M[A[..., :, 0, None], B[..., None, 0, :]]
        for k in (1, 2, 3):
            out ^= M[A[..., :, k, None], B[..., None, k, :]]
        return out

    def one_minus_tau(self, t):
        return self.mul[t, self.inv[self.tits[t]]]

    # -- generators
    def x_plus(self, a, b):
        M, T = self.mul, self.tits
        a = np.asarray(a, dtype=self.dtype)
        b = np.asarray(b, dtype=self.dtype)
        n = a.shape[0]
        at = T[a]
        out = np.zeros((n, 4, 4), dtype=self.dtype)
        out[:, [0, 1, 2, 3], [0, 1, 2, 3]] = 1
        out[:, 0, 1] = a
        out[:, 0, 2] = b ^ M[a, at]
        out[:, 0, 3] = M[M[a, a], at] ^ T[b] ^ M[a, b]
        out[:, 1, 2] = at
        out[:, 1, 3] = b
        out[:, 2, 3] = a
        return out

    def h_diag(self, t):
        M, T, I = self.mul, self.tits, self.inv
        tt = T[t]
        return np.stack([t, M[tt, I[t]], M[t, I[tt]], I[t]], axis=1)

    def recompose_unit(self, t, a, b):
        X = self.x_plus(a, b)
        return self.mul[self.h_diag(t)[:, :, None], X]

    def recompose_big(self, a1, b1, t, a, b):
        core = self.recompose_unit(t, a, b)[:, ::-1, :]
        a1 = np.asarray(a1, dtype=self.dtype)
        b1 = np.asarray(b1, dtype=self.dtype)
        u_inv = self.x_plus(a1, b1 ^ self.mul[a1, self.tits[a1]])
        return self.matmul(u_inv, core)

    # -- membership
    def _minor(self, G, rows, cols):
        (i, j), (k, l) = rows, cols
        M = self.mul
        return M[G[:, i, k], G[:, j, l]] ^ M[G[:, i, l], G[:, j, k]]

    def is_symplectic(self, G):
        form = self.matmul(np.swapaxes(G, 1, 2), G[:, ::-1, :])
        s = np.zeros((4, 4), dtype=self.dtype)
        s[[0, 1, 2, 3], [3, 2, 1, 0]] = 1
        return np.all(form == s, axis=(1, 2))

    def is_member(self, G):
        G = np.asarray(G, dtype=self.dtype)
        ok = self.is_symplectic(G)
        T = self.tits
        rows = [WEDGE_BASIS[r] for r in _RHO_ROWS]
        for k, c in enumerate(_RHO_ROWS):
            col = WEDGE_BASIS[c]
            for p, row in enumerate(rows):
                ok &= self._minor(G, row, col) == T[G[:, p, k]]
        for row in rows:
            ok &= (self._minor(G, row, WEDGE_BASIS[2]) ^ self._minor(G, row, WEDGE_BASIS[3])) == 0
        return ok

    # -- Bruhat
    def decompose(self, G):
        """Return (big, a1, b1, t, a, b) arrays; a1 = b1 = 0 in the unit cell."""
        M, T, I = self.mul, self.tits, self.inv
        G = np.asarray(G, dtype=self.dtype)
        g41 = G[:, 3, 0]
        big = g41 != 0
        g41i = I[g41]
        g31 = G[:, 2, 0]
        a1 = np.where(big, M[g41i, g31], 0).astype(self.dtype)
        b1 = np.where(big, M[g41i, G[:, 1, 0] ^ M[M[T[g31], g31], I[T[g41]]]], 0).astype(self.dtype)
        f = self.matmul(self.x_plus(a1, b1), G)
        t = np.where(big, f[:, 3, 0], G[:, 0, 0]).astype(self.dtype)
        r12 = np.where(big, f[:, 3, 1], G[:, 0, 1])
        r24 = np.where(big, f[:, 2, 3], G[:, 1, 3])
        a = M[I[t], r12]
        b = M[self.one_minus_tau(t), r24]
        return big, a1, b1, t, a, b

    # -- keys
    def key_halves(self, G):
        """Split canonical keys into two uint64 halves of 8 entries each."""
        w = self.width
        flat = np.asarray(G).reshape(len(G), 16).astype(np.uint64)
        shifts = np.array([w * (7 - k) for k in range(8)], dtype=np.uint64)
        hi = np.bitwise_or.reduce(flat[:, :8] << shifts, axis=1)
        lo = np.bitwise_or.reduce(flat[:, 8:] << shifts, axis=1)
        return hi, lo

    def keys(self, G):
        """Canonical keys as Python ints (same values as bruhat.canonical_key)."""
        hi, lo = self.key_halves(G)
        s = 8 * self.width
        return [x << s | y for x, y in zip(hi.tolist(), lo.tolist())]

    def key_bytes(self, G):
        """Fixed-width big-endian records of 2 * width bytes per element."""
        hi, lo = self.key_halves(G)
        nb = self.width  # 8 entries * width bits = width bytes
        be = lambda x: x.astype(">u8").view(np.uint8).reshape(-1, 8)[:, 8 - nb:]  # noqa: E731
        return np.concatenate([be(hi), be(lo)], axis=1)

    def decode_keys(self, keys):
        """Inverse of :meth:`keys`: canonical keys back to ``(N, 4, 4)`` matrices."""
        w = self.width
        mask = (1 << w) - 1
        out = [[(k >> (w * (15 - i))) & mask for i in range(16)] for k in keys]
        return np.array(out, dtype=self.dtype).reshape(-1, 4, 4)

    # -- conversion
    def from_matrices(self, mats):
        return np.array([m.matrix.rows if hasattr(m, "matrix") else m.rows for m in mats], dtype=self.dtype)

    def to_matrix(self, arr):
        from .linalg import Matrix

        return Matrix(self.ring, arr.tolist())
