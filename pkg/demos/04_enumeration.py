"""
Counting Sz(q)
==============

"""

import time

from suzuki import make_ring
from suzuki.enumeration import bfs_closure, cell_count, count_elements, enumerate_set, standard_generators

for m in (1, 3):
    F = make_ring("gf2m", m)
    t0 = time.perf_counter()
    cells = enumerate_set(F)
    bfs = bfs_closure(standard_generators(F))
    print("q=%d  formula %d  cells %d  BFS %d  same keys %s  (%.1fs)" % (
        F.q, cell_count(F.q), cells.count, bfs.count, cells.keys == bfs.keys, time.perf_counter() - t0))

# Sz(32) is streamed batch by batch; pass verify=True to check every batch (about 2 minutes)
F = make_ring("gf2m", 5)
t0 = time.perf_counter()
print("|Sz(32)| =", count_elements(F, verify=False), "(%.1fs, unverified)" % (time.perf_counter() - t0))
