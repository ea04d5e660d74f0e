"""
Witnesses for simplicity
========================

"""

from suzuki import make_ring
from suzuki.enumeration import normal_closure, random_element
from suzuki.verify import run_suite

F = make_ring("gf2m", 3)
for suite in ("commutators", "perfectness", "corefree", "weyl"):
    print(run_suite(suite, F).summary())

# the normal closure of any nontrivial element is everything
for seed in range(5):
    g = random_element(F, seed)
    print("seed", seed, "normal closure:", normal_closure(g).count)

# over GF(2) the group is solvable and the witnesses are vacuous
print(run_suite("commutators", make_ring("gf2m", 1)).summary())
