"""
Bruhat normal form
==================

"""

from suzuki import make_ring
from suzuki.bruhat import BruhatForm, canonical_key, decompose, recompose
from suzuki.enumeration import random_element

F = make_ring("gf2m", 5)

# every element is h(t) x+(a,b) (unit cell) or x+(a1,b1)^-1 s h(t) x+(a,b) (big cell)
for seed in range(5):
    g = random_element(F, seed)
    form = decompose(g)
    print(seed, form.to_dict(), recompose(form) == g)

# forms are unique: over GF(8) all parameter tuples give distinct matrices
E = make_ring("gf2m", 3)
keys = set()
for t in E.units():
    for a in E.elements():
        for b in E.elements():
            keys.add(canonical_key(recompose(BruhatForm("unit", t, (a, b)), check=False)))
print("unit cell of Sz(8):", len(keys), "elements")
