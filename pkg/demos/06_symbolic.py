"""
Identities as polynomial equalities
===================================

"""

from suzuki.symbolic import IDENTITIES, check_identity, var

# variables come in two levels: x0 and x1 = tau(x0); tau(x1) = x0^2
a = var("a")
print(a.tau(), a.tau().tau(), (a + 1) * (a + 1))

for name in IDENTITIES:
    print(check_identity(name).line())

# conjugation as h g h^-1 breaks the torus action formula
print(check_identity("conjugation", "left").line())

# the Weyl relation needs s h(t^tau) on the left; s h(t) is off by t^-1 + t1^-1
print(check_identity("weyl-first", literal=True).line())
