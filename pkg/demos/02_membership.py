"""
Deciding membership in Sz
=========================

"""

from suzuki import make_ring
from suzuki.group import h, is_member, s_element, x_minus, x_plus
from suzuki.linalg import Matrix, is_symplectic

F = make_ring("gf2m", 3)

# the generators
for name, g in [("x+(2,3)", x_plus(F(2), F(3))), ("x-(1,1)", x_minus(F(1), F(1))), ("h(2)", h(F(2))), ("s", s_element(F))]:
    print(name, g.matrix.tolist(), bool(is_member(g)))

# a symplectic matrix that is not in the group: diag(t, t, 1/t, 1/t)
t = F(2)
d = Matrix.from_values(F, [[t, 0, 0, 0], [0, t, 0, 0], [0, 0, t.inverse(), 0], [0, 0, 0, t.inverse()]])
print("symplectic:", is_symplectic(d))
res = is_member(d)
print("member:", bool(res), "-", res.describe())

# products and inverses stay inside
g = x_plus(F(2), F(3)) * s_element(F) * h(F(5)) * x_minus(F(4), F(1))
print("word is member:", bool(is_member(g)), " inverse is member:", bool(is_member(g.inverse())))
