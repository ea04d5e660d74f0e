"""
Tits rings: GF(2^m) and the dual numbers
=========================================

"""

from suzuki import make_ring

# GF(8) is built from the smallest irreducible cubic, X^3 + X + 1
F = make_ring("gf2m", 3)
print(F, "modulus", bin(F.modulus))

# elements are bitmasks; addition is XOR
x, y = F(2), F(6)
print("2 + 6 =", (x + y).value, "  2 * 6 =", (x * y).value, "  1/2 =", x.inverse().value)

# the Tits map is x -> x^(2^(n+1)) for m = 2n + 1; applied twice it squares
for v in F.elements():
    print(v.value, "->", v.tits().value, "->", v.tits().tits().value, " (square:", (v * v).value, ")")

# over the dual numbers GF(8)[e], e^2 = 0 and the Tits map kills the e part
D = make_ring("dual", 3)
z = D((2, 5))
print(z, "tits:", z.tits(), " units:", len(D.units()), "of", D.size)
