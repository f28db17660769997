"""
Ideals of Z_p[x]/(f)
====================

Every ideal is generated by a monic divisor of the modulus, so the ideal
lattice is the divisor lattice of f turned upside down.
"""
from mvbl.algebra import to_dot
from mvbl.quotient_ring import annihilator, classify_element, ideals, inverse, make_general, make_ring, quotient, to_algebra
from mvbl.zp_poly import parse_poly

R = make_ring(3, 2)
print(R, "has", R.size, "elements; modulus factors as", R.factorization)

for I in ideals(R):
    print(f"  {str(I):<12} size {I.size:<3} Ann = {annihilator(I)}")

# Units have inverses; everything else nonzero kills something.
for text in ["x^2+1", "2x^2+1", "x+1"]:
    a = R(parse_poly(text, 3))
    kind = classify_element(a)
    extra = f", inverse {inverse(a)}" if kind.value == "Unit" else ""
    print(f"{text:>7} is {kind.value}{extra}")

# Ideal arithmetic: sum, product and the residual (J : I).
I = R.ideal_from_generator(parse_poly("x", 3))
J = R.ideal_from_generator(parse_poly("x+1", 3))
print("I + J =", I + J, "  I*J =", I * J, "  (0 : I) =", quotient(R.zero_ideal(), I))

# A non-squarefree modulus gives a chain of ideals instead of a Boolean algebra.
S = make_general(2, parse_poly("x^3", 2))
L = to_algebra(S)
print(S, "ideal lattice is a chain:", L.is_chain(), " n =", L.n)
print(to_dot(to_algebra(R), name="Id_R"))
