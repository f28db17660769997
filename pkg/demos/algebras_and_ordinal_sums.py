"""
Finite BL-algebras as tables
============================

Build MV-chains and Boolean algebras, glue them with ordinal sums, take
products and check the axioms by brute force.
"""
from mvbl.algebra import check_axioms, is_isomorphic
from mvbl.constructors import Prod, Zn, boolean_algebra, direct_product, mv_chain, ordinal_sum, ring_ideal_lattice

C3 = mv_chain(3)
print(C3.label, "\n", C3.table("odot"), "\n")

# Gluing the top of a two-element chain to the bottom of the four-element
# Boolean algebra gives a five-element BL-algebra that is not MV.
L5 = ordinal_sum(mv_chain(2), boolean_algebra(4))
print(L5.table("imp"))
print(L5.table("odot"))
print(check_axioms(L5).flags())

# Ideal lattices of rings land in the same world.
print("Id(Z_2 x Z_2) is Boolean:", is_isomorphic(ring_ideal_lattice(Prod((Zn(2), Zn(2)))), boolean_algebra(4)))
print("Id(Z_16) is the five-chain:", ring_ideal_lattice(Zn(16)) == mv_chain(5))

# A non-chain below the seam breaks prelinearity.
bad = ordinal_sum(boolean_algebra(4), mv_chain(2), validate=False)
print("Boolean below the seam:", check_axioms(bad).flags())

P = direct_product(mv_chain(2), mv_chain(3))
print(P.label, "n =", P.n, check_axioms(P).flags())
