"""
Comets
======

The pivot is the largest idempotent that is comparable with every idempotent
and sits over a chain of idempotents. A nonzero pivot makes the algebra a
comet.
"""
from mvbl.comet import classify, ordinal_split
from mvbl.constructors import boolean_algebra, direct_product, mv_chain, ordinal_sum

samples = {
    "five-chain": mv_chain(5),
    "Boolean 4": boolean_algebra(4),
    "2 glued to B4": ordinal_sum(mv_chain(2), boolean_algebra(4)),
    "5 glued to B4": ordinal_sum(mv_chain(5), boolean_algebra(4)),
    "(2+2) x 2": direct_product(ordinal_sum(mv_chain(2), mv_chain(2)), mv_chain(2)),
}

for name, L in samples.items():
    prof = classify(L)
    print(f"{name:<14} pivot={L.names[prof.pivot]:<4} {prof.classification.value}")

# Each comet that is not MV comes apart at an idempotent cut; every split is
# checked by rebuilding the algebra.
L = samples["5 glued to B4"]
for s in ordinal_split(L):
    print("cut at", L.names[s.cut], ":", s.lower.n, "+", s.upper.n, "elements")
