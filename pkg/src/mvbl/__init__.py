"""Finite MV- and BL-algebras, ideal lattices of Z_p[x]/(f), and the annihilator cipher."""
from .algebra import AxiomReport, FiniteAlgebra, check_axioms, from_tables, isomorphism
from .cipher import Alphabet, CipherTrace, SecretKey, decrypt, encrypt
from .comet import Classification, CometProfile, classify, ordinal_split
from .constructors import boolean_algebra, direct_product, mv_chain, ordinal_sum, ring_ideal_lattice
from .enumeration import CensusReport, brute_force_enumerate, census, enumerate_bl, ring_scan
from .quotient_ring import QuotientRing, make_general, make_ring, to_algebra
from .zp_poly import Poly, factor, parse_poly

__all__ = [
    "Alphabet", "AxiomReport", "CensusReport", "CipherTrace", "Classification", "CometProfile",
    "FiniteAlgebra", "Poly", "QuotientRing", "SecretKey", "boolean_algebra", "brute_force_enumerate",
    "census", "check_axioms", "classify", "decrypt", "direct_product", "encrypt", "enumerate_bl",
    "factor", "from_tables", "isomorphism", "make_general", "make_ring", "mv_chain", "ordinal_split",
    "ordinal_sum", "parse_poly", "ring_ideal_lattice", "ring_scan", "to_algebra",
]
