import json
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as o
from mvbl import enumeration
from mvbl.algebra import check_axioms, is_isomorphic
from mvbl.comet import Classification, classify, ordinal_split
from mvbl.constructors import Prod, Quot, Zn, boolean_algebra, direct_product, mv_chain, ordinal_sum
from mvbl.enumeration import (
    CENSUS_ROWS,
    brute_force_enumerate,
    census,
    dedupe,
    default_catalog,
    enumerate_bl,
    generation_corpus,
    mv_algebras,
    ring_scan,
)
from mvbl.errors import ScanViolation, SizeOutOfRange
from mvbl.quotient_ring import chi

# Frozen from two independent computations that agree: the constructive
# generator with products, and the lattice-by-lattice brute-force search.
DERIVED_COUNTS = {
    "MV-algebras": [1, 1, 2, 1, 2],
    "MV-chains": [1, 1, 1, 1, 1],
    "BL-algebras": [1, 2, 5, 9, 20],
    "BL-chains": [1, 2, 4, 8, 16],
    "BL-comets": [1, 2, 4, 9, 18],
}


def test_small_sizes():
    assert len(enumerate_bl(2)) == 1
    assert len(enumerate_bl(3)) == 2
    assert len(enumerate_bl(4)) == 5


def test_size_five_matches_named_list():
    algs = enumerate_bl(5)
    assert len(algs) == 9
    named = [
        mv_chain(5),
        ordinal_sum(mv_chain(2), mv_chain(4)),
        ordinal_sum(mv_chain(2), boolean_algebra(4)),
        ordinal_sum(mv_chain(2), ordinal_sum(mv_chain(2), mv_chain(3))),
        ordinal_sum(mv_chain(2), ordinal_sum(mv_chain(3), mv_chain(2))),
        ordinal_sum(mv_chain(2), ordinal_sum(mv_chain(2), ordinal_sum(mv_chain(2), mv_chain(2)))),
        ordinal_sum(mv_chain(4), mv_chain(2)),
        ordinal_sum(ordinal_sum(mv_chain(3), mv_chain(2)), mv_chain(2)),
        ordinal_sum(mv_chain(3), mv_chain(3)),
    ]
    for N in named:
        assert sum(is_isomorphic(N, A) for A in algs) == 1


def test_size_six():
    algs = enumerate_bl(6)
    assert len(algs) == 20
    assert sum(not check_axioms(L).mv for L in algs) == 18


def test_size_six_without_products_misses_one_product():
    plain = enumerate_bl(6, include_products=False)
    assert len(plain) == 19
    missing = [A for A in enumerate_bl(6) if not any(is_isomorphic(A, B) for B in plain)]
    assert len(missing) == 1
    assert is_isomorphic(missing[0], direct_product(ordinal_sum(mv_chain(2), mv_chain(2)), mv_chain(2)))


def test_size_range():
    for n in (1, 7):
        with pytest.raises(SizeOutOfRange):
            enumerate_bl(n)
    with pytest.raises(SizeOutOfRange):
        brute_force_enumerate(5)
    with pytest.raises(SizeOutOfRange):
        census(7)


def test_mv_algebras_per_size():
    assert [len(mv_algebras(n)) for n in range(2, 9)] == [1, 1, 2, 1, 2, 1, 3]


def test_representatives_are_pairwise_non_isomorphic(classes):
    for n in range(2, 7):
        group = [L for L in classes if L.n == n]
        for i, A in enumerate(group):
            for B in group[i + 1:]:
                assert not o.brute_isomorphic(A, B)


def test_every_construction_is_bl_and_labelled(corpus):
    assert len(corpus) == 63
    for L in corpus:
        assert check_axioms(L).bl and L.label


# -- census -----------------------------------------------------------------------------

def test_census_rows():
    rep = census(6)
    for row, values in DERIVED_COUNTS.items():
        assert rep.row(row) == values


def test_census_inequalities():
    rep = census(6)
    for n, c in rep.counts.items():
        assert c["BL-chains"] <= c["BL-comets"] <= c["BL-algebras"]
        assert c["MV-chains"] <= c["MV-algebras"] <= c["BL-algebras"]


def test_census_formats():
    rep = census(4)
    table = rep.to_table()
    assert all(r in table for r in CENSUS_ROWS)
    d = json.loads(rep.to_json(with_representatives=True))
    assert d["sizes"] == [2, 3, 4] and d["rows"]["BL-algebras"] == [1, 2, 5]
    provs = [r["provenance"] for r in d["representatives"]["4"]]
    assert "Id(Z_2×Z_2)" in provs and "Id(Z_2) ⊞ Id(Z_4)" in provs


@settings(max_examples=10, deadline=None)
@given(st.randoms(use_true_random=False))
def test_dedup_is_order_independent(rnd):
    corpus = generation_corpus(6)
    shuffled = list(corpus)
    rnd.shuffle(shuffled)
    kept = dedupe(shuffled)
    assert len(kept) == 37
    for n in range(2, 7):
        a = sorted(classify(L).classification.value for L in kept if L.n == n)
        b = sorted(classify(L).classification.value for L in enumerate_bl(n))
        assert a == b


# -- brute force --------------------------------------------------------------------------

@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 5)])
def test_brute_force_counts(n, count):
    algs = brute_force_enumerate(n)
    assert len(algs) == count
    for A in algs:
        assert sum(is_isomorphic(A, B) for B in enumerate_bl(n)) == 1


@pytest.mark.parametrize("n", [5, 6])
def test_brute_force_agrees_beyond_the_default_cap(n):
    algs = brute_force_enumerate(n, cap=n)
    mine = enumerate_bl(n)
    assert len(algs) == len(mine)
    for A in algs:
        assert any(is_isomorphic(A, B) for B in mine)


# -- structure of the enumerated algebras ---------------------------------------------------

def test_non_mv_comets_split(classes):
    for L in classes:
        prof = classify(L)
        if not prof.is_mv and prof.is_comet:
            assert ordinal_split(L), L.label


def test_every_algebra_is_comet_unordered_mv_or_product(classes):
    extra = direct_product(ordinal_sum(mv_chain(2), mv_chain(2)), mv_chain(2))
    for L in classes:
        prof = classify(L)
        ok = prof.is_comet or prof.classification is Classification.UNORDERED_MV or is_isomorphic(L, extra)
        assert ok, L.label


# -- ring scan ------------------------------------------------------------------------------

def test_scan_small_catalog_examples():
    rep = ring_scan([Prod((Zn(2), Zn(2))), Quot(3, chi(3, 2))])
    a, b = rep.entries
    assert a.is_mv and a.classification == "UnorderedMV"
    assert b.is_mv and b.n == 8
    assert rep.violations == []


def test_scan_all_zn_up_to_64():
    rep = ring_scan([Zn(m) for m in range(2, 65)])
    assert rep.violations == [] and len(rep.entries) == 63


def test_scan_reports_and_raises_on_a_violation(monkeypatch):
    real = enumeration.ring_ideal_lattice

    def fake(d, cap=4096):
        return ordinal_sum(mv_chain(2), boolean_algebra(4)) if str(d) == "Zn(6)" else real(d, cap)

    monkeypatch.setattr(enumeration, "ring_ideal_lattice", fake)
    rep = ring_scan([Zn(4), Zn(6)], strict=False)
    assert ("Zn(6)", "mv") in rep.violations
    with pytest.raises(ScanViolation) as ei:
        ring_scan([Zn(4), Zn(6)])
    assert ei.value.ring == "Zn(6)" and ei.value.check == "mv"


def test_default_catalog_shape():
    cat = default_catalog()
    assert sum(isinstance(d, Zn) for d in cat) == 63
    assert sum(isinstance(d, Quot) for d in cat) == 24
    assert max(len(d.parts) for d in cat if isinstance(d, Prod)) == 3


def test_scan_flags_a_count_mismatch(monkeypatch):
    # Zn(4) has one maximal ideal; a four-element Boolean lattice has two coatoms
    monkeypatch.setattr(enumeration, "ring_ideal_lattice", lambda d, cap=4096: boolean_algebra(4))
    rep = ring_scan([Zn(4)], strict=False)
    assert rep.violations == [("Zn(4)", "ideal_count_identity")]
