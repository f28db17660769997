import pytest

import oracles as o
from mvbl.algebra import check_axioms, from_tables, is_isomorphic, maximal_elements, minimal_elements
from mvbl.comet import Classification, classify, d_set, idempotents, ordinal_split, pivot
from mvbl.constructors import boolean_algebra, direct_product, mv_chain, ordinal_sum, ring_ideal_lattice
from mvbl.errors import NotBL


@pytest.fixture(scope="module")
def L5():
    return from_tables(*o.printed("L5"))


def names(L, elems):
    return {L.names[x] for x in elems}


def test_idempotents(L5):
    assert names(L5, idempotents(L5)) == {"0", "a", "b", "c", "1"}
    assert idempotents(mv_chain(3)) == {0, 2}
    assert idempotents(boolean_algebra(8)) == set(range(8))


def test_d_set(L5):
    assert names(L5, d_set(L5)) == {"0", "a"}
    assert d_set(boolean_algebra(4)) == {0}
    for m in range(2, 6):
        C = ordinal_sum(mv_chain(m), mv_chain(3))
        assert d_set(C) == idempotents(C)


def test_pivot(L5):
    assert L5.names[pivot(L5)] == "a"
    for C in (mv_chain(5), ordinal_sum(mv_chain(3), mv_chain(2))):
        assert pivot(C) == C.top
    assert pivot(boolean_algebra(4)) == 0


def test_classify_examples(L5):
    prof = classify(ring_ideal_lattice("Zn(16)"))
    assert prof.classification is Classification.MV_CHAIN and prof.pivot == 4
    prof = classify(ring_ideal_lattice("Prod(Zn(2), Zn(2))"))
    assert prof.classification is Classification.UNORDERED_MV and not prof.is_comet
    prof = classify(L5)
    assert prof.classification is Classification.COMET_NON_CHAIN and L5.names[prof.pivot] == "a"


def test_profile_to_dict_uses_names(L5):
    d = classify(L5).to_dict(L5.names)
    assert d["pivot"] == "a" and d["d_set"] == ["0", "a"] and d["classification"] == "CometNonChain"


def test_non_bl_is_rejected():
    bad = ordinal_sum(boolean_algebra(4), mv_chain(2))
    for fn in (idempotents, d_set, pivot, classify, ordinal_split):
        with pytest.raises(NotBL) as ei:
            fn(bad)
        assert ei.value.witness is not None


def test_split_of_l5(L5):
    (s,) = ordinal_split(L5)
    assert L5.names[s.cut] == "a"
    assert s.lower.n == 2 and s.lower.is_chain()
    assert is_isomorphic(s.upper, boolean_algebra(4))


def test_split_of_boolean_is_empty():
    assert ordinal_split(boolean_algebra(4)) == []


def test_split_of_small_chain_at_the_seam():
    L = ordinal_sum(mv_chain(2), mv_chain(3))
    cuts = [s.cut for s in ordinal_split(L)]
    assert cuts == [1]
    (s,) = ordinal_split(L)
    assert s.lower == mv_chain(2) and s.upper == mv_chain(3)


def test_split_reconstructs(classes):
    for L in classes:
        for s in ordinal_split(L):
            assert s.lower.n + s.upper.n - 1 == L.n
            assert check_axioms(s.upper).bl and s.lower.is_chain()


# -- structural facts over every enumerated algebra ---------------------------------------

def test_zero_is_in_d_set_and_comet_means_nonzero_pivot(corpus):
    for L in corpus:
        prof = classify(L)
        assert 0 in prof.d_set
        assert prof.is_comet == (prof.pivot != 0)


def test_pivot_is_zero_or_has_zero_negation(corpus):
    for L in corpus:
        a = pivot(L)
        assert a == 0 or L.star(a) == 0


def test_mv_pivot_is_bottom_or_top(corpus):
    for L in corpus:
        if check_axioms(L).mv:
            assert pivot(L) in (0, L.top)


def test_chain_iff_comet_with_top_pivot(corpus):
    for L in corpus:
        prof = classify(L)
        assert prof.is_chain == (prof.is_comet and prof.pivot == L.top)


def test_comet_is_chain_iff_pivot_is_involutive(corpus):
    for L in corpus:
        prof = classify(L)
        if prof.is_comet:
            a = prof.pivot
            assert prof.is_chain == (L.star(L.star(a)) == a)


def test_mv_comet_iff_mv_chain(corpus):
    for L in corpus:
        prof = classify(L)
        if prof.is_mv:
            assert prof.is_comet == prof.is_chain


def test_non_chain_comets_have_two_coatoms_and_one_atom(corpus):
    for L in corpus:
        prof = classify(L)
        if prof.is_comet and not prof.is_chain:
            assert len(maximal_elements(L)) >= 2
            assert len(minimal_elements(L)) == 1


def test_non_comets_are_unordered_mv_or_products(corpus):
    extra = direct_product(ordinal_sum(mv_chain(2), mv_chain(2)), mv_chain(2))
    for L in corpus:
        prof = classify(L)
        if not prof.is_comet and not prof.is_mv:
            assert is_isomorphic(L, extra)


def test_product_of_bl_chain_and_two_chain_is_neither_comet_nor_mv():
    L = direct_product(ordinal_sum(mv_chain(2), mv_chain(2)), mv_chain(2))
    prof = classify(L)
    assert prof.classification is Classification.NON_COMET_NON_MV
    assert prof.pivot == 0 and ordinal_split(L) == []
