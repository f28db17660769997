"""One test per acceptance criterion; the terminal summary prints PASS/FAIL for each."""
import itertools
import random
import time

import numpy as np

import oracles as o
from mvbl.algebra import from_tables, is_isomorphic, maximal_elements, minimal_elements
from mvbl.cipher import DEFAULT_ALPHABET as A
from mvbl.cipher import CipherPath, decode_text, decrypt, encrypt
from mvbl.comet import classify
from mvbl.constructors import Prod, Quot, Zn, boolean_algebra, mv_chain, ordinal_sum, ring_ideal_lattice
from mvbl.enumeration import brute_force_enumerate, census, default_catalog, enumerate_bl, ring_scan
from mvbl.quotient_ring import annihilator, ideals, quotient
from mvbl.zp_poly import parse_poly


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def test_criterion_1():
    cases = [
        (("BJ", A, 3, 2), {}, "G", None),
        (("ABBA", A, 5, 2), {}, "FD", None),
        (("CF", A, 3, 2), {}, "JH", (3, 4, 2)),
        (("DECADE", A, 7, 6), {"ideal": "x^2+2x"}, "DJEDID", None),
    ]
    for args, kw, want, key in cases:
        (ct, k, _), dt = timed(encrypt, *args, **kw)
        assert ct == want and dt < 1.0, (args, ct, dt)
        if key:
            assert (k.p, k.beta, k.l) == key
    (ct, _, tr), dt = timed(encrypt, "ABBA", A, 3, 4)
    assert dt < 1.0 and tr.path is CipherPath.UNIT_INVERSE
    assert tr.f_c == parse_poly("x^4+x^3+2", 3)
    assert tr.f_e == parse_poly("x^4+x+2", 3)
    assert tr.f_e.digits() == "10012"
    assert tr.c == 86


def _random_plaintext(rng):
    p = rng.choice([3, 5, 7])
    beta = rng.choice([b for b in range(1, 7) if b % p])
    length = rng.randint(1, 6)
    m = rng.randrange(min(p ** (beta + 1), 10**length))
    return decode_text(m, length), p, beta


def test_criterion_2():
    rng = random.Random(20261017)
    t0 = time.perf_counter()
    misses = []
    for _ in range(1000):
        text, p, beta = _random_plaintext(rng)
        ct, key, _ = encrypt(text, A, p, beta)
        if text not in decrypt(ct, A, key):
            misses.append((text, p, beta))
    elapsed = time.perf_counter() - t0
    print(f"round trips: 1000, misses: {len(misses)}, {elapsed:.1f} s")
    assert misses == [] and elapsed < 60


PRINTED_CENSUS = {
    "BL-algebras": [1, 2, 5, 9, 20],
    "BL-chains": [1, 2, 4, 8, 17],
    "BL-comets": [1, 2, 3, 9, 19],
    "MV-algebras": [1, 1, 2, 1, 2],
    "MV-chains": [1, 1, 1, 1, 1],
}


def test_criterion_3():
    rep, dt = timed(census, 6)
    got = {row: rep.row(row) for row in PRINTED_CENSUS}
    for row, want in PRINTED_CENSUS.items():
        print(f"{row:<12} computed {got[row]}  printed {want}")
    assert dt < 60
    assert got == PRINTED_CENSUS


def test_criterion_4():
    t0 = time.perf_counter()
    for n, count in [(2, 1), (3, 2), (4, 5)]:
        brute, mine = brute_force_enumerate(n), enumerate_bl(n)
        assert len(brute) == len(mine) == count
        for B in brute:
            assert sum(is_isomorphic(B, M) for M in mine) == 1
            assert sum(o.brute_isomorphic(B, M) for M in mine) == 1
    assert time.perf_counter() - t0 < 300


def test_criterion_5():
    L5 = ordinal_sum(ring_ideal_lattice(Zn(2)), ring_ideal_lattice(Prod((Zn(2), Zn(2)))))
    _, _, odot, imp = o.printed("L5")
    assert np.array_equal(L5.imp, imp) and np.array_equal(L5.odot, odot)
    K = ordinal_sum(mv_chain(5), boolean_algebra(4))
    _, _, odot, imp = o.printed("comet8")
    assert np.array_equal(K.imp, imp) and np.array_equal(K.odot, odot)


def test_criterion_6(corpus):
    assert len(corpus) >= 60
    viol = dict.fromkeys(
        ["pivot_or_negation_zero", "mv_pivot_bottom_or_top", "chain_iff_top_pivot",
         "comet_chain_iff_involutive_pivot", "mv_comet_iff_mv_chain", "non_chain_comet_atoms_coatoms",
         "non_comet_iff_unordered_mv"], 0)
    offenders = set()
    for L in corpus:
        prof = classify(L)
        a = prof.pivot
        if not (a == 0 or L.star(a) == 0):
            viol["pivot_or_negation_zero"] += 1
        if prof.is_mv and a not in (0, L.top):
            viol["mv_pivot_bottom_or_top"] += 1
        if prof.is_chain != (prof.is_comet and a == L.top):
            viol["chain_iff_top_pivot"] += 1
        if prof.is_comet and prof.is_chain != (L.star(L.star(a)) == a):
            viol["comet_chain_iff_involutive_pivot"] += 1
        if prof.is_mv and prof.is_comet != prof.is_chain:
            viol["mv_comet_iff_mv_chain"] += 1
        if prof.is_comet and not prof.is_chain:
            if len(maximal_elements(L)) < 2 or len(minimal_elements(L)) != 1:
                viol["non_chain_comet_atoms_coatoms"] += 1
        if (not prof.is_comet) != (prof.is_mv and not prof.is_chain):
            viol["non_comet_iff_unordered_mv"] += 1
            offenders.add(L.label)
    print(f"corpus size {len(corpus)}; violations {viol}; offenders {sorted(offenders)}")
    assert sum(viol.values()) == 0


def test_criterion_7():
    rep, dt = timed(ring_scan, default_catalog(), strict=False)
    print(f"{len(rep.entries)} rings scanned in {dt:.1f} s, {len(rep.violations)} violations")
    assert rep.violations == [] and dt < 120
    assert all(e.is_bl and e.is_mv for e in rep.entries)


def _ring_size(d):
    if isinstance(d, Zn):
        return d.m
    if isinstance(d, Quot):
        return d.p ** d.f.degree
    return int(np.prod([_ring_size(x) for x in d.parts]))


def _oracle_ring(d):
    if isinstance(d, Zn):
        return o.zn_ring(d.m)
    if isinstance(d, Quot):
        return o.quotient_ring(d.p, list(d.f.coeffs))
    return o.product_ring(*(_oracle_ring(x) for x in d.parts))


def _quot_ops_agree(d, T):
    def elems(I):
        if I.is_zero():
            return frozenset({T.zero})
        return T.span([T.encode(list(I.generator.coeffs))])

    hs = ideals(d.ring)
    sets = {I.exps: elems(I) for I in hs}
    bad = int(sorted(sets.values(), key=lambda s: (len(s), sorted(s))) != T.all_ideals())
    for I in hs:
        bad += sets[annihilator(I).exps] != T.annihilator(sets[I.exps])
    for I, J in itertools.product(hs, repeat=2):
        a, b = sets[I.exps], sets[J.exps]
        bad += sets[(I + J).exps] != T.ideal_sum(a, b)
        bad += sets[(I & J).exps] != (a & b)
        bad += sets[(I * J).exps] != T.ideal_product(a, b)
        bad += sets[quotient(J, I).exps] != T.quotient(b, a)
    return bad


def test_criterion_8(corpus):
    axiom_bad = 0
    for L in corpus:
        v = o.axiom_violations(L.leq, L.odot, L.imp)
        axiom_bad += sum(v.values())
    ring_bad, checked = 0, 0
    for d in default_catalog():
        if _ring_size(d) > 125:
            continue
        checked += 1
        T = _oracle_ring(d)
        if isinstance(d, Quot):
            ring_bad += _quot_ops_agree(d, T)
        _, leq, odot, imp = T.ideal_algebra()
        ring_bad += sum(o.axiom_violations(leq, odot, imp).values())
        ring_bad += not is_isomorphic(ring_ideal_lattice(d), from_tables(None, leq, odot, imp), cap=len(leq))
    print(f"axiom violations over {len(corpus)} algebras: {axiom_bad}; "
          f"ring disagreements over {checked} rings: {ring_bad}")
    assert axiom_bad == 0 and ring_bad == 0
