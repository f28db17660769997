"""Finite BL-algebras up to isomorphism: constructive generation, brute force, census, ring scan."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

import numpy as np

from .algebra import FiniteAlgebra, check_axioms, invariant, is_isomorphic, maximal_elements, minimal_elements, to_dict
from .comet import Classification, classify
from .constructors import (
    Prod,
    Quot,
    Zn,
    direct_product,
    mv_chain,
    ordinal_sum,
    parse_descriptor,
    product_many,
    ring_ideal_lattice,
)
from .errors import AlgebraError, ScanViolation, SizeOutOfRange

MAX_N = 6
BRUTE_FORCE_MAX_N = 4


# -- deduplication -----------------------------------------------------------------

class IsoClasses:
    """Accumulates algebras, keeping the first representative of each isomorphism class."""

    def __init__(self, cap: int = 12):
        self.members: list = []
        self._buckets: dict = {}
        self.cap = cap

    def add(self, L: FiniteAlgebra) -> bool:
        key = invariant(L)
        bucket = self._buckets.setdefault(key, [])
        if any(is_isomorphic(L, M, self.cap) for M in bucket):
            return False
        bucket.append(L)
        self.members.append(L)
        return True

    def __len__(self):
        return len(self.members)


def dedupe(algebras, cap: int = 12) -> list:
    acc = IsoClasses(cap)
    for L in algebras:
        acc.add(L)
    return acc.members


# -- constructive enumeration --------------------------------------------------------

def _multiplicative_partitions(n: int, smallest: int = 2):
    """Non-decreasing factor lists with product ``n`` and every factor ``>= 2``."""
    if n == 1:
        yield ()
        return
    for f in range(smallest, n + 1):
        if n % f == 0:
            for rest in _multiplicative_partitions(n // f, f):
                yield (f,) + rest


def mv_algebras(n: int) -> list:
    """Finite MV-algebras of size ``n``: products of MV-chains, one per factorization of ``n``."""
    out = []
    for parts in _multiplicative_partitions(n):
        if len(parts) == 1:
            out.append(mv_chain(n))
        else:
            L = product_many(*(mv_chain(c) for c in parts))
            out.append(L.relabeled("Id(" + "×".join(f"Z_{2 ** (c - 1)}" for c in parts) + ")"))
    return out


def _check_range(n, cap):
    if not 2 <= n <= cap:
        raise SizeOutOfRange(f"n must satisfy 2 <= n <= {cap}, got {n}")


def _constructions(n: int, include_products: bool):
    """Every algebra the generation step builds at size ``n``, repeats included."""
    if n == 2:
        yield mv_chain(2)
        return
    yield from mv_algebras(n)
    for k in range(2, n):
        chains = [C for C in _generate(k, include_products) if C.is_chain()]
        for C in chains:
            for B in _generate(n - k + 1, include_products):
                yield ordinal_sum(C, B)
    if include_products:
        for a in range(2, n):
            b, r = divmod(n, a)
            if r or b < a:
                continue
            for A in _generate(a, include_products):
                for B in _generate(b, include_products):
                    yield direct_product(A, B)


@lru_cache(maxsize=None)
def _generate(n: int, include_products: bool) -> tuple:
    return tuple(dedupe(_constructions(n, include_products)))


def enumerate_bl(n: int, include_products: bool = True, cap: int = MAX_N) -> list:
    """All BL-algebras with ``n`` elements up to isomorphism, each labelled with its construction.

    Generation: the MV-algebras of size ``n``, every ``C ⊞ B`` with ``C`` a
    BL-chain of size ``k`` (``2 <= k < n``) and ``B`` of size ``n - k + 1``, and,
    when ``include_products`` is set, direct products of smaller BL-algebras.
    Without products the size-6 product ``(Id(Z_2) ⊞ Id(Z_2)) × Id(Z_2)`` is
    missed.
    """
    _check_range(n, cap)
    return list(_generate(n, include_products))


def generation_corpus(nmax: int = MAX_N, include_products: bool = True) -> list:
    """All constructions for ``2 <= n <= nmax`` before deduplication (63 algebras at ``nmax = 6``).

    Isomorphic algebras reached by different constructions appear once per
    construction, with different element orders and labels.
    """
    _check_range(nmax, MAX_N)
    return [L for n in range(2, nmax + 1) for L in _constructions(n, include_products)]


# -- brute force -------------------------------------------------------------------

def _bounded_lattices(n: int):
    """Order relations on ``0..n-1`` with 0 bottom, n-1 top, and ``i < j`` whenever ``x_i < x_j``."""
    if n == 1:
        yield np.ones((1, 1), dtype=bool)
        return
    inner = list(itertools.combinations(range(1, n - 1), 2))
    for bits in range(1 << len(inner)):
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        for t, (i, j) in enumerate(inner):
            if bits >> t & 1:
                leq[i, j] = True
        # transitive closure must not add anything new
        closed = leq.copy()
        for k in range(n):
            closed |= closed[:, [k]] & closed[[k], :]
        if not np.array_equal(closed, leq):
            continue
        try:
            FiniteAlgebra(None, leq, np.zeros((n, n), int), np.zeros((n, n), int), validate=False)
        except AlgebraError:
            continue
        yield leq


def _monoids(leq: np.ndarray):
    """Commutative, associative, monotone ``⊙`` tables with unit top and ``x⊙y <= x∧y``."""
    n = leq.shape[0]
    probe = FiniteAlgebra(None, leq, np.zeros((n, n), int), np.zeros((n, n), int), validate=False)
    meet = probe.meet
    top = n - 1
    odot = np.zeros((n, n), dtype=np.int64)
    odot[top, :] = np.arange(n)
    odot[:, top] = np.arange(n)
    pairs = [(i, j) for i in range(1, top) for j in range(i, top)]
    options = {(i, j): [z for z in range(n) if leq[z, meet[i, j]]] for i, j in pairs}
    assigned = np.zeros((n, n), dtype=bool)
    assigned[top, :] = assigned[:, top] = True
    assigned[0, :] = assigned[:, 0] = True

    def monotone_ok(i, j):
        # compare (i, j) with every assigned (i2, j) and (i, j2) that is order related
        for a, b in ((i, j), (j, i)):
            v = odot[a, b]
            for c in range(n):
                if not assigned[c, b]:
                    continue
                w = odot[c, b]
                if leq[a, c] and not leq[v, w]:
                    return False
                if leq[c, a] and not leq[w, v]:
                    return False
        return True

    def search(t):
        if t == len(pairs):
            if (odot[odot, :] == odot[:, odot]).all():
                yield odot.copy()
            return
        i, j = pairs[t]
        for z in options[(i, j)]:
            odot[i, j] = odot[j, i] = z
            assigned[i, j] = assigned[j, i] = True
            if monotone_ok(i, j):
                yield from search(t + 1)
            assigned[i, j] = assigned[j, i] = False

    yield from search(0)


def _residuum(leq, odot):
    """``x → y = max{z : x⊙z <= y}`` or None if some maximum is missing."""
    n = leq.shape[0]
    imp = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            S = [z for z in range(n) if leq[odot[x, z], y]]
            top = [z for z in S if all(leq[s, z] for s in S)]
            if not top:
                return None
            imp[x, y] = top[0]
    return imp


def brute_force_enumerate(n: int, cap: int = BRUTE_FORCE_MAX_N) -> list:
    """Independent search: every lattice, every ordered monoid, residuum derived, prel and div kept."""
    _check_range(n, cap)
    acc = IsoClasses()
    for leq in _bounded_lattices(n):
        for odot in _monoids(leq):
            imp = _residuum(leq, odot)
            if imp is None:
                continue
            try:
                L = FiniteAlgebra(None, leq, odot, imp)
            except AlgebraError:
                continue
            if check_axioms(L).bl:
                acc.add(L)
    return acc.members


# -- census ------------------------------------------------------------------------

CENSUS_ROWS = ("MV-algebras", "MV-chains", "BL-algebras", "BL-chains", "BL-comets")


@dataclass
class CensusReport:
    counts: dict  # n -> {row: count}
    representatives: dict = field(default_factory=dict)  # n -> list of dicts

    def row(self, name: str) -> list:
        return [self.counts[n][name] for n in sorted(self.counts)]

    def to_table(self) -> str:
        ns = sorted(self.counts)
        width = max(len(r) for r in CENSUS_ROWS)
        lines = [" " * width + "".join(f"  n={n:<3}" for n in ns)]
        for r in CENSUS_ROWS:
            lines.append(r.ljust(width) + "".join(f"  {self.counts[n][r]:<5}" for n in ns))
        return "\n".join(lines)

    def to_dict(self, with_representatives: bool = False) -> dict:
        d = {"sizes": sorted(self.counts), "rows": {r: self.row(r) for r in CENSUS_ROWS}}
        if with_representatives:
            d["representatives"] = {str(n): v for n, v in sorted(self.representatives.items())}
        return d

    def to_json(self, with_representatives: bool = False) -> str:
        return json.dumps(self.to_dict(with_representatives), indent=2, ensure_ascii=False)


def census(nmax: int = MAX_N, include_products: bool = True) -> CensusReport:
    _check_range(nmax, MAX_N)
    counts, reps = {}, {}
    for n in range(2, nmax + 1):
        c = dict.fromkeys(CENSUS_ROWS, 0)
        reps[n] = []
        for L in enumerate_bl(n, include_products):
            prof = classify(L)
            c["BL-algebras"] += 1
            c["BL-chains"] += prof.is_chain
            c["BL-comets"] += prof.is_comet
            c["MV-algebras"] += prof.is_mv
            c["MV-chains"] += prof.classification is Classification.MV_CHAIN
            reps[n].append({"provenance": L.label, "classification": prof.classification.value, "algebra": to_dict(L)})
        counts[n] = c
    return CensusReport(counts, reps)


# -- ring scan ---------------------------------------------------------------------

@dataclass
class ScanEntry:
    ring: str
    n: int
    is_bl: bool
    is_mv: bool
    classification: str
    violations: list = field(default_factory=list)


@dataclass
class ScanReport:
    entries: list

    @property
    def violations(self) -> list:
        return [(e.ring, v) for e in self.entries for v in e.violations]

    def to_dict(self) -> dict:
        return {
            "rings": len(self.entries),
            "violations": [{"ring": r, "check": v} for r, v in self.violations],
            "entries": [e.__dict__ for e in self.entries],
        }


def prime_elements(L: FiniteAlgebra) -> set:
    """Proper ``P`` with ``x ⊙ y <= P`` only when ``x <= P`` or ``y <= P``."""
    out = set()
    for P in range(L.n - 1):
        below = L.leq[:, P]
        bad = L.leq[L.odot, P] & ~below[:, None] & ~below[None, :]
        if not bad.any():
            out.add(P)
    return out


def _scan_one(d) -> ScanEntry:
    L = ring_ideal_lattice(d)
    rep = check_axioms(L)
    viol = []
    if not rep.bl:
        viol.append("bl")
    if not rep.mv:
        viol.append("mv")
    s = L.stars()
    if not (s[s] == np.arange(L.n)).all():
        viol.append("ann_ann")
    if isinstance(d, Quot):
        from .quotient_ring import annihilator, lattice_order

        ids = lattice_order(d.ring)
        pos = {I.exps: k for k, I in enumerate(ids)}
        for k, I in enumerate(ids):
            A = annihilator(I)
            if annihilator(A) != I or pos[A.exps] != s[k]:
                viol.append("ann_ann")
                break
    atoms, coatoms = minimal_elements(L), maximal_elements(L)
    if not coatoms <= {int(s[a]) for a in atoms}:
        viol.append("coatom_is_ann_of_atom")
    exps = d.local_exponents()
    alpha = len(exps)
    if not (
        len(coatoms) == len(prime_elements(L)) == len(atoms) == alpha
        and L.n == prod(e + 1 for e in exps)
        and all(e + 1 >= 2 for e in exps)
    ):
        viol.append("ideal_count_identity")
    cls = classify(L).classification.value if rep.bl else "notBL"
    return ScanEntry(str(d), L.n, rep.bl, rep.mv, cls, viol)


def ring_scan(descriptors, strict: bool = True) -> ScanReport:
    """Check every catalog ring's ideal lattice; ``strict`` raises on the first violation."""
    entries = []
    for d in descriptors:
        if isinstance(d, str):
            d = parse_descriptor(d)
        e = _scan_one(d)
        if strict and e.violations:
            raise ScanViolation(f"{e.ring} violates {e.violations[0]}", ring=e.ring, check=e.violations[0])
        entries.append(e)
    return ScanReport(entries)


def default_catalog() -> list:
    """Zn(2..64), Quot(p, x^(b+1) - x) for p in 2, 3, 5, 7 and b <= 6, and small products."""
    from .quotient_ring import chi

    out = [Zn(m) for m in range(2, 65)]
    out += [Quot(p, chi(p, b)) for p in (2, 3, 5, 7) for b in range(1, 7)]
    small = [Zn(2), Zn(3), Zn(4), Zn(8), Zn(9), Zn(12), Quot(2, chi(2, 2)), Quot(3, chi(3, 3))]
    out += [Prod((a, b)) for a, b in itertools.combinations_with_replacement(small, 2)]
    out += [Prod(t) for t in itertools.combinations_with_replacement(small[:5], 3)]
    return out
