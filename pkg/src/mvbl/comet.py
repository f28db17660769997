"""Idempotents, the set D(L), the pivot, and comet classification of finite BL-algebras."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import FiniteAlgebra, check_axioms
from .errors import AlgebraError, InconsistentProfile, NoGreatestElement, NotBL


class Classification(enum.Enum):
    MV_CHAIN = "MVChain"
    UNORDERED_MV = "UnorderedMV"
    BL_CHAIN = "BLChain"
    COMET_NON_CHAIN = "CometNonChain"
    NON_COMET_NON_MV = "NonCometNonMV"


def _require_bl(L: FiniteAlgebra):
    rep = check_axioms(L)
    if not rep.bl:
        failed = next(k for k in ("residuated", "prelinear", "divisible") if k in rep.witnesses)
        raise NotBL(f"not a BL-algebra: {failed} fails", witness=rep.witnesses[failed])
    return rep


def _idempotents(L):
    return [x for x in range(L.n) if L.odot[x, x] == x]


def _d_set(L, idem):
    out = []
    for x in idem:
        if not all(L.leq[x, y] or L.leq[y, x] for y in idem):
            continue
        below = [y for y in idem if L.leq[y, x]]
        if all(L.leq[a, b] or L.leq[b, a] for a in below for b in below):
            out.append(x)
    return out


def _greatest(L, elems):
    for x in elems:
        if all(L.leq[y, x] for y in elems):
            return x
    raise NoGreatestElement(f"no greatest element among {sorted(elems)}", witness=tuple(elems))


def idempotents(L: FiniteAlgebra) -> set:
    _require_bl(L)
    return set(_idempotents(L))


def d_set(L: FiniteAlgebra) -> set:
    """Idempotents comparable with every idempotent whose idempotent down-set is a chain."""
    _require_bl(L)
    return set(_d_set(L, _idempotents(L)))


def pivot(L: FiniteAlgebra) -> int:
    _require_bl(L)
    return _greatest(L, _d_set(L, _idempotents(L)))


@dataclass(frozen=True)
class CometProfile:
    idempotents: frozenset
    d_set: frozenset
    pivot: int
    is_comet: bool
    is_chain: bool
    is_mv: bool
    classification: Classification

    def to_dict(self, names=None) -> dict:
        nm = (lambda x: names[x]) if names else int
        return {
            "idempotents": [nm(x) for x in sorted(self.idempotents)],
            "d_set": [nm(x) for x in sorted(self.d_set)],
            "pivot": nm(self.pivot),
            "is_comet": self.is_comet,
            "is_chain": self.is_chain,
            "is_mv": self.is_mv,
            "classification": self.classification.value,
        }


def classify(L: FiniteAlgebra) -> CometProfile:
    rep = _require_bl(L)
    idem = _idempotents(L)
    d = _d_set(L, idem)
    pv = _greatest(L, d)
    comet = pv != L.bottom
    if rep.chain and not (comet and pv == L.top):
        raise InconsistentProfile(f"chain with pivot {pv}", witness=(pv,))
    if rep.mv and comet != rep.chain:
        raise InconsistentProfile("MV-algebra whose comet status disagrees with being a chain", witness=(pv,))
    if rep.mv:
        cls = Classification.MV_CHAIN if rep.chain else Classification.UNORDERED_MV
    elif rep.chain:
        cls = Classification.BL_CHAIN
    elif comet:
        cls = Classification.COMET_NON_CHAIN
    else:
        cls = Classification.NON_COMET_NON_MV
    return CometProfile(frozenset(idem), frozenset(d), pv, comet, rep.chain, rep.mv, cls)


@dataclass(frozen=True)
class Split:
    cut: int
    lower: FiniteAlgebra
    upper: FiniteAlgebra
    lower_elements: tuple
    upper_elements: tuple

    def to_dict(self, names) -> dict:
        return {
            "cut": names[self.cut],
            "lower": [names[x] for x in self.lower_elements],
            "upper": [names[x] for x in self.upper_elements],
            "reconstructed": True,
        }


def _sub(L, elems, top):
    """Restriction of ``L`` to ``elems``; ``→`` values equal to the ambient top become ``top``."""
    pos = {x: k for k, x in enumerate(elems)}
    idx = np.array(elems)
    leq = L.leq[np.ix_(idx, idx)]
    odot = L.odot[np.ix_(idx, idx)]
    imp = L.imp[np.ix_(idx, idx)]
    imp = np.where(imp == L.top, top, imp)
    if not np.isin(odot, idx).all() or not np.isin(imp, idx).all():
        return None
    remap = np.vectorize(pos.__getitem__, otypes=[np.int64])
    try:
        return FiniteAlgebra([L.names[x] for x in elems], leq, remap(odot), remap(imp))
    except AlgebraError:
        return None


def ordinal_split(L: FiniteAlgebra) -> list:
    """All decompositions ``L = lower ⊞ upper`` at an interior cut, each verified by rebuilding ``L``."""
    from .constructors import ordinal_sum

    _require_bl(L)
    out = []
    for c in range(1, L.n - 1):
        if L.odot[c, c] != c or not (L.leq[c, :] | L.leq[:, c]).all():
            continue
        lower = sorted((x for x in range(L.n) if L.leq[x, c]), key=lambda x: (x == c, x))
        upper = sorted((x for x in range(L.n) if L.leq[c, x]), key=lambda x: (x != c, x == L.top, x))
        A = _sub(L, lower, c)
        B = _sub(L, upper, L.top)
        if A is None or B is None:
            continue
        S = ordinal_sum(A, B, validate=False)
        order = np.array(lower + upper[1:])  # sum index -> L index
        if (
            np.array_equal(S.leq, L.leq[np.ix_(order, order)])
            and np.array_equal(order[S.odot], L.odot[np.ix_(order, order)])
            and np.array_equal(order[S.imp], L.imp[np.ix_(order, order)])
        ):
            out.append(Split(c, A, B, tuple(lower), tuple(upper)))
    return out
