"""Finite residuated lattices given by explicit tables.

Elements are the integers ``0..n-1``; ``0`` is the bottom and ``n-1`` the top.
An algebra stores its order relation together with the ``⊙`` and ``→`` tables;
meet and join are derived from the order.  All checks quantify exhaustively
over the elements and are vectorised with numpy.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import NotALattice, NotAMonoid, ResiduationFails, SizeTooLarge

ISO_SIZE_CAP = 12


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype)
    a.flags.writeable = False
    return a


class FiniteAlgebra:
    """A finite residuated lattice ``(L, ∧, ∨, ⊙, →, 0, 1)``.

    ``leq[x, y]`` is ``x <= y``; ``odot[x, y]`` and ``imp[x, y]`` are element
    indices.  Construction verifies the bounded-lattice, ordered-monoid and
    residuation conditions and raises with a witness tuple when one fails.
    ``label`` is free-form provenance text and takes no part in equality.
    """

    def __init__(self, names, leq, odot, imp, *, label=None, validate=True):
        self.leq = _frozen(leq, bool)
        self.odot = _frozen(odot, np.int64)
        self.imp = _frozen(imp, np.int64)
        n = self.leq.shape[0]
        if names is None:
            names = default_names(n)
        self.names = tuple(str(s) for s in names)
        self.label = label
        if not (
            self.leq.shape == self.odot.shape == self.imp.shape == (n, n) and len(self.names) == n
        ):
            raise ValueError("table dimensions disagree")
        if n < 1:
            raise ValueError("empty algebra")
        self.n = n
        self._check_order()
        self.meet, self.join = _lattice_ops(self.leq)
        if validate:
            self._check_monoid()
            w = residuation_witness(self)
            if w is not None:
                raise ResiduationFails(f"residuation fails at (x, y, z) = {w}", witness=w)

    # -- construction checks ------------------------------------------------------
    def _check_order(self):
        leq, n = self.leq, self.n
        if (w := _first(~np.diag(leq))) is not None:
            raise NotALattice(f"not reflexive at {w[0]}", witness=(w[0], w[0]))
        if (w := _first(leq & leq.T & ~np.eye(n, dtype=bool))) is not None:
            raise NotALattice(f"not antisymmetric at {w}", witness=w)
        trans = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
        if (w := _first(trans)) is not None:
            raise NotALattice(f"not transitive at {w}", witness=w)
        if (w := _first(~leq[0, :])) is not None:
            raise NotALattice(f"element 0 is not the bottom (vs {w[0]})", witness=(0, w[0]))
        if (w := _first(~leq[:, n - 1])) is not None:
            raise NotALattice(f"element {n-1} is not the top (vs {w[0]})", witness=(w[0], n - 1))

    def _check_monoid(self):
        n, o, leq = self.n, self.odot, self.leq
        if (w := _first((o < 0) | (o >= n))) is not None or (w := _first((self.imp < 0) | (self.imp >= n))) is not None:
            raise NotAMonoid(f"table entry out of range at {w}", witness=w)
        if (w := _first(o != o.T)) is not None:
            raise NotAMonoid(f"⊙ not commutative at {w}", witness=w)
        if (w := _first(o[n - 1, :] != np.arange(n))) is not None:
            raise NotAMonoid(f"top is not the unit of ⊙ at {w[0]}", witness=(n - 1, w[0]))
        assoc = o[o, :] != o[:, o]  # (x⊙y)⊙z vs x⊙(y⊙z), indexed [x, y, z]
        if (w := _first(assoc)) is not None:
            raise NotAMonoid(f"⊙ not associative at {w}", witness=w)
        # x <= y implies x⊙z <= y⊙z
        mono = leq[:, :, None] & ~leq[o[:, None, :], o[None, :, :]]
        if (w := _first(mono)) is not None:
            raise NotAMonoid(f"⊙ not monotone at (x, y, z) = {w}", witness=w)

    # -- basic structure ------------------------------------------------------------
    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    def index(self, name: str) -> int:
        return self.names.index(name)

    def star(self, x: int) -> int:
        return int(self.imp[x, 0])

    def stars(self) -> np.ndarray:
        return self.imp[:, 0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.leq, other.leq)
            and np.array_equal(self.odot, other.odot)
            and np.array_equal(self.imp, other.imp)
        )

    def __hash__(self):
        return hash((self.n, self.leq.tobytes(), self.odot.tobytes(), self.imp.tobytes()))

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"<FiniteAlgebra n={self.n}{tag}>"

    def renamed(self, names) -> FiniteAlgebra:
        return FiniteAlgebra(names, self.leq, self.odot, self.imp, label=self.label, validate=False)

    def relabeled(self, label) -> FiniteAlgebra:
        return FiniteAlgebra(self.names, self.leq, self.odot, self.imp, label=label, validate=False)

    # -- pretty tables --------------------------------------------------------------
    def table(self, op: str = "imp") -> str:
        t = self.imp if op == "imp" else self.odot
        sym = "→" if op == "imp" else "⊙"
        w = max(len(s) for s in self.names + (sym,))
        rows = [" ".join([sym.ljust(w), "|"] + [s.ljust(w) for s in self.names])]
        rows.append("-" * len(rows[0]))
        for i in range(self.n):
            rows.append(" ".join([self.names[i].ljust(w), "|"] + [self.names[j].ljust(w) for j in t[i]]))
        return "\n".join(rows)


def default_names(n: int):
    if n == 1:
        return ("0",)
    return ("0",) + tuple(f"e{i}" for i in range(1, n - 1)) + ("1",)


def _lattice_ops(leq):
    n = leq.shape[0]
    down = leq.sum(axis=0)  # |{c : c <= x}|
    up = leq.sum(axis=1)
    lower = leq[:, :, None] & leq[:, None, :]  # [c, x, y]: c <= x and c <= y
    upper =leq.T[:, :, None] & leq.T[:, None, :]  # [c, x, y]: x <= c and y <= c
    meet = np.argmax(np.where(lower, down[:, None, None], -1), axis=0)
    join = np.argmax(np.where(upper, up[:, None, None], -1), axis=0)
    # every lower bound must lie below the candidate meet (and dually)
    bad_meet = lower & ~leq[:, meet]
    bad_join = upper & ~leq.T[:, join]
    if (w := _first(bad_meet)) is not None:
        raise NotALattice(f"no meet for {w[1:]}", witness=w[1:])
    if (w := _first(bad_join)) is not None:
        raise NotALattice(f"no join for {w[1:]}", witness=w[1:])
    meet.flags.writeable = False
    join.flags.writeable = False
    return meet, join


def from_tables(names, leq, odot, imp, label=None) -> FiniteAlgebra:
    """Build and validate an algebra; raises NotALattice / NotAMonoid / ResiduationFails."""
    return FiniteAlgebra(names, leq, odot, imp, label=label)


def residuation_witness(L: FiniteAlgebra):
    """First ``(x, y, z)`` with ``z <= x→y`` not equivalent to ``x⊙z <= y``, or None."""
    x, y, z = np.ix_(range(L.n), range(L.n), range(L.n))
    lhs = L.leq[z, L.imp[x, y]]
    rhs = L.leq[L.odot[x, z], y]
    return _first(lhs != rhs)


@dataclass
class AxiomReport:
    residuated: bool
    prelinear: bool
    divisible: bool
    bl: bool
    mv: bool
    boolean: bool
    chain: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in ("residuated", "prelinear", "divisible", "bl", "mv", "boolean", "chain")}

    def to_dict(self) -> dict:
        return {**self.flags(), "witnesses": {k: list(v) for k, v in self.witnesses.items()}}


def prelinearity_witness(L: FiniteAlgebra):
    """First ``(x, y)`` with ``(x→y) ∨ (y→x) != 1``."""
    return _first(L.join[L.imp, L.imp.T] != L.top)


def divisibility_witness(L: FiniteAlgebra):
    """First ``(x, y)`` with ``x ⊙ (x→y) != x ∧ y``."""
    x = np.arange(L.n)[:, None]
    return _first(L.odot[x, L.imp] != L.meet)


def check_axioms(L: FiniteAlgebra) -> AxiomReport:
    w = {}
    if (r := residuation_witness(L)) is not None:
        w["residuated"] = r
    if (r := prelinearity_witness(L)) is not None:
        w["prelinear"] = r
    if (r := divisibility_witness(L)) is not None:
        w["divisible"] = r
    residuated, prel, div = "residuated" not in w, "prelinear" not in w, "divisible" not in w
    bl = residuated and prel and div
    s = L.stars()
    if (r := _first(s[s] != np.arange(L.n))) is not None:
        w["mv"] = r
    mv = bl and "mv" not in w
    if (r := _first(np.diag(L.odot) != np.arange(L.n))) is not None:
        w["boolean"] = r
    boolean = mv and "boolean" not in w
    if (r := _first(~(L.leq | L.leq.T))) is not None:
        w["chain"] = r
    chain = "chain" not in w
    return AxiomReport(residuated, prel, div, bl, mv, boolean, chain, w)


def is_bl(L: FiniteAlgebra) -> bool:
    return check_axioms(L).bl


def is_mv(L: FiniteAlgebra) -> bool:
    return check_axioms(L).mv


def star(L: FiniteAlgebra, x: int) -> int:
    return L.star(x)


def oplus(L: FiniteAlgebra, x: int, y: int) -> int:
    """``(x* ⊙ y*)*``; the MV sum when the algebra is an MV-algebra."""
    return L.star(int(L.odot[L.star(x), L.star(y)]))


def oplus_table(L: FiniteAlgebra) -> np.ndarray:
    s = L.stars()
    return s[L.odot[s[:, None], s[None, :]]]


def mv_axiom_witness(L: FiniteAlgebra):
    """Check ``(L, ⊕, *, 0)`` against the MV axioms and the BL translation back.

    Returns ``(axiom, tuple)`` for the first failure, or None.
    """
    n = L.n
    s, plus = L.stars(), oplus_table(L)
    e = np.arange(n)
    x, y, z = e[:, None, None], e[None, :, None], e[None, None, :]
    checks = [
        ("oplus commutative", plus != plus.T),
        ("oplus associative", plus[plus[x, y], z] != plus[x, plus[y, z]]),
        ("zero is oplus unit", plus[:, 0] != e),
        ("double negation", s[s] != e),
        ("x ⊕ 0* = 0*", plus[:, s[0]] != s[0]),
        ("(x*⊕y)*⊕y symmetric", plus[s[plus[s[:, None], e[None, :]]], e[None, :]]
         != plus[s[plus[s[None, :], e[:, None]]], e[:, None]]),
        ("x⊙y = (x*⊕y*)*", L.odot != s[plus[s[:, None], s[None, :]]]),
        ("x→y = x*⊕y", L.imp != plus[s[:, None], e[None, :]]),
        ("x∨y = (x→y)→y", L.join != L.imp[L.imp, e[None, :]]),
        ("x∧y = (x*∨y*)*", L.meet != s[L.join[s[:, None], s[None, :]]]),
    ]
    for name, bad in checks:
        if (w := _first(bad)) is not None:
            return name, w
    return None


def maximal_elements(L: FiniteAlgebra) -> set:
    """Coatoms: ``m < 1`` with nothing strictly between ``m`` and ``1``."""
    strict = L.leq & ~np.eye(L.n, dtype=bool)
    out = set()
    for m in range(L.n - 1):
        between = strict[m, :] & strict[:, L.top]
        if not between.any():
            out.add(m)
    return out


def minimal_elements(L: FiniteAlgebra) -> set:
    """Atoms: ``0 < m`` with nothing strictly between ``0`` and ``m``."""
    strict = L.leq & ~np.eye(L.n, dtype=bool)
    out = set()
    for m in range(1, L.n):
        between = strict[0, :] & strict[:, m]
        if not between.any():
            out.add(m)
    return out


def covers(L: FiniteAlgebra) -> list:
    """Hasse diagram edges ``(x, y)`` with ``y`` covering ``x``."""
    strict = L.leq & ~np.eye(L.n, dtype=bool)
    out = []
    for x in range(L.n):
        for y in range(L.n):
            if strict[x, y] and not (strict[x, :] & strict[:, y]).any():
                out.append((x, y))
    return out


# -- isomorphism -------------------------------------------------------------------

def _signatures(L: FiniteAlgebra):
    down = L.leq.sum(axis=0)
    up = L.leq.sum(axis=1)
    sq = np.diag(L.odot)
    s = L.stars()
    idem = sq == np.arange(L.n)
    n_idem_below = (L.leq & idem[:, None]).sum(axis=0)
    return [
        (int(down[x]), int(up[x]), bool(idem[x]), int(down[s[x]]), int(down[sq[x]]), int(n_idem_below[x]))
        for x in range(L.n)
    ]


def invariant(L: FiniteAlgebra) -> tuple:
    """An isomorphism invariant, cheap to compare before a full search."""
    return (L.n, tuple(sorted(_signatures(L))))


def isomorphism(A: FiniteAlgebra, B: FiniteAlgebra, cap: int = ISO_SIZE_CAP):
    """First bijection ``f`` (as a tuple, ``f[a] = b``) preserving ≤, ⊙ and →, or None.

    Elements of ``A`` are assigned in index order and images are tried in
    increasing order, so the result is the lexicographically smallest
    isomorphism.
    """
    if max(A.n, B.n) > cap:
        raise SizeTooLarge(f"isomorphism search capped at n <= {cap}")
    if A.n != B.n:
        return None
    sa, sb = _signatures(A), _signatures(B)
    if sorted(sa) != sorted(sb):
        return None
    n = A.n
    cands = [[b for b in range(n) if sb[b] == sa[a]] for a in range(n)]
    f = [-1] * n
    used = [False] * n

    def consistent(a, b):
        for a2 in range(a + 1):
            b2 = b if a2 == a else f[a2]
            if A.leq[a, a2] != B.leq[b, b2] or A.leq[a2, a] != B.leq[b2, b]:
                return False
            for ta, tb in ((A.odot, B.odot), (A.imp, B.imp), (A.imp.T, B.imp.T)):
                r, t = ta[a, a2], tb[b, b2]
                img = b if r == a else f[r]
                if img >= 0:
                    if img != t:
                        return False
                elif used[t] or t == b:
                    return False
        return True

    def search(a):
        if a == n:
            return True
        for b in cands[a]:
            if not used[b] and consistent(a, b):
                f[a], used[b] = b, True
                if search(a + 1):
                    return True
                f[a], used[b] = -1, False
        return False

    return tuple(f) if search(0) else None


def is_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra, cap: int = ISO_SIZE_CAP) -> bool:
    return isomorphism(A, B, cap) is not None


def permuted(L: FiniteAlgebra, perm) -> FiniteAlgebra:
    """The copy in which old element ``x`` becomes ``perm[x]``; ``perm`` must fix 0 and n-1."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    leq = L.leq[np.ix_(inv, inv)]
    odot = perm[L.odot[np.ix_(inv, inv)]]
    imp = perm[L.imp[np.ix_(inv, inv)]]
    names = [L.names[i] for i in inv]
    return FiniteAlgebra(names, leq, odot, imp, label=L.label)


# -- serialisation -----------------------------------------------------------------

def to_dict(L: FiniteAlgebra) -> dict:
    d = {
        "n": L.n,
        "names": list(L.names),
        "leq": [[int(i), int(j)] for i, j in np.argwhere(L.leq)],
        "odot": L.odot.tolist(),
        "imp": L.imp.tolist(),
    }
    if L.label:
        d["provenance"] = L.label
    return d


def from_dict(d: dict) -> FiniteAlgebra:
    n = int(d["n"])
    leq = np.zeros((n, n), dtype=bool)
    for i, j in d["leq"]:
        leq[i, j] = True
    return FiniteAlgebra(d.get("names"), leq, d["odot"], d["imp"], label=d.get("provenance"))


def to_json(L: FiniteAlgebra, indent=None) -> str:
    return json.dumps(to_dict(L), indent=indent, ensure_ascii=False)


def from_json(text: str) -> FiniteAlgebra:
    return from_dict(json.loads(text))


def to_dot(L: FiniteAlgebra, name: str = "L") -> str:
    """Graphviz source of the Hasse diagram, drawn bottom-up."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle, fontsize=10];", "  edge [arrowhead=none];"]
    for i, s in enumerate(L.names):
        lines.append(f'  n{i} [label="{s}"];')
    for x, y in covers(L):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
