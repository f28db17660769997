"""Building blocks: MV-chains, Boolean algebras, ordinal sums, direct products, ring lattices."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod

import numpy as np

from .algebra import FiniteAlgebra
from .errors import CapExceeded, ParseError
from .zp_poly import Poly, parse_poly, require_prime

DEFAULT_IDEAL_CAP = 4096


def mv_chain(m: int) -> FiniteAlgebra:
    """The Łukasiewicz chain ``0 < a1 < ... < a_{m-2} < 1`` with ``k = m - 1``.

    ``a_i ⊙ a_j = a_{max(0, i+j-k)}`` and ``a_i → a_j = a_{min(k, k-i+j)}``.
    """
    if m < 2:
        raise ValueError(f"an MV-chain needs at least 2 elements, got {m}")
    k = m - 1
    i = np.arange(m)[:, None]
    j = np.arange(m)[None, :]
    leq = i <= j
    odot = np.maximum(0, i + j - k)
    imp = np.minimum(k, k - i + j)
    names = ["0"] + [f"a{t}" for t in range(1, k)] + ["1"]
    return FiniteAlgebra(names, leq, odot, imp, label=f"Id(Z_{2**k})" if k < 12 else f"MV{m}")


def boolean_algebra(n: int) -> FiniteAlgebra:
    """The Boolean algebra with ``n = 2**k`` elements; element ``s`` is a bitmask of atoms."""
    k = n.bit_length() - 1
    if n < 2 or n != 1 << k:
        raise ValueError(f"Boolean algebras have 2**k elements, got {n}")
    s = np.arange(n)
    x, y = s[:, None], s[None, :]
    leq = (x & y) == x
    odot = x & y
    imp = (~x & (n - 1)) | y
    letters = "abcdefghijklmnopqrstuvwxyz"

    def name(v):
        if v == 0:
            return "0"
        if v == n - 1:
            return "1"
        return "".join(letters[t] for t in range(k) if v >> t & 1)

    label = "Id(" + "×".join(["Z_2"] * k) + ")"
    return FiniteAlgebra([name(v) for v in range(n)], leq, odot, imp, label=label)


def _wrap(label: str) -> str:
    return f"({label})" if ("⊞" in label or " × " in label) else label


def _sum_names(n1, n2):
    top1, rest = n1[-1], list(n2[1:])
    seam = top1 if top1 not in rest else "1₁"
    lower = list(n1[:-1]) + [seam]
    taken = set(lower)
    out = []
    for s in rest:
        while s in taken:
            s += "'"
        taken.add(s)
        out.append(s)
    return lower + out


def ordinal_sum(L1: FiniteAlgebra, L2: FiniteAlgebra, validate: bool = True) -> FiniteAlgebra:
    """``L1 ⊞ L2``: the top of ``L1`` is glued to the bottom of ``L2``.

    Indices ``0..n1-1`` are ``L1`` (the seam is ``n1-1``), followed by the
    non-bottom elements of ``L2``.  Within a summand the operations are the
    summand's own, except that ``x → y = 1`` whenever ``x <= y``; for ``x`` in
    ``L1`` below the seam and ``y`` in ``L2``, ``x ⊙ y = x``, ``x → y = 1`` and
    ``y → x = x``.

    With ``validate`` the result is checked as a residuated lattice; BL-ness is
    not enforced here (a non-chain ``L1`` breaks prelinearity).
    """
    n1, n2 = L1.n, L2.n
    n = n1 + n2 - 1
    top = n - 1
    up = np.arange(n2) + n1 - 1  # L2 index -> sum index
    in1 = np.arange(n) < n1 - 1  # strictly below the seam

    leq = np.zeros((n, n), dtype=bool)
    leq[:n1, :n1] = L1.leq
    leq[n1 - 1:, n1 - 1:] = L2.leq
    leq[:n1, n1 - 1:] = True

    odot = np.zeros((n, n), dtype=np.int64)
    imp = np.zeros((n, n), dtype=np.int64)
    odot[:n1, :n1] = L1.odot
    imp[:n1, :n1] = np.where(L1.leq, top, L1.imp)
    odot[n1 - 1:, n1 - 1:] = up[L2.odot]
    imp[n1 - 1:, n1 - 1:] = up[L2.imp]
    lo, hi = np.nonzero(in1)[0], np.arange(n1 - 1, n)
    odot[np.ix_(lo, hi)] = lo[:, None]
    odot[np.ix_(hi, lo)] = lo[None, :]
    imp[np.ix_(lo, hi)] = top
    imp[np.ix_(hi, lo)] = lo[None, :]

    label = None
    if L1.label and L2.label:
        label = f"{_wrap(L1.label)} ⊞ {_wrap(L2.label)}"
    return FiniteAlgebra(_sum_names(L1.names, L2.names), leq, odot, imp, label=label, validate=validate)


def ordinal_sum_many(*parts: FiniteAlgebra) -> FiniteAlgebra:
    """Right-nested ``C1 ⊞ (C2 ⊞ (... ⊞ Ct))``."""
    out = parts[-1]
    for P in reversed(parts[:-1]):
        out = ordinal_sum(P, out)
    return out


def direct_product(L1: FiniteAlgebra, L2: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise structure; element ``(i, j)`` has index ``i * n2 + j``."""
    n1, n2 = L1.n, L2.n
    i = np.repeat(np.arange(n1), n2)
    j = np.tile(np.arange(n2), n1)
    leq = L1.leq[np.ix_(i, i)] & L2.leq[np.ix_(j, j)]
    odot = L1.odot[np.ix_(i, i)] * n2 + L2.odot[np.ix_(j, j)]
    imp = L1.imp[np.ix_(i, i)] * n2 + L2.imp[np.ix_(j, j)]
    names = [f"({a},{b})" for a in L1.names for b in L2.names]
    label = None
    if L1.label and L2.label:
        label = f"{_wrap(L1.label)} × {_wrap(L2.label)}"
    return FiniteAlgebra(names, leq, odot, imp, label=label, validate=False)


def product_many(*parts: FiniteAlgebra) -> FiniteAlgebra:
    out = parts[0]
    for P in parts[1:]:
        out = direct_product(out, P)
    return out


def bl_chain(composition) -> FiniteAlgebra:
    """``mv_chain(c1) ⊞ ... ⊞ mv_chain(ct)`` for a sequence of summand sizes ``c_i >= 2``."""
    return ordinal_sum_many(*(mv_chain(c) for c in composition))


# -- ring descriptors --------------------------------------------------------------

def _factor_int(m: int) -> list:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m, e = m // d, e + 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


@dataclass(frozen=True)
class Zn:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"Zn needs m >= 2, got {self.m}")

    def local_exponents(self) -> tuple:
        return tuple(e for _, e in _factor_int(self.m))

    def __str__(self):
        return f"Zn({self.m})"


@dataclass(frozen=True)
class Quot:
    p: int
    f: Poly

    def __post_init__(self):
        require_prime(self.p)
        if self.f.degree < 1 or not self.f.is_monic():
            raise ValueError(f"Quot needs a monic modulus of degree >= 1, got {self.f}")

    @property
    def ring(self):
        from .quotient_ring import make_general

        return make_general(self.p, self.f)

    def local_exponents(self) -> tuple:
        return self.ring.exponents

    def __str__(self):
        return f"Quot({self.p}, {self.f})"


@dataclass(frozen=True)
class Prod:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("Prod needs at least two components")

    def local_exponents(self) -> tuple:
        return tuple(e for d in self.parts for e in d.local_exponents())

    def __str__(self):
        return "Prod(" + ", ".join(str(d) for d in self.parts) + ")"


RingDescriptor = Zn | Quot | Prod


def ideal_count(d: RingDescriptor) -> int:
    return prod(e + 1 for e in d.local_exponents())


def _split_args(body: str) -> list:
    out, depth, cur = [], 0, []
    for ch in body:
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]


def parse_descriptor(text: str) -> RingDescriptor:
    """Parse ``Zn(m)``, ``Quot(p, f)`` or ``Prod(d1, ..., dk)``."""
    s = text.strip()
    mt = re.fullmatch(r"(Zn|Quot|Prod)\s*\((.*)\)", s, flags=re.S)
    if not mt:
        raise ParseError(f"cannot parse ring descriptor {text!r}")
    head, args = mt.group(1), _split_args(mt.group(2))
    try:
        if head == "Zn":
            (m,) = args
            return Zn(int(m))
        if head == "Quot":
            p_txt, f_txt = args
            p = int(p_txt)
            return Quot(p, parse_poly(f_txt, p))
        return Prod(tuple(parse_descriptor(a) for a in args))
    except ParseError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad ring descriptor {text!r}: {exc}") from exc


def _zn_lattice(m: int) -> FiniteAlgebra:
    fac = _factor_int(m)
    L = product_many(*(mv_chain(e + 1) for _, e in fac)) if len(fac) > 1 else mv_chain(fac[0][1] + 1)
    # name each ideal dZ_m by its divisor d; chain index i of prime q means q**(e-i)
    names = []
    for idx in range(L.n):
        d, rem = 1, idx
        for q, e in reversed(fac):
            i = rem % (e + 1)
            rem //= e + 1
            d *= q ** (e - i)
        names.append("(0)" if d == m else ("R" if d == 1 else f"({d})"))
    return FiniteAlgebra(names, L.leq, L.odot, L.imp, label=f"Id(Z_{m})", validate=False)


def ring_ideal_lattice(d, cap: int = DEFAULT_IDEAL_CAP) -> FiniteAlgebra:
    """``Id(R)`` for a catalog ring, as a finite residuated lattice."""
    if isinstance(d, str):
        d = parse_descriptor(d)
    count = ideal_count(d)
    if count > cap:
        raise CapExceeded(f"{d} has {count} ideals, above the cap {cap}")
    if isinstance(d, Zn):
        return _zn_lattice(d.m)
    if isinstance(d, Quot):
        from .quotient_ring import to_algebra

        return to_algebra(d.ring)
    L = product_many(*(ring_ideal_lattice(part, cap) for part in d.parts))
    return L.relabeled(f"Id({d})")
