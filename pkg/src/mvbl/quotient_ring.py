"""The quotient ring Z_p[x]/(f) and its lattice of ideals.

Every ideal of Z_p[x]/(f) is principal and generated by a monic divisor of
``f``.  An ideal is therefore stored as the exponent vector of its generator
over the irreducible factorization ``f = prod f_i**e_i``; inclusion reverses
divisibility, so lattice operations become exponentwise min/max arithmetic.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import NotAUnit, NotInIdeal, NotMonic, ZeroElement
from .zp_poly import Factorization, Poly, factor, gcd, poly_divmod, require_prime, xgcd


@dataclass(frozen=True)
class QuotientRing:
    p: int
    modulus: Poly
    factorization: Factorization = field(compare=False, repr=False)
    squarefree: bool = field(compare=False)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def exponents(self) -> tuple:
        return tuple(e for _, e in self.factorization.factors)

    @property
    def size(self) -> int:
        return self.p**self.degree

    def __call__(self, rep) -> RingElement:
        if isinstance(rep, int):
            rep = Poly.const(self.p, rep)
        return RingElement(self, rep % self.modulus)

    def zero(self) -> RingElement:
        return self(0)

    def one(self) -> RingElement:
        return self(1)

    def elements(self):
        """All ``p**deg`` elements, in base-p numeral order of their representatives."""
        for v in range(self.size):
            yield RingElement(self, Poly.from_int(self.p, v))

    # ideal constructors
    def ideal(self, exps) -> IdealHandle:
        exps = tuple(exps)
        if len(exps) != len(self.exponents) or any(
            not 0 <= a <= e for a, e in zip(exps, self.exponents)
        ):
            raise ValueError(f"bad exponent vector {exps} for caps {self.exponents}")
        return IdealHandle(self, exps)

    def unit_ideal(self) -> IdealHandle:
        return self.ideal((0,) * len(self.exponents))

    def zero_ideal(self) -> IdealHandle:
        return self.ideal(self.exponents)

    def ideal_from_generator(self, g: Poly) -> IdealHandle:
        """The ideal ``(g)``; ``g`` need not divide the modulus."""
        r = g % self.modulus
        return self.ideal(self._exps_of(self.modulus if r.is_zero() else gcd(r, self.modulus)))

    def _exps_of(self, d: Poly) -> tuple:
        out = []
        for (fi, ei) in self.factorization.factors:
            a = 0
            while a < ei:
                q, r = poly_divmod(d, fi)
                if not r.is_zero():
                    break
                d, a = q, a + 1
            out.append(a)
        return tuple(out)

    def __str__(self):
        return f"Z_{self.p}[x]/({self.modulus})"


def make_general(p: int, f: Poly) -> QuotientRing:
    require_prime(p)
    if f.p != p:
        f = Poly(p, f.coeffs)
    if not f.is_monic() or f.degree < 1:
        raise NotMonic(f"modulus must be monic of degree >= 1, got {f}")
    fac = factor(f)
    sq_gcd = gcd(f, f.derivative()) == Poly.const(p, 1) if not f.derivative().is_zero() else False
    if sq_gcd != fac.squarefree:
        raise AssertionError(f"squarefree tests disagree on {f}")
    return QuotientRing(p, f, fac, fac.squarefree)


def chi(p: int, beta: int) -> Poly:
    """``x**(beta+1) - x``."""
    return Poly.x(p, beta + 1) - Poly.x(p)


@lru_cache(maxsize=256)
def make_ring(p: int, beta: int) -> QuotientRing:
    """``R_{p,1,beta} = Z_p[x]/(x^(beta+1) - x)``; squarefree exactly when p does not divide beta."""
    require_prime(p)
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    return make_general(p, chi(p, beta))


class ElementKind(enum.Enum):
    ZERO = "Zero"
    UNIT = "Unit"
    ZERO_DIVISOR = "ZeroDivisor"


@dataclass(frozen=True)
class RingElement:
    ring: QuotientRing
    rep: Poly

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        return RingElement(self.ring, (self.rep * other.rep) % self.ring.modulus)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        return RingElement(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        return RingElement(self.ring, self.rep - other.rep)

    def __neg__(self):
        return RingElement(self.ring, -self.rep)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __str__(self):
        return str(self.rep)


def element_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def inverse(a: RingElement) -> RingElement:
    if a.is_zero():
        raise NotAUnit("zero is not invertible")
    g, u, _ = xgcd(a.rep, a.ring.modulus)
    if g.degree != 0:
        raise NotAUnit(f"{a.rep} shares the factor {g} with {a.ring.modulus}")
    return a.ring(u)


def classify_element(a: RingElement) -> ElementKind:
    if a.is_zero():
        return ElementKind.ZERO
    if gcd(a.rep, a.ring.modulus).degree == 0:
        return ElementKind.UNIT
    return ElementKind.ZERO_DIVISOR


@dataclass(frozen=True)
class IdealHandle:
    ring: QuotientRing
    exps: tuple

    @cached_property
    def generator(self) -> Poly:
        g = Poly.const(self.ring.p, 1)
        for (fi, _), a in zip(self.ring.factorization.factors, self.exps):
            g = g * fi**a
        return g

    def is_zero(self) -> bool:
        return self.exps == self.ring.exponents

    def is_unit(self) -> bool:
        return not any(self.exps)

    def __contains__(self, a) -> bool:
        rep = a.rep if isinstance(a, RingElement) else a
        return poly_divmod(rep % self.ring.modulus, self.generator)[1].is_zero()

    def __le__(self, other: IdealHandle) -> bool:
        return all(a >= b for a, b in zip(self.exps, other.exps))

    def __lt__(self, other: IdealHandle) -> bool:
        return self <= other and self != other

    def __add__(self, other):
        return ideal_op(self, other, IdealOp.SUM)

    def __mul__(self, other):
        return ideal_op(self, other, IdealOp.PRODUCT)

    def __and__(self, other):
        return ideal_op(self, other, IdealOp.INTERSECT)

    @property
    def size(self) -> int:
        return self.ring.p ** (self.ring.degree - self.generator.degree)

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return f"({self.generator})"

    def __repr__(self):
        return f"IdealHandle{self.exps}{self}"


class IdealOp(enum.Enum):
    SUM = "Sum"
    PRODUCT = "Product"
    INTERSECT = "Intersect"
    QUOTIENT = "Quotient"


def ideals(ring: QuotientRing) -> list:
    """All ``prod(e_i + 1)`` ideals, sorted by generator (degree, then coefficients)."""
    out = [ring.ideal(e) for e in itertools.product(*(range(e + 1) for e in ring.exponents))]
    out.sort(key=lambda I: I.generator.sort_key())
    return out


def ideal_op(I: IdealHandle, J: IdealHandle, kind: IdealOp) -> IdealHandle:
    """Sum, product, intersection, or the quotient ``(J : I) = {x : x I in J}``."""
    if I.ring != J.ring:
        raise ValueError("ideals of different rings")
    caps = I.ring.exponents
    if kind is IdealOp.SUM:
        exps = (min(a, b) for a, b in zip(I.exps, J.exps))
    elif kind is IdealOp.INTERSECT:
        exps = (max(a, b) for a, b in zip(I.exps, J.exps))
    elif kind is IdealOp.PRODUCT:
        exps = (min(a + b, e) for a, b, e in zip(I.exps, J.exps, caps))
    elif kind is IdealOp.QUOTIENT:
        exps = (max(0, b - a) for a, b in zip(I.exps, J.exps))
    else:
        raise ValueError(kind)
    return I.ring.ideal(exps)


def quotient(J: IdealHandle, I: IdealHandle) -> IdealHandle:
    """``(J : I)``."""
    return ideal_op(I, J, IdealOp.QUOTIENT)


def annihilator(I: IdealHandle) -> IdealHandle:
    return I.ring.ideal(e - a for a, e in zip(I.exps, I.ring.exponents))


def minimal_containing_ideal(a: RingElement) -> IdealHandle:
    """The principal ideal ``(a) = (gcd(a, f))``, the smallest ideal containing ``a``."""
    if a.is_zero():
        raise ZeroElement("the zero element lies in every ideal")
    return a.ring.ideal(a.ring._exps_of(gcd(a.rep, a.ring.modulus)))


def cofactor(a: RingElement, I: IdealHandle) -> Poly:
    """Exact polynomial quotient ``a.rep / generator(I)``."""
    q, r = poly_divmod(a.rep, I.generator)
    if not r.is_zero():
        raise NotInIdeal(f"{a.rep} is not a multiple of {I.generator}")
    return q


def lattice_order(ring: QuotientRing) -> list:
    """Ideals in the element order used by :func:`to_algebra`: ``(0)`` first, ``R`` last."""
    # descending generator degree is a linear extension of inclusion
    return sorted(ideals(ring), key=lambda I: (-I.generator.degree, I.generator.coeffs))


def to_algebra(ring: QuotientRing):
    """``Id(R)`` as a finite residuated lattice: ⊆ order, product as ⊙, ``(J : I)`` as ``I → J``."""
    from .algebra import FiniteAlgebra

    ids = lattice_order(ring)
    index = {I.exps: k for k, I in enumerate(ids)}
    n = len(ids)
    leq = [[I <= J for J in ids] for I in ids]
    odot = [[index[(I * J).exps] for J in ids] for I in ids]
    imp = [[index[quotient(J, I).exps] for J in ids] for I in ids]
    names = [str(I) if not I.is_unit() else "R" for I in ids]
    return FiniteAlgebra(names, leq, odot, imp, label=f"Id({ring})")
