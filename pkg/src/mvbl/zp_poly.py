"""Dense polynomials over the prime field Z_p.

Coefficients are stored in ascending order (``coeffs[i]`` multiplies ``x**i``)
and are always fully reduced; the zero polynomial has no coefficients.
Arithmetic is exact and uses only Python integers.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeTooLarge, DivisionByZeroPoly, ModulusMismatch, NotPrime, ParseError

#: degree of the zero polynomial
NEG_INF = -math.inf

DEFAULT_DEGREE_CAP = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime number")


@dataclass(frozen=True)
class Poly:
    """A polynomial over Z_p. Construction reduces and strips the coefficients."""

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"modulus must be >= 2, got {self.p}")
        c = [int(a) % self.p for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, p: int) -> Poly:
        return cls(p, ())

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c,))

    @classmethod
    def x(cls, p: int, power: int = 1) -> Poly:
        return cls(p, (0,) * power + (1,))

    @classmethod
    def from_digits(cls, p: int, digits: Iterable[int]) -> Poly:
        """Most-significant-first digits ``a_q ... a_1`` -> ``a_q x^(q-1) + ... + a_1``."""
        digits = [int(d) for d in digits]
        if any(not 0 <= d < p for d in digits):
            raise ParseError(f"digit out of range for base {p}: {digits}")
        return cls(p, tuple(reversed(digits)))

    # -- basic queries --------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = pow(self.lead, -1, self.p)
        return self.scale(inv)

    def scale(self, c: int) -> Poly:
        return Poly(self.p, tuple(a * c for a in self.coeffs))

    def digits(self, width: int | None = None) -> str:
        """Most-significant-first digit string; ``"0"`` for the zero polynomial."""
        s = "".join(str(a) if a < 10 else f"[{a}]" for a in reversed(self.coeffs)) or "0"
        if width is not None and len(self.coeffs) < width:
            s = "0" * (width - max(len(self.coeffs), 1)) + s
        return s

    def to_int(self) -> int:
        """Value of the coefficient vector read as a base-p numeral."""
        v = 0
        for a in reversed(self.coeffs):
            v = v * self.p + a
        return v

    @classmethod
    def from_int(cls, p: int, value: int) -> Poly:
        c = []
        while value:
            value, r = divmod(value, p)
            c.append(r)
        return cls(p, tuple(c))

    def derivative(self) -> Poly:
        return Poly(self.p, tuple(i * a for i, a in enumerate(self.coeffs))[1:])

    def __call__(self, a: int) -> int:
        return evaluate(self, a)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other) -> Poly:
        if isinstance(other, int):
            return Poly.const(self.p, other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.p != self.p:
            raise ModulusMismatch(f"Z_{self.p} vs Z_{other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.p, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Poly(Z_{self.p}: {to_text(self)})"

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)


def add(a: Poly, b: Poly) -> Poly:
    if a.p != b.p:
        raise ModulusMismatch(f"Z_{a.p} vs Z_{b.p}")
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return Poly(a.p, tuple(x + y for x, y in zip(ca, cb)))


def mul(a: Poly, b: Poly) -> Poly:
    if a.p != b.p:
        raise ModulusMismatch(f"Z_{a.p} vs Z_{b.p}")
    if not a.coeffs or not b.coeffs:
        return Poly.zero(a.p)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return Poly(a.p, tuple(out))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``a = b*q + r`` with ``deg r < deg b``."""
    if a.p != b.p:
        raise ModulusMismatch(f"Z_{a.p} vs Z_{b.p}")
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    p = a.p
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv = pow(b.lead, -1, p)
    q = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        if c:
            q[k - db] = c
            for j, y in enumerate(b.coeffs):
                r[k - db + j] = (r[k - db + j] - c * y) % p
    return Poly(p, tuple(q)), Poly(p, tuple(r[:db]))


def divides(d: Poly, a: Poly) -> bool:
    return poly_divmod(a, d)[1].is_zero()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``g`` monic and ``g == u*a + v*b``."""
    if a.p != b.p:
        raise ModulusMismatch(f"Z_{a.p} vs Z_{b.p}")
    if a.is_zero() and b.is_zero():
        raise DivisionByZeroPoly("gcd(0, 0) is undefined")
    p = a.p
    one, zero = Poly.const(p, 1), Poly.zero(p)
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    inv = pow(r0.lead, -1, p)
    return r0.scale(inv), u0.scale(inv), v0.scale(inv)


def gcd(a: Poly, b: Poly) -> Poly:
    return xgcd(a, b)[0]


def evaluate(f: Poly, a: int) -> int:
    """Horner evaluation of ``f`` at the residue ``a``."""
    v = 0
    for c in reversed(f.coeffs):
        v = (v * a + c) % f.p
    return v


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(f**e for f, e in factors)`` with monic irreducible, sorted factors."""

    p: int
    unit: int
    factors: tuple

    def expand(self) -> Poly:
        out = Poly.const(self.p, self.unit)
        for f, e in self.factors:
            out = out * f**e
        return out

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def __str__(self):
        parts = []
        for f, e in self.factors:
            s = str(f) if f.degree == 1 and f.coeffs[0] == 0 else f"({f})"
            parts.append(s if e == 1 else f"{s}^{e}")
        body = "".join(parts) or "1"
        return body if self.unit == 1 else f"{self.unit}*{body}"


def _monic_polys(p: int, d: int):
    for low in itertools.product(range(p), repeat=d):
        yield Poly(p, tuple(reversed(low)) + (1,))


def factor(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> Factorization:
    """Complete factorization by root search then trial division by monic polynomials.

    Intended for desk-scale inputs; the cost grows like ``p**(deg/2)`` for
    polynomials with large irreducible factors.
    """
    require_prime(f.p)
    if f.is_zero():
        raise DivisionByZeroPoly("cannot factor the zero polynomial")
    if f.degree > degree_cap:
        raise DegreeTooLarge(f"degree {f.degree} exceeds cap {degree_cap}")
    p = f.p
    unit = f.lead
    g = f.monic()
    found = []
    for a in range(p):
        lin = Poly(p, (-a, 1))
        e = 0
        while g.degree >= 1 and evaluate(g, a) == 0:
            g = poly_divmod(g, lin)[0]
            e += 1
        if e:
            found.append((lin, e))
    d = 2
    while 2 * d <= g.degree:
        for q in _monic_polys(p, d):
            e = 0
            while True:
                quo, rem = poly_divmod(g, q)
                if not rem.is_zero():
                    break
                g = quo
                e += 1
            if e:
                found.append((q, e))
            if 2 * d > g.degree:
                break
        d += 1
    if g.degree >= 1:
        found.append((g, 1))
    found.sort(key=lambda fe: fe[0].sort_key())
    return Factorization(p, unit, tuple(found))


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


# -- text form ---------------------------------------------------------------

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def to_text(f: Poly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


class _Parser:
    # expr := ['-'] term (('+'|'-') term)* ; term := factor+ ; factor := atom ['^' int]
    # atom := int | 'x' | '(' expr ')'
    def __init__(self, p: int, text: str):
        self.p = p
        self.toks = re.findall(r"\d+|[x()+\-^]|\S", text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, tok=None):
        t = self.peek()
        if t is None or (tok is not None and t != tok):
            raise ParseError(f"expected {tok or 'token'} at position {self.i}, got {t!r}")
        self.i += 1
        return t

    def parse(self) -> Poly:
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}")
        return out

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            out = out + self.term().scale(sign)
        return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek() is not None and (self.peek() in ("x", "(") or self.peek().isdigit()):
            out = out * self.factor()
        return out

    def factor(self) -> Poly:
        t = self.peek()
        if t == "x":
            self.take()
            base = Poly.x(self.p)
        elif t == "(":
            self.take()
            base = self.expr()
            self.take(")")
        elif t is not None and t.isdigit():
            base = Poly.const(self.p, int(self.take()))
        else:
            raise ParseError(f"unexpected {t!r}")
        if self.peek() == "^":
            self.take()
            e = self.take()
            if not e.isdigit():
                raise ParseError(f"bad exponent {e!r}")
            base = base ** int(e)
        return base


def parse_poly(text: str, p: int) -> Poly:
    """Parse ``"2x^2+1"``, ``"x(x+2)"``, ``"x**3 - x"`` or a digit string like ``"201"``.

    For ``p <= 10`` a string made only of decimal digits is read as
    most-significant-first base-p digits (a single digit is the same constant
    either way); for larger ``p`` it is a decimal constant.
    """
    s = re.sub("[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group().translate(_SUPERSCRIPTS), text.strip())
    s = s.replace("−", "-")
    if p <= 10 and re.fullmatch(r"\d+", s):
        return Poly.from_digits(p, [int(ch) for ch in s])
    s = s.replace("**", "^").replace("*", "").replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    return _Parser(p, s).parse()
