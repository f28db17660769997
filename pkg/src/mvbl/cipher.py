"""The ideal-annihilator cipher over R_{p,1,beta} = Z_p[x]/(x^(beta+1) - x).

Text becomes a decimal label, the label's base-p digits become a polynomial
``f_c``.  A unit ``f_c`` is replaced by its inverse (moving to ``R_{p,1,2beta}``
when ``f_c`` is its own inverse); a zero divisor ``f_c = g_t h`` is sent to
``g_r h`` where ``(g_r) = Ann((g_t))``.  Reduction modulo ``x^(beta+1) - x``
makes the second branch many-to-one, so decryption returns candidates.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    CandidateExplosion,
    LengthOverflow,
    MessageTooLong,
    NoCandidates,
    ParseError,
    SquarefreeViolation,
    UnknownSymbol,
)
from .quotient_ring import (
    ElementKind,
    IdealHandle,
    RingElement,
    annihilator,
    classify_element,
    cofactor,
    ideals,
    inverse,
    make_ring,
    minimal_containing_ideal,
)
from .zp_poly import Poly, parse_poly, require_prime

ENUMERATION_EXPONENT_CAP = 6
MAX_DOUBLINGS = 8


@dataclass(frozen=True)
class Alphabet:
    """Symbols labelled by position.  Up to ten symbols label with one decimal digit each."""

    symbols: tuple = tuple("ABCDEFGHIJ")

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols) or not self.symbols:
            raise ValueError("alphabet symbols must be distinct and nonempty")

    @property
    def radix(self) -> int:
        return 10 if len(self.symbols) <= 10 else len(self.symbols)

    @classmethod
    def from_file(cls, path) -> Alphabet:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(tuple(s.strip() for s in lines if s.strip()))

    def tokenize(self, text: str) -> list:
        """Split ``text`` into symbols, longest match first."""
        by_len = sorted(self.symbols, key=len, reverse=True)
        out, i = [], 0
        while i < len(text):
            for s in by_len:
                if text.startswith(s, i):
                    out.append(s)
                    i += len(s)
                    break
            else:
                raise UnknownSymbol(f"{text[i]!r} at position {i} is not in the alphabet", witness=(i, text[i]))
        return out


DEFAULT_ALPHABET = Alphabet()


def base_convert(m: int, base: int) -> list:
    """Most-significant-first digits of ``m``; ``[0]`` for zero."""
    if m < 0 or base < 2:
        raise ValueError("need m >= 0 and base >= 2")
    out = []
    while m:
        m, r = divmod(m, base)
        out.append(r)
    return out[::-1] or [0]


def from_base(digits, base: int) -> int:
    v = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        v = v * base + d
    return v


def encode_text(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> int:
    """The label number: symbol labels concatenated as digits in the alphabet's radix."""
    idx = {s: k for k, s in enumerate(alphabet.symbols)}
    return from_base([idx[s] for s in alphabet.tokenize(text)], alphabet.radix)


def decode_text(m: int, l: int | None = None, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    """Inverse of :func:`encode_text`, left-padding with the zero-label symbol to length ``l``."""
    if alphabet.radix == 10:
        digits = [int(ch) for ch in str(m)]
    else:
        digits = base_convert(m, alphabet.radix)
    if l is not None:
        if len(digits) > l:
            raise LengthOverflow(f"{m} has {len(digits)} digits, more than l = {l}", witness=(m, l))
        digits = [0] * (l - len(digits)) + digits
    if any(d >= len(alphabet.symbols) for d in digits):
        bad = next(d for d in digits if d >= len(alphabet.symbols))
        raise UnknownSymbol(f"label {bad} has no symbol", witness=(bad,))
    return "".join(alphabet.symbols[d] for d in digits)


@dataclass(frozen=True)
class SecretKey:
    p: int
    beta: int
    l: int

    def __post_init__(self):
        require_prime(self.p)
        if self.beta < 1 or self.l < 1:
            raise ValueError("beta and l must be positive")
        if self.beta % self.p == 0:
            raise SquarefreeViolation(f"p = {self.p} divides beta = {self.beta}", witness=(self.p, self.beta))

    @classmethod
    def parse(cls, text: str) -> SecretKey:
        try:
            p, beta, l = (int(t) for t in text.replace("(", "").replace(")", "").split(","))
        except ValueError as exc:
            raise ParseError(f"key must look like 'p,beta,l', got {text!r}") from exc
        return cls(p, beta, l)

    def __str__(self):
        return f"({self.p},{self.beta},{self.l})"


class CipherPath(enum.Enum):
    UNIT_INVERSE = "UnitInverse"
    UNIT_INVERSE_DOUBLED = "UnitInverseDoubled"
    ANNIHILATOR = "Annihilator"


@dataclass(frozen=True)
class CipherTrace:
    m: int
    digits_p: str
    f_c: Poly
    path: CipherPath
    beta: int
    f_e: Poly
    c: int
    ciphertext: str
    I_t: Poly | None = None
    I_r: Poly | None = None
    h: Poly | None = None

    def to_dict(self) -> dict:
        s = lambda f: None if f is None else str(f)  # noqa: E731
        return {
            "m": self.m,
            "digits_p": self.digits_p,
            "f_c": str(self.f_c),
            "path": self.path.value,
            "beta": self.beta,
            "I_t": s(self.I_t),
            "I_r": s(self.I_r),
            "h": s(self.h),
            "f_e": str(self.f_e),
            "c": self.c,
            "ciphertext": self.ciphertext,
        }


def _gen(I: IdealHandle) -> Poly:
    return Poly.zero(I.ring.p) if I.is_zero() else I.generator


def encrypt_with_ideal(f_c: RingElement, I_t: IdealHandle) -> Poly:
    """``Ann(I_t).generator * (f_c / I_t.generator)`` reduced modulo the ring's modulus."""
    if f_c.ring != I_t.ring:
        raise ValueError("element and ideal live in different rings")
    h = cofactor(f_c, I_t)
    return (annihilator(I_t).generator * h) % f_c.ring.modulus


def _annihilator_trace(f_c, I_t, m, digits, beta, alphabet):
    h = cofactor(f_c, I_t)
    I_r = annihilator(I_t)
    f_e = encrypt_with_ideal(f_c, I_t)
    c = f_e.to_int()
    return CipherTrace(m, digits, f_c.rep, CipherPath.ANNIHILATOR, beta, f_e, c,
                       decode_text(c, None, alphabet), _gen(I_t), _gen(I_r), h)


def encrypt(text: str, alphabet: Alphabet = DEFAULT_ALPHABET, p: int = 3, beta: int = 2, ideal=None):
    """Encrypt ``text`` in ``R_{p,1,beta}``; returns ``(ciphertext, key, trace)``.

    ``ideal`` (a Poly or polynomial text) selects ``I_t`` explicitly and forces
    the annihilator path; otherwise ``I_t`` is the smallest ideal containing ``f_c``.
    """
    require_prime(p)
    if beta % p == 0:
        raise SquarefreeViolation(f"p = {p} divides beta = {beta}; x^(beta+1) - x is not squarefree", witness=(p, beta))
    l = len(alphabet.tokenize(text))
    m = encode_text(text, alphabet)
    digits = base_convert(m, p)
    if len(digits) > beta + 1:
        raise MessageTooLong(f"{m} needs {len(digits)} base-{p} digits, ring holds {beta + 1}", witness=(m, beta + 1))
    dstr = "".join(map(str, digits)) if p <= 10 else ".".join(map(str, digits))
    ring = make_ring(p, beta)
    f_c = ring(Poly.from_digits(p, digits))

    if ideal is not None:
        g = parse_poly(ideal, p) if isinstance(ideal, str) else ideal
        I_t = ring.ideal_from_generator(g)
        tr = _annihilator_trace(f_c, I_t, m, dstr, beta, alphabet)
        return tr.ciphertext, SecretKey(p, beta, l), tr

    kind = classify_element(f_c)
    if kind is ElementKind.ZERO:
        tr = _annihilator_trace(f_c, ring.zero_ideal(), m, dstr, beta, alphabet)
        return tr.ciphertext, SecretKey(p, beta, l), tr
    if kind is ElementKind.ZERO_DIVISOR:
        tr = _annihilator_trace(f_c, minimal_containing_ideal(f_c), m, dstr, beta, alphabet)
        return tr.ciphertext, SecretKey(p, beta, l), tr

    inv = inverse(f_c)
    path, b = CipherPath.UNIT_INVERSE, beta
    # a self-inverse unit of positive degree moves to R_{p,1,2beta}; constants stay put
    for _ in range(MAX_DOUBLINGS):
        if inv.rep != f_c.rep or f_c.rep.degree < 1:
            break
        b *= 2
        if b % p == 0:
            raise SquarefreeViolation(f"doubling reached beta = {b}, divisible by p = {p}", witness=(p, b))
        ring = make_ring(p, b)
        f_c = ring(f_c.rep)
        path = CipherPath.UNIT_INVERSE_DOUBLED
        if classify_element(f_c) is not ElementKind.UNIT:
            tr = _annihilator_trace(f_c, minimal_containing_ideal(f_c), m, dstr, b, alphabet)
            return tr.ciphertext, SecretKey(p, b, l), tr
        inv = inverse(f_c)
    f_e = inv.rep
    c = f_e.to_int()
    tr = CipherTrace(m, dstr, f_c.rep, path, b, f_e, c, decode_text(c, None, alphabet))
    return tr.ciphertext, SecretKey(p, b, l), tr


# -- decryption --------------------------------------------------------------------

def _solve_mod_p(M: np.ndarray, b: np.ndarray, p: int):
    """Solutions of ``M x = b`` over Z_p as ``(x0, kernel_basis)``, or None."""
    rows, cols = M.shape
    A = np.concatenate([M % p, (b % p)[:, None]], axis=1).astype(np.int64)
    pivots, r = [], 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if r >= rows or not len(nz):
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if A[r:, cols].any():
        return None
    x0 = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x0[c] = A[i, cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -A[i, f] % p
        basis.append(v)
    return x0, basis


def _coeff_vec(f: Poly, n: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    v[: len(f.coeffs)] = f.coeffs
    return v


def _annihilator_preimages(f_e: Poly, ring, cap_exp: int, limit: int | None = None):
    """Every ``g_t h`` with ``(g_r) = Ann((g_t))``, ``g_r h = f_e`` mod the modulus and ``deg h < deg g_r``."""
    p, N = ring.p, ring.degree
    chi_ = ring.modulus
    for I_r in ideals(ring):
        if I_r.is_zero():
            continue
        g_r = I_r.generator
        g_t = _gen(annihilator(I_r))
        D = g_r.degree
        if D == 0:
            if f_e.is_zero():
                yield 0
            continue
        M = np.stack([_coeff_vec((g_r * Poly.x(p, j)) % chi_, N) for j in range(D)], axis=1)
        sol = _solve_mod_p(M, _coeff_vec(f_e, N), p)
        if sol is None:
            continue
        x0, basis = sol
        if len(basis) > cap_exp:
            raise CandidateExplosion(
                f"{p}^{len(basis)} preimages through {I_r}, above the cap {p}^{cap_exp}", witness=(str(I_r), len(basis))
            )
        # d = g_t h, an exact product of degree < N
        G = np.zeros((D, N), dtype=np.int64)
        for j in range(D):
            G[j] = _coeff_vec(g_t * Poly.x(p, j), N)
        wide = p**N >= 2**62
        weights = np.array([p**i for i in range(N)], dtype=object if wide else np.int64)
        if basis:
            T = np.array(list(itertools.product(range(p), repeat=len(basis))), dtype=np.int64)
            H = (x0[None, :] + T @ np.stack(basis)) % p
        else:
            H = x0[None, :]
        Dv = (H @ G) % p
        values = (Dv.astype(object) if wide else Dv) @ weights
        if limit is not None:
            values = values[values < limit]
        yield from (int(v) for v in values)


def decrypt(ciphertext: str, alphabet: Alphabet = DEFAULT_ALPHABET, key: SecretKey = None,
            cap_exp: int = ENUMERATION_EXPONENT_CAP, strict: bool = False) -> list:
    """Candidate plaintexts for ``ciphertext`` under ``key``, sorted by label.

    A unit ciphertext polynomial has exactly one preimage.  Otherwise every
    ideal ``I_r`` containing it contributes all solutions ``h`` of
    ``g_r h = f_e``; the original plaintext is always among the candidates.
    With ``strict`` only candidates that re-encrypt to ``ciphertext`` under the
    canonical ideal choice are kept.
    """
    if key is None:
        raise ValueError("a key is required")
    p, beta, l = key.p, key.beta, key.l
    c = encode_text(ciphertext, alphabet)
    digits = base_convert(c, p)
    if len(digits) > beta + 1:
        raise NoCandidates(f"ciphertext value {c} does not fit R_{{{p},1,{beta}}}", witness=(c,))
    ring = make_ring(p, beta)
    f_e = ring(Poly.from_digits(p, digits))
    unit = classify_element(f_e) is ElementKind.UNIT
    if unit:
        values = [inverse(f_e).rep.to_int()]
    limit = alphabet.radix**l
    if not unit:
        values = sorted(set(_annihilator_preimages(f_e.rep, ring, cap_exp, limit)))
    out = []
    for v in values:
        if v >= limit:
            continue
        try:
            t = decode_text(v, l, alphabet)
        except UnknownSymbol:
            continue
        if strict and not unit and not _reencrypts(t, alphabet, key, ciphertext):
            continue
        out.append(t)
    if not out:
        raise NoCandidates(f"no plaintext of length {l} maps to {ciphertext!r}", witness=(ciphertext, str(key)))
    return out


def _reencrypts(text, alphabet, key, ciphertext) -> bool:
    try:
        ct, k2, _ = encrypt(text, alphabet, key.p, key.beta)
    except (MessageTooLong, SquarefreeViolation):
        return False
    return ct == ciphertext and k2.beta == key.beta
