"""
Polynomials over Z_p
====================

Dense coefficient arrays, extended gcd and factorization by trial division.
"""
from mvbl.zp_poly import factor, parse_poly, poly_divmod, xgcd

# Coefficients live in Z_p; printing drops zero terms and reduces mod p.
f = parse_poly("x^5 - x", 3)
g = parse_poly("x^2 + 1", 3)
print("f =", f, "   g =", g)

q, r = poly_divmod(f, g)
print("f = g*q + r with q =", q, "and r =", r)

# xgcd returns (d, s, t) with s*f + t*g = d monic.
d, s, t = xgcd(parse_poly("x^2+2", 3), parse_poly("x", 3))
print("gcd(x^2+2, x) =", d, "  Bezout coefficients:", s, ",", t)

# x^(b+1) - x splits into distinct monic irreducibles when p does not divide b.
for p, beta in [(3, 2), (5, 4), (2, 3), (3, 3)]:
    fac = factor(parse_poly(f"x^{beta + 1} - x", p))
    print(f"p={p} beta={beta}:  {fac}   squarefree={fac.squarefree}")

# Polynomials double as base-p numerals, which the cipher relies on.
h = parse_poly("x^4+x^3+2", 3)
print(h, "has digits", h.digits(), "and value", h.to_int())
