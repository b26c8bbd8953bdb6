"""
Polynomials over F2 stored as int bitmasks: bit i is the coefficient of t^i.
Factorization is delegated to sympy's galoistools.
"""

from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

ONE = 1
T = 2


def degree(f: int) -> int:
    """deg f, with deg 0 = -1."""
    return f.bit_length() - 1


def pmul(f: int, g: int) -> int:
    result = 0
    while g:
        if g & 1:
            result ^= f
        f <<= 1
        g >>= 1
    return result


def pdivmod(f: int, g: int) -> tuple[int, int]:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = degree(g)
    quotient = 0
    while f and degree(f) >= dg:
        shift = degree(f) - dg
        quotient ^= 1 << shift
        f ^= g << shift
    return quotient, f


def pmod(f: int, g: int) -> int:
    return pdivmod(f, g)[1]


def pgcd(f: int, g: int) -> int:
    while g:
        f, g = g, pmod(f, g)
    return f


def pgcdex(f: int, g: int) -> tuple[int, int, int]:
    """(s, u, h) with s f + u g = h = gcd(f, g)."""
    s0, s1, u0, u1 = 1, 0, 0, 1
    while g:
        q, r = pdivmod(f, g)
        f, g = g, r
        s0, s1 = s1, s0 ^ pmul(q, s1)
        u0, u1 = u1, u0 ^ pmul(q, u1)
    return s0, u0, f


def pinvmod(f: int, modulus: int) -> int:
    s, _, h = pgcdex(pmod(f, modulus), modulus)
    if h != 1:
        raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
    return pmod(s, modulus)


def ppow(f: int, exponent: int) -> int:
    result = 1
    while exponent:
        if exponent & 1:
            result = pmul(result, f)
        f = pmul(f, f)
        exponent >>= 1
    return result


def ppowmod(f: int, exponent: int, modulus: int) -> int:
    result, f = 1, pmod(f, modulus)
    while exponent:
        if exponent & 1:
            result = pmod(pmul(result, f), modulus)
        f = pmod(pmul(f, f), modulus)
        exponent >>= 1
    return result


def square(f: int) -> int:
    """Frobenius: spread bit i to bit 2i."""
    result = 0
    i = 0
    while f:
        if f & 1:
            result |= 1 << (2 * i)
        f >>= 1
        i += 1
    return result


def sqrt_mod(c: int, p: int) -> int:
    """g with g^2 = c mod p for irreducible p; Frobenius inverts as x -> x^(2^(deg p - 1))."""
    return ppowmod(c, 1 << (degree(p) - 1), p)


def to_coefficients(f: int) -> list[int]:
    """Dense coefficient list, highest degree first, as galoistools expects."""
    return [ZZ((f >> i) & 1) for i in range(degree(f), -1, -1)]


def from_coefficients(coeffs) -> int:
    f = 0
    for c in coeffs:
        f = (f << 1) | (int(c) % 2)
    return f


@lru_cache(maxsize=1024)
def factor(f: int) -> tuple[tuple[int, int], ...]:
    """Monic irreducible factors with multiplicities, sorted by bitmask."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if degree(f) == 0:
        return ()
    _, factors = gf_factor(to_coefficients(f), 2, ZZ)
    return tuple(sorted((from_coefficients(p), e) for p, e in factors))


def render(f: int) -> str:
    """Descending powers, e.g. "t^2+t+1"."""
    if not f:
        return "0"
    terms = []
    for i in range(degree(f), -1, -1):
        if (f >> i) & 1:
            terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
    return "+".join(terms)


def is_monomial(f: int) -> bool:
    return f != 0 and f & (f - 1) == 0
