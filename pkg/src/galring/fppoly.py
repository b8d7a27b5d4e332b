"""Polynomial helpers over the prime field F_p.

A polynomial is a tuple of integers in [0, p), little-endian by degree
(index k holds the coefficient of u^k).  Degrees stay tiny throughout
the package, so everything here is plain schoolbook arithmetic.
"""

from __future__ import annotations

import itertools
from typing import Iterator

Poly = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division."""
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


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def normalize(f: Poly) -> Poly:
    k = len(f)
    while k > 0 and f[k - 1] == 0:
        k -= 1
    return tuple(f[:k])


def degree(f: Poly) -> int:
    """Degree of f, with -1 for the zero polynomial."""
    return len(normalize(f)) - 1


def mul(f: Poly, g: Poly, p: int) -> Poly:
    f, g = normalize(f), normalize(g)
    if not f or not g:
        return ()
    acc = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                acc[i + j] += fi * gj
    return normalize(tuple(c % p for c in acc))


def mod(f: Poly, g: Poly, p: int) -> Poly:
    """Remainder of f modulo g (g nonzero)."""
    g = normalize(g)
    if not g:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(g[-1], -1, p)
    r = [c % p for c in f]
    for top in range(len(r) - 1, len(g) - 2, -1):
        c = r[top]
        if c:
            factor = (c * inv_lead) % p
            shift = top - (len(g) - 1)
            for t, gt in enumerate(g):
                r[shift + t] = (r[shift + t] - factor * gt) % p
    return normalize(tuple(r))


def pow_mod(f: Poly, e: int, h: Poly, p: int) -> Poly:
    """f**e reduced modulo h."""
    result: Poly = (1,)
    base = mod(f, h, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, base, p), h, p)
        base = mod(mul(base, base, p), h, p)
        e >>= 1
    return result


def monic_polys(p: int, deg: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree, low coefficients first."""
    for low in itertools.product(range(p), repeat=deg):
        yield low + (1,)


def is_irreducible(f: Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    f = normalize(f)
    d = degree(f)
    if d < 1:
        return False
    if f[0] == 0 and d > 1:
        return False
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not mod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Poly:
    """First monic irreducible of degree m in the enumeration order of
    monic_polys, i.e. the one whose coefficient tuple (c_0, ..., c_{m-1})
    is lexicographically smallest."""
    for cand in monic_polys(p, m):
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible of degree {m} over F_{p}")
