"""Integer factorization helpers.

Only used to keep radicands square-free.  Values coming out of periodic
continued fractions produce discriminants up to a few dozen digits, so a
small deterministic Miller-Rabin plus Brent's cycle variant of Pollard's
rho is plenty; trial division handles the common tiny cases without ever
touching the heavier code path.
"""

from __future__ import annotations

from math import gcd, isqrt
from random import Random

# Deterministic witness set, valid for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1000


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's variant)."""
    rng = Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in range(2, _TRIAL_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        g = _pollard_rho(m)
        stack.extend((g, m // g))
    return out


_SQUAREFREE_CACHE: dict[int, tuple[int, int]] = {}


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n >= 0 as f*f*d with d square-free; returns (f, d)."""
    if n < 0:
        raise ValueError("squarefree_split expects n >= 0")
    if n < 2:
        return 1, n
    hit = _SQUAREFREE_CACHE.get(n)
    if hit is not None:
        return hit
    f = 1
    d = 1
    for p, e in factorize(n).items():
        if e % 2:
            d *= p
        f *= p ** (e // 2)
    _SQUAREFREE_CACHE[n] = (f, d)
    return f, d
