"""Small exact integer helpers: multiplicative orders, trial-division factoring."""

from math import gcd, isqrt

DEFAULT_FACTOR_BOUND = 10**6


def mult_order(a: int, m: int) -> int:
    """Multiplicative order of a modulo m.  Requires gcd(a, m) == 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m == 1:
        return 1
    t = 1
    x = a % m
    while x != 1:
        x = (x * a) % m
        t += 1
    return t


def factorize(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization by trial division with divisors up to `bound`.

    Raises ValueError when the input cannot be certified within the bound,
    rather than returning a partial answer.
    """
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    out: dict[int, int] = {}
    rest = m
    p = 2
    while p <= bound and p * p <= rest:
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
        p += 1 if p == 2 else 2
    if rest > 1:
        if rest > bound * bound and isqrt(rest) > bound:
            raise ValueError(f"{m} exceeds the factorization bound {bound}")
        out[rest] = out.get(rest, 0) + 1
    return out


def divisors(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> list[int]:
    """Sorted list of positive divisors of m."""
    divs = [1]
    for p, e in factorize(m, bound).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
