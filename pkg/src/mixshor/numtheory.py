"""Integer routines for period finding: orders, continued fractions, cycles.

multiplicative_order is the ground-truth oracle every other period result
is judged against; it finds the order by brute-force iteration and nothing
here ever assumes a period instead of computing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "gcd",
    "mod_pow",
    "multiplicative_order",
    "convergents",
    "extract_period",
    "CycleDecomposition",
    "permutation_cycles",
    "is_prime",
    "prime_factors",
    "factor_semiprime",
    "semiprime_list",
    "coprime_list",
    "shor_factors",
]


def gcd(x: int, y: int) -> int:
    """Greatest common divisor, gcd(x, 0) = x."""
    if x < 1 or y < 0:
        raise ValueError("gcd requires x >= 1 and y >= 0")
    return math.gcd(x, y)


def mod_pow(a: int, e: int, n: int) -> int:
    """a**e mod n by square-and-multiply."""
    if n < 2 or e < 0:
        raise ValueError("mod_pow requires n >= 2 and e >= 0")
    return pow(a, e, n)


def multiplicative_order(a: int, n: int) -> int:
    """Least r >= 1 with a**r = 1 (mod n), by brute-force iteration."""
    if not 2 <= a < n:
        raise ValueError(f"need 2 <= a < N, got a={a}, N={n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"a={a} is not coprime to N={n}")
    r = 1
    acc = a % n
    while acc != 1:
        acc = acc * a % n
        r += 1
    return r


def convergents(c: int, t: int) -> list[Fraction]:
    """All continued-fraction convergents of c/t, ending at c/t in lowest terms.

    Quotients come from the Euclidean algorithm; since c < t the sequence
    always starts with the convergent 0/1.
    """
    if t < 1 or not 0 <= c < t:
        raise ValueError("convergents requires 0 <= c < t")
    quotients = []
    num, den = c, t
    while den:
        q, rem = divmod(num, den)
        quotients.append(q)
        num, den = den, rem
    out = []
    p_prev, q_prev = 1, 0
    p_cur, q_cur = quotients[0], 1
    out.append(Fraction(p_cur, q_cur))
    for a_i in quotients[1:]:
        p_cur, p_prev = a_i * p_cur + p_prev, p_cur
        q_cur, q_prev = a_i * q_cur + q_prev, q_cur
        out.append(Fraction(p_cur, q_cur))
    return out


def extract_period(c: int, t: int, n: int, a: int) -> int | None:
    """Period candidate recovered from a measurement outcome c, or None.

    Takes the convergent of c/t with the largest denominator k < N and
    accepts it only if a**k = 1 (mod N).  No multiple-of-k repair is
    attempted, so a run succeeds exactly when the returned value equals
    the true order.
    """
    best = None
    for frac in convergents(c, t):
        if frac.denominator < n:
            best = frac.denominator
    if best is not None and mod_pow(a, best, n) == 1:
        return best
    return None


@dataclass(frozen=True)
class CycleDecomposition:
    """Orbits of b -> a*b mod N on {0, ..., 2^n - 1} (identity for b >= N)."""

    cycles: tuple[tuple[int, ...], ...]

    def cycle_of(self, b: int) -> tuple[int, ...]:
        for cyc in self.cycles:
            if b in cyc:
                return cyc
        raise ValueError(f"{b} is outside the permutation domain")

    def order(self) -> int:
        """Length of the cycle containing 1, i.e. the multiplicative order."""
        return len(self.cycle_of(1))

    def count_with_length(self, length: int) -> int:
        """Number of elements lying in cycles of exactly the given length."""
        return sum(len(c) for c in self.cycles if len(c) == length)


def permutation_cycles(a: int, n_mod: int, n_bits: int) -> CycleDecomposition:
    """Cycle structure of multiplication by a modulo N on n_bits-bit integers."""
    if math.gcd(a, n_mod) != 1:
        raise ValueError(f"a={a} is not coprime to N={n_mod}")
    size = 1 << n_bits
    if size < n_mod:
        raise ValueError(f"2^{n_bits} does not cover the residues mod {n_mod}")
    seen = [False] * size
    cycles = []
    for b in range(size):
        if seen[b]:
            continue
        if b >= n_mod:
            seen[b] = True
            cycles.append((b,))
            continue
        orbit = []
        cur = b
        while not seen[cur]:
            seen[cur] = True
            orbit.append(cur)
            cur = cur * a % n_mod
        cycles.append(tuple(orbit))
    return CycleDecomposition(tuple(cycles))


def is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def prime_factors(v: int) -> list[int]:
    """Prime factorization with multiplicity, ascending."""
    if v < 2:
        raise ValueError("prime_factors requires v >= 2")
    out = []
    d = 2
    while d * d <= v:
        while v % d == 0:
            out.append(d)
            v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


def factor_semiprime(v: int) -> tuple[int, int] | None:
    """(p, q) with v = p*q for primes p <= q, or None if v is not a semiprime."""
    fac = prime_factors(v)
    if len(fac) == 2:
        return fac[0], fac[1]
    return None


def semiprime_list(bits: int) -> list[int]:
    """All products of two primes (not necessarily distinct) with exactly
    `bits` binary digits."""
    if not 3 <= bits <= 6:
        raise ValueError("semiprime_list supports 3 to 6 bits")
    lo, hi = 1 << (bits - 1), 1 << bits
    return [v for v in range(lo, hi) if factor_semiprime(v) is not None]


def coprime_list(n: int) -> list[int]:
    """All a in [2, N-1] coprime to N; a=1 is excluded as uninformative."""
    if n < 3:
        raise ValueError("coprime_list requires N >= 3")
    return [a for a in range(2, n) if math.gcd(a, n) == 1]


def shor_factors(n: int, a: int) -> tuple[int, int] | None:
    """Classical post-processing gcd(a**(r/2) +- 1, N); convenience only.

    Returns a nontrivial factor pair when the order is even and the
    standard construction succeeds, else None.
    """
    r = multiplicative_order(a, n)
    if r % 2:
        return None
    half = mod_pow(a, r // 2, n)
    f1 = math.gcd(half - 1, n)
    f2 = math.gcd(half + 1, n)
    for f in (f1, f2):
        if 1 < f < n:
            return min(f, n // f), max(f, n // f)
    return None
