"""Primality helpers for key generation. Toy scale, not constant time."""

from __future__ import annotations

import random


def _sieve(limit: int) -> tuple:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(1000)

# deciding set for everything below 3.3e24 (Sorenson & Webster)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


def is_probable_prime(n: int) -> bool:
    """Trial division by small primes, then Miller-Rabin rounds.

    Deterministic below 3.3e24; above that, twenty extra witness bases are
    drawn from a generator seeded with n itself, so repeated calls agree.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC_BELOW:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(20)]
    for a in bases:
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


def next_prime(lower: int) -> int:
    """Smallest prime >= lower."""
    n = max(lower, 2)
    while not is_probable_prime(n):
        n += 1
    return n
