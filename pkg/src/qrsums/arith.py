"""Integer substrate: deterministic primality, modular arithmetic, prime ranges.

Everything downstream works with validated odd primes.  The OddPrime wrapper
carries the residue classes mod 4 and mod 8 that drive every case split in
this package, and constructing one re-checks primality, so a prime that
reaches the sum and class-number code is a prime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt


class InvariantError(RuntimeError):
    """An internal cross-check failed.

    Raised when an identity that must hold by proof fails to hold in a
    computation (for example a division that must be exact leaves a
    remainder).  This always indicates a bug, never bad user input.
    """


# Trial division is exact and fast below this; Miller-Rabin takes over above.
_TRIAL_LIMIT = 10_000

# Strong-pseudoprime witness set: deterministic for every n < 2^64
# (in fact for n < 3.3e24).  First twelve primes.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus with nonnegative exponent.

    Python integers are arbitrary precision, so intermediate squarings
    cannot overflow regardless of modulus size.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    return pow(base, exponent, modulus)


def _trial_division(n: int) -> bool:
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _miller_rabin(n: int) -> bool:
    # n is odd, > _TRIAL_LIMIT, and not divisible by any witness base.
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


def is_prime(n: int) -> bool:
    """Exact primality test.

    Trial division below 10^4, then Miller-Rabin with the fixed witness
    set (2, 3, ..., 37), which is deterministic for all n < 2^64.
    """
    if n < 2:
        return False
    if n < _TRIAL_LIMIT:
        return _trial_division(n)
    for a in _MR_BASES:
        if n % a == 0:
            return False
    return _miller_rabin(n)


@dataclass(frozen=True)
class OddPrime:
    """A validated odd prime with its residue classes mod 4 and mod 8."""

    value: int
    class_mod4: int = field(init=False)
    class_mod8: int = field(init=False)

    def __post_init__(self) -> None:
        n = self.value
        if n < 3 or n % 2 == 0 or not is_prime(n):
            raise ValueError(f"{n} is not an odd prime")
        object.__setattr__(self, "class_mod4", n % 4)
        object.__setattr__(self, "class_mod8", n % 8)

    def __int__(self) -> int:
        return self.value


def legendre(k: int, p: OddPrime) -> int:
    """Legendre symbol (k|p) in {-1, 0, +1} by Euler's criterion.

    k is reduced mod p first; (0|p) = 0.  For k not divisible by p,
    k^((p-1)/2) mod p is 1 or p-1, and p-1 maps to -1.
    """
    r = k % p.value
    if r == 0:
        return 0
    e = mod_pow(r, (p.value - 1) // 2, p.value)
    # e == 1 or e == p - 1 whenever p is prime; OddPrime guarantees that.
    return 1 if e == 1 else -1


# Segment width for the segmented sieve; ~1 MiB of workspace per segment.
_SEGMENT_SIZE = 1 << 20


def _small_primes(limit: int) -> list[int]:
    # Plain sieve of Eratosthenes up to limit inclusive.
    if limit < 2:
        return []
    mark = bytearray([1]) * (limit + 1)
    mark[0] = mark[1] = 0
    for d in range(2, isqrt(limit) + 1):
        if mark[d]:
            mark[d * d :: d] = bytes(len(range(d * d, limit + 1, d)))
    return [i for i in range(2, limit + 1) if mark[i]]


def primes_in_range(
    lo: int, hi: int, *, mod4: int | None = None, mod8: int | None = None
) -> list[OddPrime]:
    """Odd primes in [lo, hi], ascending, optionally filtered by residue class.

    Pass mod4=r to keep primes = r (mod 4), or mod8=r for mod 8 (at most one
    filter).  Uses a segmented sieve, so hi can be large without building a
    full-range table.  The element type is OddPrime, so 2 is never included
    even when lo <= 2.
    """
    if lo < 2:
        raise ValueError(f"lo must be >= 2, got {lo}")
    if mod4 is not None and mod8 is not None:
        raise ValueError("give at most one of mod4, mod8")
    if hi < lo:
        return []
    base = _small_primes(isqrt(hi))
    out: list[OddPrime] = []
    start = max(lo, 3)
    for seg_lo in range(start, hi + 1, _SEGMENT_SIZE):
        seg_hi = min(seg_lo + _SEGMENT_SIZE - 1, hi)
        width = seg_hi - seg_lo + 1
        mark = bytearray([1]) * width
        for q in base:
            first = max(q * q, (seg_lo + q - 1) // q * q)
            if first > seg_hi:
                continue
            mark[first - seg_lo :: q] = bytes(len(range(first, seg_hi + 1, q)))
        first_odd = seg_lo if seg_lo % 2 else seg_lo + 1
        for n in range(first_odd, seg_hi + 1, 2):
            if not mark[n - seg_lo]:
                continue
            if mod4 is not None and n % 4 != mod4:
                continue
            if mod8 is not None and n % 8 != mod8:
                continue
            out.append(OddPrime(n))
    return out
