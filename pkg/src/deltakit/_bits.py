"""Big-integer bitsets for length-set dynamic programming.

A length set is stored as an arbitrary-precision integer whose bit k is set
iff k is a factorization length.  gmpy2.mpz is used when available (its
popcount and shifts are substantially faster on multi-kilobit values); plain
Python int is the fallback.  Both expose .bit_length(), so only popcount and
lowest-set-bit need backend dispatch.
"""
from __future__ import annotations

try:
    import gmpy2 as _gmpy2
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _gmpy2 = None


class IntBackend:
    """Pure Python int bitsets."""

    name = "int"
    zero = 0
    one = 1

    @staticmethod
    def popcount(v) -> int:
        return v.bit_count()

    @staticmethod
    def lowest_bit(v) -> int:
        # index of the least significant set bit; v must be nonzero
        return (v & -v).bit_length() - 1


class GmpBackend:
    """gmpy2.mpz bitsets."""

    name = "gmpy2"

    if _gmpy2 is not None:
        zero = _gmpy2.mpz(0)
        one = _gmpy2.mpz(1)
        popcount = staticmethod(_gmpy2.popcount)
        lowest_bit = staticmethod(_gmpy2.bit_scan1)


backend = IntBackend if _gmpy2 is None else GmpBackend


def set_bits(v) -> list[int]:
    """Indices of set bits of a bitset, ascending."""
    out = []
    one = 1
    while v:
        b = (v & -v).bit_length() - 1
        out.append(b)
        v ^= one << b
    return out


def from_indices(indices) -> int:
    """Bitset with the given bit indices set (plain int)."""
    v = 0
    for i in indices:
        v |= 1 << i
    return v
