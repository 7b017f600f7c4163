"""Factorizations, length sets, and delta sets.

The whole-semigroup delta set is computed by scanning every element up to
the bound N = 2 e n2 ne^2 + n1 ne, beyond which no new deltas appear.  The
scan stores, for each element x, the set of factorization lengths of x as a
bitset (bit l set iff x has a factorization of length l) and advances with
L(x) = 1 + union of L(x - ni); only a sliding window of the last ne + 1
bitsets is kept, so memory stays flat regardless of the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ._bits import backend, set_bits
from .core import NumericalSemigroup
from .errors import EmbeddingDimensionOne, TooManyFactorizations

Factorization = tuple[int, ...]
LengthSet = tuple[int, ...]
DeltaSet = tuple[int, ...]


def length_of(fac: Factorization) -> int:
    """Length of a factorization: the sum of its exponents."""
    return sum(fac)


def support_of(fac: Factorization) -> frozenset[int]:
    """Indices of the generators appearing in a factorization."""
    return frozenset(i for i, a in enumerate(fac) if a)


@dataclass(frozen=True)
class DeltaScanResult:
    """Outcome of a whole-semigroup delta scan.

    partial is True when the scan stopped before the proven bound, in which
    case delta is only a subset of the true delta set.
    """

    generators: tuple[int, ...]
    delta: DeltaSet
    bound: int
    partial: bool


def delta_bound(S: NumericalSemigroup) -> int:
    """Scan bound N = 2 e n2 ne^2 + n1 ne: every delta of S is witnessed by
    some element at most N."""
    gens = S.generators
    if len(gens) < 2:
        raise EmbeddingDimensionOne(
            "the delta-set bound needs at least two minimal generators"
        )
    e, n1, n2, ne = len(gens), gens[0], gens[1], gens[-1]
    return 2 * e * n2 * ne * ne + n1 * ne


def iter_length_bitsets(
    S: NumericalSemigroup, bound: int
) -> Iterator[tuple[int, int]]:
    """Yield (x, bits) for every member x <= bound in ascending order, where
    bit l of bits is set iff x has a factorization of length l.

    The window holds the previous ne + 1 bitsets; slot x & mask is
    overwritten once x - wsize can no longer be reached by any generator.
    """
    gens = S.generators
    wsize = 1
    while wsize < gens[-1] + 1:
        wsize <<= 1
    mask = wsize - 1
    zero, one = backend.zero, backend.one
    window = [zero] * wsize
    window[0] = one
    if bound >= 0:
        yield 0, one
    for x in range(1, bound + 1):
        acc = zero
        for n in gens:
            if n > x:
                break
            acc |= window[(x - n) & mask]
        y = acc << 1
        window[x & mask] = y
        if y:
            yield x, y


def length_set(S: NumericalSemigroup, x: int) -> LengthSet:
    """Sorted distinct factorization lengths of x; empty iff x is not in S."""
    if x < 0:
        return ()
    for v, bits in iter_length_bitsets(S, x):
        if v == x:
            return tuple(set_bits(bits))
    return ()


def delta_of_element(S: NumericalSemigroup, x: int) -> DeltaSet:
    """Consecutive differences of the length set of x."""
    lengths = length_set(S, x)
    return tuple(b - a for a, b in zip(lengths, lengths[1:]))


def delta_of_length_bits(bits, d0: int) -> DeltaSet:
    """Delta set encoded by one length bitset: the distinct gaps between
    consecutive set bits, ascending.

    d0 must be a positive integer that divides every gap; for the length sets
    of one semigroup this is min_delta (1 is always valid).  Walking gap
    candidates in steps of d0 keeps the extraction on shifted-bitset
    intersections instead of materializing the length list.
    """
    popcount = backend.popcount
    m = popcount(bits)
    if m < 2:
        return ()
    lo = backend.lowest_bit(bits)
    hi = bits.bit_length() - 1
    span = hi - lo
    # all gaps are multiples of d0, so a full arithmetic progression has
    # delta set {d0} without any further work
    if span == (m - 1) * d0:
        return (d0,)
    found: set[int] = set()
    remaining = m - 1
    between = backend.zero
    g = d0
    while remaining:
        if g > span:
            raise RuntimeError(
                "length-gap extraction did not converge; this is a bug"
            )
        # bits whose nearest set bit above sits exactly g higher
        cand = bits & (bits >> g) & ~between
        count = popcount(cand)
        if count:
            found.add(g)
            remaining -= count
        between |= bits >> g
        g += d0
    return tuple(sorted(found))


def delta_semigroup(
    S: NumericalSemigroup, bound_override: int | None = None
) -> DeltaScanResult:
    """Delta set of the whole semigroup: the union of delta(x) over all
    members x up to the scan bound.

    With bound_override below the proven bound the scan is partial and the
    result is flagged as such; an override above it is accepted but cannot
    add anything.
    """
    full_bound = delta_bound(S)
    if bound_override is None:
        bound = full_bound
    else:
        if not isinstance(bound_override, int) or bound_override < 1:
            raise ValueError(f"bound override must be a positive integer, got {bound_override!r}")
        bound = bound_override
    partial = bound < full_bound

    d0 = S.min_delta()
    deltas: set[int] = set()
    for _, bits in iter_length_bitsets(S, bound):
        deltas.update(delta_of_length_bits(bits, d0))
    return DeltaScanResult(
        generators=S.generators,
        delta=tuple(sorted(deltas)),
        bound=bound,
        partial=partial,
    )


def factorizations_of(
    S: NumericalSemigroup, x: int, limit: int | None = None
) -> tuple[Factorization, ...]:
    """All factorizations of x over the minimal generators, in ascending
    lexicographic order; empty iff x is not in S.

    Enumeration backtracks over exponents with cap x // ni per coordinate;
    meant for element-level work, never for whole-semigroup scans.  limit,
    when given, aborts with TooManyFactorizations once exceeded.
    """
    if x < 0:
        return ()
    gens = S.generators
    e = len(gens)
    out: list[Factorization] = []
    prefix = [0] * e

    def recurse(idx: int, rest: int) -> None:
        if idx == e - 1:
            q, r = divmod(rest, gens[idx])
            if r == 0:
                prefix[idx] = q
                if limit is not None and len(out) >= limit:
                    raise TooManyFactorizations(
                        f"element {x} has more than {limit} factorizations"
                    )
                out.append(tuple(prefix))
                prefix[idx] = 0
            return
        n = gens[idx]
        for a in range(rest // n + 1):
            prefix[idx] = a
            recurse(idx + 1, rest - a * n)
        prefix[idx] = 0

    recurse(0, x)
    return tuple(out)
